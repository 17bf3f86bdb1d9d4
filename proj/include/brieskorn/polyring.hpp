#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brieskorn {

/// Polynomial ring Q[x_1, ..., x_n] with named variables.
///
/// Default names are x1..xn. Rings with n <= 4 additionally accept the
/// aliases x, y, z, t for the first four variables when parsing.
class Ring {
 public:
  explicit Ring(std::size_t n) {
    if (n == 0) throw PreconditionError("ring needs at least one variable");
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i + 1));
  }

  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw PreconditionError("ring needs at least one variable");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& s = names_[i];
      if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        throw PreconditionError("variable name must start with a letter: '" + s + "'");
      for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw PreconditionError("invalid character in variable name '" + s + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == s) throw PreconditionError("duplicate variable name '" + s + "'");
    }
  }

  static std::shared_ptr<const Ring> make(std::size_t n) { return std::make_shared<const Ring>(n); }
  static std::shared_ptr<const Ring> make(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  /// Exact name first, then the x/y/z/t aliases (n <= 4), then x<k>.
  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    if (names_.size() <= 4 && name.size() == 1) {
      static constexpr std::string_view aliases = "xyzt";
      auto pos = aliases.find(name[0]);
      if (pos != std::string_view::npos && pos < names_.size()) return pos;
    }
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t k = std::stoul(std::string(name.substr(1)));
      if (k >= 1 && k <= names_.size()) return k - 1;
    }
    return std::nullopt;
  }

  /// Every spelling index_of accepts, for longest-prefix tokenizing.
  std::vector<std::string> spellings() const {
    std::vector<std::string> out = names_;
    if (names_.size() <= 4)
      for (std::size_t i = 0; i < names_.size(); ++i) out.emplace_back(1, "xyzt"[i]);
    for (std::size_t i = 0; i < names_.size(); ++i) out.push_back("x" + std::to_string(i + 1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Monomial {
  std::vector<std::uint32_t> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

  std::size_t size() const noexcept { return exponents.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint32_t& operator[](std::size_t i) { return exponents[i]; }

  unsigned long degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0UL);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
    return r;
  }

  bool operator==(const Monomial&) const = default;
};

/// Graded-lex: higher total degree first, then lexicographically larger
/// exponent vectors first (x1 > x2 > ... > xn). Maps keyed with this
/// comparator iterate in descending graded-lex order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents;
  }
};

/// All monomials of total degree e in n variables, descending graded-lex.
inline std::vector<Monomial> monomial_basis(std::size_t n, unsigned long e) {
  std::vector<Monomial> out;
  Monomial m(n);
  // exponents filled left to right, largest first on the leading variable
  auto rec = [&](auto&& self, std::size_t i, unsigned long left) -> void {
    if (i + 1 == n) {
      m[i] = static_cast<std::uint32_t>(left);
      out.push_back(m);
      return;
    }
    for (unsigned long a = left + 1; a-- > 0;) {
      m[i] = static_cast<std::uint32_t>(a);
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, e);
  return out;
}

inline std::vector<Monomial> monomial_basis(const Ring& ring, unsigned long e) {
  return monomial_basis(ring.size(), e);
}

/// dim R_e = C(e+n-1, n-1); zero for negative e.
inline std::size_t monomial_count(std::size_t n, long e) {
  if (e < 0) return 0;
  return binomial(static_cast<unsigned long>(e) + n - 1, n - 1).get_ui();
}

/// Sparse polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(Monomial(p.ring_->size()), c);
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    if (i >= ring->size()) throw ShapeError("variable index out of range");
    Monomial m(ring->size());
    m[i] = 1;
    return monomial(std::move(ring), std::move(m));
  }

  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1) {
    if (m.size() != ring->size()) throw ShapeError("monomial length does not match ring");
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree of a stored monomial; -1 for zero.
  long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree()); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  /// Degree when homogeneous and nonzero.
  std::optional<unsigned long> homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return Polynomial(*this) *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply by a monomial without touching coefficients.
  Polynomial shifted(const Monomial& m) const {
    Polynomial r(ring_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    return r;
  }

  bool operator==(const Polynomial& o) const { return same_ring(ring_, o.ring_) && terms_ == o.terms_; }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw ShapeError("polynomials belong to different rings");
  }

  RingPtr ring_;
  Terms terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned long k) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Formal partial derivative with respect to variable j (0-based).
inline Polynomial partial(const Polynomial& p, std::size_t j) {
  if (j >= p.ring()->size()) throw ShapeError("partial: variable index out of range");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[j] == 0) continue;
    Monomial dm = m;
    dm[j] -= 1;
    r.add_term(dm, c * m[j]);
  }
  return r;
}

/// Coordinates of p in the given basis; every term of p must be a basis element.
inline std::vector<Rational> coordinates(const Polynomial& p, const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Rational> out(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw ShapeError("polynomial has a term outside the coordinate basis");
    out[it->second] = c;
  }
  return out;
}

}  // namespace brieskorn
