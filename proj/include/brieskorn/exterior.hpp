#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/format.hpp>
#include <brieskorn/polyring.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

/// Strictly increasing 0-based variable indices: {i_1 < ... < i_j} stands
/// for dx_{i_1} ^ ... ^ dx_{i_j}.
using IndexSet = std::vector<std::size_t>;

/// Sign of the permutation sorting `seq`; 0 when an index repeats.
inline int permutation_sign(const std::vector<std::size_t>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t k = i + 1; k < seq.size(); ++k) {
      if (seq[i] == seq[k]) return 0;
      if (seq[i] > seq[k]) sign = -sign;
    }
  return sign;
}

/// All j-subsets of {0..n-1} in lexicographic order.
inline std::vector<IndexSet> index_sets(std::size_t n, long j) {
  std::vector<IndexSet> out;
  if (j < 0 || static_cast<std::size_t>(j) > n) return out;
  IndexSet cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == static_cast<std::size_t>(j)) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline IndexSet complement(const IndexSet& set, std::size_t n) {
  IndexSet out;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (k < set.size() && set[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// A j-form sum_I P_I dx_I with polynomial coefficients. Only nonzero
/// coefficients are stored; the zero form is the empty map.
class DifferentialForm {
 public:
  using Coefficients = std::map<IndexSet, Polynomial>;

  DifferentialForm(RingPtr ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {
    if (degree_ > ring_->size()) throw ShapeError("form degree exceeds number of variables");
  }

  /// The 0-form given by a function.
  static DifferentialForm function(const Polynomial& p) {
    DifferentialForm f(p.ring(), 0);
    f.add(IndexSet{}, p);
    return f;
  }

  /// p * omega_n.
  static DifferentialForm top(const Polynomial& p) {
    const std::size_t n = p.ring()->size();
    DifferentialForm f(p.ring(), n);
    f.add(complement({}, n), p);
    return f;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return degree_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Polynomial coefficient(const IndexSet& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Polynomial(ring_) : it->second;
  }

  /// Coefficient of omega_n for an n-form.
  Polynomial top_coefficient() const {
    if (degree_ != ring_->size()) throw ShapeError("top_coefficient needs an n-form");
    return coefficient(complement({}, ring_->size()));
  }

  void add(const IndexSet& idx, const Polynomial& p) {
    if (idx.size() != degree_) throw ShapeError("index set size does not match form degree");
    if (!same_ring(p.ring(), ring_)) throw ShapeError("coefficient from a different ring");
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (idx[i] >= ring_->size() || (i > 0 && idx[i - 1] >= idx[i]))
        throw ShapeError("index set must be strictly increasing and in range");
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(idx, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  DifferentialForm& operator+=(const DifferentialForm& o) {
    check_compatible(o);
    for (const auto& [idx, p] : o.coeffs_) add(idx, p);
    return *this;
  }

  DifferentialForm& operator-=(const DifferentialForm& o) {
    check_compatible(o);
    for (const auto& [idx, p] : o.coeffs_) add(idx, -p);
    return *this;
  }

  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }

  friend DifferentialForm operator*(const Polynomial& mu, const DifferentialForm& f) {
    DifferentialForm r(f.ring_, f.degree_);
    for (const auto& [idx, p] : f.coeffs_) r.add(idx, mu * p);
    return r;
  }

  /// Common coefficient degree m when every coefficient is homogeneous of
  /// degree m. Total degree of the form is then m + degree().
  std::optional<unsigned long> coefficient_degree() const {
    std::optional<unsigned long> m;
    for (const auto& [idx, p] : coeffs_) {
      auto e = p.homogeneous_degree();
      if (!e || (m && *m != *e)) return std::nullopt;
      m = e;
    }
    return m;
  }

  bool operator==(const DifferentialForm& o) const {
    return same_ring(ring_, o.ring_) && degree_ == o.degree_ && coeffs_ == o.coeffs_;
  }

 private:
  void check_compatible(const DifferentialForm& o) const {
    if (!same_ring(ring_, o.ring_)) throw ShapeError("forms belong to different rings");
    if (degree_ != o.degree_) throw ShapeError("forms have different degrees");
  }

  RingPtr ring_;
  std::size_t degree_;
  Coefficients coeffs_;
};

inline DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (!same_ring(a.ring(), b.ring())) throw ShapeError("wedge: forms belong to different rings");
  if (a.degree() + b.degree() > a.ring()->size()) throw ShapeError("wedge: degree exceeds number of variables");
  DifferentialForm out(a.ring(), a.degree() + b.degree());
  for (const auto& [ia, pa] : a.coefficients())
    for (const auto& [ib, pb] : b.coefficients()) {
      IndexSet joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      int sign = permutation_sign(joined);
      if (sign == 0) continue;
      std::sort(joined.begin(), joined.end());
      Polynomial prod = pa * pb;
      out.add(joined, sign > 0 ? prod : -prod);
    }
  return out;
}

/// d(mu dx_I) = sum_j (d_j mu) dx_j ^ dx_I.
inline DifferentialForm ext_d(const DifferentialForm& phi) {
  const std::size_t n = phi.ring()->size();
  if (phi.degree() == n) return DifferentialForm(phi.ring(), n);
  DifferentialForm out(phi.ring(), phi.degree() + 1);
  for (const auto& [idx, mu] : phi.coefficients())
    for (std::size_t j = 0; j < n; ++j) {
      if (std::binary_search(idx.begin(), idx.end(), j)) continue;
      Polynomial dmu = partial(mu, j);
      if (dmu.is_zero()) continue;
      IndexSet joined{j};
      joined.insert(joined.end(), idx.begin(), idx.end());
      int sign = permutation_sign(joined);
      std::sort(joined.begin(), joined.end());
      out.add(joined, sign > 0 ? dmu : -dmu);
    }
  return out;
}

/// df as a 1-form.
inline DifferentialForm exterior_derivative(const Polynomial& f) {
  return ext_d(DifferentialForm::function(f));
}

/// df ^ d(eta) for an (n-2)-form eta, via
///   df ^ d(mu dx_I) = eps_I (f_a d_b mu - f_b d_a mu) omega_n,
/// {a < b} the complement of I and eps_I the sign of (a, b, I).
inline DifferentialForm df_wedge_d(const Polynomial& f, const DifferentialForm& eta) {
  const std::size_t n = f.ring()->size();
  if (!same_ring(f.ring(), eta.ring())) throw ShapeError("df_wedge_d: f and eta belong to different rings");
  if (n < 2 || eta.degree() != n - 2) throw ShapeError("df_wedge_d: eta must be an (n-2)-form");
  if (!f.is_homogeneous()) throw PreconditionError("df_wedge_d: f must be homogeneous");

  std::vector<Polynomial> grad;
  grad.reserve(n);
  for (std::size_t j = 0; j < n; ++j) grad.push_back(partial(f, j));

  Polynomial acc(f.ring());
  for (const auto& [idx, mu] : eta.coefficients()) {
    IndexSet ab = complement(idx, n);
    const std::size_t a = ab[0], b = ab[1];
    IndexSet perm{a, b};
    perm.insert(perm.end(), idx.begin(), idx.end());
    Polynomial term = grad[a] * partial(mu, b) - grad[b] * partial(mu, a);
    if (permutation_sign(perm) > 0) acc += term; else acc -= term;
  }
  return DifferentialForm::top(acc);
}

/// Basis of the coefficient-degree-m piece of Omega^j: pairs (I, monomial)
/// ordered by I lexicographically, then by descending graded-lex monomial.
inline std::vector<std::pair<IndexSet, Monomial>> form_basis(std::size_t n, long j, long m) {
  std::vector<std::pair<IndexSet, Monomial>> out;
  if (m < 0) return out;
  auto monos = monomial_basis(n, static_cast<unsigned long>(m));
  for (auto& idx : index_sets(n, j))
    for (const auto& mono : monos) out.emplace_back(idx, mono);
  return out;
}

inline std::string index_label(const Ring& ring, const IndexSet& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += '^';
    s += "d" + ring.name(idx[i]);
  }
  return s;
}

/// "(P1) dx^dy + (P2) dx^dz", or the bare polynomial for a 0-form.
inline std::string to_string(const DifferentialForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, p] : f.coefficients()) {
    if (!out.empty()) out += " + ";
    if (idx.empty()) {
      out += to_string(p);
    } else {
      out += "(" + to_string(p) + ") " + index_label(*f.ring(), idx);
    }
  }
  return out;
}

}  // namespace brieskorn
