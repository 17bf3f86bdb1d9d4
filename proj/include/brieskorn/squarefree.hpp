#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/polyring.hpp>
#include <brieskorn/rational.hpp>

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace brieskorn {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are trimmed; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> d = c_;
    const Rational l = lead();
    for (auto& x : d) x /= l;
    return UPoly(std::move(d));
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return UPoly(std::move(d));
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PreconditionError("UPoly division by zero");
    std::vector<Rational> r = a.c_;
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    for (long i = a.degree(); i >= b.degree(); --i) {
      const Rational coef = r[static_cast<std::size_t>(i)] / b.lead();
      const std::size_t shift = static_cast<std::size_t>(i - b.degree());
      q[shift] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[shift + j] -= coef * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  bool operator==(const UPoly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Multiplicities e_i of the squarefree factors of u (Yun), one entry per
/// nontrivial factor, in increasing order.
inline std::vector<unsigned long> squarefree_multiplicities(const UPoly& u) {
  std::vector<unsigned long> out;
  if (u.degree() <= 0) return out;
  UPoly du = u.derivative();
  UPoly a = gcd(u, du);
  UPoly b = divmod(u, a).first;
  UPoly c = divmod(du, a).first;
  UPoly dd = c - b.derivative();
  for (unsigned long i = 1; b.degree() > 0; ++i) {
    a = gcd(b, dd);
    if (a.degree() > 0) out.push_back(i);
    b = divmod(b, a).first;
    c = divmod(dd, a).first;
    dd = c - b.derivative();
  }
  return out;
}

/// For a binary form f: true iff f is not g^r with r > 1 over C. Strips the
/// powers of x and y, dehomogenizes the rest at y = 1, and takes the gcd of
/// all multiplicities.
inline bool is_primitive_binary(const Polynomial& f) {
  if (f.ring()->size() != 2) throw PreconditionError("is_primitive_binary: need n = 2");
  if (f.is_zero()) throw PreconditionError("is_primitive_binary: zero polynomial");
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError("is_primitive_binary: polynomial must be homogeneous");
  if (*d < 1) throw PreconditionError("is_primitive_binary: degree must be at least 1");

  std::uint32_t xpow = UINT32_MAX, ypow = UINT32_MAX;
  for (const auto& [m, c] : f.terms()) {
    xpow = std::min(xpow, m[0]);
    ypow = std::min(ypow, m[1]);
  }
  // h = f / (x^xpow y^ypow) is divisible by neither variable, so h(x, 1)
  // keeps degree deg h.
  const unsigned long hdeg = *d - xpow - ypow;
  std::vector<Rational> coeffs(hdeg + 1);
  for (const auto& [m, c] : f.terms()) coeffs[m[0] - xpow] = c;

  unsigned long g = 0;
  g = std::gcd(g, static_cast<unsigned long>(xpow));
  g = std::gcd(g, static_cast<unsigned long>(ypow));
  for (unsigned long e : squarefree_multiplicities(UPoly(std::move(coeffs)))) g = std::gcd(g, e);
  return g == 1;
}

}  // namespace brieskorn
