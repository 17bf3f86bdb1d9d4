#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the fraction-free eliminator, the closed df^d formula or Polynomial
// multiplication.

#include <brieskorn/all.hpp>

#include <map>
#include <random>
#include <vector>

namespace oracle {

using brieskorn::Rational;
using brieskorn::RationalMatrix;

/// Reduced row echelon form by plain Gauss-Jordan over Q (first nonzero
/// pivot). Returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t naive_rank(RationalMatrix m) { return rref(m, m.cols()).size(); }

/// Gauss-Jordan solve with free variables zero; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> naive_solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, a.cols());
  for (std::size_t i = pivots.size(); i < a.rows(); ++i)
    if (aug(i, a.cols()) != 0) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Kernel basis from the RREF: one vector per free column.
inline std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m) {
  auto pivots = rref(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// dim { v : M v in colspace(W) } as the dimension of the projection of
/// ker [M | -W] onto the v coordinates.
inline std::size_t brute_preimage_dim(const RationalMatrix& m, const RationalMatrix& w) {
  RationalMatrix stacked(m.rows(), m.cols() + w.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, j) = m(i, j);
    for (std::size_t j = 0; j < w.cols(); ++j) stacked(i, m.cols() + j) = -w(i, j);
  }
  auto kb = kernel_basis(stacked);
  if (kb.empty() || m.cols() == 0) return 0;
  RationalMatrix proj(kb.size(), m.cols());
  for (std::size_t i = 0; i < kb.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) proj(i, j) = kb[i][j];
  return naive_rank(proj);
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int magnitude,
                                    double zero_prob = 0.3) {
  std::uniform_int_distribution<int> coef(-magnitude, magnitude);
  std::bernoulli_distribution zero(zero_prob);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : coef(rng);
  return m;
}

/// Dense exponent-tuple polynomial multiplication (schoolbook convolution).
using TermMap = std::map<std::vector<std::uint32_t>, Rational>;

inline TermMap to_terms(const brieskorn::Polynomial& p) {
  TermMap t;
  for (const auto& [m, c] : p.terms()) t[m.exponents] = c;
  return t;
}

inline TermMap convolve(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Random homogeneous polynomial of degree d with coefficients in
/// [-magnitude, magnitude], each monomial kept with probability `density`.
inline brieskorn::Polynomial random_homogeneous(std::mt19937& rng, const brieskorn::RingPtr& ring, unsigned d,
                                                int magnitude = 3, double density = 0.6) {
  std::uniform_int_distribution<int> coef(-magnitude, magnitude);
  std::bernoulli_distribution keep(density);
  for (;;) {
    brieskorn::Polynomial p(ring);
    for (const auto& m : brieskorn::monomial_basis(*ring, d))
      if (keep(rng)) p.add_term(m, coef(rng));
    if (!p.is_zero()) return p;
  }
}

/// Free-module count for isolated f: pairs (basis element of M(f) in degree
/// e, j >= 0) with e + n + j d = s.
inline std::size_t free_module_dim(const std::vector<std::size_t>& milnor_dims, std::size_t n, std::size_t d,
                                   long s) {
  std::size_t total = 0;
  for (std::size_t e = 0; e < milnor_dims.size(); ++e) {
    const long rest = s - static_cast<long>(e + n);
    if (rest >= 0 && rest % static_cast<long>(d) == 0) total += milnor_dims[e];
  }
  return total;
}

}  // namespace oracle
