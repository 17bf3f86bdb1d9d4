#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/exactla.hpp>
#include <brieskorn/exterior.hpp>
#include <brieskorn/polyring.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn {

// Grading: a j-form with coefficients of degree m has total degree m + j.
// t acts as multiplication by f and raises total degree by d = deg f.
// Operators below are indexed by the coefficient degree of the TARGET
// n-form; dims are indexed by total degree s (coefficient degree s - n).

namespace detail {

inline unsigned long require_homogeneous(const Polynomial& f, unsigned long min_degree, const char* what) {
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError(std::string(what) + ": polynomial must be nonzero and homogeneous");
  if (*d < min_degree)
    throw PreconditionError(std::string(what) + ": polynomial degree must be at least " + std::to_string(min_degree));
  return *d;
}

/// Matrix whose columns are the coordinates of `columns` in `row_basis`.
inline RationalMatrix coordinate_matrix(const std::vector<Monomial>& row_basis, const std::vector<Polynomial>& columns) {
  std::map<Monomial, std::size_t, GrlexDescending> index;
  for (std::size_t i = 0; i < row_basis.size(); ++i) index.emplace(row_basis[i], i);
  RationalMatrix m(row_basis.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [mono, c] : columns[j].terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw ShapeError("column polynomial has a term outside the target degree");
      m(it->second, j) = c;
    }
  return m;
}

}  // namespace detail

/// Matrix of eta -> df ^ d(eta) from Omega^{n-2} (coefficient degree
/// target - d + 2, columns in form_basis order) to the omega_n coefficients
/// of degree `target` (rows in monomial_basis order). An empty domain gives a
/// rows x 0 matrix.
inline RationalMatrix assemble_dfd_matrix(const Polynomial& f, long target) {
  const unsigned long d = detail::require_homogeneous(f, 2, "assemble_dfd_matrix");
  const std::size_t n = f.ring()->size();
  if (target < 0) return RationalMatrix(0, 0);
  auto rows = monomial_basis(n, static_cast<unsigned long>(target));
  const long m = target - static_cast<long>(d) + 2;
  std::vector<Polynomial> cols;
  for (auto& [idx, mono] : form_basis(n, static_cast<long>(n) - 2, m)) {
    DifferentialForm eta(f.ring(), n - 2);
    eta.add(idx, Polynomial::monomial(f.ring(), mono));
    cols.push_back(df_wedge_d(f, eta).top_coefficient());
  }
  return detail::coordinate_matrix(rows, cols);
}

/// Matrix of df ^ : Omega^{n-1} -> Omega^n into coefficient degree
/// `target`. Its column space is (J_f)_target.
inline RationalMatrix assemble_koszul_top_matrix(const Polynomial& f, long target) {
  const unsigned long d = detail::require_homogeneous(f, 2, "assemble_koszul_top_matrix");
  const std::size_t n = f.ring()->size();
  if (target < 0) return RationalMatrix(0, 0);
  auto rows = monomial_basis(n, static_cast<unsigned long>(target));
  const long m = target - static_cast<long>(d) + 1;
  std::vector<Polynomial> grad;
  for (std::size_t j = 0; j < n; ++j) grad.push_back(partial(f, j));
  std::vector<Polynomial> cols;
  for (auto& [idx, mono] : form_basis(n, static_cast<long>(n) - 1, m)) {
    // df ^ (mu dx_I) = sign(a, I) f_a mu omega_n, {a} the complement of I
    const std::size_t a = complement(idx, n)[0];
    IndexSet perm{a};
    perm.insert(perm.end(), idx.begin(), idx.end());
    Polynomial col = grad[a].shifted(mono);
    cols.push_back(permutation_sign(perm) > 0 ? col : -col);
  }
  return detail::coordinate_matrix(rows, cols);
}

/// Multiplication by p from R_e to R_{e + deg p}.
inline RationalMatrix multiplication_matrix(const Polynomial& p, long e) {
  const unsigned long dp = detail::require_homogeneous(p, 0, "multiplication_matrix");
  const std::size_t n = p.ring()->size();
  const long target = e + static_cast<long>(dp);
  if (target < 0) return RationalMatrix(0, 0);
  auto rows = monomial_basis(n, static_cast<unsigned long>(target));
  std::vector<Polynomial> cols;
  if (e >= 0)
    for (const auto& mono : monomial_basis(n, static_cast<unsigned long>(e))) cols.push_back(p.shifted(mono));
  return detail::coordinate_matrix(rows, cols);
}

/// Columns f_j * mu for j = 1..n and mu of degree e - d + 1, rows R_e.
inline RationalMatrix jacobian_matrix(const Polynomial& f, long e) {
  const unsigned long d = detail::require_homogeneous(f, 1, "jacobian_matrix");
  const std::size_t n = f.ring()->size();
  if (e < 0) return RationalMatrix(0, 0);
  auto rows = monomial_basis(n, static_cast<unsigned long>(e));
  const long m = e - static_cast<long>(d) + 1;
  std::vector<Polynomial> cols;
  if (m >= 0) {
    auto monos = monomial_basis(n, static_cast<unsigned long>(m));
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial fj = partial(f, j);
      if (fj.is_zero()) continue;
      for (const auto& mono : monos) cols.push_back(fj.shifted(mono));
    }
  }
  return detail::coordinate_matrix(rows, cols);
}

/// dim M(f)_e, M(f) = R / J_f.
inline std::size_t milnor_dim(const Polynomial& f, long e) {
  detail::require_homogeneous(f, 1, "milnor_dim");
  if (e < 0) return 0;
  return monomial_count(f.ring()->size(), e) - rank(jacobian_matrix(f, e));
}

/// True iff the origin is an isolated singularity: M(f) vanishes in degree
/// n(d-2)+1. A standard-graded algebra vanishing in one degree vanishes in
/// all higher ones, and the socle of an isolated singularity sits in degree
/// n(d-2).
inline bool is_isolated(const Polynomial& f) {
  const unsigned long d = detail::require_homogeneous(f, 2, "is_isolated");
  const long n = static_cast<long>(f.ring()->size());
  return milnor_dim(f, n * (static_cast<long>(d) - 2) + 1) == 0;
}

inline std::size_t milnor_number(const Polynomial& f) {
  const unsigned long d = detail::require_homogeneous(f, 2, "milnor_number");
  if (!is_isolated(f)) throw PreconditionError("milnor_number: singularity is not isolated");
  const long top = static_cast<long>(f.ring()->size()) * (static_cast<long>(d) - 2);
  std::size_t mu = 0;
  for (long e = 0; e <= top; ++e) mu += milnor_dim(f, e);
  return mu;
}

/// First `num_terms` coefficients of t^n (1 - t^{d-1})^n / (1 - t)^{n+1}.
/// This is the formal series with deg t = 1; internal dims (deg t = d) come
/// from dim_B.
inline std::vector<Integer> formal_poincare_series(unsigned long n, unsigned long d, std::size_t num_terms) {
  if (n < 1 || d < 2) throw PreconditionError("formal_poincare_series: need n >= 1 and d >= 2");
  std::vector<Integer> num(num_terms);
  // t^n (1 - t^{d-1})^n, truncated
  for (unsigned long i = 0; i <= n; ++i) {
    const unsigned long power = n + i * (d - 1);
    if (power >= num_terms) break;
    Integer c = binomial(n, i);
    num[power] += (i % 2 == 0) ? c : Integer(-c);
  }
  // divide by (1 - t)^{n+1}: n+1 prefix sums
  for (unsigned long r = 0; r < n + 1; ++r)
    for (std::size_t i = 1; i < num_terms; ++i) num[i] += num[i - 1];
  return num;
}

/// dim B(f)_s, B(f) = Omega^n / df ^ d(Omega^{n-2}).
inline std::size_t dim_B(const Polynomial& f, long s) {
  detail::require_homogeneous(f, 2, "dim_B");
  const long e = s - static_cast<long>(f.ring()->size());
  if (e < 0) return 0;
  return monomial_count(f.ring()->size(), e) - rank(assemble_dfd_matrix(f, e));
}

/// dim C(f)_s, C(f) = df ^ Omega^{n-1} / df ^ d(Omega^{n-2}).
inline std::size_t dim_C(const Polynomial& f, long s) {
  detail::require_homogeneous(f, 2, "dim_C");
  const long e = s - static_cast<long>(f.ring()->size());
  if (e < 0) return 0;
  return rank(assemble_koszul_top_matrix(f, e)) - rank(assemble_dfd_matrix(f, e));
}

/// Witness that t^k [g omega_n] = 0: df ^ d(eta) = f^k g omega_n.
struct TorsionCertificate {
  Polynomial f;
  Polynomial g;
  unsigned long k;
  DifferentialForm eta;
};

struct MembershipResult {
  bool member = false;
  std::optional<TorsionCertificate> certificate;
  std::size_t rows = 0;  // equations
  std::size_t cols = 0;  // unknowns
  std::size_t rank = 0;  // rank of the homogeneous system
};

/// Replays a certificate from scratch: every coefficient of eta must have
/// the expected degree (k-1)d + deg g + 2 and df ^ d(eta) must equal
/// f^k g omega_n term by term.
inline bool verify_certificate(const TorsionCertificate& c) {
  const auto& ring = c.f.ring();
  const std::size_t n = ring->size();
  auto d = c.f.homogeneous_degree();
  auto dg = c.g.homogeneous_degree();
  if (!d || *d < 2 || !dg) return false;
  if (!same_ring(ring, c.g.ring()) || !same_ring(ring, c.eta.ring())) return false;
  if (n < 2 || c.eta.degree() != n - 2) return false;
  const long expected = static_cast<long>(c.k * *d + *dg) - static_cast<long>(*d) + 2;
  for (const auto& [idx, p] : c.eta.coefficients()) {
    auto e = p.homogeneous_degree();
    if (!e || static_cast<long>(*e) != expected) return false;
  }
  return df_wedge_d(c.f, c.eta).top_coefficient() == pow(c.f, c.k) * c.g;
}

/// Decides f^k g omega_n in df ^ d(Omega^{n-2}); k = 0 asks whether
/// [g omega_n] is itself zero. A solvable system yields a certificate built
/// from the canonical particular solution.
inline MembershipResult torsion_membership(const Polynomial& f, const Polynomial& g, long k) {
  const unsigned long d = detail::require_homogeneous(f, 2, "torsion_membership");
  const unsigned long dg = detail::require_homogeneous(g, 0, "torsion_membership (g)");
  if (!same_ring(f.ring(), g.ring())) throw ShapeError("torsion_membership: f and g belong to different rings");
  if (k < 0) throw PreconditionError("torsion_membership: k must be non-negative");

  const std::size_t n = f.ring()->size();
  const long target = k * static_cast<long>(d) + static_cast<long>(dg);
  RationalMatrix a = assemble_dfd_matrix(f, target);
  Polynomial rhs = pow(f, static_cast<unsigned long>(k)) * g;
  auto b = coordinates(rhs, monomial_basis(n, static_cast<unsigned long>(target)));
  SolveOutcome sol = solve(a, b);

  MembershipResult out;
  out.member = sol.solvable;
  out.rows = a.rows();
  out.cols = a.cols();
  out.rank = sol.rank;
  if (!sol.solvable) return out;

  const long m = target - static_cast<long>(d) + 2;
  auto basis = form_basis(n, static_cast<long>(n) - 2, m);
  DifferentialForm eta(f.ring(), n - 2);
  for (std::size_t j = 0; j < basis.size(); ++j)
    if ((*sol.particular)[j] != 0)
      eta.add(basis[j].first, Polynomial::monomial(f.ring(), basis[j].second, (*sol.particular)[j]));
  TorsionCertificate cert{f, g, static_cast<unsigned long>(k), std::move(eta)};
  if (!verify_certificate(cert)) throw Error("internal: solver produced a certificate that does not verify");
  out.certificate = std::move(cert);
  return out;
}

struct TorsionOrderVerdict {
  enum class Status { zero_class, torsion, unresolved };
  Status status = Status::unresolved;
  unsigned long order = 0;  // meaningful for Status::torsion
  unsigned long kmax = 0;
  std::optional<TorsionCertificate> certificate;
};

inline const char* to_string(TorsionOrderVerdict::Status s) {
  switch (s) {
    case TorsionOrderVerdict::Status::zero_class: return "zero_class";
    case TorsionOrderVerdict::Status::torsion: return "torsion";
    case TorsionOrderVerdict::Status::unresolved: return "unresolved_above";
  }
  return "?";
}

inline constexpr unsigned long default_kmax = 5;

/// Least k <= kmax with t^k [g omega_n] = 0. An unresolved search says
/// nothing about whether the class is torsion.
inline TorsionOrderVerdict torsion_order_of_class(const Polynomial& f, const Polynomial& g,
                                                  unsigned long kmax = default_kmax) {
  if (kmax < 1) throw PreconditionError("torsion_order_of_class: kmax must be at least 1");
  TorsionOrderVerdict v;
  v.kmax = kmax;
  if (torsion_membership(f, g, 0).member) {
    v.status = TorsionOrderVerdict::Status::zero_class;
    return v;
  }
  for (unsigned long k = 1; k <= kmax; ++k) {
    auto r = torsion_membership(f, g, static_cast<long>(k));
    if (r.member) {
      v.status = TorsionOrderVerdict::Status::torsion;
      v.order = k;
      v.certificate = std::move(r.certificate);
      return v;
    }
  }
  v.status = TorsionOrderVerdict::Status::unresolved;
  return v;
}

/// Entry k-1 is dim { b in B(f)_s : t^k b = 0 } for k = 1..kmax.
inline std::vector<std::size_t> torsion_filtration_dims(const Polynomial& f, long s, unsigned long kmax) {
  const unsigned long d = detail::require_homogeneous(f, 2, "torsion_filtration_dims");
  if (kmax < 1) throw PreconditionError("torsion_filtration_dims: kmax must be at least 1");
  const long e = s - static_cast<long>(f.ring()->size());
  std::vector<std::size_t> out(kmax, 0);
  if (e < 0) return out;
  const std::size_t zero_classes = rank(assemble_dfd_matrix(f, e));
  Polynomial fk = f;
  for (unsigned long k = 1; k <= kmax; ++k) {
    if (k > 1) fk = fk * f;
    const long target = e + static_cast<long>(k * d);
    out[k - 1] = preimage_dim(multiplication_matrix(fk, e), assemble_dfd_matrix(f, target)) - zero_classes;
  }
  return out;
}

/// df ^ Omega^{n-1} = df ^ d(Omega^{n-2}) + f Omega^n in total degree s.
inline bool prop1_check(const Polynomial& f, long s) {
  const unsigned long d = detail::require_homogeneous(f, 2, "prop1_check");
  const long e = s - static_cast<long>(f.ring()->size());
  if (e < 0) return true;
  RationalMatrix koszul = assemble_koszul_top_matrix(f, e);
  RationalMatrix rhs = hconcat(assemble_dfd_matrix(f, e), multiplication_matrix(f, e - static_cast<long>(d)));
  return column_spaces_equal(koszul, rhs);
}

}  // namespace brieskorn
