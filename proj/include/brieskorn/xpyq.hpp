#pragma once

#include <brieskorn/brieskorn.hpp>
#include <brieskorn/errors.hpp>
#include <brieskorn/polyring.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace brieskorn {

// Closed-form description of B(f) for f = x^p y^q, gcd(p, q) = 1, in
// coefficient degree c = s - 2:
//   torsion basis:  x^a y^b dx^dy with a <= p-2 or b <= q-2
//   free part:      x^{(k+1)p-1} y^{(k+1)q-1} dx^dy, c = (k+1)(p+q) - 2, k >= 0
//   C(f):           the free generators with k >= 1 (the k = 0 element has
//                   coefficient degree p+q-2 and is not in J_f)

struct XpyqRow {
  long s = 0;
  long coeff_deg = 0;
  std::size_t torsion_count = 0;
  std::size_t b_count = 0;
  std::size_t c_dim = 0;
};

struct XpyqReport {
  unsigned long p = 0;
  unsigned long q = 0;
  std::vector<XpyqRow> rows;  // s = 0..smax

  /// Exponents of the C[t]-generator of C(f): (2p-1, 2q-1), total degree 2p+2q.
  std::pair<unsigned long, unsigned long> c_generator() const { return {2 * p - 1, 2 * q - 1}; }

  bool is_torsion_monomial(long a, long b) const {
    return a <= static_cast<long>(p) - 2 || b <= static_cast<long>(q) - 2;
  }
};

/// k >= 0 with c = (k+1)(p+q) - 2, or -1.
inline long xpyq_free_index(unsigned long p, unsigned long q, long c) {
  const long pq = static_cast<long>(p + q);
  if (c + 2 <= 0 || (c + 2) % pq != 0) return -1;
  return (c + 2) / pq - 1;
}

inline XpyqReport xpyq_oracle(unsigned long p, unsigned long q, long smax) {
  if (p < 1 || q < 1) throw PreconditionError("xpyq: p and q must be positive");
  if (std::gcd(p, q) != 1) throw PreconditionError("xpyq: gcd(p, q) must be 1");
  XpyqReport r;
  r.p = p;
  r.q = q;
  for (long s = 0; s <= smax; ++s) {
    XpyqRow row;
    row.s = s;
    row.coeff_deg = s - 2;
    const long c = s - 2;
    if (c >= 0) {
      for (long a = 0; a <= c; ++a)
        if (r.is_torsion_monomial(a, c - a)) ++row.torsion_count;
      const long k = xpyq_free_index(p, q, c);
      row.b_count = row.torsion_count + (k >= 0 ? 1 : 0);
      row.c_dim = k >= 1 ? 1 : 0;
    }
    r.rows.push_back(row);
  }
  return r;
}

struct XpyqMismatch {
  long s;
  std::string quantity;
  std::size_t expected;
  std::size_t actual;
};

/// Recomputes dim_B, dim_C and the torsion filtration through the generic
/// linear-algebra path and lists every disagreement with the closed form.
inline std::vector<XpyqMismatch> xpyq_cross_check(const XpyqReport& report, unsigned long kmax = 2) {
  auto ring = Ring::make(std::vector<std::string>{"x", "y"});
  Monomial m(2);
  m[0] = static_cast<std::uint32_t>(report.p);
  m[1] = static_cast<std::uint32_t>(report.q);
  Polynomial f = Polynomial::monomial(ring, m);

  std::vector<XpyqMismatch> out;
  for (const auto& row : report.rows) {
    if (row.s < 2) continue;
    auto b = dim_B(f, row.s);
    if (b != row.b_count) out.push_back({row.s, "dim_B", row.b_count, b});
    auto c = dim_C(f, row.s);
    if (c != row.c_dim) out.push_back({row.s, "dim_C", row.c_dim, c});
    auto tors = torsion_filtration_dims(f, row.s, kmax);
    for (std::size_t k = 0; k < tors.size(); ++k)
      if (tors[k] != row.torsion_count)
        out.push_back({row.s, "torsion[k=" + std::to_string(k + 1) + "]", row.torsion_count, tors[k]});
  }
  return out;
}

}  // namespace brieskorn
