// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.

#include <brieskorn/all.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace brieskorn;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream detail;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n      failed: " << what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double time_limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0) {
    std::ostringstream os;
    os << "time " << secs << " s exceeds " << time_limit_s << " s";
    c.expect(secs < time_limit_s, os.str());
  }
  if (!c.ok) ++failures;
  std::printf("[%s] %s %s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.detail.str().c_str());
  std::fflush(stdout);
}

RingPtr vars(std::vector<std::string> names) { return Ring::make(std::move(names)); }

Polynomial random_linear(std::mt19937& rng, const RingPtr& ring) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    Polynomial l(ring);
    for (std::size_t j = 0; j < ring->size(); ++j) l += Polynomial::variable(ring, j) * Rational(coef(rng));
    if (!l.is_zero()) return l;
  }
}

/// Non-isolated by construction: a squared linear factor times a random
/// form, or (n = 3) a form that misses one variable.
Polynomial random_non_isolated(std::mt19937& rng, const RingPtr& ring, unsigned d, int variant) {
  if (ring->size() == 3 && variant % 2 == 1) {
    auto plane = Ring::make(2);
    auto g = oracle::random_homogeneous(rng, plane, d);
    Polynomial f(ring);
    for (const auto& [m, c] : g.terms()) f.add_term(Monomial({m[0], m[1], 0}), c);
    return f;
  }
  auto l = random_linear(rng, ring);
  auto f = pow(l, 2);
  if (d > 2) f *= oracle::random_homogeneous(rng, ring, d - 2);
  return f;
}

}  // namespace

int main() {
  criterion("AC1", "Milnor algebra of x^3+y^3+z^3: dims (1,3,3,1,0,...), mu = 8", 1.0, [](Check& c) {
    auto f = parse_poly("x^3+y^3+z^3", vars({"x", "y", "z"}));
    std::vector<std::size_t> dims;
    for (long e = 0; e <= 8; ++e) dims.push_back(milnor_dim(f, e));
    c.expect(dims == std::vector<std::size_t>{1, 3, 3, 1, 0, 0, 0, 0, 0}, "milnor_dim sequence");
    c.expect(milnor_number(f) == 8, "milnor_number == 8");
  });

  criterion("AC2", "formal series (n,d)=(3,3): 1,4,7,8,8,8 at t^3..t^8", 0, [](Check& c) {
    auto s = formal_poincare_series(3, 3, 9);
    std::vector<Integer> tail(s.begin() + 3, s.end());
    c.expect(tail == std::vector<Integer>{1, 4, 7, 8, 8, 8}, "coefficients t^3..t^8");
    c.expect(s[0] == 0 && s[1] == 0 && s[2] == 0, "zero below t^3");
  });

  criterion("AC3", "x^3+y^2z: rank 8 at target 3, rank 26 at target 6", 5.0, [](Check& c) {
    auto f = parse_poly("x^3+y^2*z", vars({"x", "y", "z"}));
    auto r3 = rank(assemble_dfd_matrix(f, 3));
    auto r6 = rank(assemble_dfd_matrix(f, 6));
    c.expect(r3 == 8, "rank at 3 is " + std::to_string(r3));
    c.expect(r6 == 26, "rank at 6 is " + std::to_string(r6));
  });

  criterion("AC4", "x^3+y^2z: k=1 false, k=2 true, order 2, certificates verify", 0, [](Check& c) {
    auto ring = vars({"x", "y", "z"});
    auto f = parse_poly("x^3+y^2*z", ring);
    auto one = Polynomial::constant(ring, 1);
    auto k1 = torsion_membership(f, one, 1);
    c.expect(!k1.member, "torsion_membership(k=1) is true (a verified witness exists: " +
                             (k1.certificate ? to_string(k1.certificate->eta) : std::string("?")) + ")");
    auto k2 = torsion_membership(f, one, 2);
    c.expect(k2.member, "torsion_membership(k=2) is false");
    c.expect(k2.certificate && verify_certificate(*k2.certificate), "k=2 certificate verifies");
    auto order = torsion_order_of_class(f, one);
    c.expect(order.status == TorsionOrderVerdict::Status::torsion && order.order == 2,
             std::string("torsion order is ") + to_string(order.status) + " " + std::to_string(order.order));
    c.expect(!order.certificate || verify_certificate(*order.certificate), "order certificate verifies");
    DifferentialForm eta(ring, 1);
    eta.add({0}, parse_poly("32/3*x^3*y*z", ring));
    eta.add({1}, parse_poly("x*y^2*z^2", ring));
    eta.add({2}, parse_poly("1/3*x^4*y", ring));
    c.expect(verify_certificate({f, one, 2, eta}), "explicit k=2 witness verifies");
  });

  criterion("AC5", "x^2y^2+xz^3+yz^3: k=1,2 false, unresolved above 2", 0, [](Check& c) {
    auto ring = vars({"x", "y", "z"});
    auto f = parse_poly("x^2*y^2+x*z^3+y*z^3", ring);
    auto one = Polynomial::constant(ring, 1);
    c.expect(!torsion_membership(f, one, 1).member, "k=1 solvable");
    c.expect(!torsion_membership(f, one, 2).member, "k=2 solvable");
    auto v = torsion_order_of_class(f, one, 2);
    c.expect(v.status == TorsionOrderVerdict::Status::unresolved && v.kmax == 2, "verdict not unresolved_above(2)");
  });

  criterion("AC6", "x^2z+y^3+xyt: rank 14, f*w solvable, order 1 with certificate", 0, [](Check& c) {
    auto ring = vars({"x", "y", "z", "t"});
    auto f = parse_poly("x^2*z+y^3+x*y*t", ring);
    auto one = Polynomial::constant(ring, 1);
    auto r = rank(assemble_dfd_matrix(f, 3));
    c.expect(r == 14, "rank is " + std::to_string(r));
    auto m = torsion_membership(f, one, 1);
    c.expect(m.member, "f*w not in the image");
    auto v = torsion_order_of_class(f, one);
    c.expect(v.status == TorsionOrderVerdict::Status::torsion && v.order == 1, "order is not 1");
    c.expect(v.certificate && verify_certificate(*v.certificate), "certificate does not verify");
  });

  criterion("AC7", "x^p y^q cross-check for (1,2),(2,3),(3,4); dim_C = 1 exactly at (k+1)(p+q), k>=1", 0,
            [](Check& c) {
              auto ring = vars({"x", "y"});
              for (auto [p, q] : {std::pair{1UL, 2UL}, std::pair{2UL, 3UL}, std::pair{3UL, 4UL}}) {
                const long smax = static_cast<long>(2 * (p + q) + 6);
                auto rep = xpyq_oracle(p, q, smax);
                auto mm = xpyq_cross_check(rep, 2);
                for (const auto& m : mm)
                  c.expect(false, "p=" + std::to_string(p) + " q=" + std::to_string(q) + " s=" + std::to_string(m.s) +
                                      " " + m.quantity);
                auto f = Polynomial::monomial(ring, Monomial({static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)}));
                const long pq = static_cast<long>(p + q);
                for (long s = 0; s <= smax; ++s) {
                  const std::size_t expected = (s >= 2 * pq && s % pq == 0) ? 1 : 0;
                  if (dim_C(f, s) != expected)
                    c.expect(false, "dim_C p=" + std::to_string(p) + " q=" + std::to_string(q) + " s=" + std::to_string(s));
                }
              }
            });

  criterion("AC8", "property suite on 30 random f, n in {2,3}, d in {2,3,4}", 60.0, [](Check& c) {
    std::mt19937 rng(20241017);
    int isolated_count = 0, constructed = 0, primitive_checked = 0, cases = 0;
    for (std::size_t n = 2; n <= 3; ++n) {
      auto ring = Ring::make(n);
      for (unsigned d = 2; d <= 4; ++d) {
        for (int variant = 0; variant < 5; ++variant) {
          Polynomial f = variant < 2 ? oracle::random_homogeneous(rng, ring, d, 3, 0.8)
                                     : random_non_isolated(rng, ring, d, variant);
          ++cases;
          const bool iso = is_isolated(f);
          if (variant >= 2) {
            ++constructed;
            c.expect(!iso, "constructed f reported isolated: " + to_string(f));
          }
          if (iso) ++isolated_count;
          const long lo = static_cast<long>(n), hi = static_cast<long>(n + 2 * d);
          bool torsion_seen = false;
          bool constant_in_k = true;
          for (long s = lo; s <= hi; ++s) {
            const std::string where = to_string(f) + " s=" + std::to_string(s);
            c.expect(prop1_check(f, s), "column-space identity at " + where);
            c.expect(dim_B(f, s) == dim_C(f, s) + milnor_dim(f, s - lo), "B - C = M at " + where);
            auto v = torsion_filtration_dims(f, s, 3);
            if (iso) c.expect(v == std::vector<std::size_t>(3, 0), "isolated with torsion at " + where);
            if (v.back() > 0) torsion_seen = true;
            if (v.front() != v.back()) constant_in_k = false;
          }
          if (!iso) c.expect(torsion_seen, "non-isolated without torsion: " + to_string(f));
          if (n == 2 && !iso && is_primitive_binary(f)) {
            ++primitive_checked;
            c.expect(constant_in_k, "primitive binary form with k-dependent torsion: " + to_string(f));
          }
        }
      }
    }
    c.expect(cases >= 25, "fewer than 25 cases");
    c.expect(isolated_count > 0 && constructed > 0, "sample lacks isolated or non-isolated cases");
    c.expect(primitive_checked > 0, "no primitive non-isolated binary form sampled");
    std::printf("      %d cases, %d isolated, %d non-isolated by construction, %d primitive binary\n", cases,
                isolated_count, constructed, primitive_checked);
  });

  criterion("AC9", "fraction-free rank/solve vs naive elimination on 100 random matrices", 0, [](Check& c) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = dim(rng), cols = dim(rng);
      auto a = oracle::random_matrix(rng, rows, cols, 12, 0.35);
      std::vector<Rational> b = oracle::random_matrix(rng, rows, 1, 12, 0.2).column(0);
      if (trial % 2 == 0) {
        auto x = oracle::random_matrix(rng, cols, 1, 5).column(0);
        b = a * std::span<const Rational>(x);
      }
      const std::string where = "trial " + std::to_string(trial);
      c.expect(rank(a) == oracle::naive_rank(a), "rank mismatch, " + where);
      auto out = solve(a, b);
      auto naive = oracle::naive_solve(a, b);
      c.expect(out.solvable == naive.has_value(), "solvability mismatch, " + where);
      if (out.solvable && naive) c.expect(*out.particular == *naive, "solution mismatch, " + where);
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
