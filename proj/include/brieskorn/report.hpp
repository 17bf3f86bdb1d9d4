#pragma once

#include <brieskorn/brieskorn.hpp>
#include <brieskorn/errors.hpp>
#include <brieskorn/exterior.hpp>
#include <brieskorn/format.hpp>
#include <brieskorn/xpyq.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <future>
#include <string>
#include <vector>

namespace brieskorn {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "brieskorn/1";

/// Runs fn(0..count-1) on up to `threads` workers; results are stored by
/// index so the output does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> workers;
  const std::size_t w = std::min<std::size_t>(threads, count);
  for (std::size_t t = 0; t < w; ++t)
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < count; i += w) out[i] = fn(i);
    }));
  for (auto& f : workers) f.get();
  return out;
}

struct GradedRow {
  long s = 0;
  long coeff_deg = 0;
  std::size_t dim_M = 0;
  std::size_t dim_B = 0;
  std::size_t dim_C = 0;
  std::vector<std::size_t> torsion;  // V_1..V_kmax
  bool identity_ok = true;           // column-space identity and B - C = M
};

struct GradedReport {
  Polynomial f;
  unsigned long d = 0;
  unsigned long kmax = 0;
  bool isolated = false;
  std::vector<GradedRow> rows;

  bool identities_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const GradedRow& r) { return r.identity_ok; });
  }
};

inline GradedRow graded_row(const Polynomial& f, long s, unsigned long kmax) {
  const long n = static_cast<long>(f.ring()->size());
  GradedRow row;
  row.s = s;
  row.coeff_deg = s - n;
  row.dim_M = milnor_dim(f, s - n);
  row.dim_B = dim_B(f, s);
  row.dim_C = dim_C(f, s);
  row.torsion = kmax > 0 ? torsion_filtration_dims(f, s, kmax) : std::vector<std::size_t>{};
  row.identity_ok = prop1_check(f, s) && row.dim_B == row.dim_C + row.dim_M;
  return row;
}

inline GradedReport graded_report(const Polynomial& f, long min_s, long max_s, unsigned long kmax,
                                  unsigned threads = 1) {
  GradedReport r{f, detail::require_homogeneous(f, 2, "graded_report"), kmax, is_isolated(f), {}};
  if (max_s < min_s) return r;
  r.rows = parallel_map(static_cast<std::size_t>(max_s - min_s + 1), threads,
                        [&](std::size_t i) { return graded_row(f, min_s + static_cast<long>(i), kmax); });
  return r;
}

inline Json to_json(const GradedReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"s", row.s},
                    {"coeff_deg", row.coeff_deg},
                    {"dim_M", row.dim_M},
                    {"dim_B", row.dim_B},
                    {"dim_C", row.dim_C},
                    {"torsion", row.torsion},
                    {"identity_ok", row.identity_ok}});
  return {{"schema", schema_version},
          {"f", to_string(r.f)},
          {"vars", r.f.ring()->names()},
          {"n", r.f.ring()->size()},
          {"d", r.d},
          {"isolated", r.isolated},
          {"kmax", r.kmax},
          {"rows", rows},
          {"identities_hold", r.identities_hold()}};
}

/// eta payload: [{"indices": [1-based...], "poly": "..."}]
inline Json form_to_json(const DifferentialForm& form) {
  Json out = Json::array();
  for (const auto& [idx, p] : form.coefficients()) {
    std::vector<std::size_t> one_based;
    for (auto i : idx) one_based.push_back(i + 1);
    out.push_back({{"indices", one_based}, {"poly", to_string(p)}});
  }
  return out;
}

inline Json to_json(const TorsionCertificate& c) {
  return {{"schema", schema_version},
          {"vars", c.f.ring()->names()},
          {"f", to_string(c.f)},
          {"g", to_string(c.g)},
          {"k", c.k},
          {"eta", form_to_json(c.eta)},
          {"verified", verify_certificate(c)}};
}

/// Reads a certificate written by to_json. Structural problems throw
/// ParseError; the "verified" field is informational and never trusted.
inline TorsionCertificate certificate_from_json(const Json& j) {
  auto fail = [](const std::string& why) -> ParseError { return ParseError("certificate: " + why, 0); };
  if (!j.is_object()) throw fail("top level must be an object");
  if (!j.contains("schema") || j["schema"] != schema_version) throw fail("missing or unsupported schema");
  for (const char* key : {"vars", "f", "g", "k", "eta"})
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");
  if (!j["vars"].is_array() || j["vars"].empty()) throw fail("'vars' must be a non-empty array");
  if (!j["f"].is_string() || !j["g"].is_string()) throw fail("'f' and 'g' must be strings");
  if (!j["k"].is_number_unsigned()) throw fail("'k' must be a non-negative integer");
  if (!j["eta"].is_array()) throw fail("'eta' must be an array");

  std::vector<std::string> names;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw fail("'vars' entries must be strings");
    names.push_back(v.get<std::string>());
  }
  RingPtr ring;
  try {
    ring = Ring::make(names);
  } catch (const PreconditionError& e) {
    throw fail(e.what());
  }
  const std::size_t n = ring->size();
  if (n < 2) throw fail("need at least two variables");

  Polynomial f = parse_poly(j["f"].get<std::string>(), ring);
  Polynomial g = parse_poly(j["g"].get<std::string>(), ring);
  DifferentialForm eta(ring, n - 2);
  for (const auto& entry : j["eta"]) {
    if (!entry.is_object() || !entry.contains("indices") || !entry.contains("poly") || !entry["indices"].is_array() ||
        !entry["poly"].is_string())
      throw fail("eta entries need 'indices' (array) and 'poly' (string)");
    IndexSet idx;
    for (const auto& i : entry["indices"]) {
      if (!i.is_number_unsigned() || i.get<std::size_t>() < 1 || i.get<std::size_t>() > n)
        throw fail("eta index out of range");
      idx.push_back(i.get<std::size_t>() - 1);
    }
    try {
      eta.add(idx, parse_poly(entry["poly"].get<std::string>(), ring));
    } catch (const ShapeError& e) {
      throw fail(e.what());
    }
  }
  return TorsionCertificate{std::move(f), std::move(g), j["k"].get<unsigned long>(), std::move(eta)};
}

inline Json to_json(const TorsionOrderVerdict& v) {
  Json out = {{"status", to_string(v.status)}, {"kmax", v.kmax}};
  if (v.status == TorsionOrderVerdict::Status::torsion) out["order"] = v.order;
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  return out;
}

inline Json to_json(const XpyqReport& r, const std::vector<XpyqMismatch>* mismatches = nullptr) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"s", row.s},
                    {"coeff_deg", row.coeff_deg},
                    {"torsion_count", row.torsion_count},
                    {"b_count", row.b_count},
                    {"c_dim", row.c_dim}});
  auto [gx, gy] = r.c_generator();
  Json out = {{"schema", schema_version},
              {"p", r.p},
              {"q", r.q},
              {"c_generator", {{"x", gx}, {"y", gy}, {"total_degree", gx + gy + 2}}},
              {"note", "C(f) basis uses k >= 1; the k = 0 element x^(p-1)y^(q-1) is not in J_f"},
              {"rows", rows}};
  if (mismatches) {
    Json mm = Json::array();
    for (const auto& m : *mismatches)
      mm.push_back({{"s", m.s}, {"quantity", m.quantity}, {"expected", m.expected}, {"actual", m.actual}});
    out["cross_check"] = mismatches->empty() ? "PASS" : "FAIL";
    out["mismatches"] = mm;
  }
  return out;
}

}  // namespace brieskorn
