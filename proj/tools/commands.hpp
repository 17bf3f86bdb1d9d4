#pragma once

#include <brieskorn/all.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace brieskorn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kInternal = 4,
  kUnresolved = 5,
};

struct Result {
  int exit_code = kOk;
  Json json;
  std::string text;
};

struct PolyInput {
  std::string f;
  std::vector<std::string> vars;  // empty: infer from f
};

struct HilbertOptions {
  PolyInput input;
  std::optional<long> max_deg;
};

struct DimsOptions {
  PolyInput input;
  std::optional<long> min_deg;
  std::optional<long> max_deg;
  unsigned long kmax = 2;
  unsigned threads = 1;
};

struct TorsionOptions {
  PolyInput input;
  std::string g = "1";
  std::optional<long> k;  // set: single membership query; unset: order search
  unsigned long kmax = default_kmax;
  std::string cert_out;
};

struct SeriesOptions {
  unsigned long n = 0;
  unsigned long d = 0;
  std::size_t terms = 10;
};

struct XpyqOptions {
  unsigned long p = 0;
  unsigned long q = 0;
  std::optional<long> max_deg;
  unsigned long kmax = 2;
};

inline Result failure(int code, const std::string& message) {
  return {code, Json{{"schema", schema_version}, {"error", message}, {"exit_code", code}}, "error: " + message + "\n"};
}

/// Exit code for an exception escaping a command.
inline Result map_exception() {
  try {
    throw;
  } catch (const ParseError& e) {
    return failure(kParseError, e.what());
  } catch (const PreconditionError& e) {
    return failure(kPrecondition, e.what());
  } catch (const ShapeError& e) {
    return failure(kPrecondition, e.what());
  } catch (const nlohmann::json::exception& e) {
    return failure(kParseError, e.what());
  } catch (const std::exception& e) {
    return failure(kInternal, e.what());
  }
}

inline std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline RingPtr ring_for(const PolyInput& in) {
  auto names = in.vars.empty() ? infer_variables(in.f) : in.vars;
  if (names.empty()) names.push_back("x");
  return Ring::make(names);
}

/// Parsed f that is homogeneous of degree >= 2.
inline Polynomial read_f(const PolyInput& in) {
  Polynomial f = parse_poly(in.f, ring_for(in));
  auto d = f.homogeneous_degree();
  if (!d) throw PreconditionError("f must be a nonzero homogeneous polynomial");
  if (*d < 2) throw PreconditionError("f must have degree at least 2 (got " + std::to_string(*d) + ")");
  return f;
}

inline std::string header_line(const Polynomial& f) {
  std::ostringstream os;
  os << "f = " << to_string(f) << "  (n=" << f.ring()->size() << ", d=" << f.degree() << ")\n";
  return os.str();
}

inline Result run_hilbert(const HilbertOptions& o) {
  try {
    Polynomial f = read_f(o.input);
    const long n = static_cast<long>(f.ring()->size());
    const long d = f.degree();
    const long max_deg = o.max_deg.value_or(n * (d - 2) + 1);
    if (max_deg < 0) throw PreconditionError("--max-deg must be non-negative");

    std::vector<std::size_t> dims;
    for (long e = 0; e <= max_deg; ++e) dims.push_back(milnor_dim(f, e));
    const bool isolated = is_isolated(f);

    Result r;
    r.json = {{"schema", schema_version}, {"f", to_string(f)}, {"vars", f.ring()->names()},
              {"n", n}, {"d", d}, {"dims", dims}, {"isolated", isolated}};
    std::ostringstream os;
    os << header_line(f) << "  e  dim M(f)_e\n";
    for (std::size_t e = 0; e < dims.size(); ++e) os << std::setw(3) << e << "  " << dims[e] << "\n";
    os << "isolated: " << (isolated ? "yes" : "no") << "\n";
    if (isolated) {
      const std::size_t mu = milnor_number(f);
      r.json["milnor_number"] = mu;
      os << "milnor number: " << mu << "\n";
    }
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

inline Result run_dims(const DimsOptions& o) {
  try {
    Polynomial f = read_f(o.input);
    const long n = static_cast<long>(f.ring()->size());
    const long d = f.degree();
    const long lo = o.min_deg.value_or(n);
    const long hi = o.max_deg.value_or(n + 3 * d);
    if (lo < 0 || hi < lo) throw PreconditionError("degree range must satisfy 0 <= min-deg <= max-deg");
    if (o.kmax < 1) throw PreconditionError("--kmax must be at least 1");

    GradedReport rep = graded_report(f, lo, hi, o.kmax, o.threads);
    Result r;
    r.json = to_json(rep);
    std::ostringstream os;
    os << header_line(f) << "isolated: " << (rep.isolated ? "yes" : "no") << "\n";
    os << "  s  m  dim_M  dim_B  dim_C  torsion V_1..V_" << o.kmax << "  ok\n";
    for (const auto& row : rep.rows) {
      os << std::setw(3) << row.s << std::setw(3) << row.coeff_deg << std::setw(7) << row.dim_M << std::setw(7)
         << row.dim_B << std::setw(7) << row.dim_C << "  ";
      for (std::size_t k = 0; k < row.torsion.size(); ++k) os << (k ? "," : "") << row.torsion[k];
      os << "  " << (row.identity_ok ? "yes" : "NO") << "\n";
    }
    if (!rep.identities_hold()) {
      os << "internal identity check FAILED\n";
      r.exit_code = kInternal;
    }
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

inline void write_certificate(const TorsionCertificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << to_json(c).dump(2) << "\n";
}

inline Result run_torsion(const TorsionOptions& o) {
  try {
    Polynomial f = read_f(o.input);
    Polynomial g = parse_poly(o.g, f.ring());
    if (g.is_zero() || !g.is_homogeneous()) throw PreconditionError("g must be a nonzero homogeneous polynomial");

    Result r;
    std::ostringstream os;
    os << header_line(f) << "class: [(" << to_string(g) << ") omega_" << f.ring()->size() << "]\n";
    r.json = {{"schema", schema_version}, {"f", to_string(f)}, {"g", to_string(g)}, {"vars", f.ring()->names()}};
    const TorsionCertificate* cert = nullptr;

    MembershipResult single;
    TorsionOrderVerdict verdict;
    if (o.k) {
      single = torsion_membership(f, g, *o.k);
      r.json["k"] = *o.k;
      r.json["member"] = single.member;
      r.json["equations"] = single.rows;
      r.json["unknowns"] = single.cols;
      r.json["rank"] = single.rank;
      os << "k=" << *o.k << ": system " << single.rows << " equations x " << single.cols << " unknowns, rank "
         << single.rank << ": " << (single.member ? "solvable" : "no solution") << "\n";
      if (single.certificate) cert = &*single.certificate;
    } else {
      if (o.kmax < 1) throw PreconditionError("--kmax must be at least 1");
      verdict = torsion_order_of_class(f, g, o.kmax);
      const Json vj = to_json(verdict);
      for (const auto& [k, v] : vj.items()) r.json[k] = v;
      switch (verdict.status) {
        case TorsionOrderVerdict::Status::zero_class:
          os << "zero class\n";
          break;
        case TorsionOrderVerdict::Status::torsion:
          os << "torsion order " << verdict.order << "\n";
          break;
        case TorsionOrderVerdict::Status::unresolved:
          os << "unresolved: no annihilating power t^k with k <= " << o.kmax << "\n";
          r.exit_code = kUnresolved;
          break;
      }
      if (verdict.certificate) cert = &*verdict.certificate;
    }

    if (cert) {
      if (o.k) r.json["certificate"] = to_json(*cert);
      os << "witness eta = " << to_string(cert->eta) << "\n";
      os << "verified: " << (verify_certificate(*cert) ? "yes" : "NO") << "\n";
      if (!o.cert_out.empty()) {
        write_certificate(*cert, o.cert_out);
        os << "certificate written to " << o.cert_out << "\n";
      }
    }
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

inline Result run_verify(const std::string& path) {
  try {
    std::ifstream in(path);
    if (!in) return failure(kParseError, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str().find_first_not_of(" \t\r\n") == std::string::npos) return failure(kParseError, "empty certificate file");
    TorsionCertificate c = certificate_from_json(Json::parse(buf.str()));
    const bool ok = verify_certificate(c);
    Result r;
    r.exit_code = ok ? kOk : kVerifyFailed;
    r.json = {{"schema", schema_version}, {"file", path}, {"verified", ok}};
    r.text = ok ? "certificate verified: df^d(eta) = f^" + std::to_string(c.k) + "*g*omega\n"
                : std::string("certificate FAILED verification\n");
    return r;
  } catch (...) {
    Result r = map_exception();
    // anything wrong with the file's structure is a parse failure
    if (r.exit_code == kPrecondition) {
      r.exit_code = kParseError;
      r.json["exit_code"] = kParseError;
    }
    return r;
  }
}

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Result run_series(const SeriesOptions& o) {
  try {
    auto coeffs = formal_poincare_series(o.n, o.d, o.terms);
    Result r;
    Json arr = Json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      arr.push_back(integer_json(coeffs[i]));
      os << (i ? "," : "") << coeffs[i];
    }
    os << "\n";
    r.json = {{"schema", schema_version}, {"n", o.n}, {"d", o.d}, {"coefficients", arr}};
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

inline Result run_xpyq(const XpyqOptions& o) {
  try {
    const long smax = o.max_deg.value_or(2 * static_cast<long>(o.p + o.q) + 6);
    XpyqReport rep = xpyq_oracle(o.p, o.q, smax);
    auto mismatches = xpyq_cross_check(rep, o.kmax);
    Result r;
    r.json = to_json(rep, &mismatches);
    std::ostringstream os;
    auto [gx, gy] = rep.c_generator();
    os << "f = x^" << o.p << "*y^" << o.q << ", C(f) = C[t] x^" << gx << "*y^" << gy << " dx^dy\n";
    os << "  s  m  torsion  dim_B  dim_C\n";
    for (const auto& row : rep.rows)
      os << std::setw(3) << row.s << std::setw(3) << row.coeff_deg << std::setw(9) << row.torsion_count
         << std::setw(7) << row.b_count << std::setw(7) << row.c_dim << "\n";
    for (const auto& m : mismatches)
      os << "mismatch at s=" << m.s << ": " << m.quantity << " expected " << m.expected << " got " << m.actual << "\n";
    os << "cross-check " << (mismatches.empty() ? "PASS" : "FAIL") << "\n";
    if (!mismatches.empty()) r.exit_code = kInternal;
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

/// Batch mode. The manifest is a JSON array of jobs (or {"jobs": [...]}):
///   {"id": "...", "f": "...", "vars": [...], "command": "hilbert|dims|torsion", "params": {...}}
/// Results come back ordered by id. The overall exit code is the largest
/// job exit code.
inline Result run_manifest(const std::string& path, unsigned threads) {
  try {
    std::ifstream in(path);
    if (!in) return failure(kParseError, "cannot read '" + path + "'");
    Json doc = Json::parse(in);
    Json jobs = doc.is_object() && doc.contains("jobs") ? doc["jobs"] : doc;
    if (!jobs.is_array()) return failure(kParseError, "manifest must be an array of jobs");

    std::set<std::string> ids;
    for (const auto& job : jobs) {
      if (!job.is_object() || !job.contains("id") || !job["id"].is_string() || !job.contains("f") ||
          !job["f"].is_string() || !job.contains("command") || !job["command"].is_string())
        return failure(kParseError, "each job needs string fields 'id', 'f' and 'command'");
      if (!ids.insert(job["id"].get<std::string>()).second)
        return failure(kParseError, "duplicate job id '" + job["id"].get<std::string>() + "'");
    }

    auto run_job = [&](std::size_t i) -> Json {
      const Json& job = jobs[i];
      PolyInput input{job["f"].get<std::string>(), {}};
      if (job.contains("vars"))
        for (const auto& v : job["vars"]) input.vars.push_back(v.get<std::string>());
      const Json params = job.value("params", Json::object());
      auto opt_long = [&](const char* key) -> std::optional<long> {
        if (params.contains(key)) return params[key].get<long>();
        return std::nullopt;
      };
      const std::string command = job["command"].get<std::string>();
      Result res;
      try {
        if (command == "hilbert") {
          res = run_hilbert({input, opt_long("max_deg")});
        } else if (command == "dims") {
          res = run_dims({input, opt_long("min_deg"), opt_long("max_deg"), params.value("kmax", 2UL), 1});
        } else if (command == "torsion") {
          res = run_torsion({input, params.value("g", std::string("1")), opt_long("k"),
                             params.value("kmax", default_kmax), ""});
        } else {
          res = failure(kParseError, "unknown command '" + command + "'");
        }
      } catch (const nlohmann::json::exception& e) {
        res = failure(kParseError, std::string("bad params: ") + e.what());
      }
      return {{"id", job["id"]}, {"command", command}, {"exit_code", res.exit_code}, {"result", res.json}};
    };

    auto results = parallel_map(jobs.size(), threads, run_job);
    std::sort(results.begin(), results.end(),
              [](const Json& a, const Json& b) { return a["id"].get<std::string>() < b["id"].get<std::string>(); });

    Result r;
    r.json = Json::array();
    std::ostringstream os;
    for (auto& j : results) {
      r.exit_code = std::max(r.exit_code, j["exit_code"].get<int>());
      os << j["id"].get<std::string>() << " (" << j["command"].get<std::string>() << "): exit " << j["exit_code"]
         << "\n";
      r.json.push_back(std::move(j));
    }
    r.text = os.str();
    return r;
  } catch (...) {
    return map_exception();
  }
}

}  // namespace brieskorn::cli
