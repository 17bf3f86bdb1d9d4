#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_poly_args(CLI::App* sub, brieskorn::cli::PolyInput& input, std::string& vars) {
  sub->add_option("f", input.f, "homogeneous polynomial, e.g. \"x^3+y^2*z\"")->required();
  sub->add_option("--vars", vars, "comma-separated variable names (default: inferred, x,y,z,t first)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace brieskorn::cli;

  CLI::App app{"Graded invariants and torsion certificates for Brieskorn modules of homogeneous polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  HilbertOptions hilbert;
  std::string hilbert_vars;
  auto* h = app.add_subcommand("hilbert", "Hilbert function of the Milnor algebra, isolatedness, Milnor number");
  add_poly_args(h, hilbert.input, hilbert_vars);
  h->add_option("--max-deg", hilbert.max_deg, "largest degree e (default n(d-2)+1)");

  DimsOptions dims;
  std::string dims_vars;
  auto* dm = app.add_subcommand("dims", "graded dimensions of M(f), B(f), C(f) and the torsion filtration");
  add_poly_args(dm, dims.input, dims_vars);
  dm->add_option("--min-deg", dims.min_deg, "smallest total degree s (default n)");
  dm->add_option("--max-deg", dims.max_deg, "largest total degree s (default n+3d)");
  dm->add_option("--kmax", dims.kmax, "torsion filtration depth")->capture_default_str();
  dm->add_option("--threads", dims.threads, "worker threads for the degree sweep")->capture_default_str();

  TorsionOptions torsion;
  std::string torsion_vars;
  bool order = false;
  auto* t = app.add_subcommand("torsion", "decide t^k [g omega_n] = 0 and produce a witness");
  add_poly_args(t, torsion.input, torsion_vars);
  t->add_option("--g", torsion.g, "the class is [g omega_n]")->capture_default_str();
  auto* k_opt = t->add_option("--k", torsion.k, "single membership query for this k");
  auto* order_opt = t->add_flag("--order", order, "search for the torsion order (default)");
  k_opt->excludes(order_opt);
  t->add_option("--kmax", torsion.kmax, "largest k tried by --order")->capture_default_str();
  t->add_option("--cert-out", torsion.cert_out, "write the certificate JSON here");

  std::string cert_file;
  auto* v = app.add_subcommand("verify", "replay a certificate file");
  v->add_option("cert_file", cert_file)->required();

  SeriesOptions series;
  auto* s = app.add_subcommand("series", "formal Poincare series t^n(1-t^(d-1))^n/(1-t)^(n+1)");
  s->add_option("n", series.n)->required();
  s->add_option("d", series.d)->required();
  s->add_option("--terms", series.terms)->capture_default_str();

  XpyqOptions xpyq;
  auto* x = app.add_subcommand("xpyq", "closed-form report for f = x^p y^q, cross-checked against linear algebra");
  x->add_option("p", xpyq.p)->required();
  x->add_option("q", xpyq.q)->required();
  x->add_option("--max-deg", xpyq.max_deg, "largest total degree (default 2(p+q)+6)");
  x->add_option("--kmax", xpyq.kmax, "torsion filtration depth in the cross-check")->capture_default_str();

  std::string manifest_file;
  unsigned manifest_threads = 1;
  auto* mf = app.add_subcommand("manifest", "run a JSON batch of jobs; output ordered by job id");
  mf->add_option("file", manifest_file)->required();
  mf->add_option("--threads", manifest_threads)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  Result r;
  if (*h) {
    hilbert.input.vars = split_vars(hilbert_vars);
    r = run_hilbert(hilbert);
  } else if (*dm) {
    dims.input.vars = split_vars(dims_vars);
    r = run_dims(dims);
  } else if (*t) {
    torsion.input.vars = split_vars(torsion_vars);
    r = run_torsion(torsion);
  } else if (*v) {
    r = run_verify(cert_file);
  } else if (*s) {
    r = run_series(series);
  } else if (*x) {
    r = run_xpyq(xpyq);
  } else if (*mf) {
    r = run_manifest(manifest_file, manifest_threads);
    json = true;
  }

  if (json) {
    std::cout << r.json.dump(2) << "\n";
  } else {
    (r.exit_code == kParseError || r.exit_code == kPrecondition ? std::cerr : std::cout) << r.text;
  }
  return r.exit_code;
}
