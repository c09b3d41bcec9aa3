// swbench: runs the verification suites and tabulates closed-form symbols.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stratweyl/suites.hpp"

using namespace sw;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "swbench.report/1";

struct RunConfig {
  std::string suite = "all";
  double lambda = 1.0;
  int n = 1;
  int N = 24;
  int quad_order = 60;
  std::string k = "torus";
  std::vector<int> m;
  double j = 0.5;
  std::vector<std::string> tol;
  std::uint64_t seed = 1;
  int groups = 20;
  std::string out;
  std::string format = "json";
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17e", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

SuiteConfig build(const RunConfig& rc) {
  SuiteConfig c;
  c.setup.lambda = rc.lambda;
  c.setup.n = rc.n;
  c.setup.N = rc.N;
  c.setup.quad_order = rc.quad_order;
  if (rc.k == "trivial") {
    c.setup.choice = CompactChoice::trivial(rc.n);
  } else if (rc.k == "su2") {
    if (rc.n != 2) throw DimensionError("--k su2 needs --n 2");
    if (!(rc.j > 0.0) || std::abs(2 * rc.j - std::round(2 * rc.j)) > 0.0) throw DimensionError("--j must be a positive half-integer");
    c.setup.choice = CompactChoice::su2(rc.j);
  } else if (rc.k == "torus") {
    std::vector<int> m = rc.m;
    if (m.empty()) m.assign(rc.n, 1);
    if (static_cast<int>(m.size()) != rc.n) throw DimensionError("--m needs one weight per coordinate");
    Eigen::VectorXi w(rc.n);
    for (int i = 0; i < rc.n; ++i) w[i] = m[i];
    c.setup.choice = CompactChoice::torus(w);
  } else {
    throw DimensionError("--k must be torus, su2 or trivial");
  }
  c.seed = rc.seed;
  c.groups = rc.groups;
  for (const auto& t : rc.tol) {
    const auto eq = t.find('=');
    std::size_t used = 0;
    const std::string num = eq == std::string::npos ? t : t.substr(eq + 1);
    double v;
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      throw DimensionError("bad --tol value: " + t);
    }
    if (used != num.size() || !(v >= 0.0)) throw DimensionError("bad --tol value: " + t);
    if (eq == std::string::npos)
      c.tol_all = v;
    else
      c.tol[t.substr(0, eq)] = v;
  }
  return c;
}

json config_json(const RunConfig& rc, const SuiteConfig& c) {
  json j;
  j["suite"] = rc.suite;
  j["lambda"] = rc.lambda;
  j["n"] = rc.n;
  j["N"] = rc.N;
  j["quad_order"] = rc.quad_order;
  j["k"] = rc.k;
  if (rc.k == "torus") {
    std::vector<int> m(c.setup.choice.m.data(), c.setup.choice.m.data() + c.setup.choice.m.size());
    j["m"] = m;
  }
  if (rc.k == "su2") j["j"] = rc.j;
  j["tol"] = rc.tol;
  j["seed"] = rc.seed;
  j["groups"] = rc.groups;
  j["format"] = rc.format;
  return j;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary);
  if (!f) throw DimensionError("cannot write " + rc.out);
  f << text;
}

int do_run(const RunConfig& rc) {
  const SuiteConfig cfg = build(rc);
  std::vector<std::string> names;
  if (rc.suite == "all")
    names = suite_names();
  else
    names = {rc.suite};
  const auto reports = run_suites(names, cfg);
  bool pass = true;
  for (const auto& r : reports) {
    pass = pass && r.pass();
    for (const auto& c : r.checks)
      std::cerr << (c.pass() ? "PASS " : "FAIL ") << r.suite << " " << c.name << " residual=" << c.residual
                << " tol=" << c.tolerance << " (" << c.seconds << " s)\n";
  }
  std::ostringstream os;
  if (rc.format == "json") {
    json j;
    j["schema"] = kSchema;
    j["config"] = config_json(rc, cfg);
    j["pass"] = pass;
    json arr = json::array();
    for (const auto& r : reports) {
      json s;
      s["suite"] = r.suite;
      s["pass"] = r.pass();
      json checks = json::array();
      for (const auto& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["residual"] = num(c.residual);
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass();
        e["detail"] = c.detail;
        checks.push_back(e);
      }
      s["checks"] = checks;
      arr.push_back(s);
    }
    j["suites"] = arr;
    os << j.dump(2) << "\n";
  } else {
    os << "# schema=" << kSchema << " config=" << config_json(rc, cfg).dump() << "\n";
    os << "suite,check,residual,tolerance,pass,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        os << r.suite << "," << c.name << "," << fmt17(c.residual) << "," << fmt17(c.tolerance) << ","
           << (c.pass() ? "true" : "false") << "," << csv_field(c.detail) << "\n";
  }
  emit(rc, os.str());
  return pass ? 0 : 1;
}

std::string basis_name(const CompactK& K, int i) {
  const int n = K.n();
  if (i < n) return "X" + std::to_string(i + 1);
  if (i < 2 * n) return "Y" + std::to_string(i - n + 1);
  if (i == 2 * n) return "Z";
  return "A" + std::to_string(i - 2 * n);
}

std::string point_label(const CVector& z, const RVector& phi) {
  std::ostringstream o;
  o.precision(6);
  o << "z=(";
  for (int k = 0; k < z.size(); ++k) o << (k ? ";" : "") << z[k].real() << (z[k].imag() < 0 ? "" : "+") << z[k].imag() << "i";
  o << ") phi=(";
  for (int k = 0; k < phi.size(); ++k) o << (k ? ";" : "") << phi[k];
  o << ")";
  return o.str();
}

std::string phase_label(const RVector& p, const RVector& q, const RVector& phi) {
  std::ostringstream o;
  o.precision(6);
  o << "p=(";
  for (int k = 0; k < p.size(); ++k) o << (k ? ";" : "") << p[k];
  o << ") q=(";
  for (int k = 0; k < q.size(); ++k) o << (k ? ";" : "") << q[k];
  o << ") phi=(";
  for (int k = 0; k < phi.size(); ++k) o << (k ? ";" : "") << phi[k];
  o << ")";
  return o.str();
}

int do_table(const RunConfig& rc, const std::string& what) {
  if (what != "dpi-symbols" && what != "dsigma-symbols" && what != "moment-map")
    throw DimensionError("table must be dpi-symbols, dsigma-symbols or moment-map");
  const SuiteConfig cfg = build(rc);
  if (cfg.setup.N < 1 || !(cfg.setup.lambda > 0) || cfg.setup.quad_order < min_quadrature_order(cfg.setup.N))
    throw DimensionError("invalid truncation, lambda or quadrature order");
  const SWCalculus sw(cfg.setup);
  const CompactK& K = sw.group();
  const double lam = sw.lambda();
  std::mt19937_64 rng(rc.seed);
  auto u = [&rng](double lo, double hi) { return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53); };
  // The base point (0, phi0) followed by three seeded samples.
  std::vector<std::pair<CVector, OrbitPoint>> pts{{CVector::Zero(sw.n()), sw.base_point()}};
  for (int t = 0; t < 3; ++t) {
    CVector z(sw.n());
    for (int k = 0; k < sw.n(); ++k) {
      const double x = u(-1, 1), y = u(-1, 1);
      z[k] = cplx(x, y);
    }
    pts.push_back({z, K.dim_k() ? K.orbit_point(K.random_element(rng)) : sw.base_point()});
  }
  std::ostringstream os;
  os << "# schema=" << kSchema << " table=" << what << " config=" << config_json(rc, cfg).dump() << "\n";
  os << "X,symbol,point,closed_re,closed_im,computed_re,computed_im,residual\n";
  auto row = [&](const std::string& x, const std::string& sym, const std::string& pt, cplx closed, cplx computed) {
    os << x << "," << sym << "," << csv_field(pt) << "," << fmt17(closed.real()) << "," << fmt17(closed.imag()) << ","
       << fmt17(computed.real()) << "," << fmt17(computed.imag()) << "," << fmt17(std::abs(closed - computed)) << "\n";
  };
  const auto basis = MotionAlgElement::basis(K);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& X = basis[i];
    const std::string xn = basis_name(K, static_cast<int>(i));
    if (what == "dpi-symbols") {
      const FockLieSymbol U = fock_sw(sw, dpi_image(K, X, lam));
      const OperatorMatrix dp = dpi_matrix(K, X, sw.N(), lam);
      for (const auto& [z, p] : pts) {
        const std::string lab = point_label(z, p.phi);
        row(xn, "U", lab, dpi_symbol_closed_form(sw, X, z, p), U.evaluate(sw.small(), z, p));
        row(xn, "S", lab, I * m_pairing(K, big_phi(K, z, p.phi, lam), X), big_symbol(K, dp, z, p));
      }
    } else if (what == "dsigma-symbols") {
      const SchrodingerLieSymbol W = schrodinger_sw(sw, dsigma_image(K, X, lam));
      for (const auto& [z, p] : pts) {
        const auto [pp, qq] = j_inverse(z, lam);
        row(xn, "Winv", phase_label(pp, qq, p.phi), dsigma_symbol_closed_form(sw, X, pp, qq, p), W.evaluate(sw.small(), pp, qq, p));
      }
    } else {
      const OperatorMatrix dp = dpi_matrix(K, X, sw.N(), lam);
      for (const auto& [z, p] : pts)
        row(xn, "pairing", point_label(z, p.phi), m_pairing(K, big_phi(K, z, p.phi, lam), X), -I * big_symbol(K, dp, z, p));
    }
  }
  emit(rc, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratonovich-Weyl verification bench"};
  app.require_subcommand(1);
  RunConfig rc;
  std::string what;

  auto add_common = [&rc](CLI::App* s) {
    s->add_option("--lambda", rc.lambda, "Planck-type parameter lambda > 0");
    s->add_option("--n", rc.n, "complex dimension (1 or 2)")->check(CLI::IsMember({1, 2}));
    s->add_option("--N", rc.N, "truncation degree");
    s->add_option("--quad-order", rc.quad_order, "Gauss-Hermite order");
    s->add_option("--k", rc.k, "compact factor")->check(CLI::IsMember({"torus", "su2", "trivial"}));
    s->add_option("--m", rc.m, "torus weights (one per coordinate)")->delimiter(',');
    s->add_option("--j", rc.j, "su2 spin");
    s->add_option("--tol", rc.tol, "tolerance override: name=value, or a value for every check");
    s->add_option("--seed", rc.seed, "random seed");
    s->add_option("--groups", rc.groups, "random group elements per group check");
    s->add_option("--out", rc.out, "output file (default: stdout)");
    s->add_option("--format", rc.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* run = app.add_subcommand("run", "run verification suites");
  add_common(run);
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  run->add_option("--suite", rc.suite, "suite name or all")->check(CLI::IsMember(choices));

  auto* table = app.add_subcommand("table", "tabulate closed forms against computed symbols (CSV)");
  add_common(table);
  table->add_option("what", what, "dpi-symbols, dsigma-symbols or moment-map")
      ->required()
      ->check(CLI::IsMember({"dpi-symbols", "dsigma-symbols", "moment-map"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*run) return do_run(rc);
    return do_table(rc, what);
  } catch (const DimensionError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
