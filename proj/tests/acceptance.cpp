// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stratweyl/suites.hpp"

using namespace sw;

namespace {

struct Item {
  std::string suite;
  SuiteConfig cfg;
  std::vector<std::string> checks;
  std::string label;
};

SuiteConfig base(int n, CompactChoice choice) {
  SuiteConfig c;
  c.setup.n = n;
  c.setup.choice = choice;
  return c;
}

SuiteConfig torus1() {
  Eigen::VectorXi m(1);
  m << 1;
  return base(1, CompactChoice::torus(m));
}

SuiteConfig su2(double j) { return base(2, CompactChoice::su2(j)); }

// Runs the listed checks; worst residual / tolerance ratio and failure details.
bool run_items(const std::vector<Item>& items, std::string& summary) {
  bool ok = true;
  double worst = -1.0;
  std::string worst_name;
  std::ostringstream fails;
  for (const auto& it : items) {
    SuiteConfig cfg = it.cfg;
    cfg.only = {it.checks.begin(), it.checks.end()};
    const VerificationReport r = run_suite(it.suite, cfg);
    for (const auto& name : it.checks) {
      const CheckResult* c = r.find(name);
      if (!c) {
        ok = false;
        fails << " missing " << it.label << ":" << name << ";";
        continue;
      }
      const double ratio = c->tolerance > 0 ? c->residual / c->tolerance : (c->residual > 0 ? 1e300 : 0.0);
      if (!(ratio <= worst)) {
        worst = ratio;
        worst_name = it.label + ":" + name;
      }
      if (!c->pass()) {
        ok = false;
        fails << " " << it.label << ":" << name << " residual " << c->residual << " > " << c->tolerance << " (" << c->detail << ");";
      }
    }
  }
  std::ostringstream s;
  s.precision(3);
  s << "worst residual/tolerance " << worst << " at " << worst_name;
  if (!ok) s << ";" << fails.str();
  summary = s.str();
  return ok;
}

bool reduction(std::string& summary) {
  SuiteConfig cfg = base(1, CompactChoice::trivial(1));
  cfg.seed = 7;
  std::vector<VerificationReport> scalar;
  for (const char* s : {"heisenberg-core", "segal-bargmann", "berezin-scalar", "weyl-scalar"}) scalar.push_back(run_suite(s, cfg));
  bool ok = true;
  int compared = 0;
  std::ostringstream fails;
  for (const char* s : {"motion-fock", "motion-schrodinger", "sw-axioms", "orbit-transfer"}) {
    const VerificationReport m = run_suite(s, cfg);
    int shared = 0;
    for (const auto& c : m.checks)
      for (const auto& r : scalar)
        if (const CheckResult* ref = r.find(c.name)) {
          ++shared;
          if (!(c.residual == ref->residual)) {
            ok = false;
            fails << " " << s << ":" << c.name << " " << c.residual << " vs " << ref->residual << ";";
          }
        }
    if (shared == 0) {
      ok = false;
      fails << " " << s << " shares no check with the scalar suites;";
    }
    compared += shared;
  }
  summary = std::to_string(compared) + " shared checks compared bit for bit (seed 7)";
  if (!ok) summary += ";" + fails.str();
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    std::string title;
    std::vector<Item> items;
  };
  const SuiteConfig t1 = torus1();
  const SuiteConfig h1 = base(1, CompactChoice::trivial(1));
  std::vector<Criterion> crit{
      {"moment-map identities", {{"heisenberg-core", h1, {"moment.S0_coeff", "moment.W0_coeff"}, "n=1"}}},
      {"Segal-Bargmann isometry and intertwining", {{"segal-bargmann", h1, {"sb.isometry", "sb.intertwine"}, "n=1"}}},
      {"Berezin transform heat vs integral, B0(z zbar)", {{"berezin-scalar", h1, {"berezin.heat_vs_integral", "berezin.zzbar"}, "n=1"}}},
      {"forward-heat factorization of rank-one symbols", {{"berezin-scalar", h1, {"u0.factorization"}, "n=1"}}},
      {"scalar traciality", {{"weyl-scalar", h1, {"weyl.traciality"}, "n=1"}}},
      {"compact orbit s and w",
       {{"compact-orbit", su2(0.5), {"s.injective", "s.moment", "w.unitary"}, "su2 j=1/2"},
        {"compact-orbit", su2(1.0), {"s.injective", "s.moment", "w.unitary"}, "su2 j=1"}}},
      {"d tau~ spectrum and two-path check", {{"motion-schrodinger", t1, {"dtau.spectral", "dtau.two_path"}, "torus n=1"}}},
      {"motion-group tensor identities",
       {{"motion-fock", t1, {"pi.tensor_vs_direct"}, "torus n=1"},
        {"motion-schrodinger", t1, {"sigma.conj_vs_product"}, "torus n=1"},
        {"motion-fock", su2(0.5), {"pi.tensor_vs_direct"}, "su2 j=1/2"},
        {"motion-schrodinger", su2(0.5), {"sigma.conj_vs_product"}, "su2 j=1/2"}}},
      {"closed-form SW symbols of Lie algebra images",
       {{"sw-axioms", t1, {"U.closed_form", "Winv.closed_form"}, "torus n=1"},
        {"sw-axioms", su2(0.5), {"U.closed_form", "Winv.closed_form"}, "su2 j=1/2"},
        {"sw-axioms", su2(1.0), {"U.closed_form", "Winv.closed_form"}, "su2 j=1"}}},
      {"axiom suite for U and W^-1",
       {{"sw-axioms", t1, {"U.reality", "U.covariance", "U.traciality", "Winv.reality", "Winv.covariance", "Winv.traciality"}, "torus n=1"},
        {"sw-axioms", su2(0.5), {"U.reality", "U.covariance", "U.traciality", "Winv.reality", "Winv.covariance", "Winv.traciality"}, "su2 j=1/2"}}},
      {"Schrodinger-Fock relation and orbit transfers",
       {{"orbit-transfer", t1, {"transfer.schrodinger_fock", "transfer.orbit_pullback"}, "torus n=1"},
        {"orbit-transfer", su2(0.5), {"transfer.schrodinger_fock", "transfer.orbit_pullback"}, "su2 j=1/2"}}},
  };
  bool all = true;
  int idx = 0;
  for (const auto& c : crit) {
    ++idx;
    std::string summary;
    bool ok;
    try {
      ok = run_items(c.items, summary);
    } catch (const std::exception& e) {
      ok = false;
      summary = std::string("exception: ") + e.what();
    }
    all = all && ok;
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", idx, c.title.c_str(), summary.c_str());
    std::fflush(stdout);
  }
  std::string summary;
  bool ok;
  try {
    ok = reduction(summary);
  } catch (const std::exception& e) {
    ok = false;
    summary = std::string("exception: ") + e.what();
  }
  all = all && ok;
  std::printf("[%s] %2d trivial-K reduction: %s\n", ok ? "PASS" : "FAIL", ++idx, summary.c_str());
  return all ? 0 : 1;
}
