#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratweyl/swc.hpp"

namespace sw {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  /// Wall time; diagnostic only, never part of a report.
  double seconds = 0.0;
  /// NaN residuals fail.
  bool pass() const { return residual <= tolerance; }
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

struct SuiteConfig {
  SWSetup setup;
  std::uint64_t seed = 1;
  /// Per-check tolerance overrides, and an optional override for every check.
  std::map<std::string, double> tol;
  std::optional<double> tol_all;
  /// Number of random group elements per group-valued check.
  int groups = 20;
  /// Restrict to these check names (empty: all).
  std::set<std::string> only;
};

/// heisenberg-core, segal-bargmann, berezin-scalar, weyl-scalar, compact-orbit, motion-fock,
/// motion-schrodinger, sw-axioms, orbit-transfer.
const std::vector<std::string>& suite_names();
bool is_motion_suite(const std::string& name);

/// Runs one suite. Throws DimensionError for unknown suites; check failures, including
/// exceptions raised inside a check, become report entries.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);
/// Runs suites concurrently; reports come back in the order of `names`.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, const SuiteConfig& cfg);

/// Default tolerance of a named check.
double default_tolerance(const std::string& check);

struct SamplePlan {
  std::uint64_t seed = 1;
  int groups = 20;
  int points = 4;
  /// Largest scalar degree of the rank-one basis used for traciality (0: 6 for n = 1, 3 for n = 2).
  int max_index = 0;
};

/// Reality, covariance, traciality, closed forms and unit for U (Fock side) or W^{-1}
/// (Schrodinger side).
VerificationReport run_axiom_suite(const SWCalculus& sw, SWSide side, const SamplePlan& plan);

}  // namespace sw
