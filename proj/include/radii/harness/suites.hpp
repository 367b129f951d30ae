#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radii/polytope.hpp"

namespace radii::harness {

struct Failure {
  uint64_t seed;
  std::string quantity, expected, got;
};

struct SuiteResult {
  std::string suite;
  size_t cases = 0;
  std::vector<Failure> failures;
  /// Informational lines: measured values of approximate checks, extremes.
  std::vector<std::string> notes;

  bool pass() const { return failures.empty(); }
  void merge(SuiteResult other);
};

// Tolerances of the two approximate checks.
/// Distance of the 96-gon Reuleaux approximant's asymmetry from (1+√3)/2.
inline constexpr double kReuleauxTolerance = 0.02;
/// Bound derived for that approximant: sagitta / inradius times s, plus grid
/// rounding, with a factor 2 margin.
inline constexpr double kReuleauxDerivedBound = 1e-3;
/// |s(K+L) − max{s(K), s(L)}| for the planar constant-width pair.
inline constexpr double kPropertyBTolerance = 0.03;
/// Rescaling step in the tightness checks.
inline const Scalar kTightnessEpsilon{1, 1000};

SuiteResult run_fixture(std::string_view name);

/// One (K, B) pair: 2r ≤ w ≤ (1+s)r ≤ r+R ≤ (1+s)R/s ≤ D ≤ 2R.
SuiteResult check_chain(const VPolytope& k, const Gauge& b, uint64_t seed = 0);

struct SuiteOptions {
  uint64_t seed = 1;
  std::optional<size_t> cases;  // suite default when empty
};

const std::vector<std::string>& suite_names();

/// InputError for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

SuiteResult suite_fixtures(const SuiteOptions& o);
SuiteResult suite_chain(const SuiteOptions& o);
SuiteResult suite_bohnenblust(const SuiteOptions& o);
SuiteResult suite_euclidean(const SuiteOptions& o);
SuiteResult suite_supermaximality(const SuiteOptions& o);
SuiteResult suite_core_radius(const SuiteOptions& o);
SuiteResult suite_s_link(const SuiteOptions& o);
SuiteResult suite_sandwich(const SuiteOptions& o);
SuiteResult suite_parallelotope(const SuiteOptions& o);

/// Measured pieces of the planar property-(B) construction.
struct PropertyBInstance {
  double s_k, s_l, s_sum;
  bool k_symmetric, l_symmetric, homothetic;
};
PropertyBInstance property_b_instance();

/// Asymmetry of the 96-gon Reuleaux triangle approximant.
double reuleaux_asymmetry();

struct TraceRow {
  std::string statement;
  std::string suites;
  std::string coverage;
};
const std::vector<TraceRow>& traceability_matrix();

}  // namespace radii::harness
