#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/fixture_io.hpp"
#include "hodge/probe.hpp"

namespace hodge {

struct CheckResult {
  std::string suite;
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  /// Branch shifts for the monodromy suite; empty means the built-in shift list.
  std::vector<long> shifts;
  unsigned seed = 1;
  double tol = 1e-6;
  std::size_t exact_points = 3;
  std::size_t float_points = 20;
  std::size_t norm_points = 10;
  std::size_t psh_points = 25;
};

/// symmetries, isotropy, bracket, monodromy, limits, lemma-m, psh
const std::vector<std::string>& suite_names();

/// Why a suite cannot run on this fixture, or nothing when it can.
std::optional<std::string> suite_unavailable(const FixtureFile& f, const std::string& suite);

/// Runs one suite. Throws Error for an unknown or unavailable suite.
std::vector<CheckResult> run_suite(const FixtureFile& f, const std::string& suite, const SuiteOptions& opt);

/// Deterministic sample points; the degenerating coordinates have modulus in [0.05, 0.5].
std::vector<ExactPoint> exact_samples(const OrbitSpec& s, std::size_t count, unsigned seed);
std::vector<FloatPoint> float_samples(const OrbitSpec& s, std::size_t count, unsigned seed);

/// h_J > 0 and stratum_value(J) / h_J constant over the sample points (exact).
CheckResult norm_relation(const OrbitSpec& s, const std::vector<ExactPoint>& points);

/// The induced (Tate-normalized) structure of a fixture on H.
MixedHodge h_structure(const FixtureFile& f);

}  // namespace hodge
