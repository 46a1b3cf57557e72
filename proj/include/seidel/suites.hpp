#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace seidel {

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Product, grouped product, flat and grouped coefficient forms and the
/// determinant oracle agree coefficient for coefficient on every partition
/// of every n <= max_n.
SuiteResult closed_form_suite(long max_n);

/// The printed k = 3, 4, 5 residuals in terms of n and sigma_3..sigma_5,
/// compared against the generated residual on `samples` random partitions
/// per k.
SuiteResult example_expansions_suite(std::uint64_t seed, int samples = 20);

/// For 2 < k < n <= max_n: -1 multiplicity n-k, k-1 positive roots, one
/// simple root below -1, interlacing within tolerance.
SuiteResult spectral_structure_suite(long max_n);

/// lambda_min <= bound for all partitions of n <= max_n, with equality on
/// equal-part partitions with k >= 2 (bound = -1 - (k-2)m).
SuiteResult least_eigenvalue_suite(long max_n);

/// `samples` random (G, U) per order in [lo, hi]: exact charpoly is
/// unchanged by switching.
SuiteResult switching_invariance_suite(int lo, int hi, int samples, std::uint64_t seed);

/// recover_partitions returns P among its candidates, and every candidate
/// reproduces the residual.
SuiteResult recovery_suite(long max_n);

/// No cospectral k-partitions (k >= 3) sharing a part size, n <= max_n.
SuiteResult shared_part_suite(long max_n, unsigned jobs);

/// Partitions with a size repeated at least three times, or ending in
/// (1,1) or (2,2,1), are singletons in their cospectral class, n <= max_n.
SuiteResult forced_family_suite(long max_n, unsigned jobs);

/// Exhaustive switching survey for every n <= min(max_n, 7).
SuiteResult switching_survey_suite(long max_n, unsigned jobs);

}  // namespace seidel
