#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "seidel/bounds.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/partition.hpp"

namespace seidel {

/// Comparison tolerance between exact and numeric views.
inline constexpr double kCompareTolerance = 1e-8;

struct IntervalCheck {
  long lo;
  long hi;
  double eigenvalue;
  bool holds;
};

/// Exact and numeric spectral data of S(K_P) side by side, with every
/// prediction checked.
struct SpectrumReport {
  std::optional<Partition> partition;
  FactoredSeidelPoly charpoly;
  int minus_one_multiplicity = 0;
  int positive_root_count = 0;
  /// Roots below -1 with multiplicity (exact).
  int roots_below_minus_one = 0;
  std::vector<double> eigenvalues;  // descending
  double lambda_min = 0.0;
  LeastEigenvalueBound bound;
  EigenvalueIntervals predicted;
  std::vector<IntervalCheck> interval_checks;
  /// max over eigenvalues of |p(lambda)| / (1 + |lambda|)^n
  double max_scaled_residual = 0.0;
  double jacobi_tolerance = 0.0;
  double compare_tolerance = 0.0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Largest order spectrum_report will build a dense Seidel matrix for.
inline constexpr long kSpectrumReportCap = 64;

/// Builds the report and throws ConsistencyError if an exact and a numeric
/// view disagree beyond tolerance, or if a predicted property (positive
/// count, -1 multiplicity, interlacing, least-eigenvalue bound, simple least
/// eigenvalue) fails. Throws CapExceededError above kSpectrumReportCap.
SpectrumReport spectrum_report(const Partition& p);

/// Decimal string with round-trip precision.
std::string format_double(double v);

}  // namespace seidel
