#include "seidel/report.hpp"

#include <cmath>
#include <cstdio>

#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

namespace {

constexpr double kResidualTolerance = 1e-6;

const char* regime_name(SpectralRegime r) {
  switch (r) {
    case SpectralRegime::null_graph: return "null_graph";
    case SpectralRegime::bipartite: return "bipartite";
    case SpectralRegime::general: return "general";
  }
  return "general";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SpectrumReport spectrum_report(const Partition& p) {
  if (p.order() > kSpectrumReportCap) {
    throw CapExceededError("spectrum report capped at order " + std::to_string(kSpectrumReportCap));
  }
  SpectrumReport r;
  r.partition = p;
  r.jacobi_tolerance = kJacobiRelativeTolerance;
  r.compare_tolerance = kCompareTolerance;
  r.charpoly = charpoly_product(p);
  const IntPolynomial& poly = r.charpoly.expanded;
  r.minus_one_multiplicity = exact_root_multiplicity(poly, -1);
  r.positive_root_count = positive_root_count(poly);
  r.roots_below_minus_one = roots_below_count(poly, -1);

  const auto n = static_cast<std::size_t>(p.order());
  const SeidelMatrix s = seidel_matrix(complete_multipartite(p));
  r.eigenvalues = symmetric_eigenvalues(RealMatrix(n, s.to_dense()));
  r.lambda_min = r.eigenvalues.back();
  r.bound = least_eigenvalue_bound(p);
  r.predicted = eigenvalue_intervals(p);

  for (double lambda : r.eigenvalues) {
    const double scaled = std::fabs(poly.evaluate(lambda)) / std::pow(1.0 + std::fabs(lambda), static_cast<double>(n));
    r.max_scaled_residual = std::max(r.max_scaled_residual, scaled);
  }

  const std::string who = "K_{" + p.to_string() + "}: ";
  require(r.max_scaled_residual <= kResidualTolerance, who + "numeric eigenvalue is not a root of the exact charpoly");

  long numeric_positive = 0;
  for (double lambda : r.eigenvalues) numeric_positive += lambda > kCompareTolerance ? 1 : 0;
  require(numeric_positive == r.positive_root_count, who + "numeric and exact positive counts differ");
  require(r.positive_root_count == r.predicted.positive_count, who + "positive eigenvalue count differs from prediction");
  require(r.minus_one_multiplicity == r.predicted.minus_one_multiplicity,
          who + "multiplicity of -1 differs from prediction");

  for (std::size_t i = 0; i < r.predicted.positive.size(); ++i) {
    const auto [lo, hi] = r.predicted.positive[i];
    const double lambda = r.eigenvalues[i];
    const bool holds = lambda >= static_cast<double>(lo) - kCompareTolerance &&
                       lambda <= static_cast<double>(hi) + kCompareTolerance;
    r.interval_checks.push_back({lo, hi, lambda, holds});
    require(holds, who + "eigenvalue " + format_double(lambda) + " outside interlacing interval");
  }

  require(r.lambda_min <= r.bound.value + kCompareTolerance, who + "least eigenvalue exceeds the Rayleigh bound");
  if (r.predicted.simple_least_below_minus_one) {
    require(r.roots_below_minus_one == 1, who + "expected exactly one simple eigenvalue below -1");
    require(r.lambda_min < -1.0, who + "numeric least eigenvalue is not below -1");
  } else {
    require(r.roots_below_minus_one == 0, who + "unexpected eigenvalue below -1");
  }
  if (r.predicted.least_eigenvalue) {
    require(std::fabs(r.lambda_min - static_cast<double>(*r.predicted.least_eigenvalue)) <= kCompareTolerance,
            who + "least eigenvalue differs from its closed form");
  }
  return r;
}

nlohmann::json SpectrumReport::to_json() const {
  using nlohmann::json;
  json j;
  if (partition) j["partition"] = partition->to_string();
  j["order"] = std::to_string(eigenvalues.size());
  j["charpoly"] = {{"factored", charpoly.to_string()}, {"coefficients", charpoly.expanded.coefficient_strings()}};
  j["-1_multiplicity"] = std::to_string(minus_one_multiplicity);
  j["positive_root_count"] = std::to_string(positive_root_count);
  j["roots_below_-1"] = std::to_string(roots_below_minus_one);
  json eig = json::array();
  for (double v : eigenvalues) eig.push_back(format_double(v));
  j["eigenvalues"] = eig;
  j["lambda_min"] = format_double(lambda_min);
  j["bound"] = format_double(bound.value);
  j["bound_gap"] = format_double(bound.value - lambda_min);
  j["regime"] = regime_name(predicted.regime);
  json intervals = json::array();
  for (const auto& c : interval_checks) {
    intervals.push_back({{"lo", std::to_string(c.lo)},
                         {"hi", std::to_string(c.hi)},
                         {"eigenvalue", format_double(c.eigenvalue)},
                         {"holds", c.holds}});
  }
  j["intervals"] = intervals;
  j["max_scaled_residual"] = format_double(max_scaled_residual);
  j["tolerances"] = {{"jacobi_relative", format_double(jacobi_tolerance)},
                     {"compare", format_double(compare_tolerance)},
                     {"residual", format_double(kResidualTolerance)}};
  return j;
}

std::string SpectrumReport::to_text() const {
  std::string out;
  if (partition) out += "partition: " + partition->to_string() + "\n";
  out += "charpoly: " + charpoly.to_string() + "\n";
  out += "-1 multiplicity: " + std::to_string(minus_one_multiplicity) + "\n";
  out += "positive eigenvalues: " + std::to_string(positive_root_count) + "\n";
  out += "eigenvalues below -1: " + std::to_string(roots_below_minus_one) + "\n";
  out += "eigenvalues:";
  for (double v : eigenvalues) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.10g", std::fabs(v) < 1e-13 ? 0.0 : v);
    out += buf;
  }
  out += "\n";
  for (std::size_t i = 0; i < interval_checks.size(); ++i) {
    const auto& c = interval_checks[i];
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda_%zu = %.10g in [%ld, %ld]\n", i + 1, c.eigenvalue, c.lo, c.hi);
    out += buf;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda_min = %.12g <= bound %.12g\n", lambda_min, bound.value);
  out += buf;
  return out;
}

}  // namespace seidel
