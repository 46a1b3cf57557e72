#include "seidel/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "seidel/determination.hpp"
#include "seidel/graph.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/report.hpp"
#include "seidel/spectra.hpp"
#include "seidel/survey.hpp"
#include "seidel/symmetric.hpp"

namespace seidel {

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::string kp(const Partition& p) { return "K_{" + p.to_string() + "}"; }

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool forced_shape(const Partition& p) {
  const auto parts = p.parts();
  const std::size_t k = parts.size();
  if (k < 3) return false;
  for (const auto& g : p.grouped()) {
    if (g.multiplicity >= 3) return true;
  }
  if (parts[k - 1] == 1 && parts[k - 2] == 1) return true;
  return parts[k - 1] == 1 && parts[k - 2] == 2 && parts[k - 3] == 2;
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["passed"] = passed();
  j["checks"] = std::to_string(checks);
  j["failures"] = failures;
  return j;
}

SuiteResult closed_form_suite(long max_n) {
  SuiteResult r{"closed_form"};
  Timer t(r);
  for (long n = 1; n <= max_n; ++n) {
    for (const auto& p : partitions_of(n)) {
      const IntPolynomial oracle = charpoly_oracle(seidel_matrix(complete_multipartite(p)).to_int_matrix());
      const FactoredSeidelPoly forms[] = {charpoly_product(p), charpoly_grouped_product(p), charpoly_coefficients(p),
                                          charpoly_grouped_coefficients(p)};
      const char* names[] = {"product", "grouped product", "coefficients", "grouped coefficients"};
      for (std::size_t i = 0; i < 4; ++i) {
        ++r.checks;
        if (forms[i].expanded != oracle) {
          r.failures.push_back(kp(p) + ": " + names[i] + " form " + forms[i].expanded.to_string() + " != oracle " +
                               oracle.to_string());
        }
      }
      const auto sigma = elementary_symmetric(p.parts());
      ++r.checks;
      if (IntPolynomial(residual_from_sigmas(sigma)) != forms[2].residual) {
        r.failures.push_back(kp(p) + ": residual from sigmas differs");
      }
    }
  }
  return r;
}

SuiteResult example_expansions_suite(std::uint64_t seed, int samples) {
  SuiteResult r{"example_expansions"};
  Timer t(r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> part(1, 12);
  for (long k = 3; k <= 5; ++k) {
    for (int s = 0; s < samples; ++s) {
      std::vector<long> parts(static_cast<std::size_t>(k));
      for (auto& v : parts) v = part(rng);
      const Partition p(parts);
      const auto sigma = elementary_symmetric(p.parts());
      const mpz_class n = p.order();
      const mpz_class& s3 = sigma[3];
      std::vector<mpz_class> printed;  // constant term first
      if (k == 3) {
        printed = {1 - n + 4 * s3, 3 - 2 * n, 3 - n, 1};
      } else if (k == 4) {
        const mpz_class& s4 = sigma[4];
        printed = {1 - n + 4 * s3 - 16 * s4, 4 - 3 * n + 4 * s3, 6 - 3 * n, 4 - n, 1};
      } else {
        const mpz_class& s4 = sigma[4];
        const mpz_class& s5 = sigma[5];
        printed = {1 - n + 4 * s3 - 16 * s4 + 48 * s5, 5 - 4 * n + 8 * s3 - 16 * s4, 10 - 6 * n + 4 * s3, 10 - 4 * n,
                   5 - n, 1};
      }
      const FactoredSeidelPoly generated = charpoly_coefficients(p);
      ++r.checks;
      if (generated.residual != IntPolynomial(printed) || generated.plus_one_power != p.order() - k) {
        r.failures.push_back(kp(p) + ": residual " + generated.residual.to_string() + " differs from printed " +
                             IntPolynomial(printed).to_string());
      }
    }
  }
  return r;
}

SuiteResult spectral_structure_suite(long max_n) {
  SuiteResult r{"spectral_structure"};
  Timer t(r);
  for (long n = 4; n <= max_n; ++n) {
    for (long k = 3; k < n; ++k) {
      for (const auto& p : partitions_of(n, k)) {
        ++r.checks;
        try {
          const SpectrumReport rep = spectrum_report(p);
          if (rep.minus_one_multiplicity != n - k) r.failures.push_back(kp(p) + ": -1 multiplicity");
          if (rep.positive_root_count != k - 1) r.failures.push_back(kp(p) + ": positive count");
          if (rep.roots_below_minus_one != 1) r.failures.push_back(kp(p) + ": roots below -1");
          for (const auto& c : rep.interval_checks) {
            if (!c.holds) r.failures.push_back(kp(p) + ": interlacing");
          }
        } catch (const std::exception& e) {
          r.failures.push_back(e.what());
        }
      }
    }
  }
  return r;
}

SuiteResult least_eigenvalue_suite(long max_n) {
  SuiteResult r{"least_eigenvalue"};
  Timer t(r);
  for (long n = 1; n <= max_n; ++n) {
    for (const auto& p : partitions_of(n)) {
      ++r.checks;
      try {
        const SpectrumReport rep = spectrum_report(p);
        if (rep.lambda_min > rep.bound.value + kCompareTolerance) {
          r.failures.push_back(kp(p) + ": lambda_min " + format_double(rep.lambda_min) + " above bound " +
                               format_double(rep.bound.value));
        }
        const auto groups = p.grouped();
        if (groups.size() == 1 && groups[0].multiplicity >= 2) {
          const long k = groups[0].multiplicity;
          const long m = groups[0].size;
          const double closed = -1.0 - static_cast<double>((k - 2) * m);
          ++r.checks;
          if (std::fabs(rep.bound.value - closed) > kCompareTolerance ||
              std::fabs(rep.lambda_min - closed) > kCompareTolerance) {
            r.failures.push_back(kp(p) + ": equal-part bound not tight");
          }
        }
      } catch (const std::exception& e) {
        r.failures.push_back(e.what());
      }
    }
  }
  return r;
}

SuiteResult switching_invariance_suite(int lo, int hi, int samples, std::uint64_t seed) {
  SuiteResult r{"switching_invariance"};
  Timer t(r);
  std::mt19937_64 rng(seed);
  for (int n = lo; n <= hi; ++n) {
    for (int s = 0; s < samples; ++s) {
      Graph g(n);
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (rng() & 1U) g.add_edge(i, j);
        }
      }
      const VertexSet u = rng() & g.all_vertices();
      const IntPolynomial before = charpoly_oracle(seidel_matrix(g).to_int_matrix());
      const IntPolynomial after = seidel_charpoly(seidel_switch(g, u));
      ++r.checks;
      if (before != after) {
        r.failures.push_back("order " + std::to_string(n) + " switch at " + vertex_set_to_string(u) +
                             " changed the charpoly");
      }
    }
  }
  return r;
}

SuiteResult recovery_suite(long max_n) {
  SuiteResult r{"recovery"};
  Timer t(r);
  for (long n = 1; n <= max_n; ++n) {
    for (const auto& p : partitions_of(n)) {
      ++r.checks;
      const FactoredSeidelPoly poly = charpoly_coefficients(p);
      const auto found = recover_partitions(poly.residual, static_cast<long>(p.size()), n);
      if (std::count(found.begin(), found.end(), p) != 1) {
        r.failures.push_back(kp(p) + ": not recovered from its residual");
      }
      for (const auto& q : found) {
        if (charpoly_product(q).expanded != poly.expanded) {
          r.failures.push_back(kp(p) + ": candidate " + q.to_string() + " has a different charpoly");
        }
      }
    }
  }
  return r;
}

SuiteResult shared_part_suite(long max_n, unsigned jobs) {
  SuiteResult r{"shared_part"};
  Timer t(r);
  for (long n = 1; n <= max_n; ++n) {
    const DeterminationReport rep = verify_shared_part_property(n, std::nullopt, jobs);
    r.checks += rep.pairs_checked + 1;
    for (const auto& v : rep.violations) {
      r.failures.push_back(std::string(violation_name(v.kind)) + ": " + kp(v.first) + " ~ " + kp(v.second));
    }
  }
  return r;
}

SuiteResult forced_family_suite(long max_n, unsigned jobs) {
  SuiteResult r{"forced_family"};
  Timer t(r);
  for (long n = 1; n <= max_n; ++n) {
    const DeterminationReport rep = verify_shared_part_property(n, std::nullopt, jobs);
    for (const auto& [p, verdict] : rep.verdicts) {
      const bool prime_four = p.size() == 4 && is_prime(p.part(0));
      if (!forced_shape(p) && !prime_four) continue;
      ++r.checks;
      if (verdict != FamilyVerdict::singleton) {
        r.failures.push_back(kp(p) + ": cospectral mate in the family");
        continue;
      }
      if (forced_shape(p)) {
        ++r.checks;
        const ForcedPartVerdict fv = check_forced_part_sizes(p);
        if (!fv.determined) {
          r.failures.push_back(kp(p) + ": forcing rule " + forcing_rule_name(fv.rule) + " did not pin the partition");
        }
      }
    }
  }
  return r;
}

SuiteResult switching_survey_suite(long max_n, unsigned jobs) {
  SuiteResult r{"switching_survey"};
  Timer t(r);
  for (int n = 1; n <= std::min<long>(max_n, kExhaustiveOrderCap); ++n) {
    const SurveyReport rep = exhaustive_switching_survey(n, jobs);
    r.checks += rep.graphs_scanned;
    for (const auto& v : rep.violations) r.failures.push_back("n=" + std::to_string(n) + ": " + v);
  }
  return r;
}

}  // namespace seidel
