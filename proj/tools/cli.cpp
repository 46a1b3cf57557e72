#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "seidel/bounds.hpp"
#include "seidel/determination.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph6.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/report.hpp"
#include "seidel/suites.hpp"
#include "seidel/switching.hpp"

namespace seidel::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string partition;
  std::string form = "product";
  bool as_json = false;
  long n = 0;
  std::optional<long> k;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string suite = "all";
  long max_n = 12;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> graphs;
  bool label_preserving = false;
};

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json poly_json(const FactoredSeidelPoly& f) {
  return {{"factored", f.to_string()}, {"expanded", f.expanded.to_string()},
          {"coefficients", f.expanded.coefficient_strings()}};
}

int cmd_charpoly(const Config& c, std::ostream& out) {
  const Partition p = Partition::parse(c.partition);
  std::vector<std::pair<std::string, FactoredSeidelPoly>> forms;
  const bool all = c.form == "all";
  if (all || c.form == "product") forms.emplace_back("product", charpoly_product(p));
  if (all || c.form == "coeff") forms.emplace_back("coeff", charpoly_coefficients(p));
  if (all || c.form == "grouped") forms.emplace_back("grouped", charpoly_grouped_coefficients(p));
  if (all || c.form == "oracle") {
    if (p.order() > kMaxGraphOrder) throw CapExceededError("oracle form limited to order 64");
    FactoredSeidelPoly f;
    f.expanded = charpoly_oracle(seidel_matrix(complete_multipartite(p)).to_int_matrix());
    f.residual = f.expanded;
    forms.emplace_back("oracle", std::move(f));
  }
  bool agree = true;
  for (const auto& [name, f] : forms) agree = agree && f.expanded == forms.front().second.expanded;
  if (all) agree = agree && charpoly_grouped_product(p).expanded == forms.front().second.expanded;

  if (c.as_json) {
    json j;
    j["partition"] = p.to_string();
    json fj = json::object();
    for (const auto& [name, f] : forms) fj[name] = poly_json(f);
    j["forms"] = fj;
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << "partition: " << p.to_string() << "\n";
    for (const auto& [name, f] : forms) {
      out << name << ": " << f.to_string() << "\n";
      out << name << " expanded: " << f.expanded.to_string() << "\n";
    }
    if (all) out << (agree ? "all forms agree\n" : "FORMS DISAGREE\n");
  }
  if (!agree) throw Mismatch("closed forms disagree for " + p.to_string());
  return ExitCode::ok;
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  const SpectrumReport r = spectrum_report(Partition::parse(c.partition));
  out << (c.as_json ? r.to_json().dump(2) + "\n" : r.to_text());
  return ExitCode::ok;
}

int cmd_bound(const Config& c, std::ostream& out) {
  const Partition p = Partition::parse(c.partition);
  const LeastEigenvalueBound b = least_eigenvalue_bound(p);
  std::optional<double> lambda_min;
  if (p.order() <= kSpectrumReportCap) lambda_min = spectrum_report(p).lambda_min;
  if (c.as_json) {
    json j;
    j["partition"] = p.to_string();
    j["bound"] = format_double(b.value);
    j["rational_part"] = b.rational_part.get_str();
    j["radical_coefficient"] = b.radical_coefficient.get_str();
    json rad = json::array();
    for (const auto& [a, s] : b.simplified_radicals) rad.push_back({std::to_string(a), std::to_string(s)});
    j["radicals"] = rad;
    if (auto e = b.exact_rational()) j["exact"] = e->get_str();
    if (lambda_min) {
      j["lambda_min"] = format_double(*lambda_min);
      j["gap"] = format_double(b.value - *lambda_min);
      j["tight"] = std::fabs(b.value - *lambda_min) < kCompareTolerance;
    }
    out << j.dump(2) << "\n";
    return ExitCode::ok;
  }
  out << "bound: " << format_double(b.value) << "\n";
  std::string exact = b.rational_part.get_str();
  for (const auto& [a, s] : b.simplified_radicals) {
    exact += " + (" + mpq_class(b.radical_coefficient * a).get_str() + ")*sqrt(" + std::to_string(s) + ")";
  }
  out << "exact: " << exact << "\n";
  if (lambda_min) {
    out << "lambda_min: " << format_double(*lambda_min) << "\n";
    out << "tight: " << (std::fabs(b.value - *lambda_min) < kCompareTolerance ? "yes" : "no") << "\n";
  }
  return ExitCode::ok;
}

int cmd_quotient(const Config& c, std::ostream& out) {
  const Partition p = Partition::parse(c.partition);
  const IntMatrix b = quotient_matrix(p);
  if (c.as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(b(i, j).get_str());
      rows.push_back(row);
    }
    out << json{{"partition", p.to_string()}, {"matrix", rows}}.dump(2) << "\n";
  } else {
    out << b.to_string() << "\n";
  }
  return ExitCode::ok;
}

int cmd_search(const Config& c, std::ostream& out) {
  const DeterminationReport r = verify_shared_part_property(c.n, c.k, c.jobs);
  if (c.as_json) {
    out << r.to_json().dump(2) << "\n";
  } else {
    std::size_t singletons = 0;
    for (const auto& cls : r.classes) {
      if (cls.partitions.size() == 1) {
        ++singletons;
        continue;
      }
      const bool degenerate = std::all_of(cls.partitions.begin(), cls.partitions.end(),
                                          [](const Partition& p) { return p.size() <= 2; });
      out << "class " << cls.charpoly.to_string() << ":";
      for (const auto& p : cls.partitions) out << " (" << p.to_string() << ")";
      out << (degenerate ? "  [k<=2: switching equivalent to the null graph]" : "  [cospectral, k>=3]") << "\n";
    }
    out << "n=" << r.order;
    if (r.parts) out << " k=" << *r.parts;
    out << " partitions=" << r.partitions_scanned << " classes=" << r.classes.size() << " singletons=" << singletons
        << " violations=" << r.violations.size() << "\n";
    for (const auto& v : r.violations) {
      out << "violation " << violation_name(v.kind) << ": (" << v.first.to_string() << ") ~ (" << v.second.to_string()
          << ")\n";
    }
  }
  return r.ok() ? ExitCode::ok : ExitCode::mismatch;
}

int cmd_verify(const Config& c, std::ostream& out) {
  if (c.max_n < 1) throw InvalidPartitionError("--max-n must be positive");
  if (c.max_n > kFamilySearchCap) throw CapExceededError("--max-n capped at " + std::to_string(kFamilySearchCap));
  const bool all = c.suite == "all";
  std::vector<SuiteResult> results;
  if (all || c.suite == "closedform") {
    results.push_back(closed_form_suite(c.max_n));
    results.push_back(example_expansions_suite(c.seed));
  }
  if (all || c.suite == "bounds") {
    results.push_back(spectral_structure_suite(c.max_n));
    results.push_back(least_eigenvalue_suite(c.max_n));
  }
  if (all || c.suite == "switching") {
    results.push_back(switching_invariance_suite(4, static_cast<int>(std::clamp<long>(c.max_n, 4, 16)), 100, c.seed));
    results.push_back(switching_survey_suite(c.max_n, c.jobs));
  }
  if (all || c.suite == "determination") {
    results.push_back(recovery_suite(c.max_n));
    results.push_back(shared_part_suite(c.max_n, c.jobs));
    results.push_back(forced_family_suite(c.max_n, c.jobs));
  }
  const bool passed = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  if (c.as_json) {
    json j;
    j["suite"] = c.suite;
    j["max_n"] = std::to_string(c.max_n);
    j["seed"] = std::to_string(c.seed);
    json arr = json::array();
    for (const auto& r : results) arr.push_back(r.to_json());
    j["results"] = arr;
    j["passed"] = passed;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r.name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    out << (passed ? "pass" : "FAIL") << "\n";
  }
  return passed ? ExitCode::ok : ExitCode::mismatch;
}

std::string perm_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

int cmd_switch_equiv(const Config& c, std::ostream& out) {
  const Graph g = from_graph6(c.graphs[0]);
  const Graph h = from_graph6(c.graphs[1]);
  const SwitchingMode mode = c.label_preserving ? SwitchingMode::label_preserving : SwitchingMode::with_relabeling;
  const bool orders_differ = g.order() != h.order();
  const auto w = orders_differ ? std::nullopt : switching_equivalent(g, h, mode);
  if (w && apply_witness(g, *w) != h) throw Mismatch("witness does not replay");
  if (c.as_json) {
    json j;
    j["equivalent"] = w.has_value();
    if (w) {
      json u = json::array();
      for (int v = 0; v < g.order(); ++v) {
        if ((w->switch_set >> v) & 1U) u.push_back(v);
      }
      j["switch_set"] = u;
      j["permutation"] = w->perm;
    } else if (orders_differ) {
      j["reason"] = "orders differ";
    }
    out << j.dump(2) << "\n";
  } else if (w) {
    out << "equivalent\n";
    out << "U = " << vertex_set_to_string(w->switch_set) << "\n";
    out << "perm = " << perm_string(w->perm) << "\n";
  } else {
    out << (orders_differ ? "not equivalent (orders differ)\n" : "not equivalent\n");
  }
  return w ? ExitCode::ok : ExitCode::negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Seidel spectra of complete multipartite graphs", "seidel"};
  app.require_subcommand(1);

  auto add_partition = [&](CLI::App* sub) {
    sub->add_option("partition", c.partition, "parts \"n1,n2,...\" or grouped \"r*n,...\"")->required();
    sub->add_flag("--json", c.as_json, "JSON output");
  };
  auto* charpoly = app.add_subcommand("charpoly", "Seidel characteristic polynomial of K_P");
  add_partition(charpoly);
  charpoly->add_option("--form", c.form)->check(CLI::IsMember({"product", "coeff", "grouped", "oracle", "all"}));
  auto* spectrum = app.add_subcommand("spectrum", "exact and numeric spectrum report");
  add_partition(spectrum);
  auto* bound = app.add_subcommand("bound", "least-eigenvalue upper bound");
  add_partition(bound);
  auto* quotient = app.add_subcommand("quotient", "quotient matrix");
  add_partition(quotient);

  auto* search = app.add_subcommand("search", "cospectral classes among partitions of n");
  search->add_option("--n", c.n)->required();
  search->add_option("--k", c.k);
  search->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
  search->add_flag("--json", c.as_json);

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", c.suite)
      ->check(CLI::IsMember({"closedform", "bounds", "switching", "determination", "all"}));
  verify->add_option("--max-n", c.max_n);
  verify->add_option("--seed", c.seed);
  verify->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--json", c.as_json);

  auto* equiv = app.add_subcommand("switch-equiv", "decide switching equivalence of two graph6 graphs");
  equiv->add_option("--g6", c.graphs, "graph6 string (twice)")->required()->expected(2);
  equiv->add_flag("--label-preserving", c.label_preserving, "switching only, no relabeling");
  equiv->add_flag("--json", c.as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }

  try {
    if (charpoly->parsed()) return cmd_charpoly(c, out);
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (bound->parsed()) return cmd_bound(c, out);
    if (quotient->parsed()) return cmd_quotient(c, out);
    if (search->parsed()) return cmd_search(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (equiv->parsed()) return cmd_switch_equiv(c, out);
  } catch (const Mismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return ExitCode::mismatch;
  } catch (const ConsistencyError& e) {
    err << "theorem check failed: " << e.what() << "\n";
    return ExitCode::mismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
  return ExitCode::usage;
}

}  // namespace seidel::cli
