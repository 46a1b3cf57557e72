#include "seidel/determination.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

#include "seidel/errors.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/spectra.hpp"
#include "seidel/symmetric.hpp"

namespace seidel {

namespace {

// Polynomial with roots the entries of sigma: x^k - s1 x^(k-1) + s2 x^(k-2) ...
IntPolynomial poly_from_sigmas(const std::vector<mpz_class>& sigma) {
  const std::size_t k = sigma.size() - 1;
  std::vector<mpz_class> c(k + 1);
  for (std::size_t i = 0; i <= k; ++i) c[k - i] = (i % 2 == 0) ? sigma[i] : mpz_class(-sigma[i]);
  return IntPolynomial(std::move(c));
}

std::vector<IntPolynomial> full_charpolys(const std::vector<Partition>& parts, unsigned jobs) {
  std::vector<IntPolynomial> out(parts.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, parts.size()));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < parts.size(); i += workers) out[i] = charpoly_product(parts[i]).expanded;
  };
  if (workers == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
  return out;
}

bool share_part_size(const Partition& a, const Partition& b) {
  return std::any_of(a.parts().begin(), a.parts().end(), [&](long s) { return b.contains(s); });
}

void check_range(long n) {
  if (n < 1) throw InvalidPartitionError("order must be positive");
  if (n > kFamilySearchCap) {
    throw CapExceededError("family search capped at order " + std::to_string(kFamilySearchCap));
  }
}

}  // namespace

std::vector<Partition> recover_partitions(const IntPolynomial& residual, long k, long n) {
  if (k < 1 || n < k || residual.degree() != k || !residual.is_monic()) return {};
  const auto uk = static_cast<std::size_t>(k);
  auto coeff = [&](long m) { return residual.coeff(static_cast<int>(k - m)); };

  std::vector<mpz_class> sigma(uk + 1, 0);
  sigma[0] = 1;
  sigma[1] = mpz_class(k) - coeff(1);
  if (sigma[1] != n) return {};
  if (k >= 2 && coeff(2) != binomial(k, 2) - mpz_class(k - 1) * sigma[1]) return {};

  for (long m = 3; m <= k; ++m) {
    mpz_class rhs = coeff(m) - binomial(k, m);
    for (long i = 1; i < m; ++i) {
      if (i == 2) continue;
      mpz_class term = binomial(k - i, m - i) * mpz_class(i - 2) * sigma[static_cast<std::size_t>(i)];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 1));
      if (i % 2 == 0) term = -term;
      rhs -= term;
    }
    mpz_class a = mpz_class(m - 2);
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(m - 1));
    if (m % 2 == 0) a = -a;
    if (!mpz_divisible_p(rhs.get_mpz_t(), a.get_mpz_t())) return {};
    mpz_divexact(sigma[static_cast<std::size_t>(m)].get_mpz_t(), rhs.get_mpz_t(), a.get_mpz_t());
    if (sigma[static_cast<std::size_t>(m)] <= 0) return {};
  }

  std::vector<Partition> found;
  auto try_sigmas = [&] {
    const auto roots = integer_root_multiset(poly_from_sigmas(sigma));
    if (!roots || roots->front() < 1) return;
    std::vector<long> parts;
    for (const auto& r : *roots) parts.push_back(r.get_si());
    Partition q(std::move(parts));
    if (charpoly_coefficients(q).residual == residual) found.push_back(std::move(q));
  };

  if (k == 1) {
    try_sigmas();
    return found;
  }
  // sigma_2 over partitions of n into k parts: smallest at (n-k+1, 1, ..., 1),
  // largest (Maclaurin) when all parts are equal.
  const mpz_class lo = mpz_class(n - k + 1) * mpz_class(k - 1) + binomial(k - 1, 2);
  mpz_class hi = mpz_class(k - 1) * mpz_class(n) * mpz_class(n);
  mpz_fdiv_q_ui(hi.get_mpz_t(), hi.get_mpz_t(), static_cast<unsigned long>(2 * k));
  for (mpz_class s2 = lo; s2 <= hi; ++s2) {
    sigma[2] = s2;
    try_sigmas();
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<CospectralClass> cospectral_classes(long n, std::optional<long> k, unsigned jobs) {
  check_range(n);
  const auto parts = partitions_of(n, k);
  const auto polys = full_charpolys(parts, jobs);
  std::map<IntPolynomial, std::vector<Partition>> grouped;
  for (std::size_t i = 0; i < parts.size(); ++i) grouped[polys[i]].push_back(parts[i]);
  std::vector<CospectralClass> classes;
  classes.reserve(grouped.size());
  for (auto& [poly, members] : grouped) {
    std::sort(members.begin(), members.end());
    classes.push_back({poly, std::move(members)});
  }
  std::sort(classes.begin(), classes.end(),
            [](const CospectralClass& a, const CospectralClass& b) { return a.partitions.front() < b.partitions.front(); });
  return classes;
}

const char* verdict_name(FamilyVerdict v) {
  switch (v) {
    case FamilyVerdict::singleton: return "singleton";
    case FamilyVerdict::bipartite_switching: return "bipartite_switching";
    case FamilyVerdict::not_determined: return "not_determined";
  }
  return "not_determined";
}

const char* violation_name(ViolationKind v) {
  switch (v) {
    case ViolationKind::shared_part_size: return "shared_part_size";
    case ViolationKind::cross_k_collision: return "cross_k_collision";
  }
  return "shared_part_size";
}

const char* forcing_rule_name(ForcingRule r) {
  switch (r) {
    case ForcingRule::bipartite: return "bipartite";
    case ForcingRule::repeated_part: return "repeated_part";
    case ForcingRule::trailing_one_one: return "trailing_one_one";
    case ForcingRule::trailing_two_two_one: return "trailing_two_two_one";
    case ForcingRule::none: return "none";
  }
  return "none";
}

DeterminationReport verify_shared_part_property(long n, std::optional<long> k, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  DeterminationReport r;
  r.order = n;
  r.parts = k;
  r.classes = cospectral_classes(n, k, jobs);
  for (const auto& c : r.classes) {
    r.partitions_scanned += c.partitions.size();
    const bool all_bipartite =
        std::all_of(c.partitions.begin(), c.partitions.end(), [](const Partition& p) { return p.size() <= 2; });
    for (std::size_t i = 0; i < c.partitions.size(); ++i) {
      const Partition& a = c.partitions[i];
      for (std::size_t j = i + 1; j < c.partitions.size(); ++j) {
        const Partition& b = c.partitions[j];
        ++r.pairs_checked;
        if (a.size() != b.size()) {
          if (a.size() > 2 || b.size() > 2) r.violations.push_back({ViolationKind::cross_k_collision, a, b});
        } else if (a.size() >= 3 && share_part_size(a, b)) {
          r.violations.push_back({ViolationKind::shared_part_size, a, b});
        }
      }
      FamilyVerdict v = FamilyVerdict::singleton;
      if (c.partitions.size() > 1) v = all_bipartite ? FamilyVerdict::bipartite_switching : FamilyVerdict::not_determined;
      r.verdicts.emplace_back(a, v);
    }
  }
  std::sort(r.verdicts.begin(), r.verdicts.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json DeterminationReport::to_json() const {
  using nlohmann::json;
  json j;
  j["order"] = std::to_string(order);
  j["k"] = parts ? json(std::to_string(*parts)) : json(nullptr);
  j["partitions_scanned"] = std::to_string(partitions_scanned);
  j["pairs_checked"] = std::to_string(pairs_checked);
  json classes_json = json::array();
  for (const auto& c : classes) {
    json members = json::array();
    for (const auto& p : c.partitions) members.push_back(p.to_string());
    classes_json.push_back({{"charpoly", c.charpoly.to_string()}, {"partitions", members}});
  }
  j["classes"] = classes_json;
  json viol = json::array();
  for (const auto& v : violations) {
    viol.push_back({{"kind", violation_name(v.kind)}, {"first", v.first.to_string()}, {"second", v.second.to_string()}});
  }
  j["violations"] = viol;
  json verd = json::object();
  for (const auto& [p, v] : verdicts) verd[p.to_string()] = verdict_name(v);
  j["verdicts"] = verd;
  j["ok"] = ok();
  return j;
}

ForcedPartVerdict check_forced_part_sizes(const Partition& p) {
  ForcedPartVerdict v;
  const long k = static_cast<long>(p.size());
  const FactoredSeidelPoly poly = charpoly_coefficients(p);
  v.candidates = recover_partitions(poly.residual, k, p.order());

  auto pin = [&](ForcingRule rule, long size, int needed) {
    v.rule = rule;
    v.forced_size = size;
    v.forced_eigenvalue = 2 * size - 1;
    v.forced_eigenvalue_multiplicity = exact_root_multiplicity(poly.expanded, *v.forced_eigenvalue);
    return v.forced_eigenvalue_multiplicity >= needed;
  };

  bool forced = false;
  if (k <= 2) {
    v.rule = ForcingRule::bipartite;
    forced = true;
  } else {
    const auto groups = p.grouped();
    const auto rep = std::find_if(groups.begin(), groups.end(), [](const PartGroup& g) { return g.multiplicity >= 3; });
    const auto parts = p.parts();
    if (rep != groups.end()) {
      forced = pin(ForcingRule::repeated_part, rep->size, static_cast<int>(rep->multiplicity - 1));
    } else if (parts[parts.size() - 1] == 1 && parts[parts.size() - 2] == 1) {
      forced = pin(ForcingRule::trailing_one_one, 1, 1);
    } else if (parts.size() >= 3 && parts[parts.size() - 1] == 1 && parts[parts.size() - 2] == 2 &&
               parts[parts.size() - 3] == 2) {
      forced = pin(ForcingRule::trailing_two_two_one, 2, 1);
    }
  }
  if (!forced) return v;
  if (v.rule == ForcingRule::bipartite) {
    v.determined = true;
    return v;
  }
  const long size = *v.forced_size;
  const bool all_contain = std::all_of(v.candidates.begin(), v.candidates.end(),
                                       [&](const Partition& q) { return q.contains(size); });
  v.determined = all_contain && v.candidates.size() == 1 && v.candidates.front() == p;
  return v;
}

bool s_determined_in_family(const Partition& p) {
  check_range(p.order());
  const IntPolynomial target = charpoly_product(p).expanded;
  for (const auto& q : partitions_of(p.order())) {
    if (q != p && charpoly_product(q).expanded == target) return false;
  }
  return true;
}

}  // namespace seidel
