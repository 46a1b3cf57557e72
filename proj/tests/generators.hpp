#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/partition.hpp"
#include "seidel/poly.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 0x5e1de1;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kSeed) : eng_(seed) {}

  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::uint64_t bits() { return eng_(); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline seidel::Graph graph(Rng& r, int n, double density = 0.5) {
  seidel::Graph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (r.coin(density)) g.add_edge(i, j);
    }
  }
  return g;
}

inline seidel::VertexSet subset(Rng& r, int n) {
  return r.bits() & (n >= 64 ? ~seidel::VertexSet{0} : ((seidel::VertexSet{1} << n) - 1));
}

inline std::vector<int> permutation(Rng& r, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), r.engine());
  return p;
}

/// Random partition of n: peel off parts uniformly.
inline seidel::Partition partition_of(Rng& r, long n) {
  std::vector<long> parts;
  long left = n;
  while (left > 0) {
    const long part = r.between(1, left);
    parts.push_back(part);
    left -= part;
  }
  return seidel::Partition(parts);
}

/// Random partition with exactly k parts, each in [1, max_part].
inline seidel::Partition partition_k(Rng& r, long k, long max_part) {
  std::vector<long> parts(static_cast<std::size_t>(k));
  for (auto& v : parts) v = r.between(1, max_part);
  return seidel::Partition(parts);
}

inline seidel::IntPolynomial poly(Rng& r, int degree, long bound) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = r.between(-bound, bound);
  return seidel::IntPolynomial(std::move(c));
}

}  // namespace gen
