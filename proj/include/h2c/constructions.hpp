#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/matching.hpp"

namespace h2c {

// deterministic 64-bit stream; fixed algorithm so fixtures are stable
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform integer in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return static_cast<double>(next()) < p * 18446744073709551616.0;
  }
};

enum class Family { HStar, Mod3Barrier, EvenComplete, OddComplete, RandomUniform, RandomSubcubic };

struct ConstructionSpec {
  Family family = Family::HStar;
  int n = 8;
  int k = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
};

// dense 4-graph at the Dirac threshold with no Hamilton 2-cycle:
// A-vertices first, edges exactly the 4-sets meeting A oddly
std::pair<KGraph, Bipartition> build_h_star(int n);

struct Mod3Parts {
  std::vector<int> x, y, z;
};

// three-part 4-graph whose edges satisfy |S cap X| = |S cap Y| mod 3;
// every bipartition is good yet no Hamilton 2-cycle exists
std::pair<KGraph, Mod3Parts> build_mod3_barrier(int n);

// all 4-sets of one parity with respect to the balanced bipartition
std::pair<KGraph, Bipartition> build_parity_complete(int n, EdgeParity side);

KGraph complete_kgraph(int n, int k);

KGraph random_kgraph(int n, int k, double p, std::uint64_t seed);

// connected graph with maximum degree at most 3, reproducible from seed
SimpleGraph random_subcubic(int n, std::uint64_t seed);

// every connected graph with maximum degree <= 3 on 1..max_n vertices,
// one representative per isomorphism class, by canonical augmentation
std::vector<SimpleGraph> all_connected_subcubic(int max_n);

SimpleGraph petersen_graph();

// view a 2-graph as a 2-uniform KGraph for the reduction pipeline
KGraph to_kgraph(const SimpleGraph& g);

}  // namespace h2c
