#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/seq.hpp"

namespace h2c {

constexpr long long default_oracle_budget = 200'000'000;

struct OracleResult {
  std::optional<VertexSeq> witness;
  bool budget_exceeded = false;
  long long nodes = 0;
  std::string diagnostic;

  bool found() const { return witness.has_value(); }
  // exhaustive proof that no witness exists
  bool exhausted_none() const { return !witness.has_value() && !budget_exceeded; }
};

// deterministic backtracking over canonical vertex sequences;
// returns the first witness in lexicographic branching order
OracleResult find_hamilton_cycle(const KGraph& h, int ell,
                                 long long budget = default_oracle_budget);

// ends, when given, fix the first/last vertices of the path blockwise;
// their length must be a positive multiple of k - ell, at most k
OracleResult find_hamilton_path(const KGraph& h, int ell,
                                const std::optional<std::vector<int>>& end1 = std::nullopt,
                                const std::optional<std::vector<int>>& end2 = std::nullopt,
                                long long budget = default_oracle_budget);

struct TwoPathFamily {
  std::vector<PairSeq> paths;
  long long total_edges = 0;
};

// maximum total edge count over families of vertex-disjoint 2-paths (k = 4)
long long total_2_pathlength(const KGraph& h);

// exact early-exit variant: a family with total >= target, or nullopt if the
// maximum is below target
std::optional<TwoPathFamily> two_path_family_reaching(const KGraph& h, long long target);

// independent full-enumeration oracle, n <= 10
long long total_2_pathlength_slow(const KGraph& h);

}  // namespace h2c
