#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/oracle.hpp"
#include "h2c/seq.hpp"

namespace h2c {

enum class Clause { None, I, II, III, IV, V, VI, VII, VIII };

std::string clause_label(Clause c);

// outcome of the eight-clause bipartition tests; witnesses re-check verbatim
struct GoodnessReport {
  int m = 0;  // n mod 8
  int d = 0;  // (|A| - |B|) mod 4
  bool even_good = false;
  Clause even_clause = Clause::None;
  std::vector<EdgeKey> even_witness;  // odd edges cited by (ii)/(iii)/(iv)
  bool odd_good = false;
  Clause odd_clause = Clause::None;
  std::vector<EdgeKey> odd_witness;        // even edges cited by (vi)/(viii)
  std::vector<PairSeq> odd_witness_paths;  // 2-path family for (vii)/(viii)

  bool good() const { return even_good && odd_good; }
  std::string describe() const;
};

// per-graph context reused across many bipartitions of the same graph
struct GoodnessContext {
  int n = 0;
  std::vector<EdgeKey> keys;
  std::vector<std::uint64_t> masks;
};

GoodnessContext build_goodness_context(const KGraph& h);
std::uint64_t side_a_mask(const Bipartition& bip);
GoodnessReport eval_goodness(const GoodnessContext& ctx, std::uint64_t amask, bool want_even,
                             bool want_odd);

GoodnessReport is_even_good(const KGraph& h, const Bipartition& bip);
GoodnessReport is_odd_good(const KGraph& h, const Bipartition& bip);
GoodnessReport goodness(const KGraph& h, const Bipartition& bip);

// canonical sweep order: vertex 0 always in A, remaining sides encoded so
// ascending mask order equals lexicographic order of the A/B label strings
Bipartition bipartition_from_mask(int n, std::uint64_t mask);

struct CandidateOptions {
  int exhaustive_threshold = 24;
  bool allow_hitting_set = true;
  long long max_candidates = 1ll << 22;
};

// superset of all bipartitions failing either goodness test
Fallible<std::vector<Bipartition>> enumerate_candidate_bipartitions(
    const KGraph& h, const CandidateOptions& opts = {});

struct BadBipartition {
  Bipartition bip;
  GoodnessReport report;
};

struct SweepOptions {
  int exhaustive_threshold = 24;
  bool allow_hitting_set = true;
  bool parallel = true;
  long long max_candidates = 1ll << 22;
};

Fallible<std::optional<BadBipartition>> check_all_bipartitions(const KGraph& h,
                                                               const SweepOptions& opts = {});

// exhaustive-sweep kernels over all 2^(n-1) bipartitions; they return the
// smallest failing mask, and the parallel kernel must agree with the serial one
std::optional<std::uint64_t> sweep_bipartition_masks_serial(const KGraph& h);
std::optional<std::uint64_t> sweep_bipartition_masks_parallel(const KGraph& h);

Fallible<bool> forward_implication_holds(const KGraph& h,
                                         long long budget = default_oracle_budget);

enum class Verdict { Yes, No, Inconclusive };
enum class NoCertificate { BadBipartitionWitness, OracleExhaustive };

struct Decision {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<VertexSeq> cycle;
  std::optional<Bipartition> witness;
  std::optional<GoodnessReport> witness_report;
  std::optional<NoCertificate> certificate;
  std::string reason;
};

struct DecideOptions {
  long long oracle_budget = default_oracle_budget;
  double epsilon = 0.1;
  int exhaustive_threshold = 24;
  bool allow_hitting_set = true;
  bool parallel = true;
};

Decision decide_hamilton_2cycle(const KGraph& h, const DecideOptions& opts = {});

}  // namespace h2c
