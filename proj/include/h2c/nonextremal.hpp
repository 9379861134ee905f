#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/matching.hpp"
#include "h2c/params.hpp"
#include "h2c/seq.hpp"

namespace h2c {

// exact number of 2-paths of length 2 (p1 q p2) and length 3 (p1 q q' p2)
// whose end pairs are p1 and p2
struct ConnectingPathCounts {
  long long len2 = 0;
  long long len3 = 0;
};

ConnectingPathCounts count_connecting_paths(const KGraph& h, std::array<int, 2> p1,
                                            std::array<int, 2> p2);

struct PairPair {
  std::array<int, 2> p1{};
  std::array<int, 2> p2{};
};

struct ConnectingReport {
  bool connecting = false;
  // lex-first disjoint pair-pair with len2 < kappa n^2 and len3 < kappa n^4
  std::optional<PairPair> witness;
};

// true iff every two disjoint vertex pairs are joined by at least kappa n^2
// paths of length 2 or at least kappa n^4 paths of length 3
ConnectingReport is_kappa_connecting(const KGraph& h, double kappa);
ConnectingReport is_kappa_connecting_serial(const KGraph& h, double kappa);

enum class AbsorbKind { Type1, Type2 };

// ordered octuple (a1,a2,c1,c2,c3,c4,b1,b2) absorbing the pair target = {x,y};
// its base path is the octuple itself and its replacement path additionally
// carries the target between c2 and c3 (type 1) or a2 and c1 (type 2)
struct AbsorbingStructure {
  std::array<int, 8> octuple{};
  AbsorbKind kind = AbsorbKind::Type1;
  std::array<int, 2> target{};

  std::vector<EdgeKey> required_edges() const;
  VertexSeq base_path() const;
  VertexSeq replacement_path() const;
  // vertices distinct and off-target, all required edges present
  bool valid_in(const KGraph& h) const;
};

// number of ordered octuples forming an absorbing structure of either type
// for the pair {x,y}
long long count_absorbing_structures(const KGraph& h, int x, int y);

// smallest integer count satisfying count >= beta * n^8
long long absorb_threshold(int n, double beta);

struct AbsorbingReport {
  bool absorbing = false;
  long long non_absorbable_pairs = 0;
  std::optional<std::array<int, 2>> first_non_absorbable;
};

// at most alpha n^2 pairs have fewer than beta n^8 absorbing structures
AbsorbingReport is_alpha_beta_absorbing(const KGraph& h, double alpha, double beta);
AbsorbingReport is_alpha_beta_absorbing_serial(const KGraph& h, double alpha, double beta);

// 2-graph on V(H) whose edges are the beta-absorbable pairs
SimpleGraph absorbability_graph(const KGraph& h, double beta);

// red/blue colouring search of the connecting-lemma proof; requires H not
// kappa-connecting, returns a partition verified c-even-extremal
Fallible<Bipartition> even_partition(const KGraph& h, double kappa, double eta,
                                     double c = ParamSet{}.c);

// colouring search of the absorbing-lemma counterpart; requires H not
// (alpha,beta)-absorbing, returns a partition verified c-odd-extremal
Fallible<Bipartition> odd_partition(const KGraph& h, double beta, double omega, double phi,
                                    double alpha = ParamSet{}.alpha, double c = ParamSet{}.c);

// k-sets with multiplicities, e() counts with multiplicity
struct MultiKGraph {
  int n = 0;
  int k = 2;
  std::map<EdgeKey, long long> mult;

  long long edge_count() const;
  long long max_multiplicity() const;
  void add(EdgeKey key, long long m = 1);
  static MultiKGraph from_graph(const KGraph& h);
};

// k*ell vertices spanning at least d * C(ell, k) edges with multiplicity;
// requires e(H) >= d * C(n, k)
Fallible<std::vector<int>> dense_restriction(const MultiKGraph& h, int ell, double d);

// complete k-partite subgraph with the given class sizes, classes returned
// in order; lexicographically first embedding, or nullopt when none exists
std::optional<std::vector<std::vector<int>>> find_partite_subgraph(
    const KGraph& h, const std::vector<int>& class_sizes);

// tight path on at least a*m/k vertices; requires e(H) >= a * C(m, k)
VertexSeq dense_tight_path(const KGraph& h, double a);

// alternate-edge prefix of a tight path in a 4-graph, read as a 2-path
VertexSeq two_path_from_tight(const VertexSeq& tight);

struct AbsorbingPathResult {
  VertexSeq path;
  SimpleGraph g{0};
  // base octuples appearing as consecutive segments of path
  std::vector<std::array<int, 8>> segments;
};

// short 2-path P with: every vertex off P has g-degree >= (1-lambda)n and
// every g-edge off P is absorbed by at least 2*gamma*n disjoint segments of P
Fallible<AbsorbingPathResult> absorbing_path(const KGraph& h, double beta, double lambda,
                                             const ParamSet& ps = ParamSet::pipeline_defaults());

// 2-cycle on at least (1-gamma)n vertices containing p0 as a segment, with a
// perfect matching in g restricted to the uncovered vertices
Fallible<VertexSeq> long_cycle(const KGraph& h, const SimpleGraph& g, const VertexSeq& p0, int D,
                               double gamma, double kappa, double mu);

// absorbing path + long cycle + leftover matching absorption; output verified
// as a Hamilton 2-cycle before returning
Fallible<VertexSeq> non_extremal_hamilton(const KGraph& h,
                                          const ParamSet& ps = ParamSet::pipeline_defaults());

}  // namespace h2c
