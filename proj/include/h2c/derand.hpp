#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/matching.hpp"
#include "h2c/rational.hpp"

namespace h2c {

// Bipartite-plus-internal instance for the conditional-expectation selection:
// U = {0..m_u-1} meets W = {0..n_w-1} through cross edges, W carries two
// auxiliary graphs (g1w drives the independence deletion, g2 the covering
// degrees).  Rates are exact rationals so every threshold comparison is exact.
struct DerandInput {
  int m_u = 0;
  int n_w = 0;
  int r = 0;
  Rational beta;
  Rational lambda;
  Rational tau;
  // m_u rows of ceil(n_w/64) words; bit w set iff u ~ w in the cross graph
  std::vector<std::vector<std::uint64_t>> cross;
  SimpleGraph g1w{1};
  SimpleGraph g2{1};

  int cross_words() const { return (n_w + 63) / 64; }
  bool cross_has(int u, int w) const {
    return (cross[static_cast<size_t>(u)][static_cast<size_t>(w) / 64] >>
            (static_cast<unsigned>(w) % 64)) &
           1u;
  }
  int cross_degree(int u) const;
  long long w_edge_count() const { return g1w.edge_count(); }
  // nu = 2 m r / N^2 with m = e(g1w); defined as 0 when m = 0
  Rational nu() const;
  void validate() const;

  // joint encoding: G1 over U ⊎ W with U = [0, m_u) and W shifted by m_u;
  // G1[U] must be empty
  static DerandInput from_joint(const SimpleGraph& g1, int m_u,
                                const SimpleGraph& g2, int r, Rational beta,
                                Rational lambda, Rational tau);
};

struct SelectSetResult {
  std::vector<int> chosen;      // j_1..j_r in selection order
  std::vector<int> removed;     // one endpoint per g1w edge inside chosen
  std::vector<int> selected;    // final R, ascending
  Rational nu;
  std::vector<Rational> potentials;  // potential after 0..r choices
};

// Potential A+B+C of a partial selection (any subset of W, size <= r).
Rational select_set_potential(const DerandInput& in,
                              const std::vector<int>& chosen);

// Greedy derandomised selection: at each step the smallest index whose
// extended potential stays below 1.  Fails (scale, not contract) when the
// initial potential is >= 1; never fails internally once it starts.
Fallible<SelectSetResult> select_set(const DerandInput& in);

// Same scan restricted to candidates accepted by `allowed` (given the
// candidate index and the current selection).  Any admissible choice keeps
// the potential invariant, so a filtered run is still a valid execution; it
// may, however, run out of candidates, which surfaces as a scale failure.
Fallible<SelectSetResult> select_set_filtered(
    const DerandInput& in,
    const std::function<bool(int, const std::vector<int>&)>& allowed);

struct SelectSetAudit {
  bool size_ok = false;         // (1-nu) r <= |R| <= r
  bool independent_ok = false;  // R independent in g1w
  bool cross_ok = false;        // every u: |N(u) ∩ R| >= (beta-tau-nu) r
  bool cover_ok = false;        // every w: |N_g2(w) ∩ R| >= (1-2 lambda-nu) r
  bool all_ok() const { return size_ok && independent_ok && cross_ok && cover_ok; }
};

SelectSetAudit verify_select_set(const DerandInput& in,
                                 const SelectSetResult& res);

struct ReservoirResult {
  std::vector<int> vertices;               // R, ascending
  std::vector<std::array<int, 4>> groups;  // the selected disjoint 4-sets
  bool restricted_run = false;  // true when the disjoint-candidate pass was needed
};

// Reservoir selection on a 4-graph H with companion 2-graph G: picks disjoint
// 4-sets through the same potential-gated scan (auxiliary graphs evaluated
// lazily; closed-form edge counts) and re-verifies the three reservoir
// properties exactly before returning.
Fallible<ReservoirResult> select_reservoir(const KGraph& h, const SimpleGraph& g,
                                           double rho, double kappa,
                                           double lambda);

// Number of selected 4-sets S for which H[S ∪ p1 ∪ p2] contains a 2-path with
// ends p1, p2 (such a path has length <= 3 automatically).  Exposed for exact
// re-verification in tests.
int reservoir_connection_count(const KGraph& h,
                               const std::vector<std::array<int, 4>>& groups,
                               std::pair<int, int> p1, std::pair<int, int> p2);

struct ReservoirAudit {
  bool size_ok = false;     // (1-4 rho) rho n <= |R| <= rho n
  bool degree_ok = false;   // every x: |N_G(x) ∩ R| >= (1-35 lambda) |R|
  bool connect_ok = false;  // every disjoint pair-pair: >= (kappa/5)|R| paths
  bool all_ok() const { return size_ok && degree_ok && connect_ok; }
};

ReservoirAudit verify_reservoir(const KGraph& h, const SimpleGraph& g,
                                double rho, double kappa, double lambda,
                                const ReservoirResult& res);

// floor of an exact rational as long long
long long floor_rational(const Rational& q);

}  // namespace h2c
