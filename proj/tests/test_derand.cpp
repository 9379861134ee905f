#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "h2c/constructions.hpp"
#include "h2c/derand.hpp"
#include "h2c/kgraph.hpp"
#include "h2c/matching.hpp"
#include "h2c/rational.hpp"

using namespace h2c;

namespace {

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

void set_cross_bit(DerandInput& in, int u, int w) {
  in.cross[static_cast<size_t>(u)][static_cast<size_t>(w) / 64] |=
      1ull << (static_cast<unsigned>(w) % 64);
}

DerandInput bipartite_complete_instance(int m_u, int n_w, int r, Rational beta,
                                        Rational lambda, Rational tau) {
  DerandInput in;
  in.m_u = m_u;
  in.n_w = n_w;
  in.r = r;
  in.beta = std::move(beta);
  in.lambda = std::move(lambda);
  in.tau = std::move(tau);
  in.cross.assign(static_cast<size_t>(m_u),
                  std::vector<std::uint64_t>(static_cast<size_t>((n_w + 63) / 64), 0));
  for (int u = 0; u < m_u; ++u)
    for (int w = 0; w < n_w; ++w) set_cross_bit(in, u, w);
  in.g1w = SimpleGraph(n_w);
  in.g2 = complete_graph(n_w);
  return in;
}

// random valid instance; rates are fixed after the fact so the degree
// invariants hold by construction
DerandInput random_instance(std::uint64_t seed) {
  SplitMix64 rng(seed);
  int n_w = 8 + static_cast<int>(rng.below(12));
  int m_u = static_cast<int>(rng.below(9));
  int r = 2 + static_cast<int>(rng.below(5));
  if (r > n_w / 2) r = n_w / 2;

  DerandInput in;
  in.m_u = m_u;
  in.n_w = n_w;
  in.r = r;
  in.cross.assign(static_cast<size_t>(m_u),
                  std::vector<std::uint64_t>(static_cast<size_t>((n_w + 63) / 64), 0));
  for (int u = 0; u < m_u; ++u)
    for (int w = 0; w < n_w; ++w)
      if (rng.bernoulli(0.75)) set_cross_bit(in, u, w);
  in.g1w = SimpleGraph(n_w);
  in.g2 = SimpleGraph(n_w);
  for (int i = 0; i < n_w; ++i)
    for (int j = i + 1; j < n_w; ++j) {
      if (rng.bernoulli(0.08)) in.g1w.add_edge(i, j);
      if (rng.bernoulli(0.93)) in.g2.add_edge(i, j);
    }

  int min_cross = n_w;
  for (int u = 0; u < m_u; ++u) min_cross = std::min(min_cross, in.cross_degree(u));
  if (m_u > 0 && min_cross == 0) {
    for (int u = 0; u < m_u; ++u) set_cross_bit(in, u, 0);
    min_cross = 1;
  }
  in.beta = m_u > 0 ? Rational(min_cross) / n_w : Rational(1, 2);
  int min_g2 = n_w;
  for (int w = 0; w < n_w; ++w) min_g2 = std::min(min_g2, in.g2.degree(w));
  in.lambda = Rational(n_w - min_g2) / n_w;
  if (in.lambda == 0) in.lambda = Rational(1) / (2 * n_w);
  in.tau = in.beta / 2;
  in.validate();
  return in;
}

}  // namespace

TEST_CASE("hypergeometric tail endpoints and a hand-checked value") {
  CHECK(hypergeom_tail(0, 3, 10, 4, 4) == Rational(1));
  CHECK(hypergeom_tail(0, 3, 10, 4, 7) == Rational(1));
  CHECK(hypergeom_tail(0, 3, 10, 4, -1) == Rational(0));
  CHECK(hypergeom_tail(0, 2, 4, 2, 0) == Rational(1, 6));
}

TEST_CASE("complete bipartite instance selects the first r indices") {
  DerandInput in = bipartite_complete_instance(5, 20, 6, Rational(1),
                                               Rational(2, 5), Rational(1, 5));
  auto out = select_set(in);
  REQUIRE(out.ok());
  std::vector<int> expect{0, 1, 2, 3, 4, 5};
  CHECK(out->selected == expect);
  CHECK(out->removed.empty());
  CHECK(verify_select_set(in, *out).all_ok());
}

TEST_CASE("small dense instance passes all four output guarantees") {
  DerandInput in = bipartite_complete_instance(4, 20, 8, Rational(1),
                                               Rational(2, 5), Rational(1, 5));
  auto out = select_set(in);
  REQUIRE(out.ok());
  SelectSetAudit audit = verify_select_set(in, *out);
  CHECK(audit.size_ok);
  CHECK(audit.independent_ok);
  CHECK(audit.cross_ok);
  CHECK(audit.cover_ok);
  CHECK(static_cast<int>(out->selected.size()) == 8);
}

TEST_CASE("instance engineered above the potential bound is rejected") {
  // with lambda = 1/20 and r = 8 the cover tail at a complete G2 equals
  // P(w lands in R) = 2/5 per vertex, so the summed potential is 8
  DerandInput in = bipartite_complete_instance(0, 20, 8, Rational(1, 2),
                                               Rational(1, 20), Rational(1, 4));
  auto out = select_set(in);
  REQUIRE(!out.ok());
  CHECK(out.failure->stage == "select_set");
  CHECK(out.failure->detail.find("initial potential") != std::string::npos);
}

TEST_CASE("select_set is deterministic and logs exact step potentials") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull, 14ull, 15ull}) {
    DerandInput in = random_instance(seed);
    auto first = select_set(in);
    auto second = select_set(in);
    REQUIRE(first.ok() == second.ok());
    if (!first.ok()) continue;
    CHECK(first->chosen == second->chosen);
    CHECK(first->selected == second->selected);
    CHECK(first->removed == second->removed);
    REQUIRE(first->potentials.size() == first->chosen.size() + 1);
    for (size_t k = 0; k <= first->chosen.size(); ++k) {
      std::vector<int> prefix(first->chosen.begin(),
                              first->chosen.begin() + static_cast<long>(k));
      CHECK(first->potentials[k] == select_set_potential(in, prefix));
      CHECK(first->potentials[k] < 1);
    }
    CHECK(verify_select_set(in, *first).all_ok());
  }
}

TEST_CASE("potential equals the average over one-step continuations") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    DerandInput in = random_instance(seed * 7919);
    std::vector<int> prefix;
    int depth = std::min(in.r - 1, 3);
    for (int k = 0; k <= depth; ++k) {
      prefix.clear();
      for (int j = 0; j < k; ++j) prefix.push_back(j);
      Rational phi = select_set_potential(in, prefix);
      Rational total(0);
      int remaining = 0;
      for (int j = 0; j < in.n_w; ++j) {
        if (std::find(prefix.begin(), prefix.end(), j) != prefix.end()) continue;
        prefix.push_back(j);
        total += select_set_potential(in, prefix);
        prefix.pop_back();
        ++remaining;
      }
      CHECK(phi == total / remaining);
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("joint-graph construction matches the split encoding") {
  int m_u = 3, n_w = 10;
  SimpleGraph joint(m_u + n_w);
  SplitMix64 rng(99);
  for (int u = 0; u < m_u; ++u)
    for (int w = 0; w < n_w; ++w)
      if (rng.bernoulli(0.8)) joint.add_edge(u, m_u + w);
  for (int i = 0; i < n_w; ++i)
    for (int j = i + 1; j < n_w; ++j)
      if (rng.bernoulli(0.1)) joint.add_edge(m_u + i, m_u + j);
  SimpleGraph g2 = complete_graph(n_w);

  DerandInput in = DerandInput::from_joint(joint, m_u, g2, 4, Rational(1, 2),
                                           Rational(1, 4), Rational(1, 4));
  CHECK(in.n_w == n_w);
  for (int u = 0; u < m_u; ++u)
    for (int w = 0; w < n_w; ++w)
      CHECK(in.cross_has(u, w) == joint.has_edge(u, m_u + w));
  for (int i = 0; i < n_w; ++i)
    for (int j = i + 1; j < n_w; ++j)
      CHECK(in.g1w.has_edge(i, j) == joint.has_edge(m_u + i, m_u + j));

  auto out = select_set(in);
  REQUIRE(out.ok());
  CHECK(verify_select_set(in, *out).all_ok());
}

TEST_CASE("reservoir on a complete host meets all three conclusions") {
  KGraph h = complete_kgraph(40, 4);
  SimpleGraph g = complete_graph(40);
  auto res = select_reservoir(h, g, 0.3, 0.005, 0.15);
  REQUIRE(res.ok());
  CHECK(res->vertices.size() % 4 == 0);
  CHECK(verify_reservoir(h, g, 0.3, 0.005, 0.15, *res).all_ok());
  auto again = select_reservoir(h, g, 0.3, 0.005, 0.15);
  REQUIRE(again.ok());
  CHECK(again->vertices == res->vertices);
}

TEST_CASE("reservoir groups connect an arbitrary disjoint pair-pair") {
  KGraph h = complete_kgraph(36, 4);
  SimpleGraph g = complete_graph(36);
  auto res = select_reservoir(h, g, 0.3, 0.005, 0.15);
  REQUIRE(res.ok());
  int c = reservoir_connection_count(h, res->groups, {0, 17}, {20, 35});
  CHECK(c >= 1);
}

TEST_CASE("reservoir via materialised auxiliaries at small n") {
  KGraph h = complete_kgraph(13, 4);
  SimpleGraph g = complete_graph(13);
  auto res = select_reservoir(h, g, 0.93, 0.945, 0.0485);
  REQUIRE(res.ok());
  CHECK(verify_reservoir(h, g, 0.93, 0.945, 0.0485, *res).all_ok());
}

TEST_CASE("reservoir starves gracefully when the budget is zero") {
  KGraph h = complete_kgraph(8, 4);
  SimpleGraph g = complete_graph(8);
  auto res = select_reservoir(h, g, 0.3, 0.005, 0.15);
  REQUIRE(!res.ok());
  CHECK(res.failure->stage == "select_reservoir");
}

TEST_CASE("reservoir reports failure on a host with no connecting paths") {
  KGraph h(20, 4, {});
  SimpleGraph g = complete_graph(20);
  auto res = select_reservoir(h, g, 0.4, 0.05, 0.15);
  REQUIRE(!res.ok());
  CHECK(res.failure->stage == "select_reservoir");
}
