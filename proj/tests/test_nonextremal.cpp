#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "h2c/constructions.hpp"
#include "h2c/kgraph.hpp"
#include "h2c/nonextremal.hpp"
#include "h2c/seq.hpp"

using namespace h2c;

namespace {

KGraph empty_kgraph(int n) { return KGraph(n, 4, {}); }

bool edge4(const KGraph& h, int a, int b, int c, int d) { return h.has_edge({a, b, c, d}); }

// direct transcription of the two defining edge lists
bool naive_type1(const KGraph& h, const std::array<int, 8>& o, int x, int y) {
  return edge4(h, o[0], o[1], o[2], o[3]) && edge4(h, o[2], o[3], o[4], o[5]) &&
         edge4(h, o[4], o[5], o[6], o[7]) && edge4(h, o[2], o[3], x, y) &&
         edge4(h, x, y, o[4], o[5]);
}

bool naive_type2(const KGraph& h, const std::array<int, 8>& o, int x, int y) {
  return edge4(h, o[0], o[1], o[2], o[3]) && edge4(h, o[2], o[3], o[4], o[5]) &&
         edge4(h, o[4], o[5], o[6], o[7]) && edge4(h, o[0], o[1], x, y) &&
         edge4(h, x, y, o[2], o[5]) && edge4(h, o[3], o[4], o[6], o[7]);
}

long long naive_absorb_count(const KGraph& h, int x, int y) {
  int n = h.n();
  std::vector<char> used(static_cast<size_t>(n), 0);
  used[static_cast<size_t>(x)] = used[static_cast<size_t>(y)] = 1;
  std::array<int, 8> oc{};
  long long total = 0;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == 8) {
      if (naive_type1(h, oc, x, y) || naive_type2(h, oc, x, y)) total += 1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = 1;
      oc[static_cast<size_t>(depth)] = v;
      rec(depth + 1);
      used[static_cast<size_t>(v)] = 0;
    }
  };
  rec(0);
  return total;
}

ConnectingPathCounts naive_connecting(const KGraph& h, std::array<int, 2> p1,
                                      std::array<int, 2> p2) {
  int n = h.n();
  std::vector<std::array<int, 2>> free_pairs;
  auto off_ends = [&](int v) {
    return v != p1[0] && v != p1[1] && v != p2[0] && v != p2[1];
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (off_ends(u) && off_ends(v)) free_pairs.push_back({u, v});
  ConnectingPathCounts out;
  for (const auto& q : free_pairs)
    if (edge4(h, p1[0], p1[1], q[0], q[1]) && edge4(h, q[0], q[1], p2[0], p2[1])) out.len2 += 1;
  for (const auto& q : free_pairs) {
    if (!edge4(h, p1[0], p1[1], q[0], q[1])) continue;
    for (const auto& r : free_pairs) {
      if (r[0] == q[0] || r[0] == q[1] || r[1] == q[0] || r[1] == q[1]) continue;
      if (edge4(h, q[0], q[1], r[0], r[1]) && edge4(h, r[0], r[1], p2[0], p2[1])) out.len3 += 1;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("connecting path counts on the complete host") {
  KGraph k8 = complete_kgraph(8, 4);
  auto c = count_connecting_paths(k8, {0, 1}, {2, 3});
  CHECK(c.len2 == 6);
  auto ref = naive_connecting(k8, {0, 1}, {2, 3});
  CHECK(c.len2 == ref.len2);
  CHECK(c.len3 == ref.len3);
  auto c2 = count_connecting_paths(k8, {5, 7}, {4, 0});
  CHECK(c2.len2 == 6);
  CHECK(c2.len3 == c.len3);
}

TEST_CASE("connecting path counts vanish across the parity barrier") {
  auto [e12, bip] = build_parity_complete(12, EdgeParity::Even);
  REQUIRE(bip.in_a(0));
  REQUIRE(bip.in_a(2));
  REQUIRE(!bip.in_a(6));
  auto c = count_connecting_paths(e12, {0, 1}, {2, 6});
  CHECK(c.len2 == 0);
  CHECK(c.len3 == 0);
  auto [e40, bip40] = build_parity_complete(40, EdgeParity::Even);
  auto c40 = count_connecting_paths(e40, {0, 1}, {2, 20});
  CHECK(c40.len2 == 0);
  CHECK(c40.len3 == 0);
}

TEST_CASE("connecting path counts on the empty host and bad input") {
  KGraph h = empty_kgraph(10);
  auto c = count_connecting_paths(h, {0, 1}, {2, 3});
  CHECK(c.len2 == 0);
  CHECK(c.len3 == 0);
  CHECK_THROWS_AS(count_connecting_paths(h, {0, 1}, {1, 2}), contract_error);
  CHECK_THROWS_AS(count_connecting_paths(h, {0, 0}, {1, 2}), contract_error);
}

TEST_CASE("connecting path counts agree with direct enumeration") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    KGraph h = random_kgraph(12, 4, 0.55, seed);
    auto fast = count_connecting_paths(h, {0, 5}, {3, 9});
    auto ref = naive_connecting(h, {0, 5}, {3, 9});
    CHECK(fast.len2 == ref.len2);
    CHECK(fast.len3 == ref.len3);
  }
}

TEST_CASE("kappa connectivity of dense and parity hosts") {
  KGraph k12 = complete_kgraph(12, 4);
  auto rep = is_kappa_connecting(k12, 1e-3);
  CHECK(rep.connecting);
  CHECK(!rep.witness.has_value());

  auto [e12, bip] = build_parity_complete(12, EdgeParity::Even);
  auto bad = is_kappa_connecting(e12, 1e-3);
  CHECK(!bad.connecting);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->p1 == std::array<int, 2>{0, 1});
  CHECK(bad.witness->p2 == std::array<int, 2>{2, 6});
  CHECK(pair_kind(bip, bad.witness->p1[0], bad.witness->p1[1]) !=
        pair_kind(bip, bad.witness->p2[0], bad.witness->p2[1]));

  auto tiny = is_kappa_connecting(e12, 1e-9);
  CHECK(!tiny.connecting);
}

TEST_CASE("kappa connectivity of the empty host") {
  auto rep = is_kappa_connecting(empty_kgraph(8), 0.01);
  CHECK(!rep.connecting);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->p1 == std::array<int, 2>{0, 1});
  CHECK(rep.witness->p2 == std::array<int, 2>{2, 3});
}

TEST_CASE("kappa connectivity serial and parallel scans agree") {
  auto [e40, bip] = build_parity_complete(40, EdgeParity::Even);
  auto par = is_kappa_connecting(e40, 0.005);
  auto ser = is_kappa_connecting_serial(e40, 0.005);
  CHECK(par.connecting == ser.connecting);
  REQUIRE(par.witness.has_value());
  REQUIRE(ser.witness.has_value());
  CHECK(par.witness->p1 == ser.witness->p1);
  CHECK(par.witness->p2 == ser.witness->p2);
  CHECK(par.witness->p1 == std::array<int, 2>{0, 1});
  CHECK(par.witness->p2 == std::array<int, 2>{2, 20});

  KGraph k20 = complete_kgraph(20, 4);
  CHECK(is_kappa_connecting(k20, 0.005).connecting);
  CHECK(is_kappa_connecting_serial(k20, 0.005).connecting);

  KGraph r = random_kgraph(16, 4, 0.4, 99);
  auto pr = is_kappa_connecting(r, 0.02);
  auto sr = is_kappa_connecting_serial(r, 0.02);
  CHECK(pr.connecting == sr.connecting);
  CHECK((pr.witness.has_value()) == (sr.witness.has_value()));
  if (pr.witness && sr.witness) {
    CHECK(pr.witness->p1 == sr.witness->p1);
    CHECK(pr.witness->p2 == sr.witness->p2);
  }
}

TEST_CASE("absorbing structure counts on the complete host") {
  KGraph k12 = complete_kgraph(12, 4);
  long long expect = 10LL * 9 * 8 * 7 * 6 * 5 * 4 * 3;
  CHECK(count_absorbing_structures(k12, 0, 1) == expect);
  CHECK(count_absorbing_structures(k12, 7, 11) == expect);
  CHECK(naive_absorb_count(k12, 0, 1) == expect);

  KGraph k10 = complete_kgraph(10, 4);
  CHECK(count_absorbing_structures(k10, 0, 1) == naive_absorb_count(k10, 0, 1));
}

TEST_CASE("absorbing structure counts vanish on the odd parity host") {
  auto [o12, bip12] = build_parity_complete(12, EdgeParity::Odd);
  CHECK(count_absorbing_structures(o12, 0, 1) == 0);
  CHECK(count_absorbing_structures(o12, 0, 6) == 0);
  CHECK(naive_absorb_count(o12, 0, 1) == 0);
  auto [o20, bip20] = build_parity_complete(20, EdgeParity::Odd);
  CHECK(count_absorbing_structures(o20, 0, 1) == 0);
  CHECK(count_absorbing_structures(o20, 0, 10) == 0);
  CHECK(count_absorbing_structures(empty_kgraph(12), 0, 1) == 0);
}

TEST_CASE("absorbing structure counts agree with the eight-fold loop") {
  for (std::uint64_t seed : {3u, 4u}) {
    KGraph h = random_kgraph(11, 4, 0.7, seed);
    CHECK(count_absorbing_structures(h, 0, 1) == naive_absorb_count(h, 0, 1));
    CHECK(count_absorbing_structures(h, 2, 9) == naive_absorb_count(h, 2, 9));
  }
  KGraph h12 = random_kgraph(12, 4, 0.6, 5);
  CHECK(count_absorbing_structures(h12, 0, 1) == naive_absorb_count(h12, 0, 1));
  CHECK(count_absorbing_structures(h12, 4, 8) == naive_absorb_count(h12, 4, 8));
  auto [e12, bip] = build_parity_complete(12, EdgeParity::Even);
  CHECK(count_absorbing_structures(e12, 0, 1) == naive_absorb_count(e12, 0, 1));
  CHECK(count_absorbing_structures(e12, 0, 6) == naive_absorb_count(e12, 0, 6));
}

TEST_CASE("absorbing structures validate their edge lists and paths") {
  KGraph k12 = complete_kgraph(12, 4);
  AbsorbingStructure s1{{2, 3, 4, 5, 6, 7, 8, 9}, AbsorbKind::Type1, {0, 1}};
  CHECK(s1.required_edges().size() == 5);
  CHECK(s1.valid_in(k12));
  CHECK(is_ell_path(k12, s1.base_path()));
  CHECK(is_ell_path(k12, s1.replacement_path()));
  CHECK(s1.replacement_path().vertices ==
        std::vector<int>{2, 3, 4, 5, 0, 1, 6, 7, 8, 9});

  AbsorbingStructure s2{{2, 3, 4, 5, 6, 7, 8, 9}, AbsorbKind::Type2, {0, 1}};
  CHECK(s2.required_edges().size() == 6);
  CHECK(s2.valid_in(k12));
  CHECK(is_ell_path(k12, s2.base_path()));
  CHECK(is_ell_path(k12, s2.replacement_path()));
  CHECK(s2.replacement_path().vertices ==
        std::vector<int>{2, 3, 0, 1, 4, 7, 5, 6, 8, 9});

  AbsorbingStructure overlap{{2, 3, 4, 5, 6, 7, 8, 0}, AbsorbKind::Type1, {0, 1}};
  CHECK(!overlap.valid_in(k12));

  std::vector<std::vector<int>> edges = complete_kgraph(12, 4).edge_list();
  std::vector<int> missing = {2, 3, 4, 5};
  edges.erase(std::remove(edges.begin(), edges.end(), missing), edges.end());
  KGraph holed(12, 4, edges);
  CHECK(!s1.valid_in(holed));
  AbsorbingStructure other{{6, 7, 8, 9, 10, 11, 2, 3}, AbsorbKind::Type1, {0, 1}};
  CHECK(other.valid_in(holed));
}

TEST_CASE("absorbability rates across the fixture families") {
  KGraph k20 = complete_kgraph(20, 4);
  long long thr = absorb_threshold(20, 0.05);
  CHECK(thr == 1280000000LL);
  CHECK(count_absorbing_structures(k20, 0, 1) ==
        18LL * 17 * 16 * 15 * 14 * 13 * 12 * 11);
  auto repc = is_alpha_beta_absorbing(k20, 0.12, 0.05);
  CHECK(repc.absorbing);
  CHECK(repc.non_absorbable_pairs == 0);
  CHECK(!repc.first_non_absorbable.has_value());

  auto [o20, bip] = build_parity_complete(20, EdgeParity::Odd);
  auto repo = is_alpha_beta_absorbing(o20, 0.12, 0.05);
  CHECK(!repo.absorbing);
  CHECK(repo.non_absorbable_pairs == 190);
  REQUIRE(repo.first_non_absorbable.has_value());
  CHECK(*repo.first_non_absorbable == std::array<int, 2>{0, 1});

  auto reps = is_alpha_beta_absorbing_serial(o20, 0.12, 0.05);
  CHECK(reps.absorbing == repo.absorbing);
  CHECK(reps.non_absorbable_pairs == repo.non_absorbable_pairs);
  CHECK(*reps.first_non_absorbable == *repo.first_non_absorbable);

  auto tiny = is_alpha_beta_absorbing(complete_kgraph(8, 4), 0.12, 0.05);
  CHECK(!tiny.absorbing);
  CHECK(tiny.non_absorbable_pairs == 28);
}

TEST_CASE("absorbability graph of the complete host is complete") {
  KGraph k20 = complete_kgraph(20, 4);
  SimpleGraph g = absorbability_graph(k20, 0.05);
  CHECK(g.edge_count() == 190);
  auto [o20, bip] = build_parity_complete(20, EdgeParity::Odd);
  SimpleGraph go = absorbability_graph(o20, 0.05);
  CHECK(go.edge_count() == 0);
}

namespace {

long long count_parity_edges(const KGraph& h, const Bipartition& bip, EdgeParity side) {
  long long c = 0;
  for (EdgeKey key : h.edge_keys())
    if (edge_parity(bip, key, 4) == side) c += 1;
  return c;
}

bool same_split(const Bipartition& got, const Bipartition& want) {
  return got == want || got == want.flipped();
}

}  // namespace

TEST_CASE("even partition recovers the all-even fixture exactly") {
  auto [e40, bip] = build_parity_complete(40, EdgeParity::Even);
  auto res = even_partition(e40, 0.005, 0.25);
  REQUIRE(res.ok());
  CHECK(same_split(*res, bip));
  CHECK(count_parity_edges(e40, *res, EdgeParity::Odd) == 0);
}

TEST_CASE("even partition rejects a connecting host") {
  KGraph k20 = complete_kgraph(20, 4);
  CHECK_THROWS_AS(even_partition(k20, 0.005, 0.25), contract_error);
}

TEST_CASE("even partition at small scale is exact or an explicit failure") {
  auto [e12, bip] = build_parity_complete(12, EdgeParity::Even);
  auto tight = even_partition(e12, 0.005, 0.25);
  if (tight.ok()) {
    CHECK(count_parity_edges(e12, *tight, EdgeParity::Odd) <=
          static_cast<long long>(0.3 * binomial_ll(12, 4)));
  } else {
    CHECK(tight.failure->stage == "even-partition");
  }
  auto loose = even_partition(e12, 0.005, 0.3);
  REQUIRE(loose.ok());
  CHECK(same_split(*loose, bip));
  CHECK(count_parity_edges(e12, *loose, EdgeParity::Odd) == 0);
}

TEST_CASE("odd partition recovers the all-odd fixture exactly") {
  auto [o40, bip] = build_parity_complete(40, EdgeParity::Odd);
  auto res = odd_partition(o40, 0.05, 0.08, 0.1);
  REQUIRE(res.ok());
  CHECK(same_split(*res, bip));
  CHECK(count_parity_edges(o40, *res, EdgeParity::Even) == 0);
}

TEST_CASE("odd partition rejects an absorbing host") {
  KGraph k20 = complete_kgraph(20, 4);
  CHECK_THROWS_AS(odd_partition(k20, 0.05, 0.08, 0.1), contract_error);
}

TEST_CASE("odd partition handles the skewed odd construction") {
  auto [hstar, bip] = build_h_star(40);
  auto res = odd_partition(hstar, 0.05, 0.08, 0.1);
  if (res.ok()) {
    int n = hstar.n();
    CHECK(res->size_a() >= static_cast<int>((0.5 - 0.3) * n));
    CHECK(res->size_a() <= static_cast<int>((0.5 + 0.3) * n) + 1);
    CHECK(count_parity_edges(hstar, *res, EdgeParity::Even) <=
          static_cast<long long>(0.3 * binomial_ll(n, 4)));
  } else {
    CHECK(res.failure->stage == "odd-partition");
  }
}

TEST_CASE("tester determinism across repeated runs") {
  KGraph r = random_kgraph(14, 4, 0.5, 77);
  auto a = is_kappa_connecting(r, 0.01);
  auto b = is_kappa_connecting(r, 0.01);
  CHECK(a.connecting == b.connecting);
  CHECK((a.witness.has_value()) == (b.witness.has_value()));
  if (a.witness) {
    CHECK(a.witness->p1 == b.witness->p1);
    CHECK(a.witness->p2 == b.witness->p2);
  }
  CHECK(count_absorbing_structures(r, 1, 2) == count_absorbing_structures(r, 1, 2));
}

TEST_CASE("multigraph bookkeeping") {
  MultiKGraph mg;
  mg.n = 6;
  mg.k = 1;
  mg.add(pack_sorted({0}), 5);
  mg.add(pack_sorted({2}), 3);
  mg.add(pack_sorted({4}));
  mg.add(pack_sorted({5}), 7);
  CHECK(mg.edge_count() == 16);
  CHECK(mg.max_multiplicity() == 7);
  mg.add(pack_sorted({2}), 4);
  CHECK(mg.mult.at(pack_sorted({2})) == 7);
  CHECK_THROWS_AS(mg.add(pack_sorted({0}), 0), contract_error);
  KGraph k8 = complete_kgraph(8, 4);
  MultiKGraph from = MultiKGraph::from_graph(k8);
  CHECK(from.n == 8);
  CHECK(from.k == 4);
  CHECK(from.edge_count() == k8.edge_count());
  CHECK(from.max_multiplicity() == 1);
}

TEST_CASE("dense restriction of the complete host") {
  MultiKGraph mg = MultiKGraph::from_graph(complete_kgraph(20, 4));
  auto x = dense_restriction(mg, 3, 0.5);
  REQUIRE(x.ok());
  CHECK(*x == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("dense restriction base case picks maximum multiplicity") {
  MultiKGraph mg;
  mg.n = 6;
  mg.k = 1;
  mg.add(pack_sorted({0}), 5);
  mg.add(pack_sorted({2}), 3);
  mg.add(pack_sorted({4}), 1);
  mg.add(pack_sorted({5}), 7);
  auto x = dense_restriction(mg, 2, 1.0);
  REQUIRE(x.ok());
  CHECK(*x == std::vector<int>{0, 5});
}

TEST_CASE("dense restriction rejects sparse hosts and starves on skewed ones") {
  MultiKGraph e = MultiKGraph::from_graph(empty_kgraph(12));
  CHECK_THROWS_AS(dense_restriction(e, 2, 0.1), contract_error);
  MultiKGraph tiny = MultiKGraph::from_graph(complete_kgraph(8, 4));
  CHECK_THROWS_AS(dense_restriction(tiny, 3, 0.5), contract_error);
  MultiKGraph skew;
  skew.n = 4;
  skew.k = 2;
  skew.add(pack_pair(0, 1), 6);
  auto r = dense_restriction(skew, 2, 1.0);
  REQUIRE(!r.ok());
  CHECK(r.failure->stage == "dense-restriction");
}

TEST_CASE("dense restriction of a random host is post-checked") {
  KGraph r = random_kgraph(30, 3, 0.8, 21);
  MultiKGraph mg = MultiKGraph::from_graph(r);
  REQUIRE(mg.edge_count() >= 2436);
  auto x = dense_restriction(mg, 4, 0.6);
  REQUIRE(x.ok());
  REQUIRE(x->size() == 12);
  CHECK(std::is_sorted(x->begin(), x->end()));
  CHECK(std::adjacent_find(x->begin(), x->end()) == x->end());
  long long inside = 0;
  for (size_t i = 0; i < x->size(); ++i)
    for (size_t j = i + 1; j < x->size(); ++j)
      for (size_t l = j + 1; l < x->size(); ++l)
        if (r.has_edge({(*x)[i], (*x)[j], (*x)[l]})) inside += 1;
  CHECK(inside >= 3);
}

TEST_CASE("partite subgraph search on complete and empty hosts") {
  KGraph k9 = complete_kgraph(9, 3);
  auto emb = find_partite_subgraph(k9, {2, 2, 2});
  REQUIRE(emb.has_value());
  CHECK(*emb == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
  KGraph k10 = complete_kgraph(10, 4);
  auto emb4 = find_partite_subgraph(k10, {2, 2, 2, 2});
  REQUIRE(emb4.has_value());
  CHECK(*emb4 == std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  KGraph e9(9, 3, {});
  CHECK(!find_partite_subgraph(e9, {2, 2, 2}).has_value());
  KGraph one(6, 3, {{0, 1, 2}});
  CHECK(!find_partite_subgraph(one, {2, 2, 2}).has_value());
  CHECK_THROWS_AS(find_partite_subgraph(k9, {2, 2}), contract_error);
}

TEST_CASE("partite subgraph search in a dense random host") {
  KGraph r = random_kgraph(24, 3, 0.9, 7);
  auto emb = find_partite_subgraph(r, {2, 2, 2});
  REQUIRE(emb.has_value());
  std::vector<int> all;
  for (const auto& cls : *emb) {
    CHECK(cls.size() == 2);
    for (int v : cls) all.push_back(v);
  }
  std::sort(all.begin(), all.end());
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (int a : (*emb)[0])
    for (int b : (*emb)[1])
      for (int c : (*emb)[2]) CHECK(r.has_edge({a, b, c}));
}

TEST_CASE("tight path spans the complete host") {
  KGraph k12 = complete_kgraph(12, 4);
  VertexSeq p = dense_tight_path(k12, 1.0);
  CHECK(p.ell == 3);
  CHECK(p.size() == 12);
  CHECK(is_ell_path(k12, p));
  CHECK(p.vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("tight path peels low degree ends before extending") {
  std::vector<std::vector<int>> edges;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c)
        for (int d = c + 1; d < 10; ++d) edges.push_back({a, b, c, d});
  edges.push_back({0, 1, 2, 10});
  KGraph h(11, 4, edges);
  VertexSeq p = dense_tight_path(h, 0.6);
  CHECK(p.size() == 10);
  for (int v : p.vertices) CHECK(v != 10);
  CHECK(is_ell_path(h, p));
}

TEST_CASE("tight path contract and trivial cases") {
  CHECK_THROWS_AS(dense_tight_path(empty_kgraph(12), 0.5), contract_error);
  KGraph single(10, 4, {{0, 1, 2, 3}});
  VertexSeq p = dense_tight_path(single, 1.0 / 210.0);
  CHECK(p.vertices == std::vector<int>{0, 1, 2, 3});
  KGraph r3 = random_kgraph(14, 3, 0.7, 31);
  VertexSeq q = dense_tight_path(r3, 0.5);
  CHECK(q.ell == 2);
  CHECK(q.size() >= 3);
  CHECK(is_ell_path(r3, q));
}

TEST_CASE("alternate edges of a tight sequence form a two path") {
  KGraph k12 = complete_kgraph(12, 4);
  VertexSeq tight = dense_tight_path(k12, 1.0);
  VertexSeq two = two_path_from_tight(tight);
  CHECK(two.ell == 2);
  CHECK(two.size() == 12);
  CHECK(is_ell_path(k12, two));
  VertexSeq odd{std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 3, false};
  VertexSeq trimmed = two_path_from_tight(odd);
  CHECK(trimmed.size() == 10);
  CHECK(std::equal(trimmed.vertices.begin(), trimmed.vertices.end(), odd.vertices.begin()));
  VertexSeq not_tight{std::vector<int>{0, 1, 2, 3}, 2, false};
  CHECK_THROWS_AS(two_path_from_tight(not_tight), contract_error);
}
