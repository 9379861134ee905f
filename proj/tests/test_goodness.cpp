#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "h2c/constructions.hpp"
#include "h2c/goodness.hpp"
#include "h2c/kgraph.hpp"
#include "h2c/oracle.hpp"
#include "h2c/seq.hpp"

using namespace h2c;

namespace {

KGraph graph_on(int n, const std::vector<std::vector<int>>& edges) { return KGraph(n, 4, edges); }

Bipartition prefix_bip(int n, int size_a) {
  std::string line(static_cast<size_t>(n), 'B');
  for (int i = 0; i < size_a; ++i) line[static_cast<size_t>(i)] = 'A';
  return Bipartition::parse(line);
}

Bipartition flip(const Bipartition& bip) {
  std::string line = bip.to_line();
  for (char& c : line) c = (c == 'A') ? 'B' : 'A';
  return Bipartition::parse(line);
}

std::vector<int> key_intersection(EdgeKey a, EdgeKey b) {
  auto va = unpack_edge(a, 4);
  auto vb = unpack_edge(b, 4);
  std::vector<int> out;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
  return out;
}

int count_in_a(const Bipartition& bip, const std::vector<int>& vs) {
  int c = 0;
  for (int v : vs) c += bip.in_a(v) ? 1 : 0;
  return c;
}

// total edges over a claimed family, checking each path is a 2-path of the
// host and the paths are pairwise vertex-disjoint
long long checked_family_total(const KGraph& host, const std::vector<PairSeq>& fam) {
  std::set<int> used;
  long long total = 0;
  for (const auto& ps : fam) {
    REQUIRE(ps.size() >= 2);
    VertexSeq seq = ps.to_vertex_seq(false);
    CHECK(is_ell_path(host, seq));
    for (int v : seq.vertices) CHECK(used.insert(v).second);
    total += ps.size() - 1;
  }
  return total;
}

struct NaiveGoodness {
  bool even_good = false;
  bool odd_good = false;
};

// direct transcription of the eight clauses with independent scans
NaiveGoodness naive_goodness(const KGraph& h, const Bipartition& bip, bool slow_paths) {
  NaiveGoodness out;
  int n = h.n();
  if (n % 2 != 0) return out;
  auto split = parity_split(h, bip);
  int sa = bip.size_a();
  int sb = bip.size_b();

  if (sa % 2 == 0 || sa == sb) out.even_good = true;
  const auto& odd_keys = split.odd.edge_keys();
  for (size_t i = 0; i < odd_keys.size() && !out.even_good; ++i) {
    for (size_t j = i + 1; j < odd_keys.size() && !out.even_good; ++j) {
      auto inter = key_intersection(odd_keys[i], odd_keys[j]);
      if (inter.empty()) {
        out.even_good = true;
      } else if (inter.size() == 2) {
        int ca = count_in_a(bip, inter);
        if (ca == 1) out.even_good = true;
        if (sa == sb + 2 && ca == 2) out.even_good = true;
        if (sb == sa + 2 && ca == 0) out.even_good = true;
      }
    }
  }

  int m = n % 8;
  int d = (((sa - sb) % 4) + 4) % 4;
  if ((m == 0 && d == 0) || (m == 4 && d == 2)) {
    out.odd_good = true;
  } else if ((m == 2 && d == 2) || (m == 6 && d == 0)) {
    out.odd_good = split.even.edge_count() > 0;
  } else {
    bool has_22 = false;
    for (EdgeKey key : split.even.edge_keys())
      if (bip.count_a(key, 4) == 2) has_22 = true;
    long long t2 =
        slow_paths ? total_2_pathlength_slow(split.even) : total_2_pathlength(split.even);
    if ((m == 4 && d == 0) || (m == 0 && d == 2))
      out.odd_good = t2 >= 2;
    else
      out.odd_good = has_22 || t2 >= 3;
  }
  return out;
}

// every clause a report cites must hold verbatim for its own witnesses
void validate_report(const KGraph& h, const Bipartition& bip, const GoodnessReport& rep) {
  auto split = parity_split(h, bip);
  int sa = bip.size_a();
  int sb = bip.size_b();
  CHECK(rep.m == h.n() % 8);
  CHECK(rep.d == (((sa - sb) % 4) + 4) % 4);

  if (rep.even_good) {
    switch (rep.even_clause) {
      case Clause::I:
        CHECK((sa % 2 == 0 || sa == sb));
        break;
      case Clause::II: {
        REQUIRE(rep.even_witness.size() == 2);
        for (EdgeKey key : rep.even_witness) CHECK(split.odd.has_edge_key(key));
        auto inter = key_intersection(rep.even_witness[0], rep.even_witness[1]);
        bool fits = inter.empty() || (inter.size() == 2 && count_in_a(bip, inter) == 1);
        CHECK(fits);
        break;
      }
      case Clause::III: {
        CHECK(sa == sb + 2);
        REQUIRE(rep.even_witness.size() == 2);
        for (EdgeKey key : rep.even_witness) CHECK(split.odd.has_edge_key(key));
        auto inter = key_intersection(rep.even_witness[0], rep.even_witness[1]);
        REQUIRE(inter.size() == 2);
        CHECK(count_in_a(bip, inter) == 2);
        break;
      }
      case Clause::IV: {
        CHECK(sb == sa + 2);
        REQUIRE(rep.even_witness.size() == 2);
        for (EdgeKey key : rep.even_witness) CHECK(split.odd.has_edge_key(key));
        auto inter = key_intersection(rep.even_witness[0], rep.even_witness[1]);
        REQUIRE(inter.size() == 2);
        CHECK(count_in_a(bip, inter) == 0);
        break;
      }
      default:
        FAIL("even-good report must cite one of the first four clauses");
    }
  } else {
    CHECK(rep.even_clause == Clause::None);
  }

  if (rep.odd_good) {
    int m = rep.m;
    int d = rep.d;
    switch (rep.odd_clause) {
      case Clause::V:
        CHECK(((m == 0 && d == 0) || (m == 4 && d == 2)));
        break;
      case Clause::VI: {
        CHECK(((m == 2 && d == 2) || (m == 6 && d == 0)));
        REQUIRE(rep.odd_witness.size() == 1);
        CHECK(split.even.has_edge_key(rep.odd_witness[0]));
        break;
      }
      case Clause::VII: {
        CHECK(((m == 4 && d == 0) || (m == 0 && d == 2)));
        CHECK(checked_family_total(split.even, rep.odd_witness_paths) >= 2);
        break;
      }
      case Clause::VIII: {
        CHECK(((m == 6 && d == 2) || (m == 2 && d == 0)));
        if (!rep.odd_witness.empty()) {
          REQUIRE(rep.odd_witness.size() == 1);
          CHECK(split.even.has_edge_key(rep.odd_witness[0]));
          CHECK(bip.count_a(rep.odd_witness[0], 4) == 2);
        } else {
          CHECK(checked_family_total(split.even, rep.odd_witness_paths) >= 3);
        }
        break;
      }
      default:
        FAIL("odd-good report must cite one of the last four clauses");
    }
  } else {
    CHECK(rep.odd_clause == Clause::None);
  }
}

}  // namespace

TEST_CASE("even-good clause selection on crafted bipartitions") {
  KGraph empty8 = graph_on(8, {});
  GoodnessReport rep = is_even_good(empty8, prefix_bip(8, 4));
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::I);

  KGraph empty10 = graph_on(10, {});
  rep = is_even_good(empty10, prefix_bip(10, 5));
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::I);

  auto [hstar8, defining] = build_h_star(8);
  CHECK(defining.to_line() == "AAABBBBB");
  rep = goodness(hstar8, defining);
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::II);
  validate_report(hstar8, defining, rep);
  CHECK(!rep.odd_good);
  CHECK(rep.m == 0);
  CHECK(rep.d == 2);

  KGraph disj = graph_on(12, {{0, 9, 10, 11}, {1, 6, 7, 8}});
  rep = is_even_good(disj, prefix_bip(12, 3));
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::II);
  validate_report(disj, prefix_bip(12, 3), rep);

  KGraph pair_in_a = graph_on(12, {{0, 1, 2, 8}, {0, 1, 3, 9}});
  rep = is_even_good(pair_in_a, prefix_bip(12, 7));
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::III);
  validate_report(pair_in_a, prefix_bip(12, 7), rep);

  KGraph pair_in_b = graph_on(12, {{0, 5, 6, 7}, {1, 5, 6, 8}});
  rep = is_even_good(pair_in_b, prefix_bip(12, 5));
  CHECK(rep.even_good);
  CHECK(rep.even_clause == Clause::IV);
  validate_report(pair_in_b, prefix_bip(12, 5), rep);

  KGraph lone = graph_on(12, {{0, 1, 2, 7}});
  rep = is_even_good(lone, prefix_bip(12, 7));
  CHECK(!rep.even_good);
  CHECK(rep.even_clause == Clause::None);

  KGraph triple_overlap = graph_on(12, {{0, 1, 2, 7}, {0, 1, 2, 8}});
  rep = is_even_good(triple_overlap, prefix_bip(12, 7));
  CHECK(!rep.even_good);
}

TEST_CASE("residue routing covers every order and imbalance class") {
  KGraph empty8 = graph_on(8, {});
  GoodnessReport rep = is_odd_good(empty8, prefix_bip(8, 4));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::V);

  KGraph empty12 = graph_on(12, {});
  rep = is_odd_good(empty12, prefix_bip(12, 5));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::V);

  KGraph bare10 = graph_on(10, {});
  rep = is_odd_good(bare10, prefix_bip(10, 6));
  CHECK(!rep.odd_good);
  KGraph one_even10 = graph_on(10, {{0, 1, 6, 7}});
  rep = is_odd_good(one_even10, prefix_bip(10, 6));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VI);
  validate_report(one_even10, prefix_bip(10, 6), rep);

  KGraph bare14 = graph_on(14, {});
  rep = is_odd_good(bare14, prefix_bip(14, 7));
  CHECK(!rep.odd_good);
  KGraph one_even14 = graph_on(14, {{0, 1, 7, 8}});
  rep = is_odd_good(one_even14, prefix_bip(14, 7));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VI);

  KGraph single12 = graph_on(12, {{0, 1, 6, 7}});
  rep = is_odd_good(single12, prefix_bip(12, 6));
  CHECK(!rep.odd_good);
  KGraph two_disjoint12 = graph_on(12, {{0, 1, 6, 7}, {2, 3, 8, 9}});
  rep = is_odd_good(two_disjoint12, prefix_bip(12, 6));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VII);
  validate_report(two_disjoint12, prefix_bip(12, 6), rep);
  KGraph shared_pair12 = graph_on(12, {{0, 1, 6, 7}, {2, 3, 6, 7}});
  rep = is_odd_good(shared_pair12, prefix_bip(12, 6));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VII);
  validate_report(shared_pair12, prefix_bip(12, 6), rep);

  KGraph tail8 = graph_on(8, {{3, 4, 5, 6}});
  rep = is_odd_good(tail8, prefix_bip(8, 3));
  CHECK(!rep.odd_good);
  KGraph path8 = graph_on(8, {{0, 1, 3, 4}, {3, 4, 5, 6}});
  rep = is_odd_good(path8, prefix_bip(8, 3));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VII);
  validate_report(path8, prefix_bip(8, 3), rep);

  KGraph balanced10 = graph_on(10, {{0, 1, 5, 6}});
  rep = is_odd_good(balanced10, prefix_bip(10, 5));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VIII);
  CHECK(rep.odd_witness.size() == 1);
  validate_report(balanced10, prefix_bip(10, 5), rep);
  KGraph bside10 = graph_on(10, {{5, 6, 7, 8}});
  rep = is_odd_good(bside10, prefix_bip(10, 5));
  CHECK(!rep.odd_good);

  KGraph short_path14 = graph_on(14, {{0, 1, 2, 3}, {2, 3, 4, 5}});
  rep = is_odd_good(short_path14, prefix_bip(14, 8));
  CHECK(!rep.odd_good);
  KGraph long_path14 = graph_on(14, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}});
  rep = is_odd_good(long_path14, prefix_bip(14, 8));
  CHECK(rep.odd_good);
  CHECK(rep.odd_clause == Clause::VIII);
  CHECK(rep.odd_witness.empty());
  validate_report(long_path14, prefix_bip(14, 8), rep);
}

TEST_CASE("clause transcription agrees over every bipartition of random graphs") {
  struct Setup {
    int n;
    double p;
    std::uint64_t seed;
    bool slow;
  };
  std::vector<Setup> setups = {{8, 0.15, 1, true},  {8, 0.35, 2, true}, {8, 0.6, 3, false},
                               {8, 0.85, 4, false}, {10, 0.2, 5, false}, {10, 0.5, 6, false},
                               {10, 0.8, 7, false}};
  for (const auto& s : setups) {
    KGraph h = random_kgraph(s.n, 4, s.p, s.seed);
    GoodnessContext ctx = build_goodness_context(h);
    for (std::uint64_t mask = 0; mask < (1ull << (s.n - 1)); ++mask) {
      Bipartition bip = bipartition_from_mask(s.n, mask);
      GoodnessReport rep = eval_goodness(ctx, side_a_mask(bip), true, true);
      NaiveGoodness naive = naive_goodness(h, bip, s.slow);
      CHECK(rep.even_good == naive.even_good);
      CHECK(rep.odd_good == naive.odd_good);
      validate_report(h, bip, rep);
    }
  }
}

TEST_CASE("swapping side labels never changes the verdict") {
  for (int n : {8, 10}) {
    KGraph h = random_kgraph(n, 4, 0.4, static_cast<std::uint64_t>(90 + n));
    SplitMix64 rng{static_cast<std::uint64_t>(1000 + n)};
    for (int trial = 0; trial < 40; ++trial) {
      std::string line(static_cast<size_t>(n), 'A');
      for (char& c : line)
        if (rng.bernoulli(0.5)) c = 'B';
      Bipartition bip = Bipartition::parse(line);
      GoodnessReport a = goodness(h, bip);
      GoodnessReport b = goodness(h, flip(bip));
      CHECK(a.even_good == b.even_good);
      CHECK(a.odd_good == b.odd_good);
      CHECK(a.m == b.m);
      CHECK(a.d == b.d);
    }
  }
}

TEST_CASE("odd order admits no good bipartition") {
  KGraph k9 = complete_kgraph(9, 4);
  GoodnessReport rep = goodness(k9, prefix_bip(9, 9));
  CHECK(!rep.even_good);
  CHECK(!rep.odd_good);
  rep = goodness(k9, prefix_bip(9, 4));
  CHECK(!rep.even_good);
  CHECK(!rep.odd_good);
  CHECK(rep.even_clause == Clause::None);
  CHECK(rep.odd_clause == Clause::None);
}

TEST_CASE("mask sweep order matches label-string order") {
  std::vector<std::string> lines;
  for (std::uint64_t mask = 0; mask < (1ull << 7); ++mask)
    lines.push_back(bipartition_from_mask(8, mask).to_line());
  for (const auto& line : lines) CHECK(line.front() == 'A');
  for (size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1] < lines[i]);
  std::set<std::string> uniq(lines.begin(), lines.end());
  CHECK(uniq.size() == lines.size());
}

TEST_CASE("serial and parallel sweeps agree on the least failing mask") {
  auto [hstar8, defining] = build_h_star(8);
  auto [mod3, parts] = build_mod3_barrier(12);
  std::vector<KGraph> graphs = {hstar8,
                                mod3,
                                complete_kgraph(8, 4),
                                graph_on(8, {}),
                                random_kgraph(10, 4, 0.3, 11),
                                random_kgraph(12, 4, 0.25, 3)};
  for (const auto& h : graphs) {
    auto serial = sweep_bipartition_masks_serial(h);
    auto parallel = sweep_bipartition_masks_parallel(h);
    CHECK(serial == parallel);
    if (serial) {
      Bipartition bip = bipartition_from_mask(h.n(), *serial);
      CHECK(!goodness(h, bip).good());
      GoodnessContext ctx = build_goodness_context(h);
      for (std::uint64_t mask = 0; mask < *serial; ++mask) {
        Bipartition earlier = bipartition_from_mask(h.n(), mask);
        CHECK(eval_goodness(ctx, side_a_mask(earlier), true, true).good());
      }
    }
  }
  CHECK(sweep_bipartition_masks_serial(hstar8).has_value());
  CHECK(!sweep_bipartition_masks_serial(mod3).has_value());
  CHECK(!sweep_bipartition_masks_serial(complete_kgraph(8, 4)).has_value());
}

TEST_CASE("candidate enumeration lists every bipartition exhaustively") {
  auto [hstar8, defining] = build_h_star(8);
  auto cands = enumerate_candidate_bipartitions(hstar8);
  REQUIRE(cands.ok());
  CHECK(cands->size() == 128);
  bool has_defining = false;
  for (const auto& bip : *cands)
    if (bip == defining) has_defining = true;
  CHECK(has_defining);

  KGraph k12 = complete_kgraph(12, 4);
  auto all12 = enumerate_candidate_bipartitions(k12);
  REQUIRE(all12.ok());
  CHECK(all12->size() == 2048);
  GoodnessContext ctx = build_goodness_context(k12);
  for (const auto& bip : *all12) CHECK(eval_goodness(ctx, side_a_mask(bip), true, true).good());
}

TEST_CASE("hitting-set enumeration contains every failing bipartition") {
  CandidateOptions opts;
  opts.exhaustive_threshold = 0;

  auto [hstar8, defining] = build_h_star(8);
  auto cands = enumerate_candidate_bipartitions(hstar8, opts);
  REQUIRE(cands.ok());
  std::set<std::string> lines;
  for (const auto& bip : *cands) {
    CHECK(bip.to_line().front() == 'A');
    lines.insert(bip.to_line());
  }
  CHECK(lines.size() == cands->size());
  CHECK(lines.count(defining.to_line()) == 1);

  KGraph empty8 = graph_on(8, {});
  auto all_empty = enumerate_candidate_bipartitions(empty8, opts);
  REQUIRE(all_empty.ok());
  CHECK(all_empty->size() == 128);

  struct Setup {
    int n;
    double p;
    std::uint64_t seed;
  };
  for (const Setup& s : {Setup{10, 0.15, 21}, Setup{10, 0.45, 22}, Setup{12, 0.12, 23}}) {
    KGraph h = random_kgraph(s.n, 4, s.p, s.seed);
    auto hs = enumerate_candidate_bipartitions(h, opts);
    REQUIRE(hs.ok());
    std::set<std::string> cand_lines;
    for (const auto& bip : *hs) cand_lines.insert(bip.to_line());
    GoodnessContext ctx = build_goodness_context(h);
    for (std::uint64_t mask = 0; mask < (1ull << (s.n - 1)); ++mask) {
      Bipartition bip = bipartition_from_mask(s.n, mask);
      if (!eval_goodness(ctx, side_a_mask(bip), true, true).good())
        CHECK(cand_lines.count(bip.to_line()) == 1);
    }
  }

  CandidateOptions off;
  off.exhaustive_threshold = 0;
  off.allow_hitting_set = false;
  auto refused = enumerate_candidate_bipartitions(empty8, off);
  CHECK(!refused.ok());
  CHECK(refused.failure.value().stage == "candidate-enumeration");
}

TEST_CASE("full bipartition check on landmark graphs") {
  auto none = check_all_bipartitions(complete_kgraph(8, 4));
  REQUIRE(none.ok());
  CHECK(!none->has_value());

  auto [hstar8, defining] = build_h_star(8);
  auto bad = check_all_bipartitions(hstar8);
  REQUIRE(bad.ok());
  REQUIRE(bad->has_value());
  CHECK(!(*bad)->report.good());
  CHECK(!goodness(hstar8, (*bad)->bip).good());

  SweepOptions via_candidates;
  via_candidates.exhaustive_threshold = 0;
  auto bad2 = check_all_bipartitions(hstar8, via_candidates);
  REQUIRE(bad2.ok());
  REQUIRE(bad2->has_value());
  CHECK((*bad2)->bip.to_line() == (*bad)->bip.to_line());

  auto [mod3, parts] = build_mod3_barrier(12);
  auto clean = check_all_bipartitions(mod3);
  REQUIRE(clean.ok());
  CHECK(!clean->has_value());

  auto clean12 = check_all_bipartitions(complete_kgraph(12, 4));
  REQUIRE(clean12.ok());
  CHECK(!clean12->has_value());
}

TEST_CASE("a found cycle forces every bipartition good on random instances") {
  for (int i = 0; i < 20; ++i) {
    double p = 0.1 + 0.04 * i;
    KGraph h = random_kgraph(8, 4, p, static_cast<std::uint64_t>(300 + i));
    auto res = forward_implication_holds(h);
    REQUIRE(res.ok());
    CHECK(*res);
  }
  for (int i = 0; i < 12; ++i) {
    double p = 0.1 + 0.07 * i;
    KGraph h = random_kgraph(10, 4, p, static_cast<std::uint64_t>(400 + i));
    auto res = forward_implication_holds(h);
    REQUIRE(res.ok());
    CHECK(*res);
  }
  for (double p : {0.15, 0.8}) {
    KGraph h = random_kgraph(12, 4, p, 777);
    auto res = forward_implication_holds(h);
    REQUIRE(res.ok());
    CHECK(*res);
  }
  auto [e12, balanced] = build_parity_complete(12, EdgeParity::Even);
  auto res = forward_implication_holds(e12);
  REQUIRE(res.ok());
  CHECK(*res);
}

TEST_CASE("verdicts on landmark graphs") {
  Decision yes = decide_hamilton_2cycle(complete_kgraph(12, 4));
  CHECK(yes.verdict == Verdict::Yes);
  REQUIRE(yes.cycle.has_value());
  CHECK(yes.cycle->closed);
  CHECK(yes.cycle->ell == 2);
  CHECK(yes.cycle->size() == 12);
  CHECK(is_ell_cycle(complete_kgraph(12, 4), *yes.cycle));
  std::set<int> covered(yes.cycle->vertices.begin(), yes.cycle->vertices.end());
  CHECK(covered.size() == 12);

  CHECK(decide_hamilton_2cycle(complete_kgraph(8, 4)).verdict == Verdict::Yes);

  auto [hstar8, defining] = build_h_star(8);
  Decision no = decide_hamilton_2cycle(hstar8);
  CHECK(no.verdict == Verdict::No);
  REQUIRE(no.certificate.has_value());
  CHECK(*no.certificate == NoCertificate::BadBipartitionWitness);
  REQUIRE(no.witness.has_value());
  CHECK(!goodness(hstar8, *no.witness).good());

  Decision odd = decide_hamilton_2cycle(complete_kgraph(9, 4));
  CHECK(odd.verdict == Verdict::No);
  REQUIRE(odd.witness.has_value());
  CHECK(odd.witness->to_line() == "AAAAAAAAA");
  CHECK(odd.reason.find("odd") != std::string::npos);

  auto [mod3, parts] = build_mod3_barrier(12);
  Decision barrier = decide_hamilton_2cycle(mod3);
  CHECK(barrier.verdict != Verdict::Yes);
  if (barrier.verdict == Verdict::No) {
    REQUIRE(barrier.certificate.has_value());
    CHECK(*barrier.certificate == NoCertificate::OracleExhaustive);
  }
}

TEST_CASE("verdicts stay consistent with their evidence on random instances") {
  for (int i = 0; i < 10; ++i) {
    double p = 0.2 + 0.06 * i;
    KGraph h = random_kgraph(10, 4, p, static_cast<std::uint64_t>(500 + i));
    Decision dec = decide_hamilton_2cycle(h);
    if (dec.verdict == Verdict::Yes) {
      REQUIRE(dec.cycle.has_value());
      CHECK(is_ell_cycle(h, *dec.cycle));
      std::set<int> covered(dec.cycle->vertices.begin(), dec.cycle->vertices.end());
      CHECK(covered.size() == static_cast<size_t>(h.n()));
    } else if (dec.verdict == Verdict::No &&
               *dec.certificate == NoCertificate::BadBipartitionWitness) {
      REQUIRE(dec.witness.has_value());
      CHECK(!goodness(h, *dec.witness).good());
    } else if (dec.verdict == Verdict::No) {
      CHECK(!check_all_bipartitions(h)->has_value());
      CHECK(find_hamilton_cycle(h, 2).exhausted_none());
    }
  }
}

TEST_CASE("contract violations are rejected") {
  KGraph k5_3(5, 3, {{0, 1, 2}});
  CHECK_THROWS_AS((void)goodness(k5_3, prefix_bip(5, 2)), contract_error);
  KGraph empty8 = graph_on(8, {});
  CHECK_THROWS_AS((void)goodness(empty8, prefix_bip(10, 5)), contract_error);
  KGraph empty26 = graph_on(26, {});
  CHECK_THROWS_AS((void)sweep_bipartition_masks_serial(empty26), contract_error);
  CandidateOptions wide;
  wide.exhaustive_threshold = 30;
  CHECK_THROWS_AS((void)enumerate_candidate_bipartitions(empty26, wide), contract_error);
}
