#include "h2c/goodness.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace h2c {

std::string clause_label(Clause c) {
  switch (c) {
    case Clause::None: return "none";
    case Clause::I: return "(i)";
    case Clause::II: return "(ii)";
    case Clause::III: return "(iii)";
    case Clause::IV: return "(iv)";
    case Clause::V: return "(v)";
    case Clause::VI: return "(vi)";
    case Clause::VII: return "(vii)";
    case Clause::VIII: return "(viii)";
  }
  return "none";
}

std::string GoodnessReport::describe() const {
  std::string s = "m=" + std::to_string(m) + " d=" + std::to_string(d);
  s += even_good ? " even-good via " + clause_label(even_clause) : " not-even-good";
  s += odd_good ? " odd-good via " + clause_label(odd_clause) : " not-odd-good";
  if (!even_witness.empty() || !odd_witness.empty()) {
    s += " witness:";
    for (EdgeKey k : even_witness) s += " " + key_to_string(k, 4);
    for (EdgeKey k : odd_witness) s += " " + key_to_string(k, 4);
  }
  return s;
}

GoodnessContext build_goodness_context(const KGraph& h) {
  require(h.k() == 4, "goodness: requires a 4-graph");
  require(h.n() <= 64, "goodness: supports n <= 64");
  GoodnessContext ctx;
  ctx.n = h.n();
  ctx.keys = h.edge_keys();
  ctx.masks.reserve(ctx.keys.size());
  for (EdgeKey key : ctx.keys) {
    auto vs = unpack_edge(key, 4);
    std::uint64_t m = 0;
    for (int v : vs) m |= 1ull << v;
    ctx.masks.push_back(m);
  }
  return ctx;
}

std::uint64_t side_a_mask(const Bipartition& bip) {
  require(bip.n() <= 64, "goodness: supports n <= 64");
  std::uint64_t m = 0;
  for (int v = 0; v < bip.n(); ++v)
    if (bip.in_a(v)) m |= 1ull << v;
  return m;
}

namespace {

EdgeKey key_from_mask(std::uint64_t m) {
  int vs[4];
  int t = 0;
  while (m) {
    vs[t++] = __builtin_ctzll(m);
    m &= m - 1;
  }
  return pack_edge(vs, t);
}

std::array<int, 2> pair_from_mask(std::uint64_t m) {
  int a = __builtin_ctzll(m);
  m &= m - 1;
  int b = __builtin_ctzll(m);
  return {a, b};
}

// one edge alone forms a 2-path with a single edge
PairSeq single_edge_path(std::uint64_t m) {
  auto vs = unpack_edge(key_from_mask(m), 4);
  return PairSeq{{{vs[0], vs[1]}, {vs[2], vs[3]}}};
}

// two edges sharing exactly a pair form a 2-path with two edges
PairSeq shared_pair_path(std::uint64_t m1, std::uint64_t m2) {
  std::uint64_t mid = m1 & m2;
  auto p1 = pair_from_mask(m1 & ~mid);
  auto p2 = pair_from_mask(mid);
  auto p3 = pair_from_mask(m2 & ~mid);
  return PairSeq{{p1, p2, p3}};
}

void eval_even(const std::vector<std::uint64_t>& odd, std::uint64_t amask, int sa, int sb,
               GoodnessReport& rep) {
  if (sa % 2 == 0 || sa == sb) {
    rep.even_good = true;
    rep.even_clause = Clause::I;
    return;
  }
  size_t m = odd.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      std::uint64_t inter = odd[i] & odd[j];
      if (inter == 0 ||
          (__builtin_popcountll(inter) == 2 && __builtin_popcountll(inter & amask) == 1)) {
        rep.even_good = true;
        rep.even_clause = Clause::II;
        rep.even_witness = {key_from_mask(odd[i]), key_from_mask(odd[j])};
        return;
      }
    }
  }
  if (sa == sb + 2 || sb == sa + 2) {
    bool larger_a = sa > sb;
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) {
        std::uint64_t inter = odd[i] & odd[j];
        if (__builtin_popcountll(inter) != 2) continue;
        int in_a = __builtin_popcountll(inter & amask);
        if ((larger_a && in_a == 2) || (!larger_a && in_a == 0)) {
          rep.even_good = true;
          rep.even_clause = larger_a ? Clause::III : Clause::IV;
          rep.even_witness = {key_from_mask(odd[i]), key_from_mask(odd[j])};
          return;
        }
      }
    }
  }
}

void eval_odd(const GoodnessContext& ctx, const std::vector<std::uint64_t>& even,
              std::uint64_t amask, GoodnessReport& rep) {
  int m = rep.m, d = rep.d;
  if ((m == 0 && d == 0) || (m == 4 && d == 2)) {
    rep.odd_good = true;
    rep.odd_clause = Clause::V;
    return;
  }
  if ((m == 2 && d == 2) || (m == 6 && d == 0)) {
    if (!even.empty()) {
      rep.odd_good = true;
      rep.odd_clause = Clause::VI;
      rep.odd_witness = {key_from_mask(even[0])};
    }
    return;
  }
  if ((m == 4 && d == 0) || (m == 0 && d == 2)) {
    // total 2-pathlength >= 2: either two disjoint edges (two 1-edge paths)
    // or two edges sharing exactly a pair (one 2-edge path)
    size_t cnt = even.size();
    for (size_t i = 0; i < cnt; ++i) {
      for (size_t j = i + 1; j < cnt; ++j) {
        std::uint64_t inter = even[i] & even[j];
        int pc = __builtin_popcountll(inter);
        if (pc == 0) {
          rep.odd_good = true;
          rep.odd_clause = Clause::VII;
          rep.odd_witness_paths = {single_edge_path(even[i]), single_edge_path(even[j])};
          return;
        }
        if (pc == 2) {
          rep.odd_good = true;
          rep.odd_clause = Clause::VII;
          rep.odd_witness_paths = {shared_pair_path(even[i], even[j])};
          return;
        }
      }
    }
    return;
  }
  // (m,d) in {(6,2),(2,0)}
  for (std::uint64_t e : even) {
    if (__builtin_popcountll(e & amask) == 2) {
      rep.odd_good = true;
      rep.odd_clause = Clause::VIII;
      rep.odd_witness = {key_from_mask(e)};
      return;
    }
  }
  if (even.size() < 3) return;
  std::vector<EdgeKey> even_keys;
  even_keys.reserve(even.size());
  for (std::uint64_t e : even) even_keys.push_back(key_from_mask(e));
  KGraph h_even = KGraph::from_keys(ctx.n, 4, even_keys);
  auto fam = two_path_family_reaching(h_even, 3);
  if (fam) {
    rep.odd_good = true;
    rep.odd_clause = Clause::VIII;
    rep.odd_witness_paths = fam->paths;
  }
}

}  // namespace

GoodnessReport eval_goodness(const GoodnessContext& ctx, std::uint64_t amask, bool want_even,
                             bool want_odd) {
  GoodnessReport rep;
  int n = ctx.n;
  int sa = __builtin_popcountll(amask);
  int sb = n - sa;
  rep.m = n % 8;
  rep.d = (((sa - sb) % 4) + 4) % 4;
  if (n % 2 != 0) return rep;  // odd order: neither even-good nor odd-good

  std::vector<std::uint64_t> odd_masks, even_masks;
  odd_masks.reserve(ctx.masks.size());
  even_masks.reserve(ctx.masks.size());
  for (std::uint64_t em : ctx.masks) {
    if (__builtin_popcountll(em & amask) % 2 == 1)
      odd_masks.push_back(em);
    else
      even_masks.push_back(em);
  }
  if (want_even) eval_even(odd_masks, amask, sa, sb, rep);
  if (want_odd) eval_odd(ctx, even_masks, amask, rep);
  return rep;
}

GoodnessReport is_even_good(const KGraph& h, const Bipartition& bip) {
  require(h.n() == bip.n(), "goodness: bipartition size mismatch");
  GoodnessContext ctx = build_goodness_context(h);
  return eval_goodness(ctx, side_a_mask(bip), true, false);
}

GoodnessReport is_odd_good(const KGraph& h, const Bipartition& bip) {
  require(h.n() == bip.n(), "goodness: bipartition size mismatch");
  GoodnessContext ctx = build_goodness_context(h);
  return eval_goodness(ctx, side_a_mask(bip), false, true);
}

GoodnessReport goodness(const KGraph& h, const Bipartition& bip) {
  require(h.n() == bip.n(), "goodness: bipartition size mismatch");
  GoodnessContext ctx = build_goodness_context(h);
  return eval_goodness(ctx, side_a_mask(bip), true, true);
}

Bipartition bipartition_from_mask(int n, std::uint64_t mask) {
  require(n >= 1 && n <= 64, "bipartition_from_mask: n out of range");
  std::string line(static_cast<size_t>(n), 'A');
  for (int v = 1; v < n; ++v) {
    if ((mask >> (n - 1 - v)) & 1u) line[static_cast<size_t>(v)] = 'B';
  }
  return Bipartition::parse(line);
}

namespace {

std::uint64_t amask_from_sweep_mask(int n, std::uint64_t mask) {
  std::uint64_t amask = 1;  // vertex 0 in A
  for (int v = 1; v < n; ++v) {
    if (!((mask >> (n - 1 - v)) & 1u)) amask |= 1ull << v;
  }
  return amask;
}

std::optional<std::uint64_t> sweep_masks(const KGraph& h, bool parallel) {
  require(h.n() >= 1 && h.n() <= 24, "bipartition sweep: supports n <= 24");
  GoodnessContext ctx = build_goodness_context(h);
  const int n = h.n();
  const std::uint64_t total = 1ull << (n - 1);
  const std::uint64_t none = ~0ull;
  std::uint64_t best = none;

  if (parallel) {
#ifdef _OPENMP
    const long long t = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 1024) reduction(min : best)
    for (long long m = 0; m < t; ++m) {
      std::uint64_t mask = static_cast<std::uint64_t>(m);
      GoodnessReport rep = eval_goodness(ctx, amask_from_sweep_mask(n, mask), true, true);
      if (!rep.good() && mask < best) best = mask;
    }
    return best == none ? std::nullopt : std::optional<std::uint64_t>(best);
#endif
  }
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    GoodnessReport rep = eval_goodness(ctx, amask_from_sweep_mask(n, mask), true, true);
    if (!rep.good()) return mask;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::uint64_t> sweep_bipartition_masks_serial(const KGraph& h) {
  return sweep_masks(h, false);
}

std::optional<std::uint64_t> sweep_bipartition_masks_parallel(const KGraph& h) {
  return sweep_masks(h, true);
}

namespace {

// GF(2) system: one equation per edge, one variable per remaining vertex;
// a bipartition has no odd (resp. even) edge iff each edge's side-A count
// is even (resp. odd), a linear condition on the indicator vector
struct ParitySystem {
  int nvars;
  std::vector<std::vector<std::uint64_t>> rows;  // coefficient words
  std::vector<int> rhs;
  int words;

  explicit ParitySystem(int nv) : nvars(nv), words((nv + 63) / 64 + 1) {}

  void add_equation(const std::vector<int>& vars, int b) {
    std::vector<std::uint64_t> row(static_cast<size_t>(words), 0);
    for (int v : vars) row[static_cast<size_t>(v / 64)] ^= 1ull << (v % 64);
    rows.push_back(std::move(row));
    rhs.push_back(b);
  }

  // returns false if inconsistent; otherwise fills one solution and the
  // free-variable list so all solutions are the particular one plus spans
  bool solve(std::vector<int>& pivot_of_var, std::vector<int>& free_vars) {
    size_t r = 0;
    pivot_of_var.assign(static_cast<size_t>(nvars), -1);
    for (int c = 0; c < nvars && r < rows.size(); ++c) {
      size_t sel = r;
      while (sel < rows.size() && !((rows[sel][static_cast<size_t>(c / 64)] >> (c % 64)) & 1u))
        ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[r]);
      std::swap(rhs[sel], rhs[r]);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i != r && ((rows[i][static_cast<size_t>(c / 64)] >> (c % 64)) & 1u)) {
          for (int w = 0; w < words; ++w) rows[i][static_cast<size_t>(w)] ^= rows[r][static_cast<size_t>(w)];
          rhs[i] ^= rhs[r];
        }
      }
      pivot_of_var[static_cast<size_t>(c)] = static_cast<int>(r);
      ++r;
    }
    for (size_t i = r; i < rows.size(); ++i) {
      bool zero = true;
      for (int w = 0; w < words; ++w) zero = zero && rows[i][static_cast<size_t>(w)] == 0;
      if (zero && rhs[i] != 0) return false;
      if (!zero) return false;  // unreached after full elimination
    }
    free_vars.clear();
    for (int c = 0; c < nvars; ++c)
      if (pivot_of_var[static_cast<size_t>(c)] == -1) free_vars.push_back(c);
    return true;
  }

  // given an assignment of the free variables, derive the pivot variables
  void complete(const std::vector<int>& pivot_of_var, std::vector<std::uint8_t>& assign) {
    for (int c = 0; c < nvars; ++c) {
      int pr = pivot_of_var[static_cast<size_t>(c)];
      if (pr == -1) continue;
      int val = rhs[static_cast<size_t>(pr)];
      const auto& row = rows[static_cast<size_t>(pr)];
      for (int v = 0; v < nvars; ++v) {
        if (v == c) continue;
        if (((row[static_cast<size_t>(v / 64)] >> (v % 64)) & 1u) && assign[static_cast<size_t>(v)])
          val ^= 1;
      }
      assign[static_cast<size_t>(c)] = static_cast<std::uint8_t>(val);
    }
  }
};

std::string canonical_line(std::string line) {
  if (!line.empty() && line[0] == 'B') {
    for (char& ch : line) ch = (ch == 'A') ? 'B' : 'A';
  }
  return line;
}

}  // namespace

Fallible<std::vector<Bipartition>> enumerate_candidate_bipartitions(const KGraph& h,
                                                                    const CandidateOptions& opts) {
  require(h.k() == 4, "enumerate_candidate_bipartitions: requires a 4-graph");
  using Out = Fallible<std::vector<Bipartition>>;
  int n = h.n();
  if (n <= opts.exhaustive_threshold) {
    require(n <= 24, "enumerate_candidate_bipartitions: exhaustive threshold tops out at 24");
    std::vector<Bipartition> out;
    out.reserve(static_cast<size_t>(1ull << (n - 1)));
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask)
      out.push_back(bipartition_from_mask(n, mask));
    return Out::success(std::move(out));
  }
  if (!opts.allow_hitting_set)
    return Out::fail({"candidate-enumeration",
                      "n exceeds the exhaustive threshold and the hitting-set engine is off"});

  // hitting-set engine: any bipartition failing a goodness test leaves some
  // 8-set X meeting every odd (or every even) edge; removing X yields a
  // bipartition of the rest with no odd (or no even) edge, a linear condition
  std::unordered_set<std::string> seen;
  std::vector<Bipartition> out;
  const int xsize = std::min(8, n);
  std::vector<int> xs(static_cast<size_t>(xsize));
  for (int i = 0; i < xsize; ++i) xs[static_cast<size_t>(i)] = i;
  std::vector<int> new_id(static_cast<size_t>(n));
  while (true) {
    std::uint64_t xmask = 0;
    for (int v : xs) xmask |= 1ull << v;
    int nv = n - xsize;
    {
      int t = 0;
      for (int v = 0; v < n; ++v) new_id[static_cast<size_t>(v)] = ((xmask >> v) & 1u) ? -1 : t++;
    }
    for (int target : {0, 1}) {
      ParitySystem sys(nv);
      for (EdgeKey key : h.edge_keys()) {
        auto vs = unpack_edge(key, 4);
        bool hit = false;
        std::vector<int> eq;
        for (int v : vs) {
          if ((xmask >> v) & 1u) {
            hit = true;
            break;
          }
          eq.push_back(new_id[static_cast<size_t>(v)]);
        }
        if (!hit) sys.add_equation(eq, target);
      }
      std::vector<int> pivot_of_var, free_vars;
      if (!sys.solve(pivot_of_var, free_vars)) continue;
      if (static_cast<long long>(free_vars.size()) + xsize > 40)
        return Out::fail({"candidate-enumeration", "solution space too large"});
      long long combos = 1ll << free_vars.size();
      std::vector<std::uint8_t> assign(static_cast<size_t>(nv), 0);
      for (long long fm = 0; fm < combos; ++fm) {
        for (size_t i = 0; i < free_vars.size(); ++i)
          assign[static_cast<size_t>(free_vars[i])] =
              static_cast<std::uint8_t>((fm >> i) & 1);
        sys.complete(pivot_of_var, assign);
        for (long long xm = 0; xm < (1ll << xsize); ++xm) {
          std::string line(static_cast<size_t>(n), 'A');
          for (int v = 0; v < n; ++v) {
            int side;
            if ((xmask >> v) & 1u) {
              int pos = 0;
              for (int u : xs) {
                if (u == v) break;
                ++pos;
              }
              side = static_cast<int>((xm >> pos) & 1);
            } else {
              side = assign[static_cast<size_t>(new_id[static_cast<size_t>(v)])];
            }
            line[static_cast<size_t>(v)] = side ? 'B' : 'A';
          }
          line = canonical_line(std::move(line));
          if (seen.insert(line).second) {
            out.push_back(Bipartition::parse(line));
            if (static_cast<long long>(out.size()) > opts.max_candidates)
              return Out::fail({"candidate-enumeration", "candidate cap exceeded"});
          }
        }
      }
    }
    int pos = xsize - 1;
    while (pos >= 0 && xs[static_cast<size_t>(pos)] == n - (xsize - pos)) --pos;
    if (pos < 0) break;
    ++xs[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < xsize; ++j)
      xs[static_cast<size_t>(j)] = xs[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const Bipartition& a, const Bipartition& b) { return a.to_line() < b.to_line(); });
  return Out::success(std::move(out));
}

Fallible<std::optional<BadBipartition>> check_all_bipartitions(const KGraph& h,
                                                               const SweepOptions& opts) {
  using Out = Fallible<std::optional<BadBipartition>>;
  require(h.k() == 4, "check_all_bipartitions: requires a 4-graph");
  int n = h.n();
  if (n <= opts.exhaustive_threshold && n <= 24) {
    auto mask =
        opts.parallel ? sweep_bipartition_masks_parallel(h) : sweep_bipartition_masks_serial(h);
    if (!mask) return Out::success(std::nullopt);
    Bipartition bip = bipartition_from_mask(n, *mask);
    return Out::success(std::optional<BadBipartition>{{bip, goodness(h, bip)}});
  }
  CandidateOptions copts;
  copts.exhaustive_threshold = opts.exhaustive_threshold;
  copts.allow_hitting_set = opts.allow_hitting_set;
  copts.max_candidates = opts.max_candidates;
  auto cands = enumerate_candidate_bipartitions(h, copts);
  if (!cands.ok()) return Out::fail(cands.failure.value());
  GoodnessContext ctx = build_goodness_context(h);
  const Bipartition* worst = nullptr;
  for (const auto& bip : *cands) {
    GoodnessReport rep = eval_goodness(ctx, side_a_mask(bip), true, true);
    if (!rep.good()) {
      if (!worst || bip.to_line() < worst->to_line()) worst = &bip;
    }
  }
  if (!worst) return Out::success(std::nullopt);
  return Out::success(std::optional<BadBipartition>{{*worst, goodness(h, *worst)}});
}

Fallible<bool> forward_implication_holds(const KGraph& h, long long budget) {
  using Out = Fallible<bool>;
  OracleResult orc = find_hamilton_cycle(h, 2, budget);
  if (orc.budget_exceeded) return Out::fail({"oracle", orc.diagnostic});
  if (!orc.found()) return Out::success(true);
  auto sweep = check_all_bipartitions(h, {});
  if (!sweep.ok()) return Out::fail(sweep.failure.value());
  return Out::success(!sweep->has_value());
}

Decision decide_hamilton_2cycle(const KGraph& h, const DecideOptions& opts) {
  require(h.k() == 4, "decide_hamilton_2cycle: requires a 4-graph");
  Decision dec;
  int n = h.n();
  if (n % 2 != 0) {
    Bipartition bip = Bipartition::parse(std::string(static_cast<size_t>(n), 'A'));
    dec.verdict = Verdict::No;
    dec.witness = bip;
    dec.witness_report = goodness(h, bip);
    dec.certificate = NoCertificate::BadBipartitionWitness;
    dec.reason = "odd order: no bipartition is even-good or odd-good";
    return dec;
  }
  SweepOptions sopts;
  sopts.exhaustive_threshold = opts.exhaustive_threshold;
  sopts.allow_hitting_set = opts.allow_hitting_set;
  sopts.parallel = opts.parallel;
  auto sweep = check_all_bipartitions(h, sopts);
  if (!sweep.ok()) {
    dec.verdict = Verdict::Inconclusive;
    dec.reason = "bipartition check infeasible: " + sweep.failure.value().detail;
    return dec;
  }
  if (sweep->has_value()) {
    dec.verdict = Verdict::No;
    dec.witness = (*sweep)->bip;
    dec.witness_report = (*sweep)->report;
    dec.certificate = NoCertificate::BadBipartitionWitness;
    dec.reason = "bipartition fails: " + (*sweep)->report.describe();
    return dec;
  }
  OracleResult orc = find_hamilton_cycle(h, 2, opts.oracle_budget);
  if (orc.found()) {
    dec.verdict = Verdict::Yes;
    dec.cycle = orc.witness;
    dec.reason = "cycle found";
    return dec;
  }
  long long threshold =
      static_cast<long long>((0.5 - opts.epsilon) * static_cast<double>(n));
  bool hypothesis = h.min_codegree() >= threshold;
  if (orc.exhausted_none()) {
    dec.verdict = Verdict::No;
    dec.certificate = NoCertificate::OracleExhaustive;
    dec.reason = hypothesis
                     ? "exhaustive search found no cycle despite all bipartitions good"
                     : "exhaustive search found no cycle; codegree hypothesis fails, so "
                       "goodness of all bipartitions carries no guarantee";
    return dec;
  }
  dec.verdict = Verdict::Inconclusive;
  dec.reason = "all bipartitions good but oracle budget exceeded";
  if (!hypothesis) dec.reason += "; codegree below n/2 - eps*n, theorem hypothesis fails";
  return dec;
}

}  // namespace h2c
