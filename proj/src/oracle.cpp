#include "h2c/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace h2c {

namespace {

enum class Dfs { Found, Exhausted, Budget };

// backtracking over block sequences, for (k - ell) | k:
// windows are unions of whole blocks, so block contents stay sorted
struct BlockSearch {
  const KGraph& h;
  int n, k, step = 0, win = 0;  // win = k / step blocks per window
  bool closed;
  long long budget;
  long long nodes = 0;
  int nb = 0;           // total blocks
  int free_blocks = 0;  // blocks chosen by search (excludes forced suffix)
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> suffix;  // forced trailing blocks (paths)
  std::uint64_t used = 0;
  std::uint64_t reserved = 0;
  std::optional<VertexSeq> witness;

  bool pair_prune = false;
  int pw = 0;
  std::vector<std::uint64_t> avail;        // current available-pair bits
  std::vector<std::uint64_t> avail_stack;  // saved frames, one per placed block

  BlockSearch(const KGraph& g, bool is_cycle, long long budget_)
      : h(g), n(g.n()), k(g.k()), closed(is_cycle), budget(budget_) {}

  void init_pair_prune() {
    if (k == 4 && step == 2 && h.has_pair_index()) {
      pair_prune = true;
      pw = h.pair_words();
      avail.assign(static_cast<size_t>(pw), 0);
      for (int u = 0; u < n; ++u) {
        if ((reserved >> u) & 1u) continue;
        for (int v = u + 1; v < n; ++v) {
          if ((reserved >> v) & 1u) continue;
          int pid = u * n + v;
          avail[static_cast<size_t>(pid / 64)] |= 1ull << (pid % 64);
        }
      }
      avail_stack.assign(static_cast<size_t>(pw) * (static_cast<size_t>(nb) + 2), 0);
    }
  }

  void mark_used(int v) { used |= 1ull << v; }
  void unmark_used(int v) { used &= ~(1ull << v); }
  bool is_used(int v) const { return ((used | reserved) >> v) & 1u; }

  void push_avail(int depth, const std::vector<int>& blk) {
    if (!pair_prune) return;
    std::copy(avail.begin(), avail.end(),
              avail_stack.begin() + static_cast<long>(depth) * pw);
    for (int v : blk) {
      const std::uint64_t* t = h.pairs_touching(v);
      for (int w = 0; w < pw; ++w) avail[static_cast<size_t>(w)] &= ~t[w];
    }
  }
  void pop_avail(int depth) {
    if (!pair_prune) return;
    std::copy(avail_stack.begin() + static_cast<long>(depth) * pw,
              avail_stack.begin() + static_cast<long>(depth + 1) * pw, avail.begin());
  }
  bool all_unused_pairable() const {
    if (!pair_prune) return true;
    for (int v = 0; v < n; ++v) {
      if (is_used(v)) continue;
      const std::uint64_t* t = h.pairs_touching(v);
      bool ok = false;
      for (int w = 0; w < pw && !ok; ++w) ok = (t[w] & avail[static_cast<size_t>(w)]) != 0;
      if (!ok) return false;
    }
    return true;
  }

  bool window_edge(int first_block) const {
    int vs[max_uniformity];
    int t = 0;
    for (int b = 0; b < win; ++b) {
      const auto& blk = blocks[static_cast<size_t>((first_block + b) % nb)];
      for (int v : blk) vs[t++] = v;
    }
    std::sort(vs, vs + k);
    return h.has_edge_key(pack_edge(vs, k));
  }

  // the (k - step)-set formed by the win-1 blocks before block index `at`
  EdgeKey prefix_key(int at) const {
    int vs[max_uniformity];
    int t = 0;
    for (int b = win - 1; b >= 1; --b) {
      const auto& blk = blocks[static_cast<size_t>(at - b)];
      for (int v : blk) vs[t++] = v;
    }
    std::sort(vs, vs + t);
    return pack_edge(vs, t);
  }

  Dfs finish_cycle() {
    for (int s = nb - win + 1; s < nb; ++s) {
      if (!window_edge(s)) return Dfs::Exhausted;
    }
    // reflection canonicalisation: keep the orientation with smaller second block
    if (nb >= 2 && blocks[1] > blocks[static_cast<size_t>(nb - 1)]) return Dfs::Exhausted;
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n));
    for (const auto& blk : blocks) flat.insert(flat.end(), blk.begin(), blk.end());
    witness = VertexSeq{std::move(flat), k - step, true};
    return Dfs::Found;
  }

  Dfs finish_path() {
    // suffix vertices are reserved, so they are unused and distinct by now
    int at = free_blocks;
    for (const auto& blk : suffix) {
      blocks[static_cast<size_t>(at)] = blk;
      if (at + 1 >= win && !window_edge(at + 1 - win)) return Dfs::Exhausted;
      ++at;
    }
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n));
    for (const auto& blk : blocks) flat.insert(flat.end(), blk.begin(), blk.end());
    witness = VertexSeq{std::move(flat), k - step, false};
    return Dfs::Found;
  }

  Dfs place(int depth) {
    if (++nodes > budget) return Dfs::Budget;
    if (depth == free_blocks) return closed ? finish_cycle() : finish_path();

    bool constrained = depth >= win - 1;
    std::vector<int>& blk = blocks[static_cast<size_t>(depth)];
    blk.resize(static_cast<size_t>(step));

    auto try_block = [&](const int* vs) -> Dfs {
      for (int i = 0; i < step; ++i) blk[static_cast<size_t>(i)] = vs[i];
      if (constrained && !window_edge(depth + 1 - win)) return Dfs::Exhausted;
      for (int i = 0; i < step; ++i) mark_used(vs[i]);
      push_avail(depth, blk);
      Dfs r = Dfs::Exhausted;
      if (all_unused_pairable()) r = place(depth + 1);
      pop_avail(depth);
      for (int i = 0; i < step; ++i) unmark_used(vs[i]);
      return r;
    };

    if (constrained && step == 2 && pair_prune && win == 2) {
      const auto& prev = blocks[static_cast<size_t>(depth - 1)];
      const std::uint64_t* row = h.pair_row(prev[0] * n + prev[1]);
      for (int w = 0; w < pw; ++w) {
        std::uint64_t bits = row[w] & avail[static_cast<size_t>(w)];
        while (bits) {
          int bit = __builtin_ctzll(bits);
          bits &= bits - 1;
          int pid = w * 64 + bit;
          int vs[2] = {pid / n, pid % n};
          Dfs r = try_block(vs);
          if (r != Dfs::Exhausted) return r;
        }
      }
      return Dfs::Exhausted;
    }

    if (constrained && step == 1) {
      EdgeKey pref = prefix_key(depth);
      for (int v : h.link(pref)) {
        if (is_used(v)) continue;
        int vs[1] = {v};
        Dfs r = try_block(vs);
        if (r != Dfs::Exhausted) return r;
      }
      return Dfs::Exhausted;
    }

    // generic ascending step-subset enumeration over unused vertices
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (!is_used(v)) pool.push_back(v);
    int m = static_cast<int>(pool.size());
    if (m < step) return Dfs::Exhausted;
    bool force_zero = closed && depth == 0;
    std::vector<int> pick(static_cast<size_t>(step));
    std::vector<int> idx(static_cast<size_t>(step));
    for (int i = 0; i < step; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      if (force_zero && idx[0] != 0) break;
      for (int i = 0; i < step; ++i)
        pick[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      Dfs r = try_block(pick.data());
      if (r != Dfs::Exhausted) return r;
      int pos = step - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - (step - pos)) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < step; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return Dfs::Exhausted;
  }
};

// ordered vertex-at-a-time engine for (k - ell) not dividing k
struct OrderedSearch {
  const KGraph& h;
  int n, k, step = 0;
  bool closed;
  long long budget;
  long long nodes = 0;
  std::vector<int> seq;
  std::uint64_t used = 0;
  std::uint64_t reserved = 0;
  std::vector<int> suffix;
  int free_len = 0;
  std::optional<VertexSeq> witness;

  OrderedSearch(const KGraph& g, bool is_cycle, long long budget_)
      : h(g), n(g.n()), k(g.k()), closed(is_cycle), budget(budget_) {}

  bool window_edge_at(int offset) const {
    int vs[max_uniformity];
    for (int i = 0; i < k; ++i) vs[i] = seq[static_cast<size_t>((offset + i) % n)];
    std::sort(vs, vs + k);
    return h.has_edge_key(pack_edge(vs, k));
  }

  Dfs finish() {
    if (closed) {
      for (int off = 0; off < n; off += step) {
        if (off + k > n && !window_edge_at(off)) return Dfs::Exhausted;
      }
    }
    witness = VertexSeq{seq, k - step, closed};
    return Dfs::Found;
  }

  Dfs place(int pos) {
    if (++nodes > budget) return Dfs::Budget;
    if (pos == free_len) {
      for (int v : suffix) {
        seq[static_cast<size_t>(pos)] = v;
        ++pos;
        if (pos >= k && (pos - k) % step == 0 && !window_edge_at(pos - k)) return Dfs::Exhausted;
      }
      return finish();
    }
    // rotation canonicalisation for cycles: vertex 0 must sit in the first block
    if (closed && pos == step && !((used >> 0) & 1u)) return Dfs::Exhausted;
    bool completes = (pos + 1 >= k) && ((pos + 1 - k) % step == 0);
    for (int v = 0; v < n; ++v) {
      if (((used | reserved) >> v) & 1u) continue;
      seq[static_cast<size_t>(pos)] = v;
      used |= 1ull << v;
      if (!completes || window_edge_at(pos + 1 - k)) {
        Dfs r = place(pos + 1);
        if (r != Dfs::Exhausted) {
          used &= ~(1ull << v);
          return r;
        }
      }
      used &= ~(1ull << v);
    }
    return Dfs::Exhausted;
  }
};

std::vector<std::vector<int>> normalize_end_blocks(const std::vector<int>& end, int step,
                                                   const char* which) {
  require(!end.empty() && static_cast<int>(end.size()) % step == 0,
          std::string("find_hamilton_path: ") + which +
              " length must be a positive multiple of k-ell");
  std::vector<std::vector<int>> blocks;
  for (size_t i = 0; i < end.size(); i += static_cast<size_t>(step)) {
    std::vector<int> blk(end.begin() + static_cast<long>(i),
                         end.begin() + static_cast<long>(i) + step);
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

}  // namespace

OracleResult find_hamilton_cycle(const KGraph& h, int ell, long long budget) {
  require(ell >= 1 && ell < h.k(), "find_hamilton_cycle: ell out of range");
  OracleResult res;
  int k = h.k();
  int step = k - ell;
  int n = h.n();
  if (n < k || n % step != 0) {
    res.diagnostic = "divisibility: Hamilton ell-cycle needs (k-ell) | n and n >= k";
    return res;
  }
  if (n > 64) {
    res.budget_exceeded = true;
    res.diagnostic = "oracle supports n <= 64";
    return res;
  }
  if (h.edge_count() == 0) {
    res.diagnostic = "no edges";
    return res;
  }
  Dfs r;
  if (k % step == 0) {
    BlockSearch s(h, true, budget);
    s.step = step;
    s.win = k / step;
    s.nb = n / step;
    s.free_blocks = s.nb;
    s.blocks.assign(static_cast<size_t>(s.nb), {});
    s.init_pair_prune();
    r = s.place(0);
    res.nodes = s.nodes;
    if (r == Dfs::Found) res.witness = s.witness;
  } else {
    OrderedSearch s(h, true, budget);
    s.step = step;
    s.seq.assign(static_cast<size_t>(n), -1);
    s.free_len = n;
    r = s.place(0);
    res.nodes = s.nodes;
    if (r == Dfs::Found) res.witness = s.witness;
  }
  if (r == Dfs::Budget) {
    res.budget_exceeded = true;
    res.diagnostic = "budget-exceeded";
  }
  if (res.witness) {
    ensure(is_ell_cycle(h, *res.witness), "oracle produced an invalid cycle");
  }
  return res;
}

OracleResult find_hamilton_path(const KGraph& h, int ell,
                                const std::optional<std::vector<int>>& end1,
                                const std::optional<std::vector<int>>& end2,
                                long long budget) {
  require(ell >= 1 && ell < h.k(), "find_hamilton_path: ell out of range");
  OracleResult res;
  int k = h.k();
  int step = k - ell;
  int n = h.n();
  if (n < k || (n - k) % step != 0) {
    res.diagnostic = "divisibility: Hamilton ell-path needs n >= k and n = k mod (k-ell)";
    return res;
  }
  if (n > 64) {
    res.budget_exceeded = true;
    res.diagnostic = "oracle supports n <= 64";
    return res;
  }
  std::uint64_t end_seen = 0;
  for (const auto& e : {end1, end2}) {
    if (!e) continue;
    require(static_cast<int>(e->size()) <= k, "find_hamilton_path: end longer than k");
    for (int v : *e) {
      require(v >= 0 && v < n, "find_hamilton_path: end vertex out of range");
      require(!((end_seen >> v) & 1u), "find_hamilton_path: end vertices must be distinct");
      end_seen |= 1ull << v;
    }
  }

  Dfs r = Dfs::Exhausted;
  if (k % step == 0) {
    BlockSearch s(h, false, budget);
    s.step = step;
    s.win = k / step;
    s.nb = n / step;
    s.blocks.assign(static_cast<size_t>(s.nb), {});
    std::vector<std::vector<int>> prefix;
    if (end1) prefix = normalize_end_blocks(*end1, step, "end1");
    if (end2) s.suffix = normalize_end_blocks(*end2, step, "end2");
    s.free_blocks = s.nb - static_cast<int>(s.suffix.size());
    require(static_cast<int>(prefix.size()) <= s.free_blocks,
            "find_hamilton_path: ends longer than the path");
    for (const auto& blk : s.suffix)
      for (int v : blk) s.reserved |= 1ull << v;
    s.init_pair_prune();
    bool prefix_ok = true;
    int depth = 0;
    for (const auto& blk : prefix) {
      s.blocks[static_cast<size_t>(depth)] = blk;
      for (int v : blk) s.mark_used(v);
      if (depth + 1 >= s.win && !s.window_edge(depth + 1 - s.win)) prefix_ok = false;
      s.push_avail(depth, blk);
      ++depth;
      if (!prefix_ok) break;
    }
    if (prefix_ok && s.all_unused_pairable()) r = s.place(depth);
    res.nodes = s.nodes;
    if (r == Dfs::Found) res.witness = s.witness;
  } else {
    OrderedSearch s(h, false, budget);
    s.step = step;
    s.seq.assign(static_cast<size_t>(n), -1);
    if (end2) s.suffix = *end2;
    s.free_len = n - static_cast<int>(s.suffix.size());
    for (int v : s.suffix) s.reserved |= 1ull << v;
    int depth = 0;
    bool prefix_ok = true;
    if (end1) {
      require(static_cast<int>(end1->size()) <= s.free_len,
              "find_hamilton_path: ends longer than the path");
      for (int v : *end1) {
        s.seq[static_cast<size_t>(depth)] = v;
        s.used |= 1ull << v;
        ++depth;
        if (depth >= k && (depth - k) % step == 0 && !s.window_edge_at(depth - k)) {
          prefix_ok = false;
          break;
        }
      }
    }
    if (prefix_ok) r = s.place(depth);
    res.nodes = s.nodes;
    if (r == Dfs::Found) res.witness = s.witness;
  }
  if (r == Dfs::Budget) {
    res.budget_exceeded = true;
    res.diagnostic = "budget-exceeded";
  }
  if (res.witness) {
    ensure(is_ell_path(h, *res.witness), "oracle produced an invalid path");
  }
  return res;
}

namespace {

// families of vertex-disjoint 2-paths, maximising total edge count;
// MAX mode memoises the value function, TARGET mode tracks a witness family
// and exits as soon as the target is reached
struct TwoPathSearch {
  const KGraph& h;
  int n;
  long long target = -1;
  bool done = false;
  std::vector<PairSeq> current;
  std::vector<PairSeq> best_family;
  long long best_total = 0;
  std::unordered_map<std::uint64_t, long long> memo;
  bool use_memo = false;

  explicit TwoPathSearch(const KGraph& g) : h(g), n(g.n()) {}

  static long long bound(std::uint64_t mask) {
    int c = __builtin_popcountll(mask);
    return c >= 4 ? c / 2 - 1 : 0;
  }

  // ---- MAX mode: value of the best family inside mask ----
  long long solve(std::uint64_t mask) {
    if (__builtin_popcountll(mask) < 4) return 0;
    if (use_memo) {
      auto it = memo.find(mask);
      if (it != memo.end()) return it->second;
    }
    int v = __builtin_ctzll(mask);
    long long best = solve(mask & ~(1ull << v));
    for (int w = 0; w < n; ++w) {
      if (w == v || !((mask >> w) & 1u)) continue;
      int a = std::min(v, w), b = std::max(v, w);
      best = std::max(best, grow_max(mask & ~(1ull << v) & ~(1ull << w), a, b, a, b, 1, best));
    }
    if (use_memo) memo[mask] = best;
    return best;
  }

  // open path with ends (fa,fb) and (la,lb), len pairs so far
  long long grow_max(std::uint64_t mask, int fa, int fb, int la, int lb, long long len,
                     long long cutoff) {
    long long here = 0;
    if (len >= 2) here = (len - 1) + solve(mask);
    if ((len - 1) + static_cast<long long>(__builtin_popcountll(mask)) / 2 <= cutoff)
      return here;  // cannot beat the incumbent
    long long best = here;
    // extend at the back end
    const std::uint64_t* row = h.pair_row(h.pair_id(la, lb));
    for (int w = 0; w < h.pair_words(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        int pid = w * 64 + bit;
        int a = pid / n, b = pid % n;
        if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
        best = std::max(best, grow_max(mask & ~(1ull << a) & ~(1ull << b), fa, fb, a, b,
                                       len + 1, std::max(cutoff, best)));
      }
    }
    // extend at the front end; the front is only grown once the back is
    // frozen, and for a single pair both ends coincide so skip the repeat
    if (len < 2) return best;
    const std::uint64_t* frow = h.pair_row(h.pair_id(fa, fb));
    for (int w = 0; w < h.pair_words(); ++w) {
      std::uint64_t bits = frow[w];
      while (bits) {
        int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        int pid = w * 64 + bit;
        int a = pid / n, b = pid % n;
        if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
        best = std::max(best, grow_left(mask & ~(1ull << a) & ~(1ull << b), a, b, len + 1,
                                        std::max(cutoff, best)));
      }
    }
    return best;
  }

  long long grow_left(std::uint64_t mask, int fa, int fb, long long len, long long cutoff) {
    long long here = (len - 1) + solve(mask);
    if ((len - 1) + static_cast<long long>(__builtin_popcountll(mask)) / 2 <= cutoff) return here;
    long long best = here;
    const std::uint64_t* row = h.pair_row(h.pair_id(fa, fb));
    for (int w = 0; w < h.pair_words(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        int pid = w * 64 + bit;
        int a = pid / n, b = pid % n;
        if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
        best = std::max(best, grow_left(mask & ~(1ull << a) & ~(1ull << b), a, b, len + 1,
                                        std::max(cutoff, best)));
      }
    }
    return best;
  }

  // ---- TARGET mode: reach target total edges, tracking the family ----
  void record(long long total) {
    if (total >= target) {
      done = true;
      best_family = current;
      best_total = total;
    }
  }

  void explore_t(std::uint64_t mask, long long acc) {
    if (done || acc + bound(mask) < target) return;
    int v = __builtin_ctzll(mask);
    explore_t(mask & ~(1ull << v), acc);
    if (done) return;
    for (int w = 0; w < n; ++w) {
      if (w == v || !((mask >> w) & 1u)) continue;
      int a = std::min(v, w), b = std::max(v, w);
      current.push_back(PairSeq{{{a, b}}});
      grow_t(mask & ~(1ull << v) & ~(1ull << w), acc, false);
      current.pop_back();
      if (done) return;
    }
  }

  void grow_t(std::uint64_t mask, long long acc, bool left_phase) {
    if (done) return;
    // current may reallocate inside explore_t, so never hold a reference
    // to its top across the recursion
    long long len = static_cast<long long>(current.back().size());
    if (acc + (len - 1) + static_cast<long long>(__builtin_popcountll(mask)) / 2 < target) return;
    if (len >= 2) {
      record(acc + len - 1);
      if (done) return;
      if (__builtin_popcountll(mask) >= 4) {
        explore_t(mask, acc + len - 1);
        if (done) return;
      }
    }
    if (!left_phase) {
      auto back = current.back().back_pair();
      const std::uint64_t* row = h.pair_row(h.pair_id(back[0], back[1]));
      for (int w = 0; w < h.pair_words(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          int bit = __builtin_ctzll(bits);
          bits &= bits - 1;
          int pid = w * 64 + bit;
          int a = pid / n, b = pid % n;
          if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
          current.back().pairs.push_back({a, b});
          grow_t(mask & ~(1ull << a) & ~(1ull << b), acc, false);
          current.back().pairs.pop_back();
          if (done) return;
        }
      }
    }
    if (len >= 2) {
      auto front = current.back().front_pair();
      const std::uint64_t* row = h.pair_row(h.pair_id(front[0], front[1]));
      for (int w = 0; w < h.pair_words(); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          int bit = __builtin_ctzll(bits);
          bits &= bits - 1;
          int pid = w * 64 + bit;
          int a = pid / n, b = pid % n;
          if (!((mask >> a) & 1u) || !((mask >> b) & 1u)) continue;
          current.back().pairs.insert(current.back().pairs.begin(), {a, b});
          grow_t(mask & ~(1ull << a) & ~(1ull << b), acc, true);
          current.back().pairs.erase(current.back().pairs.begin());
          if (done) return;
        }
      }
    }
  }
};

}  // namespace

long long total_2_pathlength(const KGraph& h) {
  require(h.k() == 4, "total_2_pathlength: unsupported-uniformity");
  require(h.n() <= 64 && h.has_pair_index(), "total_2_pathlength: n > 64 unsupported");
  if (h.edge_count() == 0) return 0;
  TwoPathSearch s(h);
  s.use_memo = (h.n() <= 30);
  std::uint64_t full = (h.n() == 64) ? ~0ull : ((1ull << h.n()) - 1);
  return s.solve(full);
}

std::optional<TwoPathFamily> two_path_family_reaching(const KGraph& h, long long target) {
  require(h.k() == 4, "total_2_pathlength: unsupported-uniformity");
  require(h.n() <= 64 && h.has_pair_index(), "total_2_pathlength: n > 64 unsupported");
  if (target <= 0) return TwoPathFamily{{}, 0};
  if (h.edge_count() == 0) return std::nullopt;
  TwoPathSearch s(h);
  s.target = target;
  std::uint64_t full = (h.n() == 64) ? ~0ull : ((1ull << h.n()) - 1);
  s.explore_t(full, 0);
  if (!s.done) return std::nullopt;
  return TwoPathFamily{s.best_family, s.best_total};
}

namespace {

// independent enumeration oracle: grow ordered vertex tuples pair by pair,
// check consecutive pair unions directly, recurse on leftovers
struct SlowSearch {
  const KGraph& h;
  std::vector<int> pool;
  std::vector<std::uint8_t> taken;
  std::vector<size_t> chosen;
  long long best = 0;

  explicit SlowSearch(const KGraph& g) : h(g) {}

  long long rest_value() {
    std::vector<int> rest;
    for (size_t i = 0; i < pool.size(); ++i)
      if (!taken[i]) rest.push_back(pool[i]);
    SlowSearch sub(h);
    sub.pool = std::move(rest);
    sub.run();
    return sub.best;
  }

  void extend() {
    size_t len = chosen.size();
    if (len >= 4 && len % 2 == 0) {
      if (pool[chosen.front()] < pool[chosen.back()]) {
        long long val = static_cast<long long>(len / 2) - 1 + rest_value();
        best = std::max(best, val);
      }
    }
    if (len >= pool.size()) return;
    for (size_t c = 0; c < pool.size(); ++c) {
      if (taken[c]) continue;
      if (len % 2 == 1 && len >= 3) {
        int a = pool[chosen[len - 3]], b = pool[chosen[len - 2]];
        int p = pool[chosen[len - 1]], q = pool[c];
        if (!h.pair_pair_edge(a, b, p, q)) continue;
      }
      taken[c] = 1;
      chosen.push_back(c);
      extend();
      chosen.pop_back();
      taken[c] = 0;
    }
  }

  void run() {
    if (pool.size() < 4) return;
    taken.assign(pool.size(), 0);
    chosen.clear();
    extend();
  }
};

}  // namespace

long long total_2_pathlength_slow(const KGraph& h) {
  require(h.k() == 4, "total_2_pathlength_slow: unsupported-uniformity");
  require(h.n() <= 10, "total_2_pathlength_slow: supports n <= 10 only");
  SlowSearch s(h);
  for (int v = 0; v < h.n(); ++v) s.pool.push_back(v);
  s.run();
  return s.best;
}

}  // namespace h2c
