#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

#include "h2c/nonextremal.hpp"
#include "absorb_decision.hpp"
#include "scaled.hpp"

namespace h2c {

namespace {

using detail::ceil_scaled;
using detail::floor_scaled;
using detail::power_ld;

int popcount_words(const std::uint64_t* a, int words) {
  int s = 0;
  for (int i = 0; i < words; ++i) s += __builtin_popcountll(a[i]);
  return s;
}

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
  int s = 0;
  for (int i = 0; i < words; ++i) s += __builtin_popcountll(a[i] & b[i]);
  return s;
}

void check_pair(const KGraph& h, std::array<int, 2> p, const char* who) {
  require(p[0] >= 0 && p[0] < h.n() && p[1] >= 0 && p[1] < h.n() && p[0] != p[1],
          std::string(who) + ": malformed vertex pair");
}

std::array<int, 2> sorted_pair(std::array<int, 2> p) {
  if (p[0] > p[1]) std::swap(p[0], p[1]);
  return p;
}

template <class Fn>
void for_bits(const std::uint64_t* mask, int words, Fn fn) {
  for (int w = 0; w < words; ++w) {
    std::uint64_t x = mask[w];
    while (x) {
      int b = __builtin_ctzll(x);
      x &= x - 1;
      fn(w * 64 + b);
    }
  }
}

ConnectingPathCounts count_paths_naive(const KGraph& h, std::array<int, 2> p1,
                                       std::array<int, 2> p2) {
  ConnectingPathCounts out;
  const int n = h.n();
  std::vector<int> used(static_cast<size_t>(n), 0);
  for (int v : {p1[0], p1[1], p2[0], p2[1]}) used[static_cast<size_t>(v)] = 1;
  std::vector<std::array<int, 2>> free_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!used[static_cast<size_t>(u)] && !used[static_cast<size_t>(v)])
        free_pairs.push_back({u, v});
  auto edge4 = [&](std::array<int, 2> a, std::array<int, 2> b) {
    return h.has_edge({a[0], a[1], b[0], b[1]});
  };
  for (const auto& q : free_pairs) {
    if (!edge4(p1, q) || !edge4(q, p2)) continue;
    out.len2 += 1;
  }
  for (const auto& q : free_pairs) {
    if (!edge4(p1, q)) continue;
    for (const auto& r : free_pairs) {
      if (r[0] == q[0] || r[0] == q[1] || r[1] == q[0] || r[1] == q[1]) continue;
      if (edge4(q, r) && edge4(r, p2)) out.len3 += 1;
    }
  }
  return out;
}

}  // namespace

ConnectingPathCounts count_connecting_paths(const KGraph& h, std::array<int, 2> p1,
                                            std::array<int, 2> p2) {
  require(h.k() == 4, "count_connecting_paths: host uniformity must be 4");
  check_pair(h, p1, "count_connecting_paths");
  check_pair(h, p2, "count_connecting_paths");
  p1 = sorted_pair(p1);
  p2 = sorted_pair(p2);
  require(p1[0] != p2[0] && p1[0] != p2[1] && p1[1] != p2[0] && p1[1] != p2[1],
          "count_connecting_paths: end pairs overlap");
  if (!h.has_pair_index()) return count_paths_naive(h, p1, p2);

  int w = h.pair_words();
  const std::uint64_t* r1 = h.pair_row(h.pair_id(p1[0], p1[1]));
  const std::uint64_t* r2 = h.pair_row(h.pair_id(p2[0], p2[1]));
  ConnectingPathCounts out;
  out.len2 = popcount_and(r1, r2, w);

  std::vector<std::uint64_t> l1(static_cast<size_t>(w)), l2(static_cast<size_t>(w));
  const std::uint64_t* t1a = h.pairs_touching(p1[0]);
  const std::uint64_t* t1b = h.pairs_touching(p1[1]);
  const std::uint64_t* t2a = h.pairs_touching(p2[0]);
  const std::uint64_t* t2b = h.pairs_touching(p2[1]);
  for (int i = 0; i < w; ++i) {
    l1[static_cast<size_t>(i)] = r1[i] & ~t2a[i] & ~t2b[i];
    l2[static_cast<size_t>(i)] = r2[i] & ~t1a[i] & ~t1b[i];
  }
  long long len3 = 0;
  for_bits(l1.data(), w, [&](int pid) {
    len3 += popcount_and(h.pair_row(pid), l2.data(), w);
  });
  out.len3 = len3;
  return out;
}

namespace {

struct KappaScan {
  const KGraph& h;
  long long t2;
  long long t3;
  std::vector<int> pid_of_cidx;

  explicit KappaScan(const KGraph& hh, double kappa) : h(hh) {
    int n = h.n();
    t2 = ceil_scaled(kappa, power_ld(n, 2));
    t3 = ceil_scaled(kappa, power_ld(n, 4));
    pid_of_cidx.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pid_of_cidx.push_back(u * n + v);
  }

  // first cidx2 > cidx1 failing against cidx1, or -1
  int first_failure(int cidx1, std::vector<std::uint64_t>& l1, std::vector<std::uint64_t>& l2) const {
    int n = h.n();
    int w = h.pair_words();
    int pid1 = pid_of_cidx[static_cast<size_t>(cidx1)];
    int a = pid1 / n, b = pid1 % n;
    const std::uint64_t* r1 = h.pair_row(pid1);
    const std::uint64_t* ta = h.pairs_touching(a);
    const std::uint64_t* tb = h.pairs_touching(b);
    for (size_t i2 = static_cast<size_t>(cidx1) + 1; i2 < pid_of_cidx.size(); ++i2) {
      int pid2 = pid_of_cidx[i2];
      int c = pid2 / n, d = pid2 % n;
      if (c == a || c == b || d == a || d == b) continue;
      const std::uint64_t* r2 = h.pair_row(pid2);
      long long len2 = popcount_and(r1, r2, w);
      if (len2 >= t2) continue;
      const std::uint64_t* tc = h.pairs_touching(c);
      const std::uint64_t* td = h.pairs_touching(d);
      for (int i = 0; i < w; ++i) {
        l1[static_cast<size_t>(i)] = r1[i] & ~tc[i] & ~td[i];
        l2[static_cast<size_t>(i)] = r2[i] & ~ta[i] & ~tb[i];
      }
      long long len3 = 0;
      for_bits(l1.data(), w, [&](int pid) {
        len3 += popcount_and(h.pair_row(pid), l2.data(), w);
      });
      if (len3 < t3) return static_cast<int>(i2);
    }
    return -1;
  }

  PairPair witness(int cidx1, int cidx2) const {
    int n = h.n();
    int pid1 = pid_of_cidx[static_cast<size_t>(cidx1)];
    int pid2 = pid_of_cidx[static_cast<size_t>(cidx2)];
    return PairPair{{pid1 / n, pid1 % n}, {pid2 / n, pid2 % n}};
  }
};

ConnectingReport kappa_connecting_impl(const KGraph& h, double kappa, bool parallel) {
  require(h.k() == 4, "is_kappa_connecting: host uniformity must be 4");
  require(kappa > 0.0, "is_kappa_connecting: kappa must be positive");
  ConnectingReport rep;
  if (h.n() < 4) {
    rep.connecting = true;
    return rep;
  }
  require(h.has_pair_index(), "is_kappa_connecting: host too large for the pair index");
  KappaScan scan(h, kappa);
  int total = static_cast<int>(scan.pid_of_cidx.size());
  int w = h.pair_words();

  long long best = -1;  // encoded cidx1 * total + cidx2
#pragma omp parallel if (parallel)
  {
    std::vector<std::uint64_t> l1(static_cast<size_t>(w)), l2(static_cast<size_t>(w));
    long long local = -1;
#pragma omp for schedule(dynamic, 8)
    for (int c1 = 0; c1 < total; ++c1) {
      long long cap;
#pragma omp atomic read
      cap = best;
      if (cap >= 0 && c1 >= cap / total) continue;
      if (local >= 0 && c1 >= local / total) continue;
      int c2 = scan.first_failure(c1, l1, l2);
      if (c2 < 0) continue;
      long long enc = static_cast<long long>(c1) * total + c2;
      if (local < 0 || enc < local) local = enc;
#pragma omp critical(kappa_best)
      {
        if (best < 0 || enc < best) best = enc;
      }
    }
  }
  if (best >= 0) {
    rep.connecting = false;
    rep.witness = scan.witness(static_cast<int>(best / total), static_cast<int>(best % total));
  } else {
    rep.connecting = true;
  }
  return rep;
}

}  // namespace

ConnectingReport is_kappa_connecting(const KGraph& h, double kappa) {
  return kappa_connecting_impl(h, kappa, true);
}

ConnectingReport is_kappa_connecting_serial(const KGraph& h, double kappa) {
  return kappa_connecting_impl(h, kappa, false);
}

std::vector<EdgeKey> AbsorbingStructure::required_edges() const {
  int a1 = octuple[0], a2 = octuple[1], c1 = octuple[2], c2 = octuple[3];
  int c3 = octuple[4], c4 = octuple[5], b1 = octuple[6], b2 = octuple[7];
  int x = target[0], y = target[1];
  std::vector<EdgeKey> keys;
  keys.push_back(pack_sorted({a1, a2, c1, c2}));
  keys.push_back(pack_sorted({c1, c2, c3, c4}));
  keys.push_back(pack_sorted({c3, c4, b1, b2}));
  if (kind == AbsorbKind::Type1) {
    keys.push_back(pack_sorted({c1, c2, x, y}));
    keys.push_back(pack_sorted({x, y, c3, c4}));
  } else {
    keys.push_back(pack_sorted({a1, a2, x, y}));
    keys.push_back(pack_sorted({x, y, c1, c4}));
    keys.push_back(pack_sorted({c2, c3, b1, b2}));
  }
  return keys;
}

VertexSeq AbsorbingStructure::base_path() const {
  VertexSeq seq;
  seq.vertices.assign(octuple.begin(), octuple.end());
  return seq;
}

VertexSeq AbsorbingStructure::replacement_path() const {
  int a1 = octuple[0], a2 = octuple[1], c1 = octuple[2], c2 = octuple[3];
  int c3 = octuple[4], c4 = octuple[5], b1 = octuple[6], b2 = octuple[7];
  int x = target[0], y = target[1];
  VertexSeq seq;
  if (kind == AbsorbKind::Type1) {
    seq.vertices = {a1, a2, c1, c2, x, y, c3, c4, b1, b2};
  } else {
    seq.vertices = {a1, a2, x, y, c1, c4, c2, c3, b1, b2};
  }
  return seq;
}

bool AbsorbingStructure::valid_in(const KGraph& h) const {
  if (h.k() != 4) return false;
  std::vector<int> vs(octuple.begin(), octuple.end());
  vs.push_back(target[0]);
  vs.push_back(target[1]);
  for (int v : vs)
    if (v < 0 || v >= h.n()) return false;
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (EdgeKey key : required_edges())
    if (!h.has_edge_key(key)) return false;
  return true;
}

long long absorb_threshold(int n, double beta) {
  require(n >= 1, "absorb_threshold: empty vertex set");
  require(beta > 0.0, "absorb_threshold: beta must be positive");
  return ceil_scaled(beta, power_ld(n, 8));
}

namespace {

// tables over the dense index of unordered pairs:
//   cnt[c]   = |row(c)|
//   vm[c][v] = bit mask over w of "{v,w} in row(c)"
//   m[c][v]  = |row(c) meeting v| = popcount(vm[c][v])
//   pp(c,c') = |row(c) AND row(c')|
struct AbsorbEngine {
  const KGraph& h;
  int n;
  int w;       // words per pair row
  int nw;      // words per vertex mask
  int total;   // number of unordered pairs
  std::vector<int> cidx_of_pid;
  std::vector<int> pid_of_cidx;
  std::vector<std::int32_t> cnt;
  std::vector<std::int16_t> m;
  std::vector<std::int16_t> mmax;
  std::vector<std::uint64_t> vm;
  bool has_pp = false;
  std::vector<std::int32_t> ppt;

  explicit AbsorbEngine(const KGraph& hh) : h(hh), n(hh.n()), w(hh.pair_words()) {
    nw = (n + 63) / 64;
    cidx_of_pid.assign(static_cast<size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        cidx_of_pid[static_cast<size_t>(u) * n + v] = static_cast<int>(pid_of_cidx.size());
        pid_of_cidx.push_back(u * n + v);
      }
    total = static_cast<int>(pid_of_cidx.size());
    cnt.assign(static_cast<size_t>(total), 0);
    vm.assign(static_cast<size_t>(total) * n * nw, 0);
    m.assign(static_cast<size_t>(total) * n, 0);
    mmax.assign(static_cast<size_t>(total), 0);
    for (int c = 0; c < total; ++c) {
      const std::uint64_t* row = h.pair_row(pid_of_cidx[static_cast<size_t>(c)]);
      cnt[static_cast<size_t>(c)] = popcount_words(row, w);
      std::uint64_t* base = vm.data() + static_cast<size_t>(c) * n * nw;
      for_bits(row, w, [&](int pid) {
        int a = pid / n, b = pid % n;
        base[static_cast<size_t>(a) * nw + b / 64] |= 1ULL << (b % 64);
        base[static_cast<size_t>(b) * nw + a / 64] |= 1ULL << (a % 64);
      });
      for (int v = 0; v < n; ++v) {
        int d = popcount_words(base + static_cast<size_t>(v) * nw, nw);
        m[static_cast<size_t>(c) * n + v] = static_cast<std::int16_t>(d);
        if (d > mmax[static_cast<size_t>(c)]) mmax[static_cast<size_t>(c)] = static_cast<std::int16_t>(d);
      }
    }
    if (total <= 2048) {
      has_pp = true;
      ppt.assign(static_cast<size_t>(total) * total, 0);
#pragma omp parallel for schedule(dynamic, 16)
      for (int c1 = 0; c1 < total; ++c1) {
        const std::uint64_t* r1 = h.pair_row(pid_of_cidx[static_cast<size_t>(c1)]);
        for (int c2 = c1; c2 < total; ++c2) {
          const std::uint64_t* r2 = h.pair_row(pid_of_cidx[static_cast<size_t>(c2)]);
          std::int32_t pc = popcount_and(r1, r2, w);
          ppt[static_cast<size_t>(c1) * total + c2] = pc;
          ppt[static_cast<size_t>(c2) * total + c1] = pc;
        }
      }
    }
  }

  const std::uint64_t* vrow(int c, int v) const {
    return vm.data() + (static_cast<size_t>(c) * n + v) * nw;
  }
  std::int32_t pp(int c1, int c2) const {
    if (has_pp) return ppt[static_cast<size_t>(c1) * total + c2];
    return popcount_and(h.pair_row(pid_of_cidx[static_cast<size_t>(c1)]),
                        h.pair_row(pid_of_cidx[static_cast<size_t>(c2)]), w);
  }
  bool row_has(int c, int a, int b) const {
    return (vrow(c, a)[b / 64] >> (b % 64)) & 1ULL;
  }
  int cidx(int a, int b) const {
    return cidx_of_pid[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
  }

  // scratch for one counting pass
  struct Scratch {
    std::vector<std::int16_t> a, b;
    std::vector<std::uint64_t> cand, avoid;
    explicit Scratch(const AbsorbEngine& e)
        : a(static_cast<size_t>(e.n)),
          b(static_cast<size_t>(e.n)),
          cand(static_cast<size_t>(e.w)),
          avoid(static_cast<size_t>(e.w)) {}
  };

  // side vector for S = row(c) minus pairs meeting any vertex of ex
  void fill_side(int c, const int* ex, int nex, std::vector<std::int16_t>& out) const {
    std::memcpy(out.data(), m.data() + static_cast<size_t>(c) * n,
                static_cast<size_t>(n) * sizeof(std::int16_t));
    for (int i = 0; i < nex; ++i) {
      for_bits(vrow(c, ex[i]), nw, [&](int v) { out[static_cast<size_t>(v)] -= 1; });
    }
    for (int i = 0; i < nex; ++i) out[static_cast<size_t>(ex[i])] = 0;
  }

  // side vector for S = row(c) AND row(c2) minus pairs meeting any vertex of ex
  void fill_side2(int c, int c2, const int* ex, int nex, std::vector<std::int16_t>& out,
                  std::vector<std::uint64_t>& tmp) const {
    for (int v = 0; v < n; ++v) {
      const std::uint64_t* p1 = vrow(c, v);
      const std::uint64_t* p2 = vrow(c2, v);
      int s = 0;
      for (int i = 0; i < nw; ++i) s += __builtin_popcountll(p1[i] & p2[i]);
      out[static_cast<size_t>(v)] = static_cast<std::int16_t>(s);
    }
    for (int i = 0; i < nex; ++i) {
      const std::uint64_t* p1 = vrow(c, ex[i]);
      const std::uint64_t* p2 = vrow(c2, ex[i]);
      for (int j = 0; j < nw; ++j) tmp[static_cast<size_t>(j)] = p1[j] & p2[j];
      for_bits(tmp.data(), nw, [&](int v) { out[static_cast<size_t>(v)] -= 1; });
    }
    for (int i = 0; i < nex; ++i) out[static_cast<size_t>(ex[i])] = 0;
  }

  static long long disjoint_count(const std::vector<std::int16_t>& a,
                                  const std::vector<std::int16_t>& b, int n, long long inter) {
    long long sa = 0, sb = 0, dot = 0;
    for (int v = 0; v < n; ++v) {
      sa += a[static_cast<size_t>(v)];
      sb += b[static_cast<size_t>(v)];
      dot += static_cast<long long>(a[static_cast<size_t>(v)]) * b[static_cast<size_t>(v)];
    }
    sa /= 2;
    sb /= 2;
    return sa * sb - dot + inter;
  }

  long long type1_kernel(int x, int y, int c1, int c2, Scratch& s) const {
    int p1 = pid_of_cidx[static_cast<size_t>(c1)];
    int p2 = pid_of_cidx[static_cast<size_t>(c2)];
    int u1 = p1 / n, v1 = p1 % n, u2 = p2 / n, v2 = p2 % n;
    int exa[4] = {x, y, u2, v2};
    int exb[4] = {x, y, u1, v1};
    fill_side(c1, exa, 4, s.a);
    fill_side(c2, exb, 4, s.b);
    long long inter = pp(c1, c2);
    for (int z : {x, y}) {
      const std::uint64_t* q1 = vrow(c1, z);
      const std::uint64_t* q2 = vrow(c2, z);
      for (int i = 0; i < nw; ++i) inter -= __builtin_popcountll(q1[i] & q2[i]);
    }
    if (row_has(c1, x, y) && row_has(c2, x, y)) inter += 1;
    return disjoint_count(s.a, s.b, n, inter);
  }

  long long type2_kernel(int x, int y, int cp, int c1, int c2, int g1, int g2, int g3,
                         Scratch& s) const {
    int p2 = pid_of_cidx[static_cast<size_t>(c2)];
    int u2 = p2 / n, v2 = p2 % n;
    int c23 = cidx(g2, g3);
    if (pp(c2, c23) == 0) return 0;
    int exa[2] = {u2, v2};
    int exb[3] = {g1, x, y};
    fill_side2(c1, cp, exa, 2, s.a, s.cand);
    fill_side2(c2, c23, exb, 3, s.b, s.cand);
    const std::uint64_t* r1 = h.pair_row(pid_of_cidx[static_cast<size_t>(c1)]);
    const std::uint64_t* rp = h.pair_row(pid_of_cidx[static_cast<size_t>(cp)]);
    const std::uint64_t* r2 = h.pair_row(p2);
    const std::uint64_t* r3 = h.pair_row(pid_of_cidx[static_cast<size_t>(c23)]);
    long long inter = 0;
    for (int i = 0; i < w; ++i) inter += __builtin_popcountll(r1[i] & rp[i] & r2[i] & r3[i]);
    return disjoint_count(s.a, s.b, n, inter);
  }

  // bound-only variant of the type 1 kernel, never above the true value
  long long type1_floor(int x, int y, int c1, int c2) const {
    int p1 = pid_of_cidx[static_cast<size_t>(c1)];
    int p2 = pid_of_cidx[static_cast<size_t>(c2)];
    int u1 = p1 / n, v1 = p1 % n, u2 = p2 / n, v2 = p2 % n;
    auto side = [&](int c, int za, int zb, int zc, int zd) {
      long long sz = cnt[static_cast<size_t>(c)];
      sz -= m[static_cast<size_t>(c) * n + za] + m[static_cast<size_t>(c) * n + zb] +
            m[static_cast<size_t>(c) * n + zc] + m[static_cast<size_t>(c) * n + zd];
      int zs[4] = {za, zb, zc, zd};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (row_has(c, zs[i], zs[j])) sz += 1;
      return sz;
    };
    long long sa = side(c1, x, y, u2, v2);
    long long sb = side(c2, x, y, u1, v1);
    if (sa <= 0 || sb <= 0) return 0;
    long long cross = std::min(2 * sa * static_cast<long long>(mmax[static_cast<size_t>(c2)]),
                               2 * sb * static_cast<long long>(mmax[static_cast<size_t>(c1)]));
    long long lb = sa * sb - cross;
    return lb > 0 ? lb : 0;
  }

  // total over all octuples for {x,y}; if stop_at >= 0, may return early once
  // the running total reaches it
  long long count_pair(int x, int y, long long stop_at) const {
    Scratch s(*this);
    const std::uint64_t* tx = h.pairs_touching(x);
    const std::uint64_t* ty = h.pairs_touching(y);
    for (int i = 0; i < w; ++i) s.avoid[static_cast<size_t>(i)] = ~tx[i] & ~ty[i];
    int cp = cidx(x, y);
    const std::uint64_t* rowp = h.pair_row(pid_of_cidx[static_cast<size_t>(cp)]);
    long long totalcnt = 0;
    for (int c1 = 0; c1 < total; ++c1) {
      int p1 = pid_of_cidx[static_cast<size_t>(c1)];
      int u1 = p1 / n, v1 = p1 % n;
      if (u1 == x || u1 == y || v1 == x || v1 == y) continue;
      bool m1_in_rp = (rowp[p1 / 64] >> (p1 % 64)) & 1ULL;
      bool t2_possible = pp(c1, cp) > 0;
      if (!m1_in_rp && !t2_possible) continue;
      const std::uint64_t* r1 = h.pair_row(p1);
      for (int i = 0; i < w; ++i) s.cand[static_cast<size_t>(i)] = r1[i] & s.avoid[static_cast<size_t>(i)];
      std::vector<int> mids;
      for_bits(s.cand.data(), w, [&](int pid) { mids.push_back(pid); });
      for (int p2 : mids) {
        int c2 = cidx_of_pid[static_cast<size_t>(p2)];
        bool m2_in_rp = (rowp[p2 / 64] >> (p2 % 64)) & 1ULL;
        if (m1_in_rp && m2_in_rp) {
          totalcnt += 16 * type1_kernel(x, y, c1, c2, s);
        } else if (t2_possible) {
          int u2 = p2 / n, v2 = p2 % n;
          const int orders[4][4] = {{u1, v1, u2, v2}, {u1, v1, v2, u2}, {v1, u1, u2, v2},
                                    {v1, u1, v2, u2}};
          for (const auto& o : orders) {
            int g1 = o[0], g2 = o[1], g4 = o[2], g3 = o[3];
            if (!h.pair_pair_edge(x, y, g1, g4)) continue;
            totalcnt += 4 * type2_kernel(x, y, cp, c1, c2, g1, g2, g3, s);
          }
        }
        if (stop_at >= 0 && totalcnt >= stop_at) return totalcnt;
      }
    }
    return totalcnt;
  }

  bool at_least(int x, int y, long long thr) const {
    if (thr <= 0) return true;
    Scratch s(*this);
    const std::uint64_t* tx = h.pairs_touching(x);
    const std::uint64_t* ty = h.pairs_touching(y);
    for (int i = 0; i < w; ++i) s.avoid[static_cast<size_t>(i)] = ~tx[i] & ~ty[i];
    int cp = cidx(x, y);
    const std::uint64_t* rowp = h.pair_row(pid_of_cidx[static_cast<size_t>(cp)]);
    long long lb = 0;
    for (int c1 = 0; c1 < total && lb < thr; ++c1) {
      int p1 = pid_of_cidx[static_cast<size_t>(c1)];
      int u1 = p1 / n, v1 = p1 % n;
      if (u1 == x || u1 == y || v1 == x || v1 == y) continue;
      if (!((rowp[p1 / 64] >> (p1 % 64)) & 1ULL)) continue;
      const std::uint64_t* r1 = h.pair_row(p1);
      for (int i = 0; i < w; ++i)
        s.cand[static_cast<size_t>(i)] = r1[i] & s.avoid[static_cast<size_t>(i)] & rowp[i];
      for (int i = 0; i < w && lb < thr; ++i) {
        std::uint64_t bits = s.cand[static_cast<size_t>(i)];
        while (bits && lb < thr) {
          int p2 = i * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          lb += 16 * type1_floor(x, y, c1, cidx_of_pid[static_cast<size_t>(p2)]);
        }
      }
    }
    if (lb >= thr) return true;
    return count_pair(x, y, thr) >= thr;
  }
};

AbsorbingReport absorbing_impl(const KGraph& h, double alpha, double beta, bool parallel) {
  require(h.k() == 4, "is_alpha_beta_absorbing: host uniformity must be 4");
  require(alpha > 0.0 && beta > 0.0, "is_alpha_beta_absorbing: rates must be positive");
  int n = h.n();
  AbsorbingReport rep;
  long long budget = floor_scaled(alpha, power_ld(n, 2));
  if (n < 10) {
    rep.non_absorbable_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (n >= 2) rep.first_non_absorbable = std::array<int, 2>{0, 1};
    rep.absorbing = rep.non_absorbable_pairs <= budget;
    return rep;
  }
  require(h.has_pair_index(), "is_alpha_beta_absorbing: host too large for the pair index");
  long long thr = absorb_threshold(n, beta);
  AbsorbEngine eng(h);
  std::vector<std::uint8_t> bad(static_cast<size_t>(eng.total), 0);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int c = 0; c < eng.total; ++c) {
    int pid = eng.pid_of_cidx[static_cast<size_t>(c)];
    if (!eng.at_least(pid / n, pid % n, thr)) bad[static_cast<size_t>(c)] = 1;
  }
  for (int c = 0; c < eng.total; ++c) {
    if (!bad[static_cast<size_t>(c)]) continue;
    rep.non_absorbable_pairs += 1;
    if (!rep.first_non_absorbable) {
      int pid = eng.pid_of_cidx[static_cast<size_t>(c)];
      rep.first_non_absorbable = std::array<int, 2>{pid / n, pid % n};
    }
  }
  rep.absorbing = rep.non_absorbable_pairs <= budget;
  return rep;
}

}  // namespace

namespace detail {

bool absorbing_decision(const KGraph& h, double alpha, double beta) {
  require(h.k() == 4, "is_alpha_beta_absorbing: host uniformity must be 4");
  require(alpha > 0.0 && beta > 0.0, "is_alpha_beta_absorbing: rates must be positive");
  int n = h.n();
  long long budget = floor_scaled(alpha, power_ld(n, 2));
  if (n < 10) return static_cast<long long>(n) * (n - 1) / 2 <= budget;
  require(h.has_pair_index(), "is_alpha_beta_absorbing: host too large for the pair index");
  long long thr = absorb_threshold(n, beta);
  AbsorbEngine eng(h);
  long long bad = 0;
  for (int c = 0; c < eng.total; ++c) {
    if (bad + (eng.total - c) <= budget) return true;
    int pid = eng.pid_of_cidx[static_cast<size_t>(c)];
    if (!eng.at_least(pid / n, pid % n, thr)) {
      bad += 1;
      if (bad > budget) return false;
    }
  }
  return bad <= budget;
}

}  // namespace detail

long long count_absorbing_structures(const KGraph& h, int x, int y) {
  require(h.k() == 4, "count_absorbing_structures: host uniformity must be 4");
  check_pair(h, {x, y}, "count_absorbing_structures");
  if (h.n() < 10) return 0;
  require(h.has_pair_index(), "count_absorbing_structures: host too large for the pair index");
  AbsorbEngine eng(h);
  return eng.count_pair(std::min(x, y), std::max(x, y), -1);
}

AbsorbingReport is_alpha_beta_absorbing(const KGraph& h, double alpha, double beta) {
  return absorbing_impl(h, alpha, beta, true);
}

AbsorbingReport is_alpha_beta_absorbing_serial(const KGraph& h, double alpha, double beta) {
  return absorbing_impl(h, alpha, beta, false);
}

SimpleGraph absorbability_graph(const KGraph& h, double beta) {
  require(h.k() == 4, "absorbability_graph: host uniformity must be 4");
  require(beta > 0.0, "absorbability_graph: beta must be positive");
  int n = h.n();
  SimpleGraph g(n);
  if (n < 10) return g;
  require(h.has_pair_index(), "absorbability_graph: host too large for the pair index");
  long long thr = absorb_threshold(n, beta);
  AbsorbEngine eng(h);
  std::vector<std::uint8_t> good(static_cast<size_t>(eng.total), 0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int c = 0; c < eng.total; ++c) {
    int pid = eng.pid_of_cidx[static_cast<size_t>(c)];
    if (eng.at_least(pid / n, pid % n, thr)) good[static_cast<size_t>(c)] = 1;
  }
  for (int c = 0; c < eng.total; ++c)
    if (good[static_cast<size_t>(c)]) {
      int pid = eng.pid_of_cidx[static_cast<size_t>(c)];
      g.add_edge(pid / n, pid % n);
    }
  return g;
}

}  // namespace h2c
