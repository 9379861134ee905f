#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "h2c/nonextremal.hpp"
#include "absorb_decision.hpp"
#include "scaled.hpp"

namespace h2c {

namespace {

using detail::ceil_scaled;
using detail::floor_scaled;
using detail::power_ld;

// vertex bitmask sized for max_vertices
using VMask = std::array<std::uint64_t, 4>;

void vm_set(VMask& m, int v) { m[static_cast<size_t>(v >> 6)] |= 1ull << (v & 63); }

bool vm_test(const VMask& m, int v) {
  return (m[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1ull;
}

int vm_count(const VMask& m) {
  int s = 0;
  for (std::uint64_t w : m) s += __builtin_popcountll(w);
  return s;
}

VMask vm_and(const VMask& a, const VMask& b) {
  VMask r;
  for (size_t i = 0; i < 4; ++i) r[i] = a[i] & b[i];
  return r;
}

int vm_count_and(const VMask& a, const VMask& b) {
  int s = 0;
  for (size_t i = 0; i < 4; ++i) s += __builtin_popcountll(a[i] & b[i]);
  return s;
}

int vm_count_diff(const VMask& a, const VMask& b) {
  int s = 0;
  for (size_t i = 0; i < 4; ++i) s += __builtin_popcountll(a[i] & ~b[i]);
  return s;
}

std::vector<int> vm_bits(const VMask& m) {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) {
    std::uint64_t w = m[static_cast<size_t>(i)];
    while (w) {
      int b = __builtin_ctzll(w);
      w &= w - 1;
      out.push_back(i * 64 + b);
    }
  }
  return out;
}

bool edge4(const KGraph& h, int a, int b, int c, int d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
  return h.has_edge({a, b, c, d});
}

struct Colouring {
  int n = 0;
  std::vector<VMask> red, blue;
  std::vector<int> dred, dblue;
};

// red iff first∪{v,w} ∈ E and second∪{v,w} ∉ E, blue with the roles swapped;
// with an exclude set, any pair meeting it stays uncoloured
Colouring build_colouring(const KGraph& h, std::array<int, 2> first, std::array<int, 2> second,
                          const std::vector<int>& exclude) {
  Colouring col;
  int n = h.n();
  col.n = n;
  col.red.assign(static_cast<size_t>(n), VMask{});
  col.blue.assign(static_cast<size_t>(n), VMask{});
  col.dred.assign(static_cast<size_t>(n), 0);
  col.dblue.assign(static_cast<size_t>(n), 0);
  std::vector<char> out(static_cast<size_t>(n), 0);
  for (int v : exclude) out[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < n; ++v) {
    if (out[static_cast<size_t>(v)]) continue;
    for (int w = v + 1; w < n; ++w) {
      if (out[static_cast<size_t>(w)]) continue;
      bool e1 = edge4(h, first[0], first[1], v, w);
      bool e2 = edge4(h, second[0], second[1], v, w);
      if (e1 == e2) continue;
      auto& adj = e1 ? col.red : col.blue;
      vm_set(adj[static_cast<size_t>(v)], w);
      vm_set(adj[static_cast<size_t>(w)], v);
    }
  }
  for (int v = 0; v < n; ++v) {
    col.dred[static_cast<size_t>(v)] = vm_count(col.red[static_cast<size_t>(v)]);
    col.dblue[static_cast<size_t>(v)] = vm_count(col.blue[static_cast<size_t>(v)]);
  }
  return col;
}

// link masks of the pair {v1,v2}: bit y of row x set iff {v1,v2,x,y} ∈ E
std::vector<VMask> pair_link_table(const KGraph& h, int v1, int v2) {
  int n = h.n();
  std::vector<VMask> nh(static_cast<size_t>(n), VMask{});
  if (h.has_pair_index()) {
    const std::uint64_t* row = h.pair_row(h.pair_id(v1, v2));
    int words = h.pair_words();
    for (int i = 0; i < words; ++i) {
      std::uint64_t w = row[static_cast<size_t>(i)];
      while (w) {
        int b = __builtin_ctzll(w);
        w &= w - 1;
        int pid = i * 64 + b;
        int x = pid / n, y = pid % n;
        vm_set(nh[static_cast<size_t>(x)], y);
        vm_set(nh[static_cast<size_t>(y)], x);
      }
    }
    return nh;
  }
  for (int x = 0; x < n; ++x) {
    if (x == v1 || x == v2) continue;
    for (int y = x + 1; y < n; ++y) {
      if (y == v1 || y == v2) continue;
      if (edge4(h, v1, v2, x, y)) {
        vm_set(nh[static_cast<size_t>(x)], y);
        vm_set(nh[static_cast<size_t>(y)], x);
      }
    }
  }
  return nh;
}

// greedily re-place the degenerately coloured vertices, each on the side
// giving it fewer incident minority-parity edges; ties keep the current side
std::vector<char> refine_sides(const KGraph& h, const VMask& a0, std::array<int, 4> special,
                               EdgeParity minority) {
  int n = h.n();
  std::vector<char> in_a(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) in_a[static_cast<size_t>(v)] = vm_test(a0, v) ? 1 : 0;
  std::sort(special.begin(), special.end());
  int want = minority == EdgeParity::Odd ? 1 : 0;
  int k = h.k();
  std::vector<std::vector<EdgeKey>> inc(static_cast<size_t>(n));
  int vs[8];
  for (EdgeKey key : h.edge_keys()) {
    unpack_edge(key, k, vs);
    for (int i = 0; i < k; ++i) inc[static_cast<size_t>(vs[i])].push_back(key);
  }
  for (int s : special) {
    long long cost[2] = {0, 0};
    for (EdgeKey key : inc[static_cast<size_t>(s)]) {
      unpack_edge(key, k, vs);
      int cnt = 0;
      for (int i = 0; i < k; ++i)
        if (vs[i] != s) cnt += in_a[static_cast<size_t>(vs[i])];
      if (cnt % 2 == want) cost[0] += 1;
      if ((cnt + 1) % 2 == want) cost[1] += 1;
    }
    if (cost[1] < cost[0])
      in_a[static_cast<size_t>(s)] = 1;
    else if (cost[0] < cost[1])
      in_a[static_cast<size_t>(s)] = 0;
  }
  return in_a;
}

// size window n/2−cn ≤ |A| ≤ n/2+cn and at most c·C(n,4) minority edges
bool extremal_ok(const KGraph& h, const std::vector<char>& in_a, double c, EdgeParity minority) {
  int n = h.n();
  long long size_a = 0;
  for (char v : in_a) size_a += v;
  if (size_a < ceil_scaled(0.5 - c, n) || size_a > floor_scaled(0.5 + c, n)) return false;
  long long cap = floor_scaled(c, static_cast<long double>(binomial_ll(n, 4)));
  int want = minority == EdgeParity::Odd ? 1 : 0;
  long long bad = 0;
  int vs[8];
  int k = h.k();
  for (EdgeKey key : h.edge_keys()) {
    unpack_edge(key, k, vs);
    int cnt = 0;
    for (int i = 0; i < k; ++i) cnt += in_a[static_cast<size_t>(vs[i])];
    if (cnt % 2 == want && ++bad > cap) return false;
  }
  return true;
}

std::optional<Bipartition> finish_candidate(const KGraph& h, const VMask& a0,
                                            std::array<int, 4> special, EdgeParity minority,
                                            double c) {
  std::vector<char> in_a = refine_sides(h, a0, special, minority);
  if (!extremal_ok(h, in_a, c, minority)) return std::nullopt;
  return Bipartition(std::vector<std::uint8_t>(in_a.begin(), in_a.end()));
}

}  // namespace

Fallible<Bipartition> even_partition(const KGraph& h, double kappa, double eta, double c) {
  require(h.k() == 4, "even_partition: host uniformity must be 4");
  require(kappa > 0.0 && eta > 0.0 && c > 0.0, "even_partition: rates must be positive");
  ConnectingReport rep = is_kappa_connecting(h, kappa);
  require(!rep.connecting, "even_partition: host is kappa-connecting");
  require(rep.witness.has_value(), "even_partition: missing witness pair");
  int n = h.n();
  std::array<int, 2> w1 = rep.witness->p1;
  std::array<int, 2> w2 = rep.witness->p2;
  std::array<int, 4> special = {w1[0], w1[1], w2[0], w2[1]};
  long long thr_good = ceil_scaled(0.5 - 0.96 * eta, n);
  long long thr_nred = ceil_scaled(0.5 - eta, n);
  long long thr_inner = ceil_scaled(eta, n);
  long long cap_bad = floor_scaled(eta, n);
  for (int ord = 0; ord < 2; ++ord) {
    std::array<int, 2> p1 = ord == 0 ? w1 : w2;
    std::array<int, 2> p2 = ord == 0 ? w2 : w1;
    Colouring col = build_colouring(h, p1, p2, {});
    VMask good{};
    for (int v = 0; v < n; ++v)
      if (col.dred[static_cast<size_t>(v)] >= thr_good &&
          col.dblue[static_cast<size_t>(v)] >= thr_good)
        vm_set(good, v);
    for (int u = 0; u < n; ++u) {
      if (!vm_test(good, u)) continue;
      const VMask& ru = col.red[static_cast<size_t>(u)];
      for (int v : vm_bits(vm_and(ru, good))) {
        if (v <= u) continue;
        for (int w : vm_bits(vm_and(vm_and(ru, col.red[static_cast<size_t>(v)]), good))) {
          if (w <= v) continue;
          VMask nred =
              vm_and(vm_and(ru, col.red[static_cast<size_t>(v)]), col.red[static_cast<size_t>(w)]);
          if (vm_count(nred) < thr_nred) continue;
          VMask nblue =
              vm_and(vm_and(col.blue[static_cast<size_t>(u)], col.blue[static_cast<size_t>(v)]),
                     col.blue[static_cast<size_t>(w)]);
          const std::array<std::array<int, 2>, 3> labellings = {{{u, v}, {u, w}, {v, w}}};
          for (const auto& sp : labellings) {
            std::vector<VMask> nh = pair_link_table(h, sp[0], sp[1]);
            long long bad = 0;
            for (int x : vm_bits(nred))
              if (vm_count_and(nh[static_cast<size_t>(x)], nblue) >= thr_inner) bad += 1;
            if (bad > cap_bad) continue;
            bad = 0;
            for (int x : vm_bits(nblue))
              if (vm_count_and(nh[static_cast<size_t>(x)], nred) >= thr_inner) bad += 1;
            if (bad > cap_bad) continue;
            bad = 0;
            for (int x = 0; x < n; ++x)
              if (vm_count_and(nh[static_cast<size_t>(x)], col.blue[static_cast<size_t>(x)]) >=
                  thr_inner)
                bad += 1;
            if (bad > cap_bad) continue;
            VMask a0 = nred;
            vm_set(a0, u);
            vm_set(a0, v);
            vm_set(a0, w);
            auto done = finish_candidate(h, a0, special, EdgeParity::Odd, c);
            if (done) return Fallible<Bipartition>::success(*done);
          }
        }
      }
    }
  }
  return Fallible<Bipartition>::fail(
      "even-partition", "no triangle satisfying the neighbourhood conditions verified extremal");
}

namespace {

// unordered triple count: two edges meeting exactly in the pair, their
// symmetric difference again an edge
long long pair_triple_count(const KGraph& h, int pid) {
  const std::uint64_t* row = h.pair_row(pid);
  int words = h.pair_words();
  long long twice = 0;
  for (int i = 0; i < words; ++i) {
    std::uint64_t wbits = row[static_cast<size_t>(i)];
    while (wbits) {
      int b = __builtin_ctzll(wbits);
      wbits &= wbits - 1;
      const std::uint64_t* qrow = h.pair_row(i * 64 + b);
      for (int j = 0; j < words; ++j)
        twice += __builtin_popcountll(row[static_cast<size_t>(j)] & qrow[static_cast<size_t>(j)]);
    }
  }
  return twice / 2;
}

struct OddThresholds {
  long long thr_normal = 0;
  long long cap_red_tri = 0;
  long long thr_side = 0;
  long long thr_inner = 0;
  long long cap_inner = 0;
  long long cap_cross = 0;
};

std::optional<Bipartition> odd_branches(const KGraph& h, std::array<int, 2> p,
                                        std::array<int, 2> q, const std::array<int, 4>& eset,
                                        const OddThresholds& t, double c) {
  int n = h.n();
  Colouring col = build_colouring(h, p, q, {eset[0], eset[1], eset[2], eset[3]});
  std::array<int, 4> special = eset;
  for (int u = 0; u < n; ++u) {
    const VMask& ru = col.red[static_cast<size_t>(u)];
    for (int v : vm_bits(ru)) {
      if (v <= u) continue;
      for (int w : vm_bits(vm_and(ru, col.red[static_cast<size_t>(v)]))) {
        if (w <= v) continue;
        VMask nred =
            vm_and(vm_and(ru, col.red[static_cast<size_t>(v)]), col.red[static_cast<size_t>(w)]);
        if (vm_count(nred) <= t.thr_side) continue;
        VMask nblue =
            vm_and(vm_and(col.blue[static_cast<size_t>(u)], col.blue[static_cast<size_t>(v)]),
                   col.blue[static_cast<size_t>(w)]);
        if (vm_count(nblue) <= t.thr_side) continue;
        long long cross = 0;
        for (int x : vm_bits(nred)) cross += vm_count_diff(col.red[static_cast<size_t>(x)], nred);
        if (cross > t.cap_cross) continue;
        const std::array<std::array<int, 2>, 3> labellings = {{{v, w}, {u, w}, {u, v}}};
        for (const auto& sp : labellings) {
          std::vector<VMask> nh = pair_link_table(h, sp[0], sp[1]);
          long long bad = 0;
          for (int x : vm_bits(nred))
            if (vm_count_and(nh[static_cast<size_t>(x)], nred) > t.thr_inner) bad += 1;
          if (bad > t.cap_inner) continue;
          VMask a0 = nred;
          vm_set(a0, u);
          vm_set(a0, v);
          vm_set(a0, w);
          auto done = finish_candidate(h, a0, special, EdgeParity::Even, c);
          if (done) return done;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (col.dred[static_cast<size_t>(v)] < t.thr_normal ||
        col.dblue[static_cast<size_t>(v)] < t.thr_normal)
      continue;
    const VMask& rv = col.red[static_cast<size_t>(v)];
    long long twice = 0;
    for (int w : vm_bits(rv)) twice += vm_count_and(rv, col.red[static_cast<size_t>(w)]);
    if (twice / 2 > t.cap_red_tri) continue;
    auto done = finish_candidate(h, rv, special, EdgeParity::Even, c);
    if (done) return done;
  }
  return std::nullopt;
}

}  // namespace

Fallible<Bipartition> odd_partition(const KGraph& h, double beta, double omega, double phi,
                                    double alpha, double c) {
  require(h.k() == 4, "odd_partition: host uniformity must be 4");
  require(beta > 0.0 && omega > 0.0 && phi > 0.0, "odd_partition: rates must be positive");
  require(!detail::absorbing_decision(h, alpha, beta),
          "odd_partition: host is (alpha,beta)-absorbing");
  require(h.has_pair_index(), "odd_partition: host too large for the pair index");
  int n = h.n();
  double omega_prime = 0.5 * (omega + phi);
  OddThresholds t;
  t.thr_normal = ceil_scaled(0.5 - omega_prime, n);
  t.cap_red_tri = floor_scaled(4.0 * phi, power_ld(n, 2));
  t.thr_side = floor_scaled(0.5 - phi, n);
  t.thr_inner = floor_scaled(phi, n);
  t.cap_inner = floor_scaled(phi, n);
  t.cap_cross = floor_scaled(9.0 * phi, static_cast<long double>(binomial_ll(n, 2)));
  long long cap_triple = ceil_scaled(beta, power_ld(n, 4));
  long long cap_common = ceil_scaled(0.5 * omega, static_cast<long double>(binomial_ll(n, 2)));
  int words = h.pair_words();
  long long pairings_left = 64;
  int vs[4];
  for (EdgeKey key : h.edge_keys()) {
    unpack_edge(key, 4, vs);
    const std::array<std::array<int, 4>, 3> splits = {
        {{vs[0], vs[1], vs[2], vs[3]}, {vs[0], vs[2], vs[1], vs[3]}, {vs[0], vs[3], vs[1], vs[2]}}};
    for (const auto& s : splits) {
      for (int ord = 0; ord < 2; ++ord) {
        std::array<int, 2> p =
            ord == 0 ? std::array<int, 2>{s[0], s[1]} : std::array<int, 2>{s[2], s[3]};
        std::array<int, 2> q =
            ord == 0 ? std::array<int, 2>{s[2], s[3]} : std::array<int, 2>{s[0], s[1]};
        if (pair_triple_count(h, h.pair_id(p[0], p[1])) >= cap_triple) continue;
        const std::uint64_t* prow = h.pair_row(h.pair_id(p[0], p[1]));
        const std::uint64_t* qrow = h.pair_row(h.pair_id(q[0], q[1]));
        long long common = 0;
        for (int i = 0; i < words; ++i)
          common += __builtin_popcountll(prow[static_cast<size_t>(i)] & qrow[static_cast<size_t>(i)]);
        if (common >= cap_common) continue;
        auto got = odd_branches(h, p, q, {vs[0], vs[1], vs[2], vs[3]}, t, c);
        if (got) return Fallible<Bipartition>::success(*got);
        if (--pairings_left <= 0)
          return Fallible<Bipartition>::fail(
              "odd-partition", "qualifying edge budget exhausted without a verified partition");
      }
    }
  }
  return Fallible<Bipartition>::fail(
      "odd-partition", "no qualifying edge produced a verified extremal partition");
}

}  // namespace h2c
