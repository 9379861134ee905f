#include "h2c/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace h2c {

std::pair<KGraph, Bipartition> build_h_star(int n) {
  require(n >= 6 && n % 2 == 0, "build_h_star: n must be even and at least 6");
  int size_a = (n % 8 == 0) ? n / 2 - 1 : n / 2;
  std::vector<int> a_side(static_cast<size_t>(size_a));
  std::iota(a_side.begin(), a_side.end(), 0);
  Bipartition bip = Bipartition::from_a_set(n, a_side);
  std::vector<EdgeKey> keys;
  for (EdgeKey ek : all_ksets(n, 4)) {
    int in_a = 0;
    for (int v : unpack_edge(ek, 4)) in_a += v < size_a ? 1 : 0;
    if (in_a % 2 == 1) keys.push_back(ek);
  }
  return {KGraph::from_keys(n, 4, keys), bip};
}

std::pair<KGraph, Mod3Parts> build_mod3_barrier(int n) {
  require(n >= 8 && n % 4 == 0, "build_mod3_barrier: n must be divisible by 4 and at least 8");
  int b = n / 3, r = n % 3;
  int sx, sy, sz;
  if (r == 0) {
    sx = b + 1;
    sy = b - 1;
    sz = b;
  } else if (r == 1) {
    sx = b + 1;
    sy = b;
    sz = b;
  } else {
    sx = b + 1;
    sy = b;
    sz = b + 1;
  }
  ensure(sx + sy + sz == n && sx != sy, "build_mod3_barrier: size triple infeasible");
  Mod3Parts parts;
  for (int v = 0; v < sx; ++v) parts.x.push_back(v);
  for (int v = sx; v < sx + sy; ++v) parts.y.push_back(v);
  for (int v = sx + sy; v < n; ++v) parts.z.push_back(v);
  std::vector<EdgeKey> keys;
  for (EdgeKey ek : all_ksets(n, 4)) {
    int in_x = 0, in_y = 0;
    for (int v : unpack_edge(ek, 4)) {
      if (v < sx)
        ++in_x;
      else if (v < sx + sy)
        ++in_y;
    }
    if ((in_x - in_y) % 3 == 0) keys.push_back(ek);
  }
  return {KGraph::from_keys(n, 4, keys), parts};
}

std::pair<KGraph, Bipartition> build_parity_complete(int n, EdgeParity side) {
  require(n >= 4 && n % 2 == 0, "build_parity_complete: n must be even and at least 4");
  int size_a = n / 2;
  std::vector<int> a_side(static_cast<size_t>(size_a));
  std::iota(a_side.begin(), a_side.end(), 0);
  Bipartition bip = Bipartition::from_a_set(n, a_side);
  int want = side == EdgeParity::Odd ? 1 : 0;
  std::vector<EdgeKey> keys;
  for (EdgeKey ek : all_ksets(n, 4)) {
    int in_a = 0;
    for (int v : unpack_edge(ek, 4)) in_a += v < size_a ? 1 : 0;
    if (in_a % 2 == want) keys.push_back(ek);
  }
  return {KGraph::from_keys(n, 4, keys), bip};
}

KGraph complete_kgraph(int n, int k) {
  return KGraph::from_keys(n, k, all_ksets(n, k));
}

KGraph random_kgraph(int n, int k, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "random_kgraph: p out of [0,1]");
  SplitMix64 rng(seed);
  std::vector<EdgeKey> keys;
  for (EdgeKey ek : all_ksets(n, k)) {
    if (rng.bernoulli(p)) keys.push_back(ek);
  }
  return KGraph::from_keys(n, k, keys);
}

namespace {

bool is_connected(const SimpleGraph& g) {
  int n = g.n();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

SimpleGraph random_subcubic(int n, std::uint64_t seed) {
  require(n >= 1 && n <= 64, "random_subcubic: n out of range");
  if (n == 1) return SimpleGraph(1);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  long long want_edges = std::min<long long>(3ll * n / 2, 5ll * n / 4 + 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (size_t i = pairs.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(rng.below(i));
      std::swap(pairs[i - 1], pairs[j]);
    }
    SimpleGraph g(n);
    for (const auto& [u, v] : pairs) {
      if (g.edge_count() >= want_edges) break;
      if (g.degree(u) < 3 && g.degree(v) < 3) g.add_edge(u, v);
    }
    if (is_connected(g)) return g;
  }
  ensure(false, "random_subcubic: rejection sampling failed");
  return SimpleGraph(n);
}

namespace {

// isomorphism maps vertices to vertices of equal degree, so minimising the
// adjacency bitstring over degree-class-respecting permutations is a
// complete invariant; classes are permuted independently
void canonical_rec(const SimpleGraph& g, std::vector<int>& perm,
                   const std::vector<std::pair<int, int>>& blocks, size_t b, std::string& best) {
  int n = g.n();
  if (b == blocks.size()) {
    std::string key;
    key.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        key.push_back(g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? '1'
                                                                                             : '0');
    if (best.empty() || key < best) best = key;
    return;
  }
  auto first = perm.begin() + blocks[b].first;
  auto last = perm.begin() + blocks[b].second;
  std::sort(first, last);
  do {
    canonical_rec(g, perm, blocks, b + 1, best);
  } while (std::next_permutation(first, last));
}

std::string canonical_form(const SimpleGraph& g) {
  int n = g.n();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
    return a < b;
  });
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || g.degree(perm[static_cast<size_t>(i)]) !=
                      g.degree(perm[static_cast<size_t>(start)])) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }
  std::string best;
  canonical_rec(g, perm, blocks, 0, best);
  return best;
}

SimpleGraph from_canonical(int n, const std::string& key) {
  SimpleGraph g(n);
  size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (key[idx] == '1') g.add_edge(i, j);
      ++idx;
    }
  return g;
}

}  // namespace

std::vector<SimpleGraph> all_connected_subcubic(int max_n) {
  require(max_n >= 1 && max_n <= 10, "all_connected_subcubic: supports up to 10 vertices");
  std::vector<SimpleGraph> out;
  std::vector<std::string> level = {""};  // the single 1-vertex graph
  out.push_back(SimpleGraph(1));
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      SimpleGraph g = from_canonical(n - 1, key);
      // attach a new vertex to 1..3 existing vertices of degree < 3;
      // every connected graph arises this way from deleting a non-cut vertex
      std::vector<int> eligible;
      for (int v = 0; v < n - 1; ++v)
        if (g.degree(v) < 3) eligible.push_back(v);
      int m = static_cast<int>(eligible.size());
      for (int pick = 1; pick < (1 << m); ++pick) {
        if (__builtin_popcount(static_cast<unsigned>(pick)) > 3) continue;
        SimpleGraph h(n);
        for (int u = 0; u < n - 1; ++u)
          for (int w : g.neighbors(u))
            if (w > u) h.add_edge(u, w);
        for (int i = 0; i < m; ++i)
          if ((pick >> i) & 1) h.add_edge(eligible[static_cast<size_t>(i)], n - 1);
        next.insert(canonical_form(h));
      }
    }
    level.assign(next.begin(), next.end());
    for (const std::string& key : level) out.push_back(from_canonical(n, key));
  }
  return out;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

KGraph to_kgraph(const SimpleGraph& g) {
  std::vector<std::vector<int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) edges.push_back({u, v});
  return KGraph(g.n(), 2, edges);
}

}  // namespace h2c
