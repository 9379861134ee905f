#pragma once

// Brute-force reference oracles used only by tests.  Each one enumerates the
// full search space directly so library search logic is never trusted twice.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "h2c/kgraph.hpp"
#include "h2c/matching.hpp"

namespace naive {

// every permutation of 0..n-1, read cyclically in windows of k at stride
// k - ell; true when some permutation makes every window an edge
inline bool has_hamilton_ell_cycle(const h2c::KGraph& h, int ell) {
  int n = h.n(), k = h.k();
  int stride = k - ell;
  if (n < k || n % stride != 0) return false;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int s = 0; s < n && ok; s += stride) {
      std::vector<int> window(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) window[static_cast<size_t>(i)] = perm[static_cast<size_t>((s + i) % n)];
      if (!h.has_edge(window)) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline int max_matching_size(const h2c::SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  int best = 0;
  std::vector<char> used(static_cast<size_t>(g.n()), 0);
  auto rec = [&](auto&& self, size_t idx, int size) -> void {
    best = std::max(best, size);
    for (size_t i = idx; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
      self(self, i + 1, size + 1);
      used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace naive
