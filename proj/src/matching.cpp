#include "h2c/matching.hpp"

#include <algorithm>

namespace h2c {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  require(n >= 0, "SimpleGraph: negative vertex count");
  adj_.resize(static_cast<size_t>(n));
  mat_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

void SimpleGraph::add_edge(int u, int v) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v, "SimpleGraph: bad edge");
  if (has_edge(u, v)) return;
  mat_[static_cast<size_t>(u) * n_ + v] = 1;
  mat_[static_cast<size_t>(v) * n_ + u] = 1;
  adj_[static_cast<size_t>(u)].push_back(v);
  adj_[static_cast<size_t>(v)].push_back(u);
  ++edges_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return mat_[static_cast<size_t>(u) * n_ + v] != 0;
}

namespace {

// Edmonds' algorithm with blossom contraction tracked through base pointers
struct Blossom {
  int n;
  const SimpleGraph& g;
  std::vector<int> match, parent, base, queue;
  std::vector<char> used, in_blossom;

  explicit Blossom(const SimpleGraph& graph)
      : n(graph.n()), g(graph), match(static_cast<size_t>(n), -1),
        parent(static_cast<size_t>(n), -1), base(static_cast<size_t>(n), 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int x = a;
    while (true) {
      x = base[static_cast<size_t>(x)];
      seen[static_cast<size_t>(x)] = 1;
      if (match[static_cast<size_t>(x)] == -1) break;
      x = parent[static_cast<size_t>(match[static_cast<size_t>(x)])];
    }
    int y = b;
    while (true) {
      y = base[static_cast<size_t>(y)];
      if (seen[static_cast<size_t>(y)]) return y;
      y = parent[static_cast<size_t>(match[static_cast<size_t>(y)])];
    }
  }

  void mark_path(int v, int stem, int child) {
    while (base[static_cast<size_t>(v)] != stem) {
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
      in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = 1;
      parent[static_cast<size_t>(v)] = child;
      child = match[static_cast<size_t>(v)];
      v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
    }
  }

  int find_augmenting_path(int root) {
    used.assign(static_cast<size_t>(n), 0);
    parent.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
    used[static_cast<size_t>(root)] = 1;
    queue.clear();
    queue.push_back(root);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : g.neighbors(v)) {
        if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
            match[static_cast<size_t>(v)] == to)
          continue;
        if (to == root ||
            (match[static_cast<size_t>(to)] != -1 &&
             parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
          int stem = lowest_common_base(v, to);
          in_blossom.assign(static_cast<size_t>(n), 0);
          mark_path(v, stem, to);
          mark_path(to, stem, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
              base[static_cast<size_t>(i)] = stem;
              if (!used[static_cast<size_t>(i)]) {
                used[static_cast<size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[static_cast<size_t>(to)] == -1) {
          parent[static_cast<size_t>(to)] = v;
          if (match[static_cast<size_t>(to)] == -1) return to;
          int w = match[static_cast<size_t>(to)];
          used[static_cast<size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent[static_cast<size_t>(v)];
      int next = match[static_cast<size_t>(pv)];
      match[static_cast<size_t>(v)] = pv;
      match[static_cast<size_t>(pv)] = v;
      v = next;
    }
  }

  void run() {
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<size_t>(v)] != -1) continue;
      for (int to : g.neighbors(v)) {
        if (match[static_cast<size_t>(to)] == -1) {
          match[static_cast<size_t>(v)] = to;
          match[static_cast<size_t>(to)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (match[static_cast<size_t>(v)] != -1) continue;
      int leaf = find_augmenting_path(v);
      if (leaf != -1) augment(leaf);
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g) {
  Blossom b(g);
  b.run();
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.n(); ++v) {
    int w = b.match[static_cast<size_t>(v)];
    if (w > v) out.emplace_back(v, w);
  }
  return out;
}

bool has_perfect_matching(const SimpleGraph& g) {
  if (g.n() % 2 != 0) return false;
  return static_cast<int>(maximum_matching(g).size()) * 2 == g.n();
}

}  // namespace h2c
