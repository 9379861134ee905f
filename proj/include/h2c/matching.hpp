#pragma once

#include <utility>
#include <vector>

#include "h2c/kgraph.hpp"

namespace h2c {

// simple undirected graph on {0..n-1}, used for auxiliary 2-graphs
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  long long edge_count() const { return edges_; }

 private:
  int n_;
  long long edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> mat_;
};

// maximum matching via blossom contraction; deterministic output order
std::vector<std::pair<int, int>> maximum_matching(const SimpleGraph& g);

bool has_perfect_matching(const SimpleGraph& g);

}  // namespace h2c
