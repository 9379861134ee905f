#pragma once

#include <array>
#include <string>
#include <vector>

#include "h2c/kgraph.hpp"

namespace h2c {

// vertex sequence read as an ell-path or ell-cycle: edges are k consecutive
// vertices at stride k - ell
struct VertexSeq {
  std::vector<int> vertices;
  int ell = 2;
  bool closed = false;

  int size() const { return static_cast<int>(vertices.size()); }
  std::string to_line() const;
  static VertexSeq parse(const std::string& line);
  bool operator==(const VertexSeq& o) const {
    return vertices == o.vertices && ell == o.ell && closed == o.closed;
  }
};

// the p1 p2 ... pm notation for 2-paths in 4-graphs
struct PairSeq {
  std::vector<std::array<int, 2>> pairs;

  static PairSeq from_pairs(std::vector<std::array<int, 2>> ps) { return PairSeq{std::move(ps)}; }
  static PairSeq from_vertex_seq(const VertexSeq& seq);
  VertexSeq to_vertex_seq(bool closed) const;
  int size() const { return static_cast<int>(pairs.size()); }
  std::array<int, 2> front_pair() const { return pairs.front(); }
  std::array<int, 2> back_pair() const { return pairs.back(); }
};

bool is_ell_path(const KGraph& h, const VertexSeq& seq);
bool is_ell_cycle(const KGraph& h, const VertexSeq& seq);

// P, Q open 2-paths sharing exactly one end pair and nothing else
VertexSeq concat(const KGraph& h, const VertexSeq& p, const VertexSeq& q);

}  // namespace h2c
