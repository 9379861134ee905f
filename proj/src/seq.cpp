#include "h2c/seq.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace h2c {

std::string VertexSeq::to_line() const {
  std::ostringstream os;
  os << (closed ? "cycle" : "path") << " " << ell;
  for (int v : vertices) os << " " << v;
  return os.str();
}

VertexSeq VertexSeq::parse(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  VertexSeq seq;
  require(static_cast<bool>(is >> tag >> seq.ell), "VertexSeq: malformed line");
  require(tag == "cycle" || tag == "path", "VertexSeq: tag must be cycle or path");
  seq.closed = (tag == "cycle");
  int v;
  while (is >> v) seq.vertices.push_back(v);
  return seq;
}

PairSeq PairSeq::from_vertex_seq(const VertexSeq& seq) {
  require(seq.ell == 2, "PairSeq: needs ell = 2");
  require(seq.vertices.size() % 2 == 0, "PairSeq: needs even vertex count");
  PairSeq out;
  for (size_t i = 0; i + 1 < seq.vertices.size(); i += 2) {
    out.pairs.push_back({seq.vertices[i], seq.vertices[i + 1]});
  }
  return out;
}

VertexSeq PairSeq::to_vertex_seq(bool closed) const {
  VertexSeq out;
  out.ell = 2;
  out.closed = closed;
  for (const auto& p : pairs) {
    out.vertices.push_back(p[0]);
    out.vertices.push_back(p[1]);
  }
  return out;
}

namespace {

void check_shape(const KGraph& h, const VertexSeq& seq, bool closed) {
  require(seq.ell >= 1 && seq.ell < h.k(), "invalid-sequence: ell out of range");
  int k = h.k();
  int step = k - seq.ell;
  int len = seq.size();
  if (closed) {
    require(len >= k && len % step == 0, "invalid-sequence: cycle length not divisible by k-ell");
  } else {
    require(len >= k && (len - k) % step == 0, "invalid-sequence: path length not k mod (k-ell)");
  }
}

bool vertices_ok(const KGraph& h, const std::vector<int>& vs) {
  std::unordered_set<int> seen;
  for (int v : vs) {
    if (v < 0 || v >= h.n()) return false;
    if (!seen.insert(v).second) return false;
  }
  return true;
}

}  // namespace

bool is_ell_path(const KGraph& h, const VertexSeq& seq) {
  check_shape(h, seq, false);
  if (!vertices_ok(h, seq.vertices)) return false;
  int k = h.k();
  int step = k - seq.ell;
  std::vector<int> window(static_cast<size_t>(k));
  for (int start = 0; start + k <= seq.size(); start += step) {
    for (int i = 0; i < k; ++i) window[static_cast<size_t>(i)] = seq.vertices[static_cast<size_t>(start + i)];
    if (!h.has_edge(window)) return false;
  }
  return true;
}

bool is_ell_cycle(const KGraph& h, const VertexSeq& seq) {
  check_shape(h, seq, true);
  if (!vertices_ok(h, seq.vertices)) return false;
  int k = h.k();
  int step = k - seq.ell;
  int len = seq.size();
  std::vector<int> window(static_cast<size_t>(k));
  for (int start = 0; start < len; start += step) {
    for (int i = 0; i < k; ++i)
      window[static_cast<size_t>(i)] = seq.vertices[static_cast<size_t>((start + i) % len)];
    if (!h.has_edge(window)) return false;
  }
  return true;
}

VertexSeq concat(const KGraph& h, const VertexSeq& p, const VertexSeq& q) {
  require(!p.closed && !q.closed, "invalid-concatenation: inputs must be open");
  require(p.ell == 2 && q.ell == 2 && h.k() == 4, "invalid-concatenation: needs 2-paths in a 4-graph");
  PairSeq pp = PairSeq::from_vertex_seq(p);
  PairSeq qq = PairSeq::from_vertex_seq(q);
  auto norm = [](std::array<int, 2> v) {
    if (v[0] > v[1]) std::swap(v[0], v[1]);
    return v;
  };
  // orient P to end with the shared pair and Q to start with it
  for (int flip_p = 0; flip_p < 2; ++flip_p) {
    for (int flip_q = 0; flip_q < 2; ++flip_q) {
      std::vector<std::array<int, 2>> a = pp.pairs;
      std::vector<std::array<int, 2>> b = qq.pairs;
      if (flip_p) std::reverse(a.begin(), a.end());
      if (flip_q) std::reverse(b.begin(), b.end());
      if (norm(a.back()) != norm(b.front())) continue;
      std::unordered_set<int> pv;
      for (const auto& pr : a) {
        pv.insert(pr[0]);
        pv.insert(pr[1]);
      }
      bool clean = true;
      for (size_t i = 1; i < b.size() && clean; ++i) {
        if (pv.count(b[i][0]) || pv.count(b[i][1])) clean = false;
      }
      if (!clean) continue;
      std::vector<std::array<int, 2>> joined = a;
      for (size_t i = 1; i < b.size(); ++i) joined.push_back(b[i]);
      VertexSeq out = PairSeq::from_pairs(std::move(joined)).to_vertex_seq(false);
      require(is_ell_path(h, out), "invalid-concatenation: result is not a 2-path");
      return out;
    }
  }
  throw contract_error("invalid-concatenation: no shared end pair with disjoint interiors");
}

}  // namespace h2c
