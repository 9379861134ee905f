#include "h2c/kgraph.hpp"

#include <algorithm>
#include <sstream>

namespace h2c {

EdgeKey pack_edge(const int* vs, int k) {
  require(k >= 1 && k <= max_uniformity, "pack_edge: uniformity out of range");
  EdgeKey key = 0;
  for (int i = 0; i < 8; ++i) {
    key <<= 8;
    if (i < k) {
      int v = vs[i];
      require(v >= 0 && v <= max_vertices, "pack_edge: vertex out of range");
      require(i == 0 || vs[i - 1] < v, "pack_edge: vertices not strictly increasing");
      key |= static_cast<EdgeKey>(v);
    } else {
      key |= 0xffu;
    }
  }
  return key;
}

EdgeKey pack_edge(const std::vector<int>& vs) {
  return pack_edge(vs.data(), static_cast<int>(vs.size()));
}

EdgeKey pack_sorted(std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  return pack_edge(vs.data(), static_cast<int>(vs.size()));
}

void unpack_edge(EdgeKey key, int k, int* out) {
  for (int i = 0; i < k; ++i) {
    out[i] = static_cast<int>((key >> (8 * (7 - i))) & 0xffu);
  }
}

std::vector<int> unpack_edge(EdgeKey key, int k) {
  std::vector<int> out(static_cast<size_t>(k));
  unpack_edge(key, k, out.data());
  return out;
}

EdgeKey merge_keys(EdgeKey a, int ka, EdgeKey b, int kb) {
  int va[max_uniformity], vb[max_uniformity], out[max_uniformity];
  unpack_edge(a, ka, va);
  unpack_edge(b, kb, vb);
  int i = 0, j = 0, t = 0;
  while (i < ka || j < kb) {
    if (j >= kb || (i < ka && va[i] < vb[j])) {
      out[t++] = va[i++];
    } else {
      require(i >= ka || va[i] != vb[j], "merge_keys: sets not disjoint");
      out[t++] = vb[j++];
    }
  }
  return pack_edge(out, ka + kb);
}

bool keys_disjoint(EdgeKey a, int ka, EdgeKey b, int kb) {
  int va[max_uniformity], vb[max_uniformity];
  unpack_edge(a, ka, va);
  unpack_edge(b, kb, vb);
  int i = 0, j = 0;
  while (i < ka && j < kb) {
    if (va[i] == vb[j]) return false;
    if (va[i] < vb[j]) ++i; else ++j;
  }
  return true;
}

bool key_contains_vertex(EdgeKey key, int k, int v) {
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>((key >> (8 * (7 - i))) & 0xffu) == v) return true;
  }
  return false;
}

std::string key_to_string(EdgeKey key, int k) {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < k; ++i) {
    if (i) os << ",";
    os << ((key >> (8 * (7 - i))) & 0xffu);
  }
  os << "}";
  return os.str();
}

Bipartition::Bipartition(std::vector<std::uint8_t> in_a) : in_a_(std::move(in_a)) {
  for (auto b : in_a_) size_a_ += (b != 0);
}

Bipartition Bipartition::from_a_set(int n, const std::vector<int>& a_side) {
  std::vector<std::uint8_t> flags(static_cast<size_t>(n), 0);
  for (int v : a_side) {
    require(v >= 0 && v < n, "Bipartition: vertex out of range");
    flags[static_cast<size_t>(v)] = 1;
  }
  return Bipartition(std::move(flags));
}

Bipartition Bipartition::parse(const std::string& line) {
  std::vector<std::uint8_t> flags;
  flags.reserve(line.size());
  for (char c : line) {
    if (c == '\r' || c == '\n' || c == ' ') continue;
    require(c == 'A' || c == 'B', "Bipartition: labels must be A or B");
    flags.push_back(c == 'A' ? 1 : 0);
  }
  return Bipartition(std::move(flags));
}

std::vector<int> Bipartition::side_a() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (in_a(v)) out.push_back(v);
  return out;
}

std::vector<int> Bipartition::side_b() const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (!in_a(v)) out.push_back(v);
  return out;
}

Bipartition Bipartition::flipped() const {
  std::vector<std::uint8_t> flags(in_a_.size());
  for (size_t i = 0; i < in_a_.size(); ++i) flags[i] = in_a_[i] ? 0 : 1;
  return Bipartition(std::move(flags));
}

int Bipartition::count_a(EdgeKey key, int k) const {
  int c = 0;
  for (int i = 0; i < k; ++i) {
    int v = static_cast<int>((key >> (8 * (7 - i))) & 0xffu);
    c += in_a(v) ? 1 : 0;
  }
  return c;
}

std::string Bipartition::to_line() const {
  std::string s;
  s.reserve(in_a_.size());
  for (auto b : in_a_) s.push_back(b ? 'A' : 'B');
  return s;
}

KGraph::KGraph(int n, int k, const std::vector<std::vector<int>>& edges) {
  require(n >= 0 && n <= max_vertices + 1, "KGraph: n out of range");
  require(k >= 2 && k <= max_uniformity, "KGraph: uniformity out of range");
  n_ = n;
  k_ = k;
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    require(static_cast<int>(e.size()) == k, "KGraph: edge size != k");
    std::vector<int> vs = e;
    std::sort(vs.begin(), vs.end());
    require(vs.back() < n, "KGraph: edge vertex >= n");
    edges_.push_back(pack_edge(vs));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_indices();
}

KGraph KGraph::from_keys(int n, int k, std::vector<EdgeKey> keys) {
  KGraph g;
  require(n >= 0 && n <= max_vertices + 1, "KGraph: n out of range");
  require(k >= 2 && k <= max_uniformity, "KGraph: uniformity out of range");
  g.n_ = n;
  g.k_ = k;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (EdgeKey key : keys) {
    int vs[max_uniformity];
    unpack_edge(key, k, vs);
    for (int i = 0; i < k; ++i) {
      require(vs[i] >= 0 && vs[i] < n, "KGraph: edge vertex >= n");
      require(i == 0 || vs[i - 1] < vs[i], "KGraph: malformed edge key");
    }
  }
  g.edges_ = std::move(keys);
  g.build_indices();
  return g;
}

namespace {
constexpr int pair_index_cap = 128;
}

void KGraph::build_indices() {
  edge_set_.reserve(edges_.size() * 2 + 1);
  for (EdgeKey key : edges_) edge_set_.insert(key);

  link_.reserve(edges_.size() * static_cast<size_t>(k_) + 1);
  int vs[max_uniformity], sub[max_uniformity];
  for (EdgeKey key : edges_) {
    unpack_edge(key, k_, vs);
    for (int drop = 0; drop < k_; ++drop) {
      int t = 0;
      for (int i = 0; i < k_; ++i)
        if (i != drop) sub[t++] = vs[i];
      link_[pack_edge(sub, k_ - 1)].push_back(vs[drop]);
    }
  }
  for (auto& [key, nb] : link_) std::sort(nb.begin(), nb.end());

  if (k_ == 4 && n_ >= 4 && n_ <= pair_index_cap) {
    int np = n_ * n_;
    pair_words_ = (np + 63) / 64;
    pair_rows_.assign(static_cast<size_t>(np) * pair_words_, 0);
    touch_.assign(static_cast<size_t>(n_) * pair_words_, 0);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        int pid = u * n_ + v;
        touch_[static_cast<size_t>(u) * pair_words_ + pid / 64] |= 1ull << (pid % 64);
        touch_[static_cast<size_t>(v) * pair_words_ + pid / 64] |= 1ull << (pid % 64);
      }
    }
    for (EdgeKey key : edges_) {
      unpack_edge(key, 4, vs);
      static const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (const auto& s : splits) {
        int p = vs[s[0]] * n_ + vs[s[1]];
        int q = vs[s[2]] * n_ + vs[s[3]];
        pair_rows_[static_cast<size_t>(p) * pair_words_ + q / 64] |= 1ull << (q % 64);
        pair_rows_[static_cast<size_t>(q) * pair_words_ + p / 64] |= 1ull << (p % 64);
      }
    }
  }
}

std::vector<std::vector<int>> KGraph::edge_list() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (EdgeKey key : edges_) out.push_back(unpack_edge(key, k_));
  return out;
}

bool KGraph::has_edge(std::vector<int> vs) const {
  if (static_cast<int>(vs.size()) != k_) return false;
  std::sort(vs.begin(), vs.end());
  return edge_set_.count(pack_edge(vs)) != 0;
}

long long KGraph::degree(const std::vector<int>& s) const {
  require(static_cast<int>(s.size()) <= k_ - 1, "degree: |S| must be <= k-1");
  std::vector<int> vs = s;
  std::sort(vs.begin(), vs.end());
  for (size_t i = 0; i < vs.size(); ++i) {
    require(vs[i] >= 0 && vs[i] < n_, "degree: vertex out of range");
    require(i == 0 || vs[i - 1] != vs[i], "degree: vertices must be distinct");
  }
  if (static_cast<int>(vs.size()) == k_ - 1) {
    return static_cast<long long>(link(pack_edge(vs)).size());
  }
  long long count = 0;
  int ev[max_uniformity];
  for (EdgeKey key : edges_) {
    unpack_edge(key, k_, ev);
    size_t i = 0;
    int j = 0;
    while (i < vs.size() && j < k_) {
      if (ev[j] == vs[i]) {
        ++i;
        ++j;
      } else if (ev[j] < vs[i]) {
        ++j;
      } else {
        break;
      }
    }
    if (i == vs.size()) ++count;
  }
  return count;
}

const std::vector<int>& KGraph::link(EdgeKey sub_key) const {
  static const std::vector<int> empty;
  auto it = link_.find(sub_key);
  return it == link_.end() ? empty : it->second;
}

std::vector<std::vector<int>> KGraph::neighborhood(const std::vector<int>& s) const {
  require(static_cast<int>(s.size()) <= k_ - 1, "neighborhood: |S| must be <= k-1");
  std::vector<int> vs = s;
  std::sort(vs.begin(), vs.end());
  if (static_cast<int>(vs.size()) == k_ - 1) {
    std::vector<std::vector<int>> out;
    for (int v : link(pack_edge(vs))) out.push_back({v});
    return out;
  }
  std::vector<std::vector<int>> out;
  int ev[max_uniformity];
  for (EdgeKey key : edges_) {
    unpack_edge(key, k_, ev);
    std::vector<int> rest;
    size_t i = 0;
    bool contains = true;
    for (int j = 0; j < k_; ++j) {
      if (i < vs.size() && ev[j] == vs[i]) {
        ++i;
      } else {
        rest.push_back(ev[j]);
      }
    }
    contains = (i == vs.size());
    if (contains) out.push_back(std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long KGraph::min_codegree() const {
  require(n_ >= k_ - 1, "min_codegree: fewer than k-1 vertices");
  long long best = -1;
  std::vector<int> idx(static_cast<size_t>(k_ - 1));
  for (int i = 0; i < k_ - 1; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    EdgeKey key = pack_edge(idx);
    auto it = link_.find(key);
    long long d = (it == link_.end()) ? 0 : static_cast<long long>(it->second.size());
    if (best < 0 || d < best) best = d;
    if (best == 0) return 0;
    int pos = k_ - 2;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n_ - (k_ - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k_ - 1; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return best;
}

long long KGraph::max_codegree() const {
  require(n_ >= k_ - 1, "max_codegree: fewer than k-1 vertices");
  long long best = 0;
  for (const auto& [key, nb] : link_) {
    (void)key;
    best = std::max(best, static_cast<long long>(nb.size()));
  }
  return best;
}

InducedSubgraph KGraph::induced(const std::vector<int>& x) const {
  std::vector<int> to_old = x;
  std::sort(to_old.begin(), to_old.end());
  to_old.erase(std::unique(to_old.begin(), to_old.end()), to_old.end());
  require(to_old.empty() || (to_old.front() >= 0 && to_old.back() < n_),
          "induced: vertex out of range");
  std::vector<int> to_new(static_cast<size_t>(n_), -1);
  for (size_t i = 0; i < to_old.size(); ++i)
    to_new[static_cast<size_t>(to_old[i])] = static_cast<int>(i);
  std::vector<EdgeKey> keys;
  int vs[max_uniformity], nv[max_uniformity];
  for (EdgeKey key : edges_) {
    unpack_edge(key, k_, vs);
    bool inside = true;
    for (int i = 0; i < k_ && inside; ++i) {
      if (to_new[static_cast<size_t>(vs[i])] < 0) inside = false;
    }
    if (!inside) continue;
    for (int i = 0; i < k_; ++i) nv[i] = to_new[static_cast<size_t>(vs[i])];
    keys.push_back(pack_edge(nv, k_));
  }
  InducedSubgraph out{KGraph::from_keys(static_cast<int>(to_old.size()), k_, std::move(keys)),
                      std::move(to_old)};
  return out;
}

bool KGraph::pair_pair_edge(int a, int b, int c, int d) const {
  int vs[4] = {a, b, c, d};
  std::sort(vs, vs + 4);
  return edge_set_.count(pack_edge(vs, 4)) != 0;
}

long long KGraph::pair_degree(int u, int v) const {
  require(k_ == 4, "pair_degree: needs k = 4");
  if (!has_pair_index()) {
    return degree({u, v});
  }
  const std::uint64_t* row = pair_row(pair_id(u, v));
  long long bits = 0;
  for (int w = 0; w < pair_words_; ++w) bits += __builtin_popcountll(row[w]);
  return static_cast<long long>(bits);
}

ParitySplitResult parity_split(const KGraph& h, const Bipartition& bip) {
  require(h.k() == 4, "parity_split: unsupported uniformity");
  require(bip.n() == h.n(), "parity_split: bipartition size mismatch");
  std::vector<EdgeKey> odd, even;
  for (EdgeKey key : h.edge_keys()) {
    if (bip.count_a(key, 4) % 2 != 0)
      odd.push_back(key);
    else
      even.push_back(key);
  }
  return ParitySplitResult{KGraph::from_keys(h.n(), 4, std::move(odd)),
                           KGraph::from_keys(h.n(), 4, std::move(even))};
}

std::vector<EdgeKey> all_ksets(int n, int k) {
  std::vector<EdgeKey> out;
  if (k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(pack_edge(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (k - pos)) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace h2c
