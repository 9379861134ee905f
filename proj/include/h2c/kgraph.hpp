#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace h2c {

// caller broke a documented precondition
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// internal consistency check failed
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw contract_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

// structured "starved at this scale" result; never a wrong answer
struct ScaleFailure {
  std::string stage;
  std::string detail;
};

template <class T>
struct Fallible {
  std::optional<T> value;
  std::optional<ScaleFailure> failure;

  bool ok() const { return value.has_value(); }
  T& operator*() { return *value; }
  const T& operator*() const { return *value; }
  T* operator->() { return &*value; }
  const T* operator->() const { return &*value; }

  static Fallible success(T v) {
    Fallible f;
    f.value = std::move(v);
    return f;
  }
  static Fallible fail(std::string stage, std::string detail) {
    Fallible f;
    f.failure = ScaleFailure{std::move(stage), std::move(detail)};
    return f;
  }
  static Fallible fail(ScaleFailure sf) {
    Fallible f;
    f.failure = std::move(sf);
    return f;
  }
};

constexpr int max_uniformity = 8;
constexpr int max_vertices = 254;

// A vertex set of size <= 8 packed big-endian, one byte per vertex in
// ascending order, 0xff padding in unused low bytes.  For keys of equal
// cardinality, numeric order equals lexicographic order on sorted tuples.
using EdgeKey = std::uint64_t;

EdgeKey pack_edge(const int* vs, int k);
EdgeKey pack_edge(const std::vector<int>& vs);
EdgeKey pack_sorted(std::vector<int> vs);
void unpack_edge(EdgeKey key, int k, int* out);
std::vector<int> unpack_edge(EdgeKey key, int k);
inline EdgeKey pack_pair(int u, int v) {
  int vs[2] = {u < v ? u : v, u < v ? v : u};
  return pack_edge(vs, 2);
}
// disjoint union of an a-set and a b-set
EdgeKey merge_keys(EdgeKey a, int ka, EdgeKey b, int kb);
bool keys_disjoint(EdgeKey a, int ka, EdgeKey b, int kb);
bool key_contains_vertex(EdgeKey key, int k, int v);
std::string key_to_string(EdgeKey key, int k);

class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<std::uint8_t> in_a);
  static Bipartition from_a_set(int n, const std::vector<int>& a_side);
  static Bipartition parse(const std::string& line);

  int n() const { return static_cast<int>(in_a_.size()); }
  int size_a() const { return size_a_; }
  int size_b() const { return n() - size_a_; }
  bool in_a(int v) const { return in_a_[static_cast<size_t>(v)] != 0; }
  std::vector<int> side_a() const;
  std::vector<int> side_b() const;
  Bipartition flipped() const;
  int count_a(EdgeKey key, int k) const;
  std::string to_line() const;
  bool operator==(const Bipartition& o) const { return in_a_ == o.in_a_; }

 private:
  std::vector<std::uint8_t> in_a_;
  int size_a_ = 0;
};

enum class EdgeParity { Odd, Even };
enum class PairKind { Split, Connate };

inline EdgeParity edge_parity(const Bipartition& bip, EdgeKey key, int k) {
  return (bip.count_a(key, k) % 2 != 0) ? EdgeParity::Odd : EdgeParity::Even;
}
inline PairKind pair_kind(const Bipartition& bip, int u, int v) {
  int c = (bip.in_a(u) ? 1 : 0) + (bip.in_a(v) ? 1 : 0);
  return c == 1 ? PairKind::Split : PairKind::Connate;
}

struct InducedSubgraph;

class KGraph {
 public:
  KGraph(int n, int k, const std::vector<std::vector<int>>& edges);
  static KGraph from_keys(int n, int k, std::vector<EdgeKey> keys);

  int n() const { return n_; }
  int k() const { return k_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<EdgeKey>& edge_keys() const { return edges_; }
  std::vector<std::vector<int>> edge_list() const;

  bool has_edge_key(EdgeKey key) const { return edge_set_.count(key) != 0; }
  bool has_edge(std::vector<int> vs) const;

  // number of edges containing S, |S| <= k-1
  long long degree(const std::vector<int>& s) const;
  // sorted completing vertices of a (k-1)-set; empty vector if none
  const std::vector<int>& link(EdgeKey sub_key) const;
  std::vector<std::vector<int>> neighborhood(const std::vector<int>& s) const;
  long long min_codegree() const;
  long long max_codegree() const;

  InducedSubgraph induced(const std::vector<int>& x) const;

  // pair-level bitset structures, built when k == 4 and n <= pair_index_cap
  bool has_pair_index() const { return !pair_rows_.empty(); }
  int pair_words() const { return pair_words_; }
  int pair_id(int u, int v) const { return (u < v ? u : v) * n_ + (u < v ? v : u); }
  // bit q set iff q is a pair disjoint from p with p ∪ q ∈ E(H)
  const std::uint64_t* pair_row(int pid) const {
    return pair_rows_.data() + static_cast<size_t>(pid) * pair_words_;
  }
  // bit mask over pair ids: pairs meeting vertex v
  const std::uint64_t* pairs_touching(int v) const {
    return touch_.data() + static_cast<size_t>(v) * pair_words_;
  }
  bool pair_pair_edge(int a, int b, int c, int d) const;  // {a,b,c,d} ∈ E
  long long pair_degree(int u, int v) const;  // # edges containing {u,v} (k=4)

 private:
  KGraph() = default;
  void build_indices();

  int n_ = 0;
  int k_ = 2;
  std::vector<EdgeKey> edges_;  // sorted ascending
  std::unordered_set<EdgeKey> edge_set_;
  std::unordered_map<EdgeKey, std::vector<int>> link_;
  std::vector<std::uint64_t> pair_rows_;
  std::vector<std::uint64_t> touch_;
  int pair_words_ = 0;
};

struct InducedSubgraph {
  KGraph graph;
  std::vector<int> to_old;  // new index -> old index
};

struct ParitySplitResult {
  KGraph odd;
  KGraph even;
};
// k = 4 only: split E(H) into odd and even edges w.r.t. bip
ParitySplitResult parity_split(const KGraph& h, const Bipartition& bip);

std::vector<EdgeKey> all_ksets(int n, int k);
long long binomial_ll(int n, int k);

}  // namespace h2c
