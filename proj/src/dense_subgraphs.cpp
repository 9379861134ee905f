#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "h2c/nonextremal.hpp"
#include "h2c/seq.hpp"
#include "scaled.hpp"

namespace h2c {

namespace {

using detail::ceil_scaled;

long long degree_sum(const MultiKGraph& h, std::vector<long long>& deg) {
  deg.assign(static_cast<size_t>(h.n), 0);
  int vs[max_uniformity];
  long long total = 0;
  for (const auto& [key, m] : h.mult) {
    unpack_edge(key, h.k, vs);
    for (int i = 0; i < h.k; ++i) deg[static_cast<size_t>(vs[i])] += m;
    total += m;
  }
  return total;
}

// ell vertices of maximum degree, ties broken toward the smaller index
std::vector<int> top_degree(const std::vector<long long>& deg, int ell) {
  std::vector<int> order(deg.size());
  for (size_t v = 0; v < deg.size(); ++v) order[v] = static_cast<int>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]; });
  order.resize(static_cast<size_t>(ell));
  return order;
}

Fallible<std::vector<int>> restrict_rec(const MultiKGraph& h, int ell, double d) {
  const int n = h.n, k = h.k;
  std::vector<long long> deg;
  degree_sum(h, deg);
  if (k == 1) {
    std::vector<int> x = top_degree(deg, ell);
    std::sort(x.begin(), x.end());
    return Fallible<std::vector<int>>::success(std::move(x));
  }
  long long r = h.max_multiplicity();
  long long thr = ceil_scaled(d * 0.5, static_cast<long double>(binomial_ll(n, k - 1))) +
                  r * ell * binomial_ll(n, k - 2);
  std::vector<int> sel = top_degree(deg, ell);
  if (deg[static_cast<size_t>(sel.back())] < thr)
    return Fallible<std::vector<int>>::fail(
        "dense-restriction", "fewer than ell vertices meet the degree bound");
  std::sort(sel.begin(), sel.end());
  std::vector<int> is_sel(static_cast<size_t>(n), 0);
  for (int v : sel) is_sel[static_cast<size_t>(v)] = 1;
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (is_sel[static_cast<size_t>(v)]) continue;
    new_of_old[static_cast<size_t>(v)] = static_cast<int>(old_of_new.size());
    old_of_new.push_back(v);
  }
  MultiKGraph hc;
  hc.n = n - ell;
  hc.k = k - 1;
  int vs[max_uniformity], sub[max_uniformity];
  for (const auto& [key, m] : h.mult) {
    unpack_edge(key, k, vs);
    int picked = 0;
    for (int i = 0; i < k; ++i) picked += is_sel[static_cast<size_t>(vs[i])];
    if (picked != 1) continue;
    int t = 0;
    for (int i = 0; i < k; ++i)
      if (!is_sel[static_cast<size_t>(vs[i])]) sub[t++] = new_of_old[static_cast<size_t>(vs[i])];
    hc.add(pack_edge(sub, k - 1), m);
  }
  auto inner = restrict_rec(hc, ell, d * ell * 0.5);
  if (!inner.ok()) return inner;
  std::vector<int> x = sel;
  for (int v : *inner) x.push_back(old_of_new[static_cast<size_t>(v)]);
  std::sort(x.begin(), x.end());
  return Fallible<std::vector<int>>::success(std::move(x));
}

long long restricted_edges(const MultiKGraph& h, const std::vector<int>& x) {
  std::vector<int> inside(static_cast<size_t>(h.n), 0);
  for (int v : x) inside[static_cast<size_t>(v)] = 1;
  int vs[max_uniformity];
  long long total = 0;
  for (const auto& [key, m] : h.mult) {
    unpack_edge(key, h.k, vs);
    bool in = true;
    for (int i = 0; i < h.k && in; ++i) in = inside[static_cast<size_t>(vs[i])] != 0;
    if (in) total += m;
  }
  return total;
}

// class-by-class backtracking for the lexicographically first embedding;
// every transversal is checked as its last vertex is placed
struct PartiteSearch {
  const KGraph& h;
  const std::vector<int>& sizes;
  int k;
  std::vector<std::vector<int>> classes;
  std::vector<int> used;

  PartiteSearch(const KGraph& hh, const std::vector<int>& ss)
      : h(hh), sizes(ss), k(static_cast<int>(ss.size())),
        classes(ss.size()), used(static_cast<size_t>(hh.n()), 0) {}

  bool transversals_ok(int v) {
    std::vector<int> pick(static_cast<size_t>(k - 1), 0);
    while (true) {
      std::vector<int> e(static_cast<size_t>(k));
      for (int i = 0; i < k - 1; ++i)
        e[static_cast<size_t>(i)] = classes[static_cast<size_t>(i)][static_cast<size_t>(pick[static_cast<size_t>(i)])];
      e[static_cast<size_t>(k - 1)] = v;
      if (!h.has_edge(e)) return false;
      int i = k - 2;
      while (i >= 0) {
        pick[static_cast<size_t>(i)] += 1;
        if (pick[static_cast<size_t>(i)] < static_cast<int>(classes[static_cast<size_t>(i)].size())) break;
        pick[static_cast<size_t>(i)] = 0;
        i -= 1;
      }
      if (i < 0) return true;
    }
  }

  bool fill(int ci, int from) {
    if (static_cast<int>(classes[static_cast<size_t>(ci)].size()) == sizes[static_cast<size_t>(ci)]) {
      if (ci + 1 == k) return true;
      return fill(ci + 1, 0);
    }
    for (int v = from; v < h.n(); ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (ci == k - 1 && !transversals_ok(v)) continue;
      used[static_cast<size_t>(v)] = 1;
      classes[static_cast<size_t>(ci)].push_back(v);
      if (fill(ci, v + 1)) return true;
      classes[static_cast<size_t>(ci)].pop_back();
      used[static_cast<size_t>(v)] = 0;
    }
    return false;
  }
};

std::optional<std::vector<std::vector<int>>> partite_search(const KGraph& h,
                                                            const std::vector<int>& sizes) {
  PartiteSearch s(h, sizes);
  if (!s.fill(0, 0)) return std::nullopt;
  return s.classes;
}

}  // namespace

long long MultiKGraph::edge_count() const {
  long long total = 0;
  for (const auto& [key, m] : mult) total += m;
  return total;
}

long long MultiKGraph::max_multiplicity() const {
  long long r = 0;
  for (const auto& [key, m] : mult) r = std::max(r, m);
  return r;
}

void MultiKGraph::add(EdgeKey key, long long m) {
  require(m > 0, "MultiKGraph::add: multiplicity increment must be positive");
  mult[key] += m;
}

MultiKGraph MultiKGraph::from_graph(const KGraph& h) {
  MultiKGraph out;
  out.n = h.n();
  out.k = h.k();
  for (EdgeKey key : h.edge_keys()) out.mult[key] = 1;
  return out;
}

Fallible<std::vector<int>> dense_restriction(const MultiKGraph& h, int ell, double d) {
  require(h.k >= 1 && h.k <= max_uniformity, "dense_restriction: uniformity out of range");
  require(ell >= 1, "dense_restriction: ell must be positive");
  require(d > 0.0, "dense_restriction: density rate must be positive");
  require(h.n >= h.k * ell, "dense_restriction: host smaller than the requested restriction");
  require(h.edge_count() >= ceil_scaled(d, static_cast<long double>(binomial_ll(h.n, h.k))),
          "dense_restriction: host density below d");
  auto res = restrict_rec(h, ell, d);
  if (!res.ok()) return res;
  ensure(static_cast<int>(res->size()) == h.k * ell, "dense_restriction: wrong restriction size");
  ensure(restricted_edges(h, *res) >=
             ceil_scaled(d, static_cast<long double>(binomial_ll(ell, h.k))),
         "dense_restriction: returned set misses the density bound");
  return res;
}

std::optional<std::vector<std::vector<int>>> find_partite_subgraph(
    const KGraph& h, const std::vector<int>& class_sizes) {
  require(static_cast<int>(class_sizes.size()) == h.k(),
          "find_partite_subgraph: one class per edge slot");
  int f = 0;
  for (int s : class_sizes) {
    require(s >= 1, "find_partite_subgraph: class sizes must be positive");
    f += s;
  }
  if (f > h.n() || h.edge_count() == 0) return std::nullopt;
  int ell_min = (f + h.k() - 1) / h.k();
  int ell_cap = h.n() / h.k();
  if (ell_cap >= ell_min) {
    int ell = std::min(ell_cap, std::max(ell_min + 2, 6));
    double d = static_cast<double>(h.edge_count()) /
               static_cast<double>(binomial_ll(h.n(), h.k()));
    auto x = dense_restriction(MultiKGraph::from_graph(h), ell, d);
    if (x.ok()) {
      InducedSubgraph sub = h.induced(*x);
      auto found = partite_search(sub.graph, class_sizes);
      if (found) {
        for (auto& cls : *found)
          for (int& v : cls) v = sub.to_old[static_cast<size_t>(v)];
        return found;
      }
    }
  }
  return partite_search(h, class_sizes);
}

VertexSeq dense_tight_path(const KGraph& h, double a) {
  const int m = h.n(), k = h.k();
  require(k >= 2, "dense_tight_path: uniformity must be at least 2");
  require(m >= k, "dense_tight_path: host smaller than its uniformity");
  require(a > 0.0, "dense_tight_path: rate must be positive");
  require(h.edge_count() >= ceil_scaled(a, static_cast<long double>(binomial_ll(m, k))),
          "dense_tight_path: host density below a");

  std::vector<EdgeKey> subs = all_ksets(m, k - 1);
  std::unordered_map<EdgeKey, int> sub_index;
  sub_index.reserve(subs.size() * 2);
  for (size_t i = 0; i < subs.size(); ++i) sub_index[subs[i]] = static_cast<int>(i);
  const auto& edges = h.edge_keys();
  std::vector<std::vector<int>> edge_subs(edges.size());
  std::vector<std::vector<int>> inc(subs.size());
  std::vector<long long> deg(subs.size(), 0);
  int vs[max_uniformity], sb[max_uniformity];
  for (size_t ei = 0; ei < edges.size(); ++ei) {
    unpack_edge(edges[ei], k, vs);
    for (int drop = 0; drop < k; ++drop) {
      int t = 0;
      for (int i = 0; i < k; ++i)
        if (i != drop) sb[t++] = vs[i];
      int si = sub_index.at(pack_edge(sb, k - 1));
      edge_subs[ei].push_back(si);
      inc[static_cast<size_t>(si)].push_back(static_cast<int>(ei));
      deg[static_cast<size_t>(si)] += 1;
    }
  }

  // peel ends of degree below theta, always the lexicographically first
  long long thr = ceil_scaled(a, static_cast<long double>(m - k + 1) / k);
  std::vector<char> alive(edges.size(), 1);
  std::set<int> pending;
  for (size_t si = 0; si < subs.size(); ++si)
    if (deg[si] > 0 && deg[si] < thr) pending.insert(static_cast<int>(si));
  while (!pending.empty()) {
    int si = *pending.begin();
    pending.erase(pending.begin());
    if (deg[static_cast<size_t>(si)] <= 0 || deg[static_cast<size_t>(si)] >= thr) continue;
    for (int ei : inc[static_cast<size_t>(si)]) {
      if (!alive[static_cast<size_t>(ei)]) continue;
      alive[static_cast<size_t>(ei)] = 0;
      for (int sj : edge_subs[static_cast<size_t>(ei)]) {
        deg[static_cast<size_t>(sj)] -= 1;
        if (deg[static_cast<size_t>(sj)] > 0 && deg[static_cast<size_t>(sj)] < thr)
          pending.insert(sj);
        else
          pending.erase(sj);
      }
    }
  }

  int first = -1;
  for (size_t ei = 0; ei < edges.size(); ++ei) {
    if (alive[ei]) {
      first = static_cast<int>(ei);
      break;
    }
  }
  ensure(first >= 0, "dense_tight_path: peeling removed every edge");

  std::vector<int> path = unpack_edge(edges[static_cast<size_t>(first)], k);
  std::vector<char> used(static_cast<size_t>(m), 0);
  for (int v : path) used[static_cast<size_t>(v)] = 1;
  while (true) {
    std::vector<int> end(path.end() - (k - 1), path.end());
    std::sort(end.begin(), end.end());
    EdgeKey end_key = pack_edge(end);
    int next = -1;
    for (int v : h.link(end_key)) {
      if (used[static_cast<size_t>(v)]) continue;
      std::vector<int> e = end;
      e.push_back(v);
      EdgeKey ek = pack_sorted(std::move(e));
      auto it = std::lower_bound(edges.begin(), edges.end(), ek);
      if (it == edges.end() || *it != ek || !alive[static_cast<size_t>(it - edges.begin())])
        continue;
      next = v;
      break;
    }
    if (next < 0) break;
    used[static_cast<size_t>(next)] = 1;
    path.push_back(next);
  }

  VertexSeq seq{std::move(path), k - 1, false};
  ensure(seq.size() >= ceil_scaled(a, static_cast<long double>(m) / k),
         "dense_tight_path: path shorter than a m/k");
  ensure(is_ell_path(h, seq), "dense_tight_path: output is not a tight path");
  return seq;
}

VertexSeq two_path_from_tight(const VertexSeq& tight) {
  require(tight.ell == 3 && !tight.closed,
          "two_path_from_tight: input must be an open tight path in a 4-graph");
  require(tight.size() >= 4, "two_path_from_tight: input shorter than one edge");
  int keep = tight.size() - (tight.size() % 2);
  std::vector<int> prefix(tight.vertices.begin(), tight.vertices.begin() + keep);
  return VertexSeq{std::move(prefix), 2, false};
}

}  // namespace h2c
