#include <algorithm>
#include <array>
#include <vector>

#include "h2c/derand.hpp"

namespace h2c {

namespace {

std::vector<std::array<int, 4>> all_quads(int n) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) out.push_back({a, b, c, d});
  return out;
}

std::uint64_t quad_mask(const std::array<int, 4>& s) {
  return (1ull << s[0]) | (1ull << s[1]) | (1ull << s[2]) | (1ull << s[3]);
}

bool quads_intersect(const std::array<int, 4>& x, const std::array<int, 4>& y) {
  return (quad_mask(x) & quad_mask(y)) != 0;
}

// does H[S ∪ p1 ∪ p2] contain a 2-path with ends p1, p2?  (Within 8 vertices
// such a path has length at most 3.)
bool connects(const KGraph& h, const std::array<int, 4>& s, int p1a, int p1b,
              int p2a, int p2b) {
  std::array<int, 4> fresh{};
  int nf = 0;
  for (int v : s)
    if (v != p1a && v != p1b && v != p2a && v != p2b) fresh[static_cast<size_t>(nf++)] = v;
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      int qa = fresh[static_cast<size_t>(i)], qb = fresh[static_cast<size_t>(j)];
      if (h.has_edge_key(pack_sorted({p1a, p1b, qa, qb})) &&
          h.has_edge_key(pack_sorted({qa, qb, p2a, p2b})))
        return true;
    }
  if (nf == 4 && h.has_edge_key(pack_sorted({s[0], s[1], s[2], s[3]}))) {
    static const int split[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& sp : split) {
      int qa = s[static_cast<size_t>(sp[0])], qb = s[static_cast<size_t>(sp[1])];
      int qc = s[static_cast<size_t>(sp[2])], qd = s[static_cast<size_t>(sp[3])];
      if (h.has_edge_key(pack_sorted({p1a, p1b, qa, qb})) &&
          h.has_edge_key(pack_sorted({qc, qd, p2a, p2b})))
        return true;
      if (h.has_edge_key(pack_sorted({p1a, p1b, qc, qd})) &&
          h.has_edge_key(pack_sorted({qa, qb, p2a, p2b})))
        return true;
    }
  }
  return false;
}

struct LazyParams {
  int n = 0;
  int r = 0;
  long long big_n = 0;
  long long deg_int = 0;
  long long m = 0;
  Rational nu;
};

Rational lazy_b_term(const LazyParams& lp, long long e, int k) {
  long long ep = static_cast<long long>(k) * lp.deg_int - 2 * e;
  long long epp = lp.m - e - ep;
  Rational term(static_cast<long>(e));
  if (lp.r - k >= 1)
    term += Rational(static_cast<long>(ep)) * Rational(lp.r - k) /
            Rational(static_cast<long>(lp.big_n - k));
  if (lp.r - k >= 2)
    term += Rational(static_cast<long>(epp)) * Rational(lp.r - k) * Rational(lp.r - k - 1) /
            (Rational(static_cast<long>(lp.big_n - k)) *
             Rational(static_cast<long>(lp.big_n - k - 1)));
  return term / (lp.nu * lp.r);
}

// selection over the 4-set universe with closed-form auxiliary edge counts;
// valid only when both tail sums vanish identically (tau > beta, lambda > 1/2)
Fallible<std::vector<std::array<int, 4>>> lazy_select(const LazyParams& lp,
                                                      bool disjoint_only) {
  int n = lp.n;
  std::vector<std::array<int, 4>> chosen;
  std::vector<std::uint64_t> masks;
  std::uint64_t used = 0;
  long long e_base = 0;

  // initial potential: the middle term of the estimator at an empty selection
  Rational phi0 = lazy_b_term(lp, 0, 0);
  if (!(phi0 < 1))
    return Fallible<std::vector<std::array<int, 4>>>::fail(
        "select_reservoir", "initial potential is not below 1 at this scale");

  for (int k = 1; k <= lp.r; ++k) {
    bool found = false;
    for (int a = 0; a < n && !found; ++a)
      for (int b = a + 1; b < n && !found; ++b)
        for (int c = b + 1; c < n && !found; ++c)
          for (int d = c + 1; d < n && !found; ++d) {
            std::uint64_t cand_mask =
                (1ull << a) | (1ull << b) | (1ull << c) | (1ull << d);
            if (disjoint_only && (cand_mask & used) != 0) continue;
            bool dup = false;
            long long e = e_base;
            for (std::uint64_t mk : masks) {
              if (mk == cand_mask) {
                dup = true;
                break;
              }
              if ((mk & cand_mask) != 0) ++e;
            }
            if (dup) continue;
            if (lazy_b_term(lp, e, k) < 1) {
              chosen.push_back({a, b, c, d});
              masks.push_back(cand_mask);
              used |= cand_mask;
              e_base = e;
              found = true;
            }
          }
    if (!found)
      return Fallible<std::vector<std::array<int, 4>>>::fail(
          "select_reservoir",
          "no admissible 4-set at step " + std::to_string(k) +
              (disjoint_only ? " under the disjointness restriction" : ""));
  }

  // independence deletion: drop the lexicographically larger of each
  // intersecting pair still alive
  std::sort(chosen.begin(), chosen.end());
  std::vector<char> alive(chosen.size(), 1);
  for (size_t i = 0; i < chosen.size(); ++i)
    for (size_t j = i + 1; j < chosen.size(); ++j)
      if (alive[i] && alive[j] && quads_intersect(chosen[i], chosen[j]))
        alive[j] = 0;
  std::vector<std::array<int, 4>> kept;
  for (size_t i = 0; i < chosen.size(); ++i)
    if (alive[i]) kept.push_back(chosen[i]);
  return Fallible<std::vector<std::array<int, 4>>>::success(std::move(kept));
}

struct MaterializedAux {
  DerandInput input;
  std::vector<std::array<int, 4>> quads;
};

MaterializedAux materialize(const KGraph& h, const SimpleGraph& g,
                            const Rational& beta, const Rational& lambda,
                            const Rational& tau, int r) {
  int n = h.n();
  MaterializedAux aux;
  aux.quads = all_quads(n);
  int big_n = static_cast<int>(aux.quads.size());

  std::vector<std::array<int, 4>> upairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = a; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (std::make_pair(c, d) <= std::make_pair(a, b)) continue;
          if (c == a || c == b || d == a || d == b) continue;
          upairs.push_back({a, b, c, d});
        }

  DerandInput& in = aux.input;
  in.m_u = static_cast<int>(upairs.size());
  in.n_w = big_n;
  in.r = r;
  in.beta = beta;
  in.lambda = lambda;
  in.tau = tau;
  in.cross.assign(static_cast<size_t>(in.m_u),
                  std::vector<std::uint64_t>(static_cast<size_t>((big_n + 63) / 64), 0));
  for (int u = 0; u < in.m_u; ++u) {
    const auto& pp = upairs[static_cast<size_t>(u)];
    for (int w = 0; w < big_n; ++w)
      if (connects(h, aux.quads[static_cast<size_t>(w)], pp[0], pp[1], pp[2], pp[3]))
        in.cross[static_cast<size_t>(u)][static_cast<size_t>(w) / 64] |=
            1ull << (static_cast<unsigned>(w) % 64);
  }

  in.g1w = SimpleGraph(big_n);
  in.g2 = SimpleGraph(big_n);
  for (int i = 0; i < big_n; ++i)
    for (int j = i + 1; j < big_n; ++j) {
      const auto& si = aux.quads[static_cast<size_t>(i)];
      const auto& sj = aux.quads[static_cast<size_t>(j)];
      if (quads_intersect(si, sj)) {
        in.g1w.add_edge(i, j);
        continue;
      }
      bool complete = true;
      for (int x : si) {
        for (int y : sj)
          if (!g.has_edge(x, y)) {
            complete = false;
            break;
          }
        if (!complete) break;
      }
      if (complete) in.g2.add_edge(i, j);
    }
  return aux;
}

ReservoirResult pack_result(std::vector<std::array<int, 4>> groups,
                            bool restricted) {
  ReservoirResult res;
  std::sort(groups.begin(), groups.end());
  res.groups = std::move(groups);
  res.restricted_run = restricted;
  for (const auto& s : res.groups)
    for (int v : s) res.vertices.push_back(v);
  std::sort(res.vertices.begin(), res.vertices.end());
  return res;
}

}  // namespace

int reservoir_connection_count(const KGraph& h,
                               const std::vector<std::array<int, 4>>& groups,
                               std::pair<int, int> p1, std::pair<int, int> p2) {
  std::vector<int> interior;
  for (const auto& s : groups)
    for (int v : s)
      if (v != p1.first && v != p1.second && v != p2.first && v != p2.second)
        interior.push_back(v);
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  int t = static_cast<int>(interior.size());

  // a pair {x,y} of interior vertices carries a length-2 path when both
  // bracketing edges exist; disjoint interiors give internally disjoint paths
  SimpleGraph carrier(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      int x = interior[static_cast<size_t>(i)], y = interior[static_cast<size_t>(j)];
      if (h.has_edge_key(pack_sorted({p1.first, p1.second, x, y})) &&
          h.has_edge_key(pack_sorted({x, y, p2.first, p2.second})))
        carrier.add_edge(i, j);
    }
  auto matched = maximum_matching(carrier);
  int count = static_cast<int>(matched.size());

  // leftover vertices may still carry length-3 paths through a middle edge
  std::vector<char> used(static_cast<size_t>(t), 0);
  for (const auto& [a, b] : matched) used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = 1;
  std::vector<int> rest;
  for (int i = 0; i < t; ++i)
    if (!used[static_cast<size_t>(i)]) rest.push_back(interior[static_cast<size_t>(i)]);
  int nr = static_cast<int>(rest.size());
  std::vector<char> taken(static_cast<size_t>(nr), 0);
  for (int a = 0; a < nr; ++a)
    for (int b = a + 1; b < nr; ++b)
      for (int c = b + 1; c < nr; ++c)
        for (int d = c + 1; d < nr; ++d) {
          if (taken[static_cast<size_t>(a)] || taken[static_cast<size_t>(b)] ||
              taken[static_cast<size_t>(c)] || taken[static_cast<size_t>(d)])
            continue;
          std::array<int, 4> s{rest[static_cast<size_t>(a)], rest[static_cast<size_t>(b)],
                               rest[static_cast<size_t>(c)], rest[static_cast<size_t>(d)]};
          if (connects(h, s, p1.first, p1.second, p2.first, p2.second)) {
            taken[static_cast<size_t>(a)] = taken[static_cast<size_t>(b)] = 1;
            taken[static_cast<size_t>(c)] = taken[static_cast<size_t>(d)] = 1;
            ++count;
          }
        }
  return count;
}

ReservoirAudit verify_reservoir(const KGraph& h, const SimpleGraph& g,
                                double rho, double kappa, double lambda,
                                const ReservoirResult& res) {
  int n = h.n();
  Rational rho_q(rho), kappa_q(kappa), lambda_q(lambda);
  Rational size(static_cast<long>(res.vertices.size()));

  ReservoirAudit audit;
  audit.size_ok = size >= (Rational(1) - Rational(4) * rho_q) * rho_q * n &&
                  size <= rho_q * n;

  audit.degree_ok = true;
  Rational degree_bound = (Rational(1) - Rational(35) * lambda_q) * size;
  for (int x = 0; x < n && audit.degree_ok; ++x) {
    long long hits = 0;
    for (int v : res.vertices)
      if (g.has_edge(x, v)) ++hits;
    if (Rational(static_cast<long>(hits)) < degree_bound) audit.degree_ok = false;
  }

  audit.connect_ok = true;
  Rational connect_bound = kappa_q / 5 * size;
  for (int a = 0; a < n && audit.connect_ok; ++a)
    for (int b = a + 1; b < n && audit.connect_ok; ++b)
      for (int c = a; c < n && audit.connect_ok; ++c)
        for (int d = c + 1; d < n && audit.connect_ok; ++d) {
          if (std::make_pair(c, d) <= std::make_pair(a, b)) continue;
          if (c == a || c == b || d == a || d == b) continue;
          int paths = reservoir_connection_count(h, res.groups, {a, b}, {c, d});
          if (Rational(paths) < connect_bound) audit.connect_ok = false;
        }
  return audit;
}

Fallible<ReservoirResult> select_reservoir(const KGraph& h, const SimpleGraph& g,
                                           double rho, double kappa,
                                           double lambda) {
  require(h.k() == 4, "reservoir selection expects a 4-graph");
  require(g.n() == h.n(), "companion graph must share the vertex set");
  require(rho > 0 && kappa > 0 && lambda > 0, "rates must be positive");
  int n = h.n();
  require(n <= 64, "reservoir selection supports n <= 64");

  Rational rho_q(rho), kappa_q(kappa), lambda_q(lambda);
  long long r_ll = floor_rational(rho_q * n / 4);
  if (r_ll < 1)
    return Fallible<ReservoirResult>::fail(
        "select_reservoir", "rho n / 4 is below 1; no 4-set budget at this scale");
  int r = static_cast<int>(r_ll);

  Rational lambda_prime = Rational(17) * lambda_q;
  if (lambda_prime > 1) lambda_prime = Rational(1);
  Rational beta = kappa_q, tau = rho_q;

  auto finish = [&](std::vector<std::array<int, 4>> groups,
                    bool restricted) -> Fallible<ReservoirResult> {
    ReservoirResult res = pack_result(std::move(groups), restricted);
    ReservoirAudit audit = verify_reservoir(h, g, rho, kappa, lambda, res);
    if (audit.all_ok()) return Fallible<ReservoirResult>::success(std::move(res));
    return Fallible<ReservoirResult>::fail(
        "select_reservoir",
        std::string("re-verification failed (") +
            (audit.size_ok ? "" : "size ") + (audit.degree_ok ? "" : "degree ") +
            (audit.connect_ok ? "" : "connectivity") + ")");
  };

  bool vacuous_tails = tau > beta && Rational(2) * lambda_prime > 1;
  if (vacuous_tails) {
    LazyParams lp;
    lp.n = n;
    lp.r = r;
    lp.big_n = binomial_ll(n, 4);
    lp.deg_int = lp.big_n - 1 - binomial_ll(n - 4, 4);
    lp.m = lp.big_n * lp.deg_int / 2;
    if (lp.m <= 0)
      return Fallible<ReservoirResult>::fail("select_reservoir",
                                             "degenerate 4-set universe");
    lp.nu = Rational(2) * Rational(static_cast<long>(lp.m)) * r /
            (Rational(static_cast<long>(lp.big_n)) * Rational(static_cast<long>(lp.big_n)));

    auto first = lazy_select(lp, false);
    if (first.ok()) {
      auto done = finish(std::move(*first), false);
      if (done.ok()) return done;
    }
    auto second = lazy_select(lp, true);
    if (!second.ok()) return Fallible<ReservoirResult>::fail(second.failure.value());
    return finish(std::move(*second), true);
  }

  if (binomial_ll(n, 4) > 1100)
    return Fallible<ReservoirResult>::fail(
        "select_reservoir",
        "active tail sums need materialised auxiliary graphs; instance too large");

  try {
    MaterializedAux aux = materialize(h, g, beta, lambda_prime, tau, r);
    auto to_groups = [&](const SelectSetResult& sel) {
      std::vector<std::array<int, 4>> groups;
      for (int w : sel.selected) groups.push_back(aux.quads[static_cast<size_t>(w)]);
      return groups;
    };
    auto first = select_set(aux.input);
    if (first.ok()) {
      auto done = finish(to_groups(*first), false);
      if (done.ok()) return done;
    } else if (first.failure->detail.find("initial potential") != std::string::npos) {
      return Fallible<ReservoirResult>::fail(first.failure.value());
    }
    auto allowed = [&](int j, const std::vector<int>& chosen) {
      for (int c : chosen)
        if (quads_intersect(aux.quads[static_cast<size_t>(j)],
                            aux.quads[static_cast<size_t>(c)]))
          return false;
      return true;
    };
    auto second = select_set_filtered(aux.input, allowed);
    if (!second.ok()) return Fallible<ReservoirResult>::fail(second.failure.value());
    return finish(to_groups(*second), true);
  } catch (const contract_error& err) {
    return Fallible<ReservoirResult>::fail(
        "select_reservoir",
        std::string("auxiliary graphs violate the selection setup: ") + err.what());
  }
}

}  // namespace h2c
