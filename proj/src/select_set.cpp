#include "h2c/derand.hpp"

#include <algorithm>
#include <unordered_map>

namespace h2c {

namespace {

int popcount_row(const std::vector<std::uint64_t>& row) {
  int c = 0;
  for (std::uint64_t w : row) c += __builtin_popcountll(w);
  return c;
}

long long edges_inside(const SimpleGraph& g, const std::vector<int>& vs) {
  long long e = 0;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) ++e;
  return e;
}

}  // namespace

long long floor_rational(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  ensure(fl.fits_slong_p(), "rational floor out of machine range");
  return fl.get_si();
}

int DerandInput::cross_degree(int u) const {
  return popcount_row(cross[static_cast<size_t>(u)]);
}

Rational DerandInput::nu() const {
  long long m = g1w.edge_count();
  if (m == 0) return Rational(0);
  Rational num = Rational(2) * Rational(static_cast<long>(m)) * r;
  Rational den = Rational(n_w) * Rational(n_w);
  return num / den;
}

void DerandInput::validate() const {
  require(m_u >= 0, "derand input needs m_u >= 0");
  require(n_w >= 1, "derand input needs n_w >= 1");
  require(1 <= r && r <= n_w, "derand input needs 1 <= r <= n_w");
  Rational zero(0), one(1);
  require(beta > zero && beta <= one, "beta must lie in (0,1]");
  require(lambda > zero && lambda <= one, "lambda must lie in (0,1]");
  require(tau > zero && tau <= one, "tau must lie in (0,1]");
  require(static_cast<int>(cross.size()) == m_u, "cross row count mismatch");
  int words = cross_words();
  for (int u = 0; u < m_u; ++u) {
    require(static_cast<int>(cross[static_cast<size_t>(u)].size()) == words,
            "cross row width mismatch");
    if (n_w % 64 != 0) {
      std::uint64_t tail_mask = ~0ull << (n_w % 64);
      require((cross[static_cast<size_t>(u)].back() & tail_mask) == 0,
              "cross row has bits past n_w");
    }
  }
  require(g1w.n() == n_w, "g1w vertex count mismatch");
  require(g2.n() == n_w, "g2 vertex count mismatch");
  for (int u = 0; u < m_u; ++u)
    require(Rational(cross_degree(u)) >= beta * n_w,
            "cross degree below beta N");
  for (int w = 0; w < n_w; ++w)
    require(Rational(g2.degree(w)) >= (one - lambda) * n_w,
            "g2 degree below (1-lambda) N");
}

DerandInput DerandInput::from_joint(const SimpleGraph& g1, int m_u,
                                    const SimpleGraph& g2, int r, Rational beta,
                                    Rational lambda, Rational tau) {
  require(m_u >= 0 && m_u < g1.n(), "joint graph needs 0 <= m_u < |V|");
  int n_w = g1.n() - m_u;
  DerandInput in;
  in.m_u = m_u;
  in.n_w = n_w;
  in.r = r;
  in.beta = std::move(beta);
  in.lambda = std::move(lambda);
  in.tau = std::move(tau);
  in.cross.assign(static_cast<size_t>(m_u),
                  std::vector<std::uint64_t>(static_cast<size_t>((n_w + 63) / 64), 0));
  for (int u = 0; u < m_u; ++u)
    for (int v : g1.neighbors(u)) {
      require(v >= m_u, "G1[U] must be empty");
      int w = v - m_u;
      in.cross[static_cast<size_t>(u)][static_cast<size_t>(w) / 64] |=
          1ull << (static_cast<unsigned>(w) % 64);
    }
  in.g1w = SimpleGraph(n_w);
  for (int a = m_u; a < g1.n(); ++a)
    for (int b : g1.neighbors(a))
      if (b > a) in.g1w.add_edge(a - m_u, b - m_u);
  in.g2 = g2;
  in.validate();
  return in;
}

Rational select_set_potential(const DerandInput& in,
                              const std::vector<int>& chosen) {
  int big_n = in.n_w;
  int r = in.r;
  int k = static_cast<int>(chosen.size());
  require(k <= r, "partial selection longer than r");
  std::vector<char> flag(static_cast<size_t>(big_n), 0);
  for (int j : chosen) {
    require(0 <= j && j < big_n, "selection index out of range");
    require(!flag[static_cast<size_t>(j)], "selection repeats an index");
    flag[static_cast<size_t>(j)] = 1;
  }

  Rational total(0);
  for (int u = 0; u < in.m_u; ++u) {
    long long d = 0;
    for (int j : chosen)
      if (in.cross_has(u, j)) ++d;
    long long dp = in.cross_degree(u) - d;
    long long thr = floor_rational((in.beta - in.tau) * r - Rational(static_cast<long>(d)));
    total += hypergeom_tail(d, dp, big_n - k, r - k, thr);
  }

  long long m = in.w_edge_count();
  if (m > 0) {
    long long e = edges_inside(in.g1w, chosen);
    long long degsum = 0;
    for (int j : chosen) degsum += in.g1w.degree(j);
    long long ep = degsum - 2 * e;
    long long epp = m - e - ep;
    Rational term(static_cast<long>(e));
    if (r - k >= 1)
      term += Rational(static_cast<long>(ep)) * Rational(r - k) / Rational(big_n - k);
    if (r - k >= 2)
      term += Rational(static_cast<long>(epp)) * Rational(r - k) * Rational(r - k - 1) /
              (Rational(big_n - k) * Rational(big_n - k - 1));
    total += term / (in.nu() * r);
  }

  for (int w = 0; w < big_n; ++w) {
    long long f = 0;
    for (int j : chosen)
      if (in.g2.has_edge(w, j)) ++f;
    long long fp = in.g2.degree(w) - f;
    long long thr = floor_rational((Rational(1) - Rational(2) * in.lambda) * r -
                                   Rational(static_cast<long>(f)));
    total += hypergeom_tail(f, fp, big_n - k, r - k, thr);
  }
  return total;
}

namespace {

Fallible<SelectSetResult> run_select(
    const DerandInput& in,
    const std::function<bool(int, const std::vector<int>&)>& allowed,
    bool unrestricted) {
  in.validate();
  int big_n = in.n_w;
  int big_m = in.m_u;
  int r = in.r;
  Rational nu = in.nu();
  Rational one(1);

  SelectSetResult res;
  res.nu = nu;
  Rational phi0 = select_set_potential(in, {});
  res.potentials.push_back(phi0);
  if (!(phi0 < one))
    return Fallible<SelectSetResult>::fail(
        "select_set", "initial potential " + std::to_string(to_double(phi0)) +
                          " is not below 1 at this scale");

  long long m = in.w_edge_count();
  std::vector<char> taken(static_cast<size_t>(big_n), 0);
  std::vector<long long> du(static_cast<size_t>(big_m), 0);
  std::vector<long long> fw(static_cast<size_t>(big_n), 0);
  std::vector<long long> deg_u(static_cast<size_t>(big_m));
  for (int u = 0; u < big_m; ++u) deg_u[static_cast<size_t>(u)] = in.cross_degree(u);
  long long e_base = 0;
  long long degsum = 0;

  for (int k = 1; k <= r; ++k) {
    // tails depend only on (count-in, count-out) once the step fixes the
    // remaining draw sizes, so they are cached per step
    std::unordered_map<long long, Rational> tail_a, tail_c;
    auto a_tail = [&](long long d, long long dp) -> const Rational& {
      long long key = d * (big_n + 1) + dp;
      auto it = tail_a.find(key);
      if (it != tail_a.end()) return it->second;
      long long thr =
          floor_rational((in.beta - in.tau) * r - Rational(static_cast<long>(d)));
      return tail_a.emplace(key, hypergeom_tail(d, dp, big_n - k, r - k, thr))
          .first->second;
    };
    auto c_tail = [&](long long f, long long fp) -> const Rational& {
      long long key = f * (big_n + 1) + fp;
      auto it = tail_c.find(key);
      if (it != tail_c.end()) return it->second;
      long long thr = floor_rational((Rational(1) - Rational(2) * in.lambda) * r -
                                     Rational(static_cast<long>(f)));
      return tail_c.emplace(key, hypergeom_tail(f, fp, big_n - k, r - k, thr))
          .first->second;
    };

    int pick = -1;
    Rational pick_phi;
    for (int j = 0; j < big_n && pick < 0; ++j) {
      if (taken[static_cast<size_t>(j)]) continue;
      if (!allowed(j, res.chosen)) continue;

      Rational phi(0);
      for (int u = 0; u < big_m; ++u) {
        long long d = du[static_cast<size_t>(u)] + (in.cross_has(u, j) ? 1 : 0);
        phi += a_tail(d, deg_u[static_cast<size_t>(u)] - d);
      }
      if (m > 0) {
        long long e = e_base;
        for (int c : res.chosen)
          if (in.g1w.has_edge(c, j)) ++e;
        long long ep = degsum + in.g1w.degree(j) - 2 * e;
        long long epp = m - e - ep;
        Rational term(static_cast<long>(e));
        if (r - k >= 1)
          term += Rational(static_cast<long>(ep)) * Rational(r - k) / Rational(big_n - k);
        if (r - k >= 2)
          term += Rational(static_cast<long>(epp)) * Rational(r - k) *
                  Rational(r - k - 1) /
                  (Rational(big_n - k) * Rational(big_n - k - 1));
        phi += term / (nu * r);
      }
      if (phi >= one) continue;
      for (int w = 0; w < big_n; ++w) {
        long long f = fw[static_cast<size_t>(w)] + (in.g2.has_edge(w, j) ? 1 : 0);
        phi += c_tail(f, in.g2.degree(w) - f);
        if (phi >= one) break;
      }
      if (phi < one) {
        pick = j;
        pick_phi = phi;
      }
    }

    if (pick < 0) {
      ensure(!unrestricted,
             "no admissible index despite potential below 1; the "
             "total-probability identity rules this out");
      return Fallible<SelectSetResult>::fail(
          "select_set", "no admissible candidate under the selection filter at step " +
                            std::to_string(k));
    }

    for (int u = 0; u < big_m; ++u)
      if (in.cross_has(u, pick)) ++du[static_cast<size_t>(u)];
    for (int w : in.g2.neighbors(pick)) ++fw[static_cast<size_t>(w)];
    for (int c : res.chosen)
      if (in.g1w.has_edge(c, pick)) ++e_base;
    degsum += in.g1w.degree(pick);
    taken[static_cast<size_t>(pick)] = 1;
    res.chosen.push_back(pick);
    res.potentials.push_back(pick_phi);
  }

  // one removal per edge inside the selection, dropping the larger index
  std::vector<int> sorted_sel = res.chosen;
  std::sort(sorted_sel.begin(), sorted_sel.end());
  std::vector<char> alive(static_cast<size_t>(big_n), 0);
  for (int j : sorted_sel) alive[static_cast<size_t>(j)] = 1;
  for (size_t i = 0; i < sorted_sel.size(); ++i)
    for (size_t j = i + 1; j < sorted_sel.size(); ++j) {
      int a = sorted_sel[i], b = sorted_sel[j];
      if (alive[static_cast<size_t>(a)] && alive[static_cast<size_t>(b)] &&
          in.g1w.has_edge(a, b)) {
        alive[static_cast<size_t>(b)] = 0;
        res.removed.push_back(b);
      }
    }
  for (int j : sorted_sel)
    if (alive[static_cast<size_t>(j)]) res.selected.push_back(j);
  return Fallible<SelectSetResult>::success(std::move(res));
}

}  // namespace

Fallible<SelectSetResult> select_set(const DerandInput& in) {
  return run_select(in, [](int, const std::vector<int>&) { return true; }, true);
}

Fallible<SelectSetResult> select_set_filtered(
    const DerandInput& in,
    const std::function<bool(int, const std::vector<int>&)>& allowed) {
  return run_select(in, allowed, false);
}

SelectSetAudit verify_select_set(const DerandInput& in,
                                 const SelectSetResult& res) {
  SelectSetAudit audit;
  Rational nu = in.nu();
  Rational size(static_cast<long>(res.selected.size()));
  audit.size_ok = size >= (Rational(1) - nu) * in.r && size <= Rational(in.r);
  audit.independent_ok = edges_inside(in.g1w, res.selected) == 0;

  audit.cross_ok = true;
  Rational cross_bound = (in.beta - in.tau - nu) * in.r;
  for (int u = 0; u < in.m_u && audit.cross_ok; ++u) {
    long long hits = 0;
    for (int j : res.selected)
      if (in.cross_has(u, j)) ++hits;
    if (Rational(static_cast<long>(hits)) < cross_bound) audit.cross_ok = false;
  }

  audit.cover_ok = true;
  Rational cover_bound = (Rational(1) - Rational(2) * in.lambda - nu) * in.r;
  for (int w = 0; w < in.n_w && audit.cover_ok; ++w) {
    long long hits = 0;
    for (int j : res.selected)
      if (in.g2.has_edge(w, j)) ++hits;
    if (Rational(static_cast<long>(hits)) < cover_bound) audit.cover_ok = false;
  }
  return audit;
}

}  // namespace h2c
