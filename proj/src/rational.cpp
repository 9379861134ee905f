#include "h2c/rational.hpp"

#include "h2c/kgraph.hpp"

namespace h2c {

BigInt binomial_z(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational binomial_q(long long n, long long k) { return Rational(binomial_z(n, k)); }

Rational hypergeom_tail(long long d_in, long long d_out, long long n_rem, long long r_rem,
                        long long threshold) {
  require(d_in >= 0 && d_out >= 0 && n_rem >= 0 && r_rem >= 0,
          "hypergeom_tail: negative argument");
  require(r_rem <= n_rem, "hypergeom_tail: more draws than items");
  require(d_out <= n_rem, "hypergeom_tail: more marked items than items");
  if (threshold < 0) return Rational(0);
  BigInt total = binomial_z(n_rem, r_rem);
  ensure(total > 0, "hypergeom_tail: empty sample space");
  BigInt sum(0);
  long long hi = std::min(threshold, std::min(d_out, r_rem));
  for (long long s = 0; s <= hi; ++s) {
    sum += binomial_z(d_out, s) * binomial_z(n_rem - d_out, r_rem - s);
  }
  Rational q(sum, total);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace h2c
