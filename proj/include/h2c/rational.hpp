#pragma once

#include <gmpxx.h>

namespace h2c {

using Rational = mpq_class;
using BigInt = mpz_class;

// C(n, k); zero when k < 0 or k > n
BigInt binomial_z(long long n, long long k);
Rational binomial_q(long long n, long long k);

// P[X <= threshold] for X hypergeometric: r_rem draws from N_rem items of
// which d_out are marked; d_in is the number already drawn by the caller and
// does not enter the distribution of the remaining draws
Rational hypergeom_tail(long long d_in, long long d_out, long long n_rem, long long r_rem,
                        long long threshold);

double to_double(const Rational& q);

}  // namespace h2c
