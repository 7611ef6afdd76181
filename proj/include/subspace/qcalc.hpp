#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace subspace {

// exact arithmetic everywhere; no doubles in any bound formula
using Int = mpz_class;
using Rat = mpq_class;

namespace qcalc {

Int pow(const Int& base, long exp);  // exp >= 0
Int pow2(long exp);

// floor(a/b) resp. ceil(a/b) for b > 0
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

Int isqrt(const Int& a);  // floor(sqrt(a)), a >= 0

// Gaussian binomial [n k]_q as a polynomial in q evaluated at an arbitrary
// integer q (0 for k < 0 or k > n). Values for q >= 2 are memoized.
Int gauss_binom(long n, long k, const Int& q);

// ceil(q^e): q^e for e >= 0 and 1 for e < 0 (0 < q^e < 1). Used for the
// size of an MRD code of m x m' matrices, rank distance d:
// ceil(q^(max(m,m')*(min(m,m')-d+1))).
Int ceil_power(const Int& q, long e);
Int mrd_size(const Int& q, long rows, long cols, long rank_dist);

std::string to_string(const Int& v);

}  // namespace qcalc
}  // namespace subspace
