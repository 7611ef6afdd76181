#pragma once

#include <vector>

#include "subspace/qcalc.hpp"

namespace subspace {
namespace divisible {

// s_{i,r}^q = q^(r-i) * (q^(i+1)-1)/(q-1) for i = 0..r; a q^r-divisible
// multiset of points of cardinality m exists iff m is a nonnegative integer
// combination of these.
std::vector<Int> denoms(long q, long r);

bool feasible(long q, long r, const Int& m);

struct FracRound {
  Int value;
  bool feasible = true;  // false when no b >= 0 admits a representation
};

// {a}_k: max b with a - b*[k 1]_q >= 0 and the remainder q^(k-1)-divisible
FracRound frac_round(const Int& a, long q, long k);

// Frobenius number of denoms(q,r): largest infeasible m (gcd is 1, so finite)
Int frobenius(long q, long r);

// Corollary on the fourth MacWilliams identity, Delta = q^exponent; true when
// some integer t in the search window has m/Delta not in [t,t+1], h >= 0 and
// g_2 < 0. Diagnostic only, never feeds a bound.
bool fourth_identity_excludes(long q, long exponent, const Int& m);

}  // namespace divisible
}  // namespace subspace
