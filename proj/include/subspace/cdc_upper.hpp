#pragma once

#include <optional>
#include <vector>

#include "subspace/cdc_lower.hpp"
#include "subspace/model.hpp"

namespace subspace {
namespace cdc {

Int all_subs(long q, long n, long k);
Int singleton(long q, long n, long d, long k);
Int sphere_packing(long q, long n, long d, long k);
Int anticode(long q, long n, long d, long k);

// applicable iff d = 2 min(k, n-k); then floor((q^n-1)/(q^min-1))
std::optional<Int> xia_fu_johnson(long q, long n, long d, long k);

Int johnson_1(long q, long n, long d, long k, const Lookup& tab);
Int johnson_2(long q, long n, long d, long k, const Lookup& tab);

// one record per admissible w resp. a, parameter carries it
std::vector<BoundRecord> ilp_family(int which, long q, long n, long d, long k,
                                    const Lookup& tab);

// 0 <= t < r = d/2 <= k, k-t <= m <= n, t <= n-m; orth works on n-k
std::optional<Int> ahlswede_aydinian(long q, long n, long d, long k, long t,
                                     long m, bool orth, const Lookup& tab);
// all admissible (t, m) pairs, plain orientation first, then orth
std::vector<BoundRecord> ahlswede_aydinian_records(long q, long n, long d,
                                                   long k, const Lookup& tab);

// the {.}_k sharpening of johnson_1 via divisible multisets; absent when no
// admissible b exists
std::optional<Int> improved_johnson(long q, long n, long d, long k,
                                    const Lookup& tab);

// upper bound for codes containing a lifted MRD code; feeds the
// liftedmrdsizebound attribute only, never best_upper
std::optional<Int> mrd_containing_bound(long q, long n, long d, long k,
                                        const Lookup& tab);

// exact sizes settled by integer linear programming
std::optional<Int> special_exact_cdc(long q, long n, long d, long k);

// all upper records of this module for a canonical cell, catalogue order;
// the d = 2k battery lives in spreads
std::vector<BoundRecord> upper_records(long q, long n, long d, long k,
                                       const Lookup& tab);

}  // namespace cdc
}  // namespace subspace
