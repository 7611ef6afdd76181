#pragma once

#include <optional>
#include <vector>

#include "subspace/model.hpp"

namespace subspace {
namespace spreads {

// exact value of A_q(n,2k;k) when one of the five exactness theorems applies
// (k | n; n mod k = 1; q=2,k=3; q=2,r=2,k>=4; k > [r 1]_q), absent otherwise
std::optional<Int> spread_exact(long q, long n, long k);

// every applicable record of the d = 2k battery; exactness theorems come out
// with Direction::exact, the rest as uppers
std::vector<BoundRecord> upper_battery(long q, long n, long k);

// sigma = floor((q^n-1)/(q^k-1)) - upper
Int deficiency(long q, long n, long k, const Int& upper);

}  // namespace spreads
}  // namespace subspace
