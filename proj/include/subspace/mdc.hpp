#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subspace/model.hpp"

namespace subspace {
namespace mdc {

// table snapshot used by the recursive MDC constraints. CDC lookups take raw
// (n, d, k) and normalize internally, so odd distances resolve to d+1. The
// mdc_upper lookup serves relax_d; absent when the even-distance cell is
// still unknown.
struct Lookup {
  std::function<Int(long n, long d, long k)> cdc_lower;
  std::function<Int(long n, long d, long k)> cdc_upper;
  std::function<std::optional<Int>(long n, long d)> mdc_upper;
  long nmax = 0;  // grid boundary; the average argument needs n+1 <= nmax
};

Int gilbert_varshamov(long q, long n, long d);

// L(N) = max(L(N-1), L(N-d) + A_q(n, 2*ceil(d/2); N)), answer L(n)
Int layer_construction(long q, long n, long d, const Lookup& tab);

// the two sides of the residue-class refinement
Int improved_cdc_lower(long q, long n, long d, const Lookup& tab);
Int improved_cdc_upper(long q, long n, long d, const Lookup& tab);

// ceil(max_k (q^(n+1-k) + q^k - 2)/(q^(n+1) - 1) * A_q(n+1, d+1; k));
// absent at the grid's maximal n rather than extrapolated
std::optional<Int> cdc_average_argument(long q, long n, long d,
                                        const Lookup& tab);

// max_k of CDC lowers and sum over k of CDC uppers
std::pair<Int, Int> cdc_projection_bounds(long q, long n, long d,
                                          const Lookup& tab);

// number of k-subspaces in a ball of radius e around an i-dim subspace
Int ev_coefficient(long q, long n, long i, long k, long e);

enum class EvMode { lp, bb };

// sphere-packing ILP for odd d = 2e+1. lp mode floors the exact rational LP
// optimum; bb mode runs branch and bound and falls back to the unfinished
// search's bound when the node budget runs out. Either way a valid upper.
std::optional<Int> etzion_vardy(long q, long n, long d, const Lookup& tab,
                                EvMode mode, long node_budget);

// odd d only: the even-distance cell's best upper
std::optional<Int> relax_d(long q, long n, long d, const Lookup& tab);

// static and polynomial identities; value plus direction when applicable
std::optional<std::pair<Int, Direction>> closed_form(const std::string& id,
                                                     long q, long n, long d);
const std::vector<std::string>& closed_form_ids();

// every applicable constraint at the cell, in catalogue order
std::vector<BoundRecord> records(long q, long n, long d, const Lookup& tab,
                                 EvMode ev_mode, long ev_node_budget);

}  // namespace mdc
}  // namespace subspace
