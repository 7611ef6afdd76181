#pragma once

#include <string>
#include <vector>

#include "subspace/qcalc.hpp"

namespace subspace {
namespace ef {

// pivot column indices, 0-based ascending; the weight is the size
using Profile = std::vector<int>;

// dots per row: row i counts the non-pivot columns right of the i-th pivot
std::vector<int> ferrers_from_profile(long n, const Profile& v);

// min over i = 0..delta-1 of the dots outside the first i rows and outside
// the rightmost delta-1-i columns; the (conjecturally tight) MRD exponent
long ef_dim_bound(const std::vector<int>& rows, long delta);

enum class Mode { exact, greedy, blocks };

struct Budget {
  long vertex_cap = 400;
  long pair_row_cap = 1000;  // mixed-dimension LP size guard
  long node_budget = 200;
};

struct SkeletonResult {
  Int total = 0;
  std::vector<Profile> skeleton;
  bool proven = false;    // optimum certified (exact mode within budget)
  bool over_cap = false;  // exact requested, cap exceeded, greedy returned
  long nodes = 0;
};

// max (or heuristic) sum of q^ef_dim_bound(v, d/2) over weight-k profiles
// with pairwise Hamming distance >= d
SkeletonResult skeleton_optimize_cdc(long q, long n, long d, long k, Mode mode,
                                     const Budget& budget);

// profiles of any weight, Hamming distance >= d, priced with delta=ceil(d/2)
SkeletonResult skeleton_optimize_mdc(long q, long n, long d, Mode mode,
                                     const Budget& budget);

// python-style list of pivot tuples, e.g. "[(0, 1, 2), (0, 3, 4)]"
std::string profiles_repr(const std::vector<Profile>& ps);

}  // namespace ef
}  // namespace subspace
