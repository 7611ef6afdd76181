#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "subspace/model.hpp"

namespace subspace {
namespace cdc {

// best-known bounds for subparameters at the same q; the engine passes a
// snapshot of its table. Raw (n, d, k) arguments, callee normalizes; out of
// range means value 0.
struct Lookup {
  std::function<Int(long n, long d, long k)> lower;
  std::function<Int(long n, long d, long k)> upper;
};

// trivial cells exactly, otherwise the lifted MRD size resp. the number of
// all subspaces; enough for standalone evaluation and tests
Lookup trivial_lookup(long q);

Int lifted_mrd(long q, long n, long d, long k);
Int sphere_covering(long q, long n, long d, long k);
Int graham_sloane(long q, long n, long d, long k);  // d >= 4
Int multicomponent(long q, long n, long d, long k);

enum class ClosedFormId {
  trivial_1,
  lin_poly,
  partial_spread_3,
  construction_1,
  construction_2,
  construction_ST_A_1,
  construction_ST_B,
  construction_3,
  coset_construction,
  Gorla_Ravagnani_2014,
  HonoldKiermaierKurz_n6_d4_k3,
  construction_honold,
  construction_HK15,
  expurgation_augmentation_general,
  expurgation_augmentation_special_cases,
  Bardestani_Iranmanesh,
  singer_orbit_table,
  CossidentePavese14_theorem311,
  CossidentePavese14_theorem38,
  CossidentePavese14_theorem43,
  CossidentePavese_n6_d4_k3,
};

const char* closed_form_name(ClosedFormId id);
const std::vector<ClosedFormId>& closed_form_ids();

// the theorem's value when its applicability predicate holds at the given
// canonical cell, absent otherwise
std::optional<Int> closed_form_lower(ClosedFormId id, long q, long n, long d,
                                     long k, const Lookup& tab);

// s1*s2*min(p1,p2)*m when both ambient spaces carry a known parallelism,
// contributing to A_q(n1+n2, 4; k1+k2)
std::optional<Int> coset_parallelism(long q, long n1, long k1, long n2,
                                     long k2);
// every admissible split of the cell, parameter "n1, k1, n2, k2"
std::vector<BoundRecord> parallelism_records(long q, long n, long d, long k);

enum class LinkageVariant { ST, GLT, improved };

const char* linkage_id(LinkageVariant v);

// one record per admissible m (ascending); parameter is the bare m
std::vector<BoundRecord> linkage_records(long q, long n, long d, long k,
                                         LinkageVariant v, const Lookup& tab);
// best value together with the smallest maximizing m
std::optional<std::pair<Int, long>> linkage(long q, long n, long d, long k,
                                            LinkageVariant v,
                                            const Lookup& tab);

// all lower records of this module for a canonical cell, catalogue order;
// the echelon-Ferrers optimizer and the d = 2k battery live elsewhere
std::vector<BoundRecord> lower_records(long q, long n, long d, long k,
                                       const Lookup& tab);

}  // namespace cdc
}  // namespace subspace
