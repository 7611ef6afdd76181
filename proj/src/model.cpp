#include "subspace/model.hpp"

#include <algorithm>
#include <unordered_map>

namespace subspace {

bool is_prime_power(long q) {
  if (q < 2) return false;
  long m = q;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1;
    }
  }
  return true;  // q itself prime
}

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::lower: return "lower";
    case Direction::upper: return "upper";
    default: return "exact";
  }
}

std::optional<Direction> direction_from_name(const std::string& s) {
  if (s == "lower") return Direction::lower;
  if (s == "upper") return Direction::upper;
  if (s == "exact") return Direction::exact;
  return std::nullopt;
}

NormalizedCdc normalize_cdc(const CdcParams& p) {
  NormalizedCdc r;
  r.canonical = p;
  if (p.k < 0 || p.k > p.n) {
    r.out_of_range = true;
    r.trivial = Int(0);
    return r;
  }
  if (r.canonical.d % 2 == 1) {
    r.canonical.d += 1;
    r.aliased = true;
  }
  if (r.canonical.k > p.n - r.canonical.k) {
    r.canonical.k = p.n - r.canonical.k;
    r.aliased = true;
  }
  const long q = p.q, n = p.n, k = r.canonical.k, d = r.canonical.d;
  if (k == 0) {
    r.trivial = Int(1);
  } else if (d <= 2) {
    r.trivial = qcalc::gauss_binom(n, k, Int(q));
  } else if (d > 2 * k) {
    r.trivial = Int(1);
  }
  return r;
}

std::optional<std::string> validate_cdc(const CdcParams& p, long nmax) {
  if (!is_prime_power(p.q)) return "q must be a prime power";
  if (p.n < 1 || p.n > nmax) return "n out of range";
  if (p.d < 1 || p.d > 2 * p.n) return "d out of range";
  if (p.k < 0 || p.k > p.n) return "k out of range";
  return std::nullopt;
}

std::optional<std::string> validate_mdc(const MdcParams& p, long nmax) {
  if (!is_prime_power(p.q)) return "q must be a prime power";
  if (p.n < 1 || p.n > nmax) return "n out of range";
  if (p.d < 1 || p.d > p.n) return "d out of range";
  return std::nullopt;
}

const std::vector<ConstraintInfo>& constraint_catalogue() {
  // insertion order = emission order in views and the API; the leading ids
  // follow the reference dump for (2,6,4,3)
  static const std::vector<ConstraintInfo> cat = {
      // cdc upper
      {"all_subs", Kind::cdc_upper},
      {"singleton", Kind::cdc_upper},
      {"ilp_2", Kind::cdc_upper},
      {"ilp_3", Kind::cdc_upper},
      {"anticode", Kind::cdc_upper},
      {"sphere_packing", Kind::cdc_upper},
      {"ilp_1", Kind::cdc_upper},
      {"ilp_4", Kind::cdc_upper},
      {"johnson_1", Kind::cdc_upper},
      {"johnson_2", Kind::cdc_upper},
      {"Ahlswede_Aydinian", Kind::cdc_upper},
      {"improved_johnson", Kind::cdc_upper},
      {"XiaFuJohnson1", Kind::cdc_upper},
      {"special_case_2_8_6_4", Kind::cdc_upper},
      // partial spread battery (d = 2k)
      {"spread", Kind::cdc_exact},
      {"partial_spread_1", Kind::cdc_exact},
      {"partial_spread_2", Kind::cdc_exact},
      {"partial_spread_kurz_q2", Kind::cdc_exact},
      {"partial_spread_NS", Kind::cdc_exact},
      {"spread_bound", Kind::cdc_upper},
      {"partial_spread_5", Kind::cdc_upper},
      {"DrakeFreeman", Kind::cdc_upper},
      {"partial_spread_NS_upper_bound", Kind::cdc_upper},
      {"partial_spread_NS_2_Theorem6", Kind::cdc_upper},
      {"partial_spread_NS_2_Theorem7", Kind::cdc_upper},
      {"partial_spread_kurz16_28", Kind::cdc_upper},
      {"partial_spread_HKK16_T10", Kind::cdc_upper},
      {"partial_spread_kurz_q3", Kind::cdc_upper},
      {"partial_spread_kurz16_additional", Kind::cdc_upper},
      // cdc lower
      {"trivial_1", Kind::cdc_lower},
      {"lin_poly", Kind::cdc_lower},
      {"sphere_covering", Kind::cdc_lower},
      {"graham_sloane", Kind::cdc_lower},
      {"construction_1", Kind::cdc_lower},
      {"construction_2", Kind::cdc_lower},
      {"multicomponent", Kind::cdc_lower},
      {"partial_spread_3", Kind::cdc_lower},
      {"HonoldKiermaierKurz_n6_d4_k3", Kind::cdc_lower},
      {"ef_computation", Kind::cdc_lower},
      {"echelon_ferrers", Kind::cdc_lower},
      {"greedy_multicomponent", Kind::cdc_lower},
      {"CossidentePavese_n6_d4_k3", Kind::cdc_lower},
      {"CossidentePavese14_theorem38", Kind::cdc_lower},
      {"CossidentePavese14_theorem311", Kind::cdc_lower},
      {"CossidentePavese14_theorem43", Kind::cdc_lower},
      {"construction_ST_A_1", Kind::cdc_lower},
      {"construction_ST_B", Kind::cdc_lower},
      {"construction_3", Kind::cdc_lower},
      {"coset_construction", Kind::cdc_lower},
      {"coset_construction_parallelism_part", Kind::cdc_lower},
      {"Gorla_Ravagnani_2014", Kind::cdc_lower},
      {"construction_honold", Kind::cdc_lower},
      {"construction_HK15", Kind::cdc_lower},
      {"expurgation_augmentation_general", Kind::cdc_lower},
      {"expurgation_augmentation_special_cases", Kind::cdc_lower},
      {"Bardestani_Iranmanesh", Kind::cdc_lower},
      {"singer_orbit_table", Kind::cdc_lower},
      {"linkage_ST", Kind::cdc_lower},
      {"linkage_GLT", Kind::cdc_lower},
      {"improved_linkage", Kind::cdc_lower},
      {"external", Kind::cdc_lower},
      // mdc
      {"trivial_2", Kind::mdc_lower},
      {"trivial_3", Kind::mdc_upper},
      {"trivial_4", Kind::mdc_lower},
      {"trivial_dle1", Kind::mdc_exact},
      {"gilbert_varshamov", Kind::mdc_lower},
      {"cdc_lower_bound", Kind::mdc_lower},
      {"improved_cdc_lower_bound", Kind::mdc_lower},
      {"layer_construction", Kind::mdc_lower},
      {"cdc_average_argument", Kind::mdc_lower},
      {"nodd_deqnm2_l", Kind::mdc_lower},
      {"cdc_upper_bound", Kind::mdc_upper},
      {"improved_cdc_upper_bound", Kind::mdc_upper},
      {"Etzion_Vardy_ilp", Kind::mdc_upper},
      {"relax_d", Kind::mdc_upper},
      {"semidefinite_programming", Kind::mdc_upper},
      {"special_cases_upper_notderived", Kind::mdc_upper},
      {"nodd_deqnm2_u", Kind::mdc_upper},
      {"nodd_deqn", Kind::mdc_upper},
      {"d2", Kind::mdc_exact},
      {"neqdeven", Kind::mdc_exact},
      {"neven_deqnm1", Kind::mdc_exact},
      {"nodd_deqnm1", Kind::mdc_exact},
      {"nodd_deqnm2_e", Kind::mdc_exact},
      {"n5_d3_CPS", Kind::mdc_exact},
  };
  return cat;
}

size_t catalogue_rank(const std::string& id) {
  static const std::unordered_map<std::string, size_t> ranks = [] {
    std::unordered_map<std::string, size_t> m;
    const auto& cat = constraint_catalogue();
    for (size_t i = 0; i < cat.size(); ++i) m.emplace(cat[i].id, i);
    return m;
  }();
  auto it = ranks.find(id);
  return it == ranks.end() ? constraint_catalogue().size() : it->second;
}

}  // namespace subspace
