#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subspace/qcalc.hpp"

namespace subspace {

bool is_prime_power(long q);

enum class Direction { lower, upper, exact };

const char* direction_name(Direction d);
std::optional<Direction> direction_from_name(const std::string& s);

// one evaluated constraint instance
struct BoundRecord {
  std::string id;
  std::string parameter;
  Direction direction = Direction::lower;
  Int value;
  bool external = false;  // seeded from a fact file, not derived
};

struct CdcParams {
  long q = 2, n = 1, d = 2, k = 0;
};

struct MdcParams {
  long q = 2, n = 1, d = 1;
};

// A_q(n,d;k) = A_q(n,d;n-k) and odd d behaves as d+1; canonical cells have
// k <= n-k and even d. Trivial cells resolve to a closed value.
struct NormalizedCdc {
  CdcParams canonical;
  bool aliased = false;               // input differed from canonical
  bool out_of_range = false;          // k < 0 or k > n: no codewords, value 0
  std::optional<Int> trivial;         // exact value for k=0, d=2 or d>2k
};

NormalizedCdc normalize_cdc(const CdcParams& p);

// empty result = valid
std::optional<std::string> validate_cdc(const CdcParams& p, long nmax);
std::optional<std::string> validate_mdc(const MdcParams& p, long nmax);

// closed catalogue of constraint identifiers; order drives every emitted list
enum class Kind { cdc_lower, cdc_upper, cdc_exact, mdc_lower, mdc_upper, mdc_exact };

struct ConstraintInfo {
  std::string id;
  Kind kind;
};

const std::vector<ConstraintInfo>& constraint_catalogue();
// catalogue position, or catalogue size for unknown ids
size_t catalogue_rank(const std::string& id);

}  // namespace subspace
