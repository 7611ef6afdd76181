#include <vector>

#include "doctest.h"
#include "subspace/divisible.hpp"

using namespace subspace;

TEST_CASE("divisible point-multiset denominators") {
  // s_i = q^(r-i) [i+1 1]_q
  CHECK(divisible::denoms(2, 3) == std::vector<Int>{8, 12, 14, 15});
  CHECK(divisible::denoms(2, 2) == std::vector<Int>{4, 6, 7});
  CHECK(divisible::denoms(3, 2) == std::vector<Int>{9, 12, 13});
  CHECK(divisible::denoms(2, 0) == std::vector<Int>{1});
}

TEST_CASE("feasible lengths of 8-divisible binary multisets") {
  CHECK_FALSE(divisible::feasible(2, 3, 1));
  CHECK_FALSE(divisible::feasible(2, 3, 4));
  CHECK_FALSE(divisible::feasible(2, 3, 19));
  CHECK(divisible::feasible(2, 3, 0));
  CHECK(divisible::feasible(2, 3, 8));
  CHECK(divisible::feasible(2, 3, 20));  // 8 + 12
  CHECK(divisible::feasible(2, 3, 34));  // 20 + 14
  CHECK(divisible::feasible(2, 3, 49));  // 34 + 15
  // everything beyond the Frobenius number is representable
  Int f = divisible::frobenius(2, 3);
  CHECK_FALSE(divisible::feasible(2, 3, f));
  for (Int m = f + 1; m <= f + 40; ++m) CHECK(divisible::feasible(2, 3, m));
}

TEST_CASE("frac_round sharpens the plain floor") {
  // {567}_3 at q=2: floor is 81 and the remainder 0 is 4-divisible
  auto r = divisible::frac_round(Int(567), 2, 3);
  CHECK(r.feasible);
  CHECK(r.value == 81);
  // {17374}_4 at q=2: floors 1158 and 1157 leave remainders 4 and 19,
  // neither a valid 8-divisible length; 34 = 20 + 14 works
  r = divisible::frac_round(Int(17374), 2, 4);
  CHECK(r.feasible);
  CHECK(r.value == 1156);
  // plain floor when the remainder at b = floor is representable
  r = divisible::frac_round(Int(63 * 9), 2, 3);
  CHECK(r.value == 81);
}

TEST_CASE("fourth identity stays diagnostic") {
  // never throws across a window of small inputs
  for (long e = 1; e <= 4; ++e)
    for (long m = 0; m <= 200; ++m) divisible::fourth_identity_excludes(2, e, m);
}
