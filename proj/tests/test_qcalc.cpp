#include <string>

#include "doctest.h"
#include "subspace/qcalc.hpp"

using namespace subspace;

TEST_CASE("gaussian binomials, hand values") {
  CHECK(qcalc::gauss_binom(6, 3, Int(2)) == 1395);
  CHECK(qcalc::gauss_binom(6, 2, Int(2)) == 651);
  CHECK(qcalc::gauss_binom(5, 2, Int(2)) == 155);
  CHECK(qcalc::gauss_binom(3, 2, Int(2)) == 7);
  CHECK(qcalc::gauss_binom(4, 2, Int(2)) == 35);
  CHECK(qcalc::gauss_binom(4, 2, Int(3)) == 130);
  CHECK(qcalc::gauss_binom(3, 1, Int(4)) == 21);
  CHECK(qcalc::gauss_binom(8, 2, Int(2)) == 10795);
  // symmetry and degenerate cases
  CHECK(qcalc::gauss_binom(9, 4, Int(2)) == qcalc::gauss_binom(9, 5, Int(2)));
  CHECK(qcalc::gauss_binom(7, 0, Int(2)) == 1);
  CHECK(qcalc::gauss_binom(7, 7, Int(3)) == 1);
  CHECK(qcalc::gauss_binom(3, 4, Int(2)) == 0);
}

TEST_CASE("pascal recurrence holds") {
  // [n k] = q^k [n-1 k] + [n-1 k-1]
  for (long n = 1; n <= 9; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(qcalc::gauss_binom(n, k, Int(2)) ==
            qcalc::pow(Int(2), k) * qcalc::gauss_binom(n - 1, k, Int(2)) +
                qcalc::gauss_binom(n - 1, k - 1, Int(2)));
}

TEST_CASE("integer division helpers") {
  CHECK(qcalc::floor_div(Int(7), Int(2)) == 3);
  CHECK(qcalc::floor_div(Int(-7), Int(2)) == -4);
  CHECK(qcalc::ceil_div(Int(7), Int(2)) == 4);
  CHECK(qcalc::ceil_div(Int(6), Int(2)) == 3);
  CHECK(qcalc::ceil_div(Int(-7), Int(2)) == -3);
  CHECK(qcalc::isqrt(Int(0)) == 0);
  CHECK(qcalc::isqrt(Int(15)) == 3);
  CHECK(qcalc::isqrt(Int(16)) == 4);
  CHECK(qcalc::isqrt(Int("1000000000000000000000000")) ==
        Int("1000000000000"));
}

TEST_CASE("rational rounding") {
  CHECK(qcalc::floor_rat(Rat(7, 2)) == 3);
  CHECK(qcalc::ceil_rat(Rat(7, 2)) == 4);
  CHECK(qcalc::floor_rat(Rat(-7, 2)) == -4);
  CHECK(qcalc::ceil_rat(Rat(-7, 2)) == -3);
  CHECK(qcalc::ceil_rat(Rat(6, 3)) == 2);
}

TEST_CASE("mrd code sizes") {
  // m x n matrices, rank distance d: q^(max(m,n)*(min(m,n)-d+1))
  CHECK(qcalc::mrd_size(2, 3, 3, 2) == 64);   // lifted at (2,6,4;3)
  CHECK(qcalc::mrd_size(2, 4, 6, 2) == 262144);
  CHECK(qcalc::mrd_size(3, 2, 2, 1) == 81);
  CHECK(qcalc::mrd_size(2, 3, 5, 3) == 32);  // 5*(3-3+1)
}

TEST_CASE("big values print in full") {
  CHECK(qcalc::to_string(qcalc::pow(Int(2), 100)) ==
        "1267650600228229401496703205376");
}
