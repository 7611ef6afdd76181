#include "subspace/qcalc.hpp"

#include <cassert>
#include <map>
#include <tuple>

namespace subspace {
namespace qcalc {

Int pow(const Int& base, long exp) {
  assert(exp >= 0);
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

Int pow2(long exp) { return pow(Int(2), exp); }

Int floor_div(const Int& a, const Int& b) {
  assert(b > 0);
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int ceil_div(const Int& a, const Int& b) {
  assert(b > 0);
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int isqrt(const Int& a) {
  assert(a >= 0);
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

namespace {

// product form with exact division, valid for |q| >= 2
Int gauss_product(long n, long k, const Int& q) {
  Int g(1);
  for (long i = 1; i <= k; ++i) {
    Int num = pow(q, n - k + i) - 1;
    Int den = pow(q, i) - 1;
    g *= num;
    Int t;
    mpz_divexact(t.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    g = t;
  }
  return g;
}

// q-Pascal recurrence, valid for every integer q (covers q in {-1,0,1})
Int gauss_pascal(long n, long k, const Int& q) {
  std::vector<Int> row(static_cast<size_t>(k) + 1, Int(0));
  row[0] = 1;
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min<long>(k, m); j >= 1; --j) {
      row[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j - 1)] + pow(q, j) * row[static_cast<size_t>(j)];
    }
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace

Int gauss_binom(long n, long k, const Int& q) {
  if (k < 0 || k > n) return Int(0);
  if (k == 0 || k == n) return Int(1);
  long kk = std::min(k, n - k);
  if (q >= 2 && q.fits_slong_p()) {
    static std::map<std::tuple<long, long, long>, Int> memo;
    auto key = std::make_tuple(q.get_si(), n, kk);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int g = gauss_product(n, kk, q);
    memo.emplace(key, g);
    return g;
  }
  if (q <= -2 || q >= 2) return gauss_product(n, kk, q);
  return gauss_pascal(n, kk, q);
}

Int ceil_power(const Int& q, long e) {
  if (e < 0) return Int(1);
  return pow(q, e);
}

Int mrd_size(const Int& q, long rows, long cols, long rank_dist) {
  long m = std::max(rows, cols), mm = std::min(rows, cols);
  return ceil_power(q, m * (mm - rank_dist + 1));
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace qcalc
}  // namespace subspace
