#include "subspace/spreads.hpp"

#include <algorithm>
#include <cassert>

namespace subspace {
namespace spreads {

namespace {

Int pw(long q, long e) { return qcalc::pow(Int(q), e); }

// floor((sqrt(disc) - c) / 2) with exact integer arithmetic
Int floor_theta(const Int& disc, const Int& c) {
  Int m = qcalc::floor_div(qcalc::isqrt(disc) - c, 2);
  for (;;) {
    Int g = 2 * (m + 1) + c;  // m+1 valid iff g <= sqrt(disc)
    if (g <= 0 || g * g <= disc) {
      m += 1;
      continue;
    }
    return m;
  }
}

// ceil((2u - 1 - sqrt(disc)) / 2), disc >= 0
Int ceil_hkk(const Int& u, const Int& disc) {
  Int m = qcalc::ceil_div(2 * u - 1 - qcalc::isqrt(disc), 2);
  for (;;) {
    Int g = 2 * u - 1 - 2 * (m - 1);  // m-1 valid iff g <= sqrt(disc)
    if (g <= 0 || g * g <= disc) {
      m -= 1;
      continue;
    }
    return m;
  }
}

struct AdditionalRow {
  long q, k, r;
  long addend;
};

// the 21 closed forms obtained from the first four MacWilliams identities,
// all of the shape l*q^k + addend with l = (q^(n-k)-q^r)/(q^k-1)
const AdditionalRow kAdditional[] = {
    {2, 4, 3, 4},   {2, 6, 4, 8},   {2, 6, 5, 18},   {3, 4, 3, 14},
    {3, 5, 3, 13},  {3, 5, 4, 44},  {3, 6, 4, 41},   {3, 6, 5, 133},
    {3, 7, 4, 40},  {4, 5, 3, 32},  {4, 6, 3, 30},   {4, 6, 5, 548},
    {4, 7, 4, 128}, {5, 5, 2, 7},   {5, 5, 4, 329},  {7, 5, 4, 1246},
    {8, 4, 3, 264}, {8, 5, 2, 25},  {8, 6, 2, 21},   {9, 3, 2, 41},
    {9, 5, 3, 365},
};

}  // namespace

std::optional<Int> spread_exact(long q, long n, long k) {
  if (k < 1 || n < 2 * k) return std::nullopt;
  const long r = n % k;
  const Int qk = pw(q, k);
  if (r == 0) return Int((pw(q, n) - 1) / (qk - 1));
  if (r == 1) return Int((pw(q, n) - pw(q, k + 1) + qk - 1) / (qk - 1));
  if (q == 2 && k == 3 && n - r >= 6) {
    if (r == 2) return Int((pw(2, n) - 18) / 7);
  }
  if (q == 2 && r == 2 && k >= 4)
    return Int((pw(2, n) - 3 * qk - 1) / (qk - 1));
  if (Int(k) > qcalc::gauss_binom(r, 1, Int(q)))
    return Int((pw(q, n) - pw(q, k + r)) / (qk - 1) + 1);
  return std::nullopt;
}

std::vector<BoundRecord> upper_battery(long q, long n, long k) {
  std::vector<BoundRecord> out;
  if (k < 1 || n < 2 * k) return out;
  const long r = n % k;
  const Int Q(q), qk = pw(q, k), qr = pw(q, r);
  const Int gauss_r1 = qcalc::gauss_binom(r, 1, Q);
  auto push = [&](const char* id, Direction dir, Int v, std::string par = "") {
    out.push_back(BoundRecord{id, std::move(par), dir, std::move(v), false});
  };

  if (r == 0) push("spread", Direction::exact, (pw(q, n) - 1) / (qk - 1));
  if (q == 2 && k == 3 && n - r >= 6) {
    if (r == 0) push("partial_spread_1", Direction::exact, (pw(2, n) - 1) / 7);
    if (r == 1) push("partial_spread_1", Direction::exact, (pw(2, n) - 9) / 7);
    if (r == 2) push("partial_spread_1", Direction::exact, (pw(2, n) - 18) / 7);
  }
  if (r == 1)
    push("partial_spread_2", Direction::exact,
         (pw(q, n) - pw(q, k + 1) + qk - 1) / (qk - 1));
  if (q == 2 && r == 2 && k >= 4)
    push("partial_spread_kurz_q2", Direction::exact,
         (pw(2, n) - 3 * qk - 1) / (qk - 1));
  if (Int(k) > gauss_r1)
    push("partial_spread_NS", Direction::exact,
         (pw(q, n) - pw(q, k + r)) / (qk - 1) + 1);

  const Int sb = qcalc::floor_div(pw(q, n) - 1, qk - 1);
  push("spread_bound", Direction::upper, sb);
  if (r != 0) push("partial_spread_5", Direction::upper, sb - 1);

  if (r >= 1) {
    // 2*theta = sqrt(1 + 4q^k(q^k - q^r)) - (2q^k - 2q^r + 1)
    Int theta = floor_theta(1 + 4 * qk * (qk - qr), 2 * qk - 2 * qr + 1);
    push("DrakeFreeman", Direction::upper,
         qr * (pw(q, n - r) - 1) / (qk - 1) - theta - 1);
  }

  const Int l = (r >= 1) ? Int((pw(q, n - k) - qr) / (qk - 1)) : Int(0);
  if (r >= 2 && Int(k) == gauss_r1 && k < n)
    push("partial_spread_NS_upper_bound", Direction::upper,
         l * qk + std::min(Q, qcalc::ceil_div(qr, 2)));
  if (r >= 2 && r < k && Int(k) <= gauss_r1) {
    Int c1 = Int(2 - k) % Q;
    if (c1 < 0) c1 += Q;
    Int c2 = ((Q - 1) * (k - 2) + c1) % (Q * Q) == 0 ? Q : Int(0);
    push("partial_spread_NS_2_Theorem6", Direction::upper,
         (pw(q, n) - pw(q, k + r)) / (qk - 1) + qr - (Q - 1) * (k - 2) - c1 +
             c2);
  }
  if (q == 2 && r >= 2 && r < k && Int(k) <= qr - 1) {
    long c = (k - 1) % 4 == 0 ? 1 : 0;
    push("partial_spread_NS_2_Theorem7", Direction::upper,
         (pw(2, n) - pw(2, k + r)) / (qk - 1) + qr - k + 1 + c);
  }
  if (r >= 1 && k > r) {
    // t = [r 1]_q + 1 - z + u with z, u >= 0; minimal z gives the best bound
    Int z = gauss_r1 + 1 - k;
    if (z < 0) z = 0;
    push("partial_spread_kurz16_28", Direction::upper, l * qk + 1 + z * (Q - 1),
         z.get_str());
  }
  if (r >= 1 && k > r && Int(k) <= gauss_r1 + 1 && k >= 2) {
    const Int z = gauss_r1 + 1 - k;
    std::optional<Int> best;
    long best_y = 0;
    for (long y = std::max(r, 2L); y <= k; ++y) {
      const Int u = pw(q, y);
      const Int disc = 1 + 4 * u * (u - (z + y - 1) * (Q - 1) - 1);
      if (disc < 0) continue;
      Int v = l * qk + ceil_hkk(u, disc);
      if (!best || v < *best) {
        best = v;
        best_y = y;
      }
    }
    if (best)
      push("partial_spread_HKK16_T10", Direction::upper, *best,
           std::to_string(best_y));
  }
  if (q == 3 && r == 2 && k >= 4)
    push("partial_spread_kurz_q3", Direction::upper,
         (pw(3, n) - 9) / (qk - 1) - 5);
  for (const auto& row : kAdditional) {
    if (row.q != q || row.k != k || row.r != r) continue;
    push("partial_spread_kurz16_additional", Direction::upper,
         qk * ((pw(q, n - k) - qr) / (qk - 1)) + row.addend);
  }
  return out;
}

Int deficiency(long q, long n, long k, const Int& upper) {
  return qcalc::floor_div(pw(q, n) - 1, pw(q, k) - 1) - upper;
}

}  // namespace spreads
}  // namespace subspace
