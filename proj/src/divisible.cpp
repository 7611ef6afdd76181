#include "subspace/divisible.hpp"

#include <cassert>
#include <map>

namespace subspace {
namespace divisible {

std::vector<Int> denoms(long q, long r) {
  assert(q >= 2 && r >= 0);
  const Int Q(q);
  std::vector<Int> s;
  s.reserve(static_cast<size_t>(r) + 1);
  for (long i = 0; i <= r; ++i) {
    // q^(r-i) * (q^(i+1)-1)/(q-1)
    s.push_back(qcalc::pow(Q, r - i) * qcalc::gauss_binom(i + 1, 1, Q));
  }
  return s;
}

namespace {

// change-making DP, grown on demand per (q,r)
struct DpTable {
  std::vector<bool> ok{true};  // ok[0]
  std::vector<Int> coins;
};

DpTable& table_for(long q, long r) {
  static std::map<std::pair<long, long>, DpTable> tables;
  auto& t = tables[{q, r}];
  if (t.coins.empty()) t.coins = denoms(q, r);
  return t;
}

void grow(DpTable& t, size_t upto) {
  size_t old = t.ok.size();
  if (upto < old) return;
  t.ok.resize(upto + 1, false);
  for (size_t m = old; m <= upto; ++m) {
    for (const Int& c : t.coins) {
      if (!c.fits_ulong_p()) continue;
      unsigned long cv = c.get_ui();
      if (cv <= m && t.ok[m - cv]) {
        t.ok[m] = true;
        break;
      }
    }
  }
}

}  // namespace

bool feasible(long q, long r, const Int& m) {
  if (m < 0) return false;
  if (m == 0) return true;
  if (r == 0) return true;  // denoms contain 1
  auto& t = table_for(q, r);
  // beyond the Frobenius number everything is representable; cap the DP there
  const Int frob = frobenius(q, r);
  if (m > frob) return true;
  assert(m.fits_ulong_p());
  unsigned long mv = m.get_ui();
  grow(t, mv);
  return t.ok[mv];
}

Int frobenius(long q, long r) {
  static std::map<std::pair<long, long>, Int> memo;
  auto it = memo.find({q, r});
  if (it != memo.end()) return it->second;
  if (r == 0) return memo[{q, r}] = Int(-1);
  auto& t = table_for(q, r);
  // smallest denom s_0 = q^r consecutive feasible values close the gap
  const Int s0 = t.coins.front();
  assert(s0.fits_ulong_p());
  unsigned long run_needed = s0.get_ui();
  unsigned long m = 0, run = 0, last_bad = 0;
  while (run < run_needed) {
    ++m;
    grow(t, m);
    if (t.ok[m]) {
      ++run;
    } else {
      run = 0;
      last_bad = m;
    }
  }
  return memo[{q, r}] = Int(last_bad);
}

FracRound frac_round(const Int& a, long q, long k) {
  assert(k >= 1);
  const Int g = qcalc::gauss_binom(k, 1, Int(q));
  FracRound out;
  Int b = qcalc::floor_div(a, g);
  while (b >= 0) {
    if (feasible(q, k - 1, a - b * g)) {
      out.value = b;
      return out;
    }
    b -= 1;
  }
  out.value = 0;
  out.feasible = false;
  return out;
}

bool fourth_identity_excludes(long q, long exponent, const Int& m) {
  if (m <= 0) return false;
  const Int delta = qcalc::pow(Int(q), exponent);
  const Int n = m, Q(q);
  const Int tmax = qcalc::floor_div(n, delta) + 2;
  for (Int t = -2; t <= tmax; t += 1) {
    // n/delta notin [t, t+1]  <=>  n < t*delta or n > (t+1)*delta
    if (n >= t * delta && n <= (t + 1) * delta) continue;
    const Int h = delta * delta * Q * Q * t * t + delta * delta * Q * Q * t -
                  2 * delta * n * Q * Q * t - delta * n * Q * Q +
                  2 * delta * n * Q * t + n * n * Q * Q + delta * n * Q -
                  2 * n * n * Q + n * n + n * Q - n;
    if (h < 0) continue;
    const Int g2 = h - (2 * delta * Q * t + delta * Q - 2 * n * Q + 2 * n + Q - 2);
    if (g2 < 0) return true;
  }
  return false;
}

}  // namespace divisible
}  // namespace subspace
