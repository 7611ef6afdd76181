#include "subspace/cdc_upper.hpp"

#include <algorithm>

#include "subspace/divisible.hpp"

namespace subspace {
namespace cdc {

namespace {

Int qp(long q, long e) { return qcalc::pow(Int(q), e); }

Int gb(long n, long k, long q) { return qcalc::gauss_binom(n, k, Int(q)); }

}  // namespace

Int all_subs(long q, long n, long k) { return gb(n, k, q); }

Int singleton(long q, long n, long d, long k) {
  return gb(n - d / 2 + 1, k - d / 2 + 1, q);
}

Int sphere_packing(long q, long n, long d, long k) {
  Int den = 0;
  for (long i = 0; i <= (d / 2 - 1) / 2; ++i)
    den += gb(k, i, q) * gb(n - k, i, q) * qp(q, i * i);
  return qcalc::floor_div(gb(n, k, q), den);
}

Int anticode(long q, long n, long d, long k) {
  return qcalc::floor_div(gb(n, k, q), gb(n - k + d / 2 - 1, d / 2 - 1, q));
}

std::optional<Int> xia_fu_johnson(long q, long n, long d, long k) {
  long mn = std::min(k, n - k);
  if (d != 2 * mn || mn < 1) return std::nullopt;
  return qcalc::floor_div(qp(q, n) - 1, qp(q, mn) - 1);
}

Int johnson_1(long q, long n, long d, long k, const Lookup& tab) {
  return qcalc::floor_div((qp(q, n) - 1) * tab.upper(n - 1, d, k - 1),
                          qp(q, k) - 1);
}

Int johnson_2(long q, long n, long d, long k, const Lookup& tab) {
  return qcalc::floor_div((qp(q, n) - 1) * tab.upper(n - 1, d, k),
                          qp(q, n - k) - 1);
}

std::vector<BoundRecord> ilp_family(int which, long q, long n, long d, long k,
                                    const Lookup& tab) {
  std::vector<BoundRecord> out;
  std::string id = "ilp_" + std::to_string(which);
  auto emit = [&](long par, Int val) {
    out.push_back({id, std::to_string(par), Direction::upper, std::move(val)});
  };
  switch (which) {
    case 1:
      for (long w = 1; w <= k - d / 2; ++w)
        emit(w, qcalc::floor_div(gb(n, w, q) * tab.upper(n - w, d, k - w),
                                 gb(k, w, q)));
      break;
    case 2:
      for (long w = k - d / 2 + 1; w <= k - 1; ++w)
        emit(w, qcalc::floor_div(gb(n, w, q), gb(k, w, q)));
      break;
    case 3:
      for (long a = k + 1; a <= k + d / 2 - 1; ++a)
        emit(a, qcalc::floor_div(gb(n, a, q), gb(n - k, a - k, q)));
      break;
    case 4:
      for (long a = k + d / 2; a <= n - 1; ++a)
        emit(a, qcalc::floor_div(gb(n, a, q) * tab.upper(a, d, k),
                                 gb(n - k, a - k, q)));
      break;
  }
  return out;
}

std::optional<Int> ahlswede_aydinian(long q, long n, long d, long k, long t,
                                     long m, bool orth, const Lookup& tab) {
  long kk = orth ? n - k : k;
  long r = d / 2;
  if (!(0 <= t && t < r && r <= kk)) return std::nullopt;
  if (!(kk - t <= m && m <= n && t <= n - m)) return std::nullopt;
  Int den = 0;
  for (long i = 0; i <= t; ++i) {
    if (kk - i > m) continue;  // Gaussian vanishes (and the exponent dips)
    den += qp(q, i * (m + i - kk)) * gb(m, kk - i, q) * gb(n - m, i, q);
  }
  Int num = gb(n, kk, q) * tab.upper(m, 2 * r - 2 * t, kk - t);
  return qcalc::floor_div(num, den);
}

std::vector<BoundRecord> ahlswede_aydinian_records(long q, long n, long d,
                                                   long k, const Lookup& tab) {
  std::vector<BoundRecord> out;
  for (bool orth : {false, true}) {
    long kk = orth ? n - k : k;
    long r = d / 2;
    if (r > kk) continue;
    for (long t = 0; t < r; ++t)
      for (long m = kk - t; m <= n - t; ++m) {
        if (t == 0 && m == n) continue;  // restates the cell itself
        auto v = ahlswede_aydinian(q, n, d, k, t, m, orth, tab);
        if (!v) continue;
        std::string par = std::to_string(t) + ", " + std::to_string(m);
        if (orth) par += ", o";
        out.push_back(
            {"Ahlswede_Aydinian", par, Direction::upper, std::move(*v)});
      }
  }
  return out;
}

std::optional<Int> improved_johnson(long q, long n, long d, long k,
                                    const Lookup& tab) {
  Int a = gb(n, 1, q) * tab.upper(n - 1, d, k - 1);
  divisible::FracRound r = divisible::frac_round(a, q, k);
  if (!r.feasible) return std::nullopt;
  return r.value;
}

std::optional<Int> mrd_containing_bound(long q, long n, long d, long k,
                                        const Lookup& tab) {
  if (d == 2 * (k - 1) && k >= 3)
    return qp(q, 2 * (n - k)) + tab.upper(n - k, 2 * (k - 2), k - 1);
  if (d == 2 * k && n > 2 * k) {
    Int mid = qcalc::floor_div(
        gb(n - 2 * k, k, q) * (qp(q, n) - qp(q, n - 2 * k)),
        qp(q, 2 * k) - qp(q, k));  // exact whenever the Gaussian is nonzero
    Int rest = tab.upper(n - 2 * k, 2 * k, 2 * k);
    if (rest < 1) rest = 1;
    return qp(q, (n - 2 * k) * (k + 1)) + mid + rest;
  }
  if (!(2 <= d / 2 && d / 2 <= k && k <= n - k)) return std::nullopt;
  Int lmrd = qp(q, (n - k) * (k - d / 2 + 1));
  if (k < d && 2 * n < 3 * d) return lmrd + 1;
  if (k < d && 3 * d <= 2 * n)
    return lmrd + tab.upper(n - k, 2 * (d - k), d / 2);
  if (d <= k && 2 * k < 3 * d) {
    Rat extra(gb(n - k, d / 2, q) * gb(k, d - 1, q) *
                  qp(q, (k - d + 1) * (n - k - d / 2)),
              gb(k - d / 2, d / 2 - 1, q));
    extra.canonicalize();
    return lmrd + tab.upper(n - k, 3 * d - 2 * k, d) + qcalc::floor_rat(extra);
  }
  return std::nullopt;
}

std::optional<Int> special_exact_cdc(long q, long n, long d, long k) {
  if (q == 2 && n == 6 && d == 4 && k == 3) return Int(77);
  if (q == 2 && n == 8 && d == 6 && k == 4) return Int(257);
  return std::nullopt;
}

std::vector<BoundRecord> upper_records(long q, long n, long d, long k,
                                       const Lookup& tab) {
  std::vector<BoundRecord> out;
  auto push = [&](const char* id, Int val) {
    out.push_back({id, "", Direction::upper, std::move(val)});
  };
  push("all_subs", all_subs(q, n, k));
  push("singleton", singleton(q, n, d, k));
  push("sphere_packing", sphere_packing(q, n, d, k));
  push("anticode", anticode(q, n, d, k));
  if (auto v = xia_fu_johnson(q, n, d, k)) push("XiaFuJohnson1", *v);
  push("johnson_1", johnson_1(q, n, d, k, tab));
  push("johnson_2", johnson_2(q, n, d, k, tab));
  for (int w = 1; w <= 4; ++w)
    for (auto& r : ilp_family(w, q, n, d, k, tab)) out.push_back(std::move(r));
  for (auto& r : ahlswede_aydinian_records(q, n, d, k, tab))
    out.push_back(std::move(r));
  if (auto v = improved_johnson(q, n, d, k, tab)) push("improved_johnson", *v);
  if (q == 2 && n == 8 && d == 6 && k == 4)
    push("special_case_2_8_6_4", Int(272));
  std::stable_sort(out.begin(), out.end(),
                   [](const BoundRecord& a, const BoundRecord& b) {
                     return catalogue_rank(a.id) < catalogue_rank(b.id);
                   });
  return out;
}

}  // namespace cdc
}  // namespace subspace
