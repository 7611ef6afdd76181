#include "subspace/mdc.hpp"

#include <algorithm>
#include <map>

#include "subspace/ratlp.hpp"

namespace subspace {
namespace mdc {

namespace {

Int qp(long q, long e) { return qcalc::pow(Int(q), e); }

Int gb(long n, long k, long q) { return qcalc::gauss_binom(n, k, Int(q)); }

long ceil2(long d) { return (d + 1) / 2; }

Int total_subspaces(long q, long n) {
  Int s = 0;
  for (long k = 0; k <= n; ++k) s += gb(n, k, q);
  return s;
}

// numerical SLP evaluations, q = 2 only
const std::map<std::pair<long, long>, long>& slp_values() {
  static const std::map<std::pair<long, long>, long> m = {
      {{4, 3}, 6},           {{5, 3}, 20},         {{6, 3}, 124},
      {{7, 3}, 776},         {{7, 5}, 35},         {{8, 3}, 9268},
      {{8, 5}, 360},         {{9, 3}, 107419},     {{9, 5}, 2485},
      {{10, 3}, 2532929},    {{10, 5}, 49394},     {{10, 7}, 1223},
      {{11, 5}, 660285},     {{11, 7}, 8990},      {{12, 7}, 323374},
      {{12, 9}, 4487},       {{13, 7}, 4691980},   {{13, 9}, 34306},
      {{14, 9}, 2334086},    {{14, 11}, 17159},    {{15, 11}, 134095},
      {{16, 13}, 67079},
  };
  return m;
}

}  // namespace

Int gilbert_varshamov(long q, long n, long d) {
  Int total = total_subspaces(q, n);
  Int den = 0;
  for (long k = 0; k <= n; ++k)
    for (long j = 0; j < d; ++j)
      for (long i = 0; i <= j; ++i)
        den += gb(n, k, q) * gb(k, i, q) * gb(n - k, j - i, q) *
               qp(q, i * (j - i));
  return qcalc::ceil_div(total * total, den);
}

Int layer_construction(long q, long n, long d, const Lookup& tab) {
  (void)q;
  long dd = 2 * ceil2(d);
  std::vector<Int> L(n + 1);
  for (long N = 0; N <= n; ++N) {
    Int take = tab.cdc_lower(n, dd, N);
    if (N - d >= 0) take += L[N - d];
    L[N] = take;
    if (N > 0) L[N] = std::max(L[N], L[N - 1]);
  }
  return L[n];
}

Int improved_cdc_lower(long q, long n, long d, const Lookup& tab) {
  (void)q;
  long dd = 2 * ceil2(d), r = (n / 2) % d;
  Int s = 0;
  for (long k = 0; k <= n; ++k)
    if (k % d == r) s += tab.cdc_lower(n, dd, k);
  return s;
}

Int improved_cdc_upper(long q, long n, long d, const Lookup& tab) {
  (void)q;
  long dd = 2 * ceil2(d);
  Int s = 2;
  for (long k = ceil2(d); k <= n - ceil2(d); ++k) s += tab.cdc_upper(n, dd, k);
  return s;
}

std::optional<Int> cdc_average_argument(long q, long n, long d,
                                        const Lookup& tab) {
  if (n + 1 > tab.nmax) return std::nullopt;
  Int den = qp(q, n + 1) - 1;
  Int best = 0;
  for (long k = 0; k <= n; ++k) {
    Int num = (qp(q, n + 1 - k) + qp(q, k) - 2) * tab.cdc_lower(n + 1, d + 1, k);
    best = std::max(best, qcalc::ceil_div(num, den));
  }
  return best;
}

std::pair<Int, Int> cdc_projection_bounds(long q, long n, long d,
                                          const Lookup& tab) {
  (void)q;
  Int lo = 0, up = 0;
  for (long k = 0; k <= n; ++k) {
    lo = std::max(lo, tab.cdc_lower(n, d, k));
    up += tab.cdc_upper(n, d, k);
  }
  return {lo, up};
}

Int ev_coefficient(long q, long n, long i, long k, long e) {
  Int c = 0;
  long jmin = std::max(0L, (i + k - e + 1) / 2);
  for (long j = jmin; j <= std::min(k, i); ++j)
    c += gb(i, j, q) * gb(n - i, k - j, q) * qp(q, (i - j) * (k - j));
  return c;
}

std::optional<Int> etzion_vardy(long q, long n, long d, const Lookup& tab,
                                EvMode mode, long node_budget) {
  if (d % 2 == 0) return std::nullopt;
  long e = (d - 1) / 2;
  ratlp::Lp lp;
  lp.objective.assign(n + 1, Rat(1));
  for (long i = 0; i <= n; ++i) {
    std::vector<Rat> row(n + 1, Rat(0));
    row[i] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(tab.cdc_upper(n, d + 1, i));
  }
  for (long k = 0; k <= n; ++k) {
    std::vector<Rat> row(n + 1);
    for (long i = 0; i <= n; ++i) row[i] = Rat(ev_coefficient(q, n, i, k, e));
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(gb(n, k, q));
  }
  if (mode == EvMode::bb) {
    ratlp::BbResult r = ratlp::branch_and_bound_max(lp, node_budget);
    return r.proven ? r.best : r.bound;
  }
  ratlp::LpResult r = ratlp::simplex_max(lp);
  if (r.status != ratlp::Status::optimal) return std::nullopt;
  return qcalc::floor_rat(r.optimum);
}

std::optional<Int> relax_d(long q, long n, long d, const Lookup& tab) {
  (void)q;
  if (d % 2 == 0 || d < 3) return std::nullopt;
  return tab.mdc_upper(n, d - 1);
}

std::optional<std::pair<Int, Direction>> closed_form(const std::string& id,
                                                     long q, long n, long d) {
  using R = std::pair<Int, Direction>;
  if (id == "trivial_2") return R{0, Direction::lower};
  if (id == "trivial_3") return R{total_subspaces(q, n), Direction::upper};
  if (id == "trivial_4") {
    if (d <= 2 * n && n >= 1) return R{2, Direction::lower};
    return std::nullopt;
  }
  if (id == "trivial_dle1") {
    if (d <= 1) return R{total_subspaces(q, n), Direction::exact};
    return std::nullopt;
  }
  if (id == "nodd_deqn") {
    if (n % 2 == 1 && d == n) return R{2, Direction::upper};
    return std::nullopt;
  }
  if (id == "nodd_deqnm2_l" || id == "nodd_deqnm2_u") {
    if (n % 2 == 1 && n >= 5 && d == n - 2) {
      Int base = 2 * qp(q, (n - 1) / 2 + 1);
      return R{base + (id == "nodd_deqnm2_l" ? 1 : 2),
               id == "nodd_deqnm2_l" ? Direction::lower : Direction::upper};
    }
    return std::nullopt;
  }
  if (id == "nodd_deqnm2_e") {
    if (n == 5 && d == 3) return R{2 * qp(q, 3) + 2, Direction::exact};
    if (q == 2 && n == 7 && d == 5) return R{34, Direction::exact};
    return std::nullopt;
  }
  if (id == "n5_d3_CPS") {
    if (n == 5 && d == 3) return R{2 * qp(q, 3) + 2, Direction::exact};
    return std::nullopt;
  }
  if (id == "d2") {
    if (d != 2) return std::nullopt;
    Int s = 0;
    for (long i = 0; i <= n; ++i)
      if (i % 2 == (n / 2) % 2) s += gb(n, i, q);
    return R{s, Direction::exact};
  }
  if (id == "neqdeven") {
    if (n % 2 == 0 && n >= 2 && d == n)
      return R{qp(q, n / 2) + 1, Direction::exact};
    return std::nullopt;
  }
  if (id == "neven_deqnm1") {
    if (n % 2 == 0 && n >= 4 && d == n - 1)
      return R{qp(q, n / 2) + 1, Direction::exact};
    return std::nullopt;
  }
  if (id == "nodd_deqnm1") {
    if (n % 2 == 1 && n >= 5 && d == n - 1)
      return R{qp(q, (n + 1) / 2) + 1, Direction::exact};
    return std::nullopt;
  }
  if (id == "semidefinite_programming") {
    if (q != 2) return std::nullopt;
    auto it = slp_values().find({n, d});
    if (it == slp_values().end()) return std::nullopt;
    return R{Int(it->second), Direction::upper};
  }
  if (id == "special_cases_upper_notderived") {
    if (q == 2 && n == 6 && d == 3) return R{118, Direction::upper};
    if (q == 2 && n == 7 && d == 4) return R{407, Direction::upper};
    return std::nullopt;
  }
  return std::nullopt;
}

const std::vector<std::string>& closed_form_ids() {
  static const std::vector<std::string> ids = {
      "trivial_2",    "trivial_3",     "trivial_4",
      "trivial_dle1", "nodd_deqnm2_l", "semidefinite_programming",
      "special_cases_upper_notderived", "nodd_deqnm2_u", "nodd_deqn",
      "d2",           "neqdeven",      "neven_deqnm1",
      "nodd_deqnm1",  "nodd_deqnm2_e", "n5_d3_CPS",
  };
  return ids;
}

std::vector<BoundRecord> records(long q, long n, long d, const Lookup& tab,
                                 EvMode ev_mode, long ev_node_budget) {
  std::vector<BoundRecord> out;
  auto closed = [&](const std::string& id) {
    if (auto r = closed_form(id, q, n, d))
      out.push_back({id, "", r->second, r->first});
  };
  auto push = [&](const std::string& id, Direction dir, Int v) {
    out.push_back({id, "", dir, std::move(v)});
  };

  closed("trivial_2");
  closed("trivial_3");
  closed("trivial_4");
  closed("trivial_dle1");
  push("gilbert_varshamov", Direction::lower, gilbert_varshamov(q, n, d));
  auto proj = cdc_projection_bounds(q, n, d, tab);
  push("cdc_lower_bound", Direction::lower, proj.first);
  push("improved_cdc_lower_bound", Direction::lower,
       improved_cdc_lower(q, n, d, tab));
  push("layer_construction", Direction::lower,
       layer_construction(q, n, d, tab));
  if (auto v = cdc_average_argument(q, n, d, tab))
    push("cdc_average_argument", Direction::lower, *v);
  closed("nodd_deqnm2_l");
  push("cdc_upper_bound", Direction::upper, proj.second);
  push("improved_cdc_upper_bound", Direction::upper,
       improved_cdc_upper(q, n, d, tab));
  if (auto v = etzion_vardy(q, n, d, tab, ev_mode, ev_node_budget))
    push("Etzion_Vardy_ilp", Direction::upper, *v);
  if (auto v = relax_d(q, n, d, tab))
    push("relax_d", Direction::upper, *v);
  closed("semidefinite_programming");
  closed("special_cases_upper_notderived");
  closed("nodd_deqnm2_u");
  closed("nodd_deqn");
  closed("d2");
  closed("neqdeven");
  closed("neven_deqnm1");
  closed("nodd_deqnm1");
  closed("nodd_deqnm2_e");
  closed("n5_d3_CPS");

  std::stable_sort(out.begin(), out.end(),
                   [](const BoundRecord& a, const BoundRecord& b) {
                     return catalogue_rank(a.id) < catalogue_rank(b.id);
                   });
  return out;
}

}  // namespace mdc
}  // namespace subspace
