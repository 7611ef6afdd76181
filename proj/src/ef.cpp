#include "subspace/ef.hpp"

#include <algorithm>
#include <cassert>

#include "subspace/ratlp.hpp"

namespace subspace {
namespace ef {

std::vector<int> ferrers_from_profile(long n, const Profile& v) {
  std::vector<bool> pivot(static_cast<size_t>(n), false);
  for (int p : v) {
    assert(p >= 0 && p < n);
    pivot[static_cast<size_t>(p)] = true;
  }
  std::vector<int> rows;
  rows.reserve(v.size());
  for (int p : v) {
    int dots = 0;
    for (long c = p + 1; c < n; ++c)
      if (!pivot[static_cast<size_t>(c)]) ++dots;
    rows.push_back(dots);
  }
  return rows;
}

long ef_dim_bound(const std::vector<int>& rows, long delta) {
  assert(delta >= 1);
  long best = -1;
  for (long i = 0; i < delta; ++i) {
    long nu = 0;
    for (size_t j = static_cast<size_t>(i); j < rows.size(); ++j)
      nu += std::max<long>(0, rows[j] - (delta - 1 - i));
    if (best < 0 || nu < best) best = nu;
  }
  return best < 0 ? 0 : best;
}

namespace {

struct Vertex {
  Profile p;
  Int w;
};

Int profile_weight(long q, long n, const Profile& p, long delta) {
  return qcalc::pow(Int(q), ef_dim_bound(ferrers_from_profile(n, p), delta));
}

int inter_size(const Profile& a, const Profile& b) {
  int c = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++c;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return c;
}

// pairwise Hamming distance of the pivot vectors below d means conflict
bool conflicts(const Profile& a, const Profile& b, long d) {
  long dist = static_cast<long>(a.size() + b.size()) - 2 * inter_size(a, b);
  return dist < d;
}

void sort_candidates(std::vector<Vertex>& verts) {
  std::stable_sort(verts.begin(), verts.end(),
                   [](const Vertex& a, const Vertex& b) {
                     if (a.w != b.w) return a.w > b.w;
                     return a.p < b.p;
                   });
}

SkeletonResult run_greedy(const std::vector<Vertex>& sorted, long d) {
  SkeletonResult res;
  for (const auto& v : sorted) {
    bool ok = true;
    for (const auto& s : res.skeleton)
      if (conflicts(v.p, s, d)) {
        ok = false;
        break;
      }
    if (ok) {
      res.skeleton.push_back(v.p);
      res.total += v.w;
    }
  }
  std::sort(res.skeleton.begin(), res.skeleton.end());
  return res;
}

// exact max-weight independent set: LP branch and bound over the given
// clique/pair rows (each a list of vertex indices summing to <= 1)
SkeletonResult run_exact(const std::vector<Vertex>& sorted, long d,
                         const std::vector<std::vector<long>>& cover_rows,
                         const Budget& budget) {
  SkeletonResult greedy = run_greedy(sorted, d);
  ratlp::Lp lp;
  lp.objective.reserve(sorted.size());
  for (const auto& v : sorted) lp.objective.emplace_back(v.w);
  lp.rows.reserve(cover_rows.size());
  for (const auto& members : cover_rows) {
    std::vector<Rat> row(sorted.size(), Rat(0));
    for (long m : members) row[static_cast<size_t>(m)] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  auto bb = ratlp::branch_and_bound_max(lp, budget.node_budget);
  SkeletonResult res;
  res.nodes = bb.nodes;
  res.proven = bb.proven;
  if (bb.feasible && bb.best > greedy.total) {
    res.total = bb.best;
    for (size_t j = 0; j < bb.solution.size(); ++j)
      if (bb.solution[j] != 0) res.skeleton.push_back(sorted[j].p);
    std::sort(res.skeleton.begin(), res.skeleton.end());
  } else {
    res.total = greedy.total;
    res.skeleton = std::move(greedy.skeleton);
  }
  return res;
}

std::vector<Profile> weight_k_profiles(long n, long k) {
  std::vector<Profile> out;
  if (k < 0 || k > n) return out;
  Profile cur(static_cast<size_t>(k));
  for (long i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = static_cast<int>(i);
  for (;;) {
    out.push_back(cur);
    long i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (long j = i + 1; j < k; ++j)
      cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

SkeletonResult skeleton_optimize_cdc(long q, long n, long d, long k, Mode mode,
                                     const Budget& budget) {
  assert(d % 2 == 0 && d >= 2 && k >= 1 && k <= n);
  const long delta = d / 2;
  if (mode == Mode::blocks) {
    SkeletonResult res;
    res.proven = true;
    for (long i = 0; (i * delta) + k <= n; ++i) {
      Profile p(static_cast<size_t>(k));
      for (long j = 0; j < k; ++j)
        p[static_cast<size_t>(j)] = static_cast<int>(i * delta + j);
      res.total += profile_weight(q, n, p, delta);
      res.skeleton.push_back(std::move(p));
    }
    return res;
  }
  std::vector<Vertex> verts;
  for (auto& p : weight_k_profiles(n, k)) {
    Int w = profile_weight(q, n, p, delta);
    verts.push_back(Vertex{std::move(p), std::move(w)});
  }
  sort_candidates(verts);
  if (mode == Mode::greedy ||
      static_cast<long>(verts.size()) > budget.vertex_cap) {
    SkeletonResult res = run_greedy(verts, d);
    res.over_cap = mode == Mode::exact;
    return res;
  }
  // one clique row per (k-d/2+1)-subset of columns; two weight-k profiles
  // conflict iff their pivot sets share such a subset, so rows cover every
  // conflicting pair and each profile sits in at least one row
  std::vector<std::vector<long>> rows;
  for (const auto& s : weight_k_profiles(n, k - delta + 1)) {
    std::vector<long> members;
    for (size_t j = 0; j < verts.size(); ++j)
      if (inter_size(s, verts[j].p) == static_cast<int>(s.size()))
        members.push_back(static_cast<long>(j));
    if (members.size() > 1) rows.push_back(std::move(members));
  }
  bool covered_all = true;  // isolated profiles still need a 0/1 box
  {
    std::vector<bool> seen(verts.size(), false);
    for (const auto& r : rows)
      for (long m : r) seen[static_cast<size_t>(m)] = true;
    for (size_t j = 0; j < verts.size(); ++j)
      if (!seen[j]) {
        rows.push_back({static_cast<long>(j)});
        covered_all = false;
      }
  }
  (void)covered_all;
  return run_exact(verts, d, rows, budget);
}

SkeletonResult skeleton_optimize_mdc(long q, long n, long d, Mode mode,
                                     const Budget& budget) {
  assert(d >= 1 && n >= 1 && n < 63);
  const long delta = (d + 1) / 2;
  std::vector<Vertex> verts;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    Profile p;
    for (long c = 0; c < n; ++c)
      if (mask & (1ull << c)) p.push_back(static_cast<int>(c));
    Int w = profile_weight(q, n, p, delta);
    verts.push_back(Vertex{std::move(p), std::move(w)});
  }
  sort_candidates(verts);
  if (mode != Mode::exact ||
      static_cast<long>(verts.size()) > budget.vertex_cap) {
    SkeletonResult res = run_greedy(verts, d);
    res.over_cap = mode == Mode::exact;
    return res;
  }
  // mixed weights admit no shared-subset clique trick; use explicit pair
  // rows, size-guarded, plus a unit row per vertex
  std::vector<std::vector<long>> rows;
  long pairs = 0;
  for (size_t a = 0; a < verts.size() && pairs <= budget.pair_row_cap; ++a)
    for (size_t b = a + 1; b < verts.size(); ++b)
      if (conflicts(verts[a].p, verts[b].p, d)) {
        rows.push_back({static_cast<long>(a), static_cast<long>(b)});
        if (++pairs > budget.pair_row_cap) break;
      }
  if (pairs > budget.pair_row_cap) {
    SkeletonResult res = run_greedy(verts, d);
    res.over_cap = true;
    return res;
  }
  for (size_t j = 0; j < verts.size(); ++j)
    rows.push_back({static_cast<long>(j)});
  return run_exact(verts, d, rows, budget);
}

std::string profiles_repr(const std::vector<Profile>& ps) {
  std::string out = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (size_t j = 0; j < ps[i].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(ps[i][j]);
    }
    if (ps[i].size() == 1) out += ",";
    out += ")";
  }
  out += "]";
  return out;
}

}  // namespace ef
}  // namespace subspace
