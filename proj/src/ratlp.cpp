#include "subspace/ratlp.hpp"

#include <cassert>
#include <optional>
#include <utility>

namespace subspace {
namespace ratlp {

namespace {

// dense tableau in equality form, columns: structural, slack, artificial
struct Tableau {
  long m = 0, cols = 0;
  std::vector<std::vector<Rat>> t;  // m x (cols+1), last column is the rhs
  std::vector<long> basis;

  void pivot(long pr, long pc, std::vector<Rat>& z) {
    auto& prow = t[pr];
    const Rat piv = prow[pc];
    for (auto& v : prow) v /= piv;
    for (long i = 0; i < m; ++i) {
      if (i == pr) continue;
      const Rat f = t[i][pc];
      if (f == 0) continue;
      auto& row = t[i];
      for (long j = 0; j <= cols; ++j) row[j] -= f * prow[j];
    }
    const Rat f = z[pc];
    if (f != 0)
      for (long j = 0; j <= cols; ++j) z[j] -= f * prow[j];
    basis[pr] = pc;
  }

  // Bland: entering = lowest column with positive reduced cost, leaving =
  // lowest basic index among the minimal ratios. false iff unbounded.
  bool run(std::vector<Rat>& z) {
    for (;;) {
      long pc = -1;
      for (long j = 0; j < cols; ++j)
        if (z[j] > 0) {
          pc = j;
          break;
        }
      if (pc < 0) return true;
      long pr = -1;
      Rat best;
      for (long i = 0; i < m; ++i) {
        if (t[i][pc] <= 0) continue;
        Rat ratio = t[i][cols] / t[i][pc];
        if (pr < 0 || ratio < best || (ratio == best && basis[i] < basis[pr])) {
          pr = i;
          best = ratio;
        }
      }
      if (pr < 0) return false;
      pivot(pr, pc, z);
    }
  }
};

// reduced costs of c over the current basis; z[cols] = -objective
std::vector<Rat> price(const Tableau& tb, const std::vector<Rat>& c) {
  std::vector<Rat> z(tb.cols + 1, Rat(0));
  for (long j = 0; j < tb.cols; ++j) z[j] = c[j];
  for (long i = 0; i < tb.m; ++i) {
    const Rat& cb = c[tb.basis[i]];
    if (cb == 0) continue;
    for (long j = 0; j <= tb.cols; ++j) z[j] -= cb * tb.t[i][j];
  }
  return z;
}

}  // namespace

LpResult simplex_max(const Lp& lp) {
  const long m = static_cast<long>(lp.rows.size());
  const long n = static_cast<long>(lp.objective.size());
  assert(lp.rhs.size() == lp.rows.size());
  Tableau tb;
  tb.m = m;
  long nart = 0;
  for (long i = 0; i < m; ++i)
    if (lp.rhs[i] < 0) ++nart;
  tb.cols = n + m + nart;
  tb.t.assign(m, std::vector<Rat>(tb.cols + 1, Rat(0)));
  tb.basis.assign(m, -1);
  long art = n + m;
  for (long i = 0; i < m; ++i) {
    auto& row = tb.t[i];
    const auto& src = lp.rows[i];
    for (long j = 0; j < n && j < static_cast<long>(src.size()); ++j)
      row[j] = src[j];
    row[n + i] = 1;
    row[tb.cols] = lp.rhs[i];
    if (lp.rhs[i] < 0) {  // negate so the rhs is nonnegative, add artificial
      for (auto& v : row) v = -v;
      row[art] = 1;
      tb.basis[i] = art++;
    } else {
      tb.basis[i] = n + i;
    }
  }

  if (nart > 0) {
    std::vector<Rat> c1(tb.cols, Rat(0));
    for (long j = n + m; j < tb.cols; ++j) c1[j] = -1;
    auto z = price(tb, c1);
    bool bounded = tb.run(z);
    assert(bounded);  // phase-1 objective is <= 0
    (void)bounded;
    if (-z[tb.cols] != 0) return LpResult{Status::infeasible, Rat(0), {}};
    for (long i = 0; i < tb.m; ++i) {  // drive artificials out of the basis
      if (tb.basis[i] < n + m) continue;
      long pc = -1;
      for (long j = 0; j < n + m; ++j)
        if (tb.t[i][j] != 0) {
          pc = j;
          break;
        }
      if (pc >= 0) tb.pivot(i, pc, z);
    }
    for (long i = tb.m - 1; i >= 0; --i) {  // leftovers mark redundant rows
      if (tb.basis[i] < n + m) continue;
      tb.t.erase(tb.t.begin() + i);
      tb.basis.erase(tb.basis.begin() + i);
      --tb.m;
    }
    for (auto& row : tb.t) row.erase(row.begin() + n + m, row.begin() + tb.cols);
    tb.cols = n + m;
    for (auto& row : tb.t) assert(static_cast<long>(row.size()) == tb.cols + 1);
  }

  std::vector<Rat> c2(tb.cols, Rat(0));
  for (long j = 0; j < n; ++j) c2[j] = lp.objective[j];
  auto z = price(tb, c2);
  if (!tb.run(z)) return LpResult{Status::unbounded, Rat(0), {}};
  LpResult res;
  res.status = Status::optimal;
  res.optimum = -z[tb.cols];
  res.solution.assign(n, Rat(0));
  for (long i = 0; i < tb.m; ++i)
    if (tb.basis[i] < n) res.solution[tb.basis[i]] = tb.t[i][tb.cols];
  return res;
}

namespace {

struct Branch {
  long var;
  bool is_upper;  // x_var <= val, else x_var >= val
  Int val;
};

Lp with_branches(const Lp& base, const std::vector<Branch>& bs) {
  Lp lp = base;
  for (const auto& b : bs) {
    std::vector<Rat> row(base.objective.size(), Rat(0));
    row[b.var] = b.is_upper ? 1 : -1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(b.is_upper ? Rat(b.val) : Rat(-b.val));
  }
  return lp;
}

}  // namespace

BbResult branch_and_bound_max(const Lp& lp, long node_budget) {
  assert(node_budget >= 1);
  struct Node {
    std::vector<Branch> branches;
    std::optional<Rat> parent_bound;
  };
  BbResult res;
  std::vector<Node> stack;
  stack.push_back(Node{});
  bool exhausted = false;
  while (!stack.empty()) {
    if (res.nodes >= node_budget) {
      exhausted = true;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.parent_bound && res.feasible &&
        qcalc::floor_rat(*node.parent_bound) <= res.best)
      continue;
    ++res.nodes;
    auto sol = simplex_max(with_branches(lp, node.branches));
    if (sol.status == Status::infeasible) continue;
    assert(sol.status == Status::optimal);  // pre: bounded polytope
    const Int fl = qcalc::floor_rat(sol.optimum);
    if (res.feasible && fl <= res.best) continue;
    long frac = -1;
    for (long j = 0; j < static_cast<long>(sol.solution.size()); ++j)
      if (sol.solution[j].get_den() != 1) {
        frac = j;
        break;
      }
    if (frac < 0) {
      res.feasible = true;
      res.best = fl;
      res.solution.clear();
      res.solution.reserve(sol.solution.size());
      for (const auto& x : sol.solution) res.solution.push_back(x.get_num());
      continue;
    }
    const Int fv = qcalc::floor_rat(sol.solution[frac]);
    Node down{node.branches, sol.optimum};
    down.branches.push_back(Branch{frac, true, fv});
    Node up{node.branches, sol.optimum};
    up.branches.push_back(Branch{frac, false, fv + 1});
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));  // explore the >= side first
  }
  if (!exhausted) {
    res.proven = true;
    res.bound = res.feasible ? res.best : Int(0);
    return res;
  }
  res.bound = res.feasible ? res.best : Int(0);
  for (const auto& node : stack)
    if (node.parent_bound) {
      Int b = qcalc::floor_rat(*node.parent_bound);
      if (b > res.bound) res.bound = b;
    }
  return res;
}

}  // namespace ratlp
}  // namespace subspace
