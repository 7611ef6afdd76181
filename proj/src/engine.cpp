#include "subspace/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <iostream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "subspace/cdc_lower.hpp"
#include "subspace/cdc_upper.hpp"
#include "subspace/ef.hpp"
#include "subspace/mdc.hpp"
#include "subspace/spreads.hpp"

namespace subspace {
namespace engine {

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void sort_by_rank(std::vector<BoundRecord>& recs) {
  std::stable_sort(recs.begin(), recs.end(),
                   [](const BoundRecord& a, const BoundRecord& b) {
                     return catalogue_rank(a.id) < catalogue_rank(b.id);
                   });
}

std::string field(const std::string& s) { return s.empty() ? "-" : s; }

std::string unfield(const std::string& s) { return s == "-" ? "" : s; }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// the exact search is an LP-guided branch and bound; past this many
// candidate profiles the rational LPs dominate the whole compute
constexpr long kEfFullBudgetVertices = 64;
constexpr long kEfReducedBudgetVertices = 120;
constexpr long kEfReducedNodeBudget = 20;

}  // namespace

std::vector<Fact> parse_facts(const std::string& text, std::string* error) {
  std::vector<Fact> out;
  std::istringstream is(text);
  std::string line;
  long lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() < 8) {
      if (error) *error = "facts line " + std::to_string(lineno) +
                          ": expected at least 8 tab separated columns";
      return {};
    }
    Fact f;
    try {
      f.q = std::stol(cols[0]);
      f.n = std::stol(cols[1]);
      f.d = std::stol(cols[2]);
      f.k = cols[3] == "-" ? -1 : std::stol(cols[3]);
      f.id = cols[4];
      f.parameter = unfield(cols[5]);
      auto dir = direction_from_name(cols[6]);
      if (!dir) throw std::invalid_argument("direction");
      f.direction = *dir;
      f.value = Int(cols[7]);
      if (cols.size() > 8) f.source = unfield(cols[8]);
      if (cols.size() > 9) f.iso = unfield(cols[9]);
    } catch (const std::exception&) {
      if (error)
        *error = "facts line " + std::to_string(lineno) + ": unparsable";
      return {};
    }
    out.push_back(std::move(f));
  }
  return out;
}

Table::Table(const GridConfig& cfg) : cfg_(cfg) {
  for (long q = 2; q <= cfg_.qmax; ++q)
    if (is_prime_power(q)) qs_.push_back(q);
  for (long q : qs_) {
    for (long n = 4; n <= cfg_.nmax; ++n)
      for (long k = 2; k <= n / 2; ++k)
        for (long d = 4; d <= 2 * k; d += 2) {
          CellState cell;
          cell.upper = cdc::all_subs(q, n, k);
          cdc_cells_.emplace(CdcKey{q, n, d, k}, std::move(cell));
        }
    for (long n = 1; n <= cfg_.nmax; ++n)
      for (long d = 1; d <= n; ++d) {
        CellState cell;
        for (long k = 0; k <= n; ++k)
          cell.upper += qcalc::gauss_binom(n, k, Int(q));
        mdc_cells_.emplace(MdcKey{q, n, d}, std::move(cell));
      }
  }
}

const CellState* Table::cdc_cell(long q, long n, long d, long k) const {
  auto it = cdc_cells_.find({q, n, d, k});
  return it == cdc_cells_.end() ? nullptr : &it->second;
}

const CellState* Table::mdc_cell(long q, long n, long d) const {
  auto it = mdc_cells_.find({q, n, d});
  return it == mdc_cells_.end() ? nullptr : &it->second;
}

Int Table::cdc_lower(long q, long n, long d, long k) const {
  auto norm = normalize_cdc({q, n, d, k});
  if (norm.out_of_range) return 0;
  if (norm.trivial) return *norm.trivial;
  const CellState* cell =
      cdc_cell(q, norm.canonical.n, norm.canonical.d, norm.canonical.k);
  return cell ? cell->lower : Int(0);
}

Int Table::cdc_upper(long q, long n, long d, long k) const {
  auto norm = normalize_cdc({q, n, d, k});
  if (norm.out_of_range) return 0;
  if (norm.trivial) return *norm.trivial;
  const CellState* cell =
      cdc_cell(q, norm.canonical.n, norm.canonical.d, norm.canonical.k);
  return cell ? cell->upper : cdc::all_subs(q, norm.canonical.n, norm.canonical.k);
}

Int Table::mdc_lower(long q, long n, long d) const {
  if (d > n) return 1;
  const CellState* cell = mdc_cell(q, n, std::max(d, 1L));
  return cell ? cell->lower : Int(0);
}

Int Table::mdc_upper(long q, long n, long d) const {
  if (d > n) return 1;
  const CellState* cell = mdc_cell(q, n, std::max(d, 1L));
  if (cell) return cell->upper;
  Int s = 0;
  for (long k = 0; k <= n; ++k) s += qcalc::gauss_binom(n, k, Int(q));
  return s;
}

void Table::apply_fact(const Fact& f) {
  CellState* cell = nullptr;
  if (f.k < 0) {
    auto it = mdc_cells_.find({f.q, f.n, f.d});
    if (it != mdc_cells_.end()) cell = &it->second;
  } else {
    auto norm = normalize_cdc({f.q, f.n, f.d, f.k});
    if (norm.out_of_range || norm.trivial) return;
    auto it = cdc_cells_.find(
        {f.q, norm.canonical.n, norm.canonical.d, norm.canonical.k});
    if (it != cdc_cells_.end()) cell = &it->second;
  }
  if (!cell) return;  // outside the configured grid
  if (!f.iso.empty()) {
    cell->iso = f.iso;
    if (f.direction == Direction::exact && all_digits(f.iso))
      cell->classified = true;
  }
  if (f.direction == Direction::exact) {
    cell->lower = std::max(cell->lower, f.value);
    cell->upper = std::min(cell->upper, f.value);
    return;  // exact facts seed the bounds without a constraint record
  }
  BoundRecord rec{f.id, f.parameter.empty() ? f.source : f.parameter,
                  f.direction, f.value, true};
  cell->records.push_back(std::move(rec));
  if (f.direction == Direction::lower)
    cell->lower = std::max(cell->lower, f.value);
  else
    cell->upper = std::min(cell->upper, f.value);
}

void Table::seed_facts(const std::string& text) {
  std::string err;
  auto facts = parse_facts(text, &err);
  if (!err.empty()) {
    std::cerr << "warning: " << err << " (ignoring file)\n";
    return;
  }
  for (const auto& f : facts) apply_fact(f);
  facts_digest_ += text;
}

BoundRecord Table::ef_record(long q, long n, long d, long k) {
  CdcKey key{q, n, d, k};
  auto it = ef_cache_.find(key);
  if (it != ef_cache_.end()) return it->second;
  long verts = binom(n, k);
  ef::Budget budget;
  budget.node_budget = cfg_.ef_node_budget;
  ef::Mode mode = ef::Mode::exact;
  if (verts > kEfReducedBudgetVertices)
    mode = ef::Mode::greedy;
  else if (verts > kEfFullBudgetVertices)
    budget.node_budget = std::min(budget.node_budget, kEfReducedNodeBudget);
  auto res = ef::skeleton_optimize_cdc(q, n, d, k, mode, budget);
  BoundRecord rec;
  rec.direction = Direction::lower;
  rec.value = res.total;
  if (mode == ef::Mode::greedy || res.over_cap) {
    rec.id = "greedy_multicomponent";
    rec.parameter = "greedy";
  } else if (res.proven) {
    rec.id = "ef_computation";
    rec.parameter = ef::profiles_repr(res.skeleton);
  } else {
    rec.id = "echelon_ferrers";
    rec.parameter = "bb-incumbent";
  }
  ef_cache_.emplace(key, rec);
  return rec;
}

bool Table::eval_cdc(const CdcKey& key, CellState& cell) {
  const long q = key[0], n = key[1], d = key[2], k = key[3];
  cdc::Lookup look{
      [this, q](long nn, long dd, long kk) { return cdc_lower(q, nn, dd, kk); },
      [this, q](long nn, long dd, long kk) { return cdc_upper(q, nn, dd, kk); }};
  std::vector<BoundRecord> recs = cdc::lower_records(q, n, d, k, look);
  recs.push_back(ef_record(q, n, d, k));
  if (d == 2 * k) {
    auto battery = spreads::upper_battery(q, n, k);
    recs.insert(recs.end(), battery.begin(), battery.end());
  }
  auto ups = cdc::upper_records(q, n, d, k, look);
  recs.insert(recs.end(), ups.begin(), ups.end());
  for (const auto& r : cell.records)
    if (r.external) recs.push_back(r);
  sort_by_rank(recs);

  Int lo = cell.lower, up = cell.upper;
  for (const auto& r : recs) {
    if (r.direction != Direction::upper) lo = std::max(lo, r.value);
    if (r.direction != Direction::lower) up = std::min(up, r.value);
  }
  if (auto se = cdc::special_exact_cdc(q, n, d, k)) {
    lo = std::max(lo, *se);
    up = std::min(up, *se);
  }
  cell.lmrd = cdc::mrd_containing_bound(q, n, d, k, look);
  bool changed = lo != cell.lower || up != cell.upper;
  cell.lower = std::move(lo);
  cell.upper = std::move(up);
  cell.records = std::move(recs);
  return changed;
}

bool Table::eval_mdc(const MdcKey& key, CellState& cell) {
  const long q = key[0], n = key[1], d = key[2];
  mdc::Lookup look{
      [this, q](long nn, long dd, long kk) { return cdc_lower(q, nn, dd, kk); },
      [this, q](long nn, long dd, long kk) { return cdc_upper(q, nn, dd, kk); },
      [this, q](long nn, long dd) -> std::optional<Int> {
        const CellState* c = mdc_cell(q, nn, dd);
        if (!c) return std::nullopt;
        return c->upper;
      },
      cfg_.nmax};
  std::vector<BoundRecord> recs =
      mdc::records(q, n, d, look, mdc::EvMode::lp, cfg_.ev_node_budget);
  if (cfg_.ev_bb && d % 2 == 1) {
    // reuse the branch and bound value while its inputs are unchanged
    std::vector<Int> inputs;
    inputs.reserve(n + 1);
    for (long i = 0; i <= n; ++i) inputs.push_back(cdc_upper(q, n, d + 1, i));
    auto& slot = ev_cache_[key];
    if (slot.first != inputs) {
      auto v = mdc::etzion_vardy(q, n, d, look, mdc::EvMode::bb,
                                 std::max(cfg_.ev_node_budget, 1L));
      slot.first = std::move(inputs);
      if (v) slot.second = *v;
    }
    for (auto& r : recs)
      if (r.id == "Etzion_Vardy_ilp") r.value = slot.second;
  }
  for (const auto& r : cell.records)
    if (r.external) recs.push_back(r);
  sort_by_rank(recs);

  Int lo = cell.lower, up = cell.upper;
  for (const auto& r : recs) {
    if (r.direction != Direction::upper) lo = std::max(lo, r.value);
    if (r.direction != Direction::lower) up = std::min(up, r.value);
  }
  bool changed = lo != cell.lower || up != cell.upper;
  cell.lower = std::move(lo);
  cell.upper = std::move(up);
  cell.records = std::move(recs);
  return changed;
}

bool Table::sweep() {
  std::vector<CdcKey> corder;
  corder.reserve(cdc_cells_.size());
  for (const auto& kv : cdc_cells_) corder.push_back(kv.first);
  std::vector<MdcKey> morder;
  morder.reserve(mdc_cells_.size());
  for (const auto& kv : mdc_cells_) morder.push_back(kv.first);
  if (cfg_.order_seed != 0) {
    std::mt19937_64 rng(cfg_.order_seed);
    std::shuffle(corder.begin(), corder.end(), rng);
    std::shuffle(morder.begin(), morder.end(), rng);
  }
  bool changed = false;
  for (const auto& key : corder)
    changed = eval_cdc(key, cdc_cells_.at(key)) || changed;
  for (const auto& key : morder)
    changed = eval_mdc(key, mdc_cells_.at(key)) || changed;
  return changed;
}

void Table::fixpoint() {
  // monotone bounded lattice: lowers only grow, uppers only shrink
  for (long round = 0; sweep(); ++round) {
    if (round > 200) {
      std::cerr << "warning: fixpoint did not settle after 200 sweeps\n";
      break;
    }
  }
  converged_ = true;
}

bool Table::verify_consistent(std::ostream& diag) const {
  bool ok = true;
  auto report = [&](const std::string& where, const CellState& cell) {
    ok = false;
    std::string lo_id = "seeded", up_id = "seeded";
    for (const auto& r : cell.records) {
      if (r.direction != Direction::upper && r.value == cell.lower)
        lo_id = r.id;
      if (r.direction != Direction::lower && r.value == cell.upper)
        up_id = r.id;
    }
    diag << where << ": lower " << qcalc::to_string(cell.lower) << " (" << lo_id
         << ") > upper " << qcalc::to_string(cell.upper) << " (" << up_id
         << ")\n";
  };
  for (const auto& [key, cell] : cdc_cells_)
    if (cell.lower > cell.upper)
      report("A_" + std::to_string(key[0]) + "(" + std::to_string(key[1]) +
                 "," + std::to_string(key[2]) + ";" + std::to_string(key[3]) +
                 ")",
             cell);
  for (const auto& [key, cell] : mdc_cells_)
    if (cell.lower > cell.upper)
      report("A_" + std::to_string(key[0]) + "(" + std::to_string(key[1]) +
                 "," + std::to_string(key[2]) + ")",
             cell);
  return ok;
}

std::string Table::grid_hash() const {
  std::string blob = std::to_string(cfg_.qmax) + "|" +
                     std::to_string(cfg_.nmax) + "|" +
                     std::to_string(cfg_.ef_node_budget) + "|" +
                     (cfg_.ev_bb ? "bb" : "lp") + "|" +
                     std::to_string(cfg_.ev_node_budget) + "|" + facts_digest_;
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : blob) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

namespace {

void save_records(std::ostream& os, const std::string& prefix,
                  const std::vector<BoundRecord>& recs) {
  for (const auto& r : recs)
    os << "rec\t" << prefix << '\t' << r.id << '\t' << field(r.parameter)
       << '\t' << direction_name(r.direction) << '\t'
       << qcalc::to_string(r.value) << '\t' << (r.external ? 1 : 0) << '\n';
}

void save_cell(std::ostream& os, const std::string& prefix,
               const CellState& cell) {
  os << "cell\t" << prefix << '\t' << qcalc::to_string(cell.lower) << '\t'
     << qcalc::to_string(cell.upper) << '\t' << (cell.classified ? 1 : 0)
     << '\t' << field(cell.iso) << '\t'
     << (cell.lmrd ? qcalc::to_string(*cell.lmrd) : "-") << '\t'
     << field(cell.comment) << '\n';
  save_records(os, prefix, cell.records);
}

}  // namespace

void Table::save(std::ostream& os) const {
  os << "# subspace-cache v1 hash=" << grid_hash() << '\n';
  os << "config\t" << cfg_.qmax << '\t' << cfg_.nmax << '\t'
     << cfg_.ef_node_budget << '\t' << (cfg_.ev_bb ? "bb" : "lp") << '\t'
     << cfg_.ev_node_budget << '\n';
  for (const auto& [key, cell] : cdc_cells_) {
    std::string prefix = std::to_string(key[0]) + "\t" +
                         std::to_string(key[1]) + "\t" +
                         std::to_string(key[2]) + "\t" + std::to_string(key[3]);
    save_cell(os, prefix, cell);
  }
  for (const auto& [key, cell] : mdc_cells_) {
    std::string prefix = std::to_string(key[0]) + "\t" +
                         std::to_string(key[1]) + "\t" +
                         std::to_string(key[2]) + "\t-";
    save_cell(os, prefix, cell);
  }
}

std::optional<Table> Table::load(std::istream& is, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<Table> {
    if (error) *error = msg;
    return std::nullopt;
  };
  std::string line;
  if (!std::getline(is, line) || line.rfind("# subspace-cache v1", 0) != 0)
    return fail("not a cache file");
  if (!std::getline(is, line)) return fail("missing config line");
  auto cols = split_tabs(line);
  if (cols.size() != 6 || cols[0] != "config") return fail("bad config line");
  GridConfig cfg;
  try {
    cfg.qmax = std::stol(cols[1]);
    cfg.nmax = std::stol(cols[2]);
    cfg.ef_node_budget = std::stol(cols[3]);
    cfg.ev_bb = cols[4] == "bb";
    cfg.ev_node_budget = std::stol(cols[5]);
  } catch (const std::exception&) {
    return fail("bad config line");
  }
  Table tab(cfg);
  CellState* current = nullptr;
  long lineno = 2;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    cols = split_tabs(line);
    auto bad = [&] { return fail("cache line " + std::to_string(lineno)); };
    try {
      if (cols[0] == "cell" && cols.size() == 11) {
        long q = std::stol(cols[1]), n = std::stol(cols[2]),
             d = std::stol(cols[3]);
        if (cols[4] == "-") {
          auto it = tab.mdc_cells_.find({q, n, d});
          if (it == tab.mdc_cells_.end()) return bad();
          current = &it->second;
        } else {
          auto it = tab.cdc_cells_.find({q, n, d, std::stol(cols[4])});
          if (it == tab.cdc_cells_.end()) return bad();
          current = &it->second;
        }
        current->lower = Int(cols[5]);
        current->upper = Int(cols[6]);
        current->classified = cols[7] == "1";
        current->iso = unfield(cols[8]);
        if (cols[9] == "-")
          current->lmrd.reset();
        else
          current->lmrd = Int(cols[9]);
        current->comment = unfield(cols[10]);
        current->records.clear();
      } else if (cols[0] == "rec" && cols.size() == 10) {
        if (!current) return bad();
        auto dir = direction_from_name(cols[7]);
        if (!dir) return bad();
        current->records.push_back(BoundRecord{
            cols[5], unfield(cols[6]), *dir, Int(cols[8]), cols[9] == "1"});
      } else {
        return bad();
      }
    } catch (const std::exception&) {
      return bad();
    }
  }
  tab.converged_ = true;
  return tab;
}

}  // namespace engine
}  // namespace subspace
