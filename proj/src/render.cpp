#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "subspace/cdc_lower.hpp"
#include "subspace/cdc_upper.hpp"
#include "subspace/engine.hpp"

namespace subspace {
namespace engine {

namespace {

Kind kind_of(const std::string& id) {
  static const std::map<std::string, Kind>* m = [] {
    auto* mm = new std::map<std::string, Kind>;
    for (const auto& c : constraint_catalogue()) (*mm)[c.id] = c.kind;
    return mm;
  }();
  auto it = m->find(id);
  return it == m->end() ? Kind::cdc_lower : it->second;
}

bool is_exact_kind(const std::string& id) {
  Kind k = kind_of(id);
  return k == Kind::cdc_exact || k == Kind::mdc_exact;
}

}  // namespace

namespace {

// winner -> losers it hides when present; closure of the published relations
const std::map<std::string, std::set<std::string>>& dominance_closure() {
  static const std::map<std::string, std::set<std::string>>* closure = [] {
    const std::vector<std::pair<std::string, std::string>> edges = {
        {"sphere_packing", "all_subs"},
        {"anticode", "sphere_packing"},
        {"anticode", "singleton"},
        {"johnson_1", "johnson_2"},
        {"johnson_1", "anticode"},
        {"johnson_1", "ilp_1"},
        {"ilp_1", "ilp_2"},
        {"ilp_4", "ilp_3"},
        {"johnson_2", "ilp_4"},
        {"Ahlswede_Aydinian", "johnson_1"},
        {"Ahlswede_Aydinian", "johnson_2"},
        {"sphere_covering", "trivial_1"},
        {"echelon_ferrers", "lin_poly"},
        {"ef_computation", "echelon_ferrers"},
        {"improved_linkage", "linkage_GLT"},
        {"improved_linkage", "linkage_ST"},
    };
    auto* m = new std::map<std::string, std::set<std::string>>;
    for (const auto& e : edges) (*m)[e.first].insert(e.second);
    for (bool grew = true; grew;) {  // transitive closure
      grew = false;
      for (auto& [w, losers] : *m) {
        std::set<std::string> add;
        for (const auto& l : losers) {
          auto it = m->find(l);
          if (it == m->end()) continue;
          for (const auto& l2 : it->second)
            if (!losers.count(l2)) add.insert(l2);
        }
        if (!add.empty()) {
          losers.insert(add.begin(), add.end());
          grew = true;
        }
      }
    }
    return m;
  }();
  return *closure;
}

std::vector<BoundRecord> best_per_id(const std::vector<BoundRecord>& recs) {
  std::vector<BoundRecord> out;
  std::map<std::string, size_t> seen;
  for (const auto& r : recs) {
    auto it = seen.find(r.id);
    if (it == seen.end()) {
      seen.emplace(r.id, out.size());
      out.push_back(r);
      continue;
    }
    BoundRecord& have = out[it->second];
    bool better = r.direction == Direction::upper ? r.value < have.value
                                                  : r.value > have.value;
    if (better) have = r;
  }
  return out;
}

}  // namespace

std::vector<BoundRecord> dominance_filter(const std::vector<BoundRecord>& recs,
                                          ListView view) {
  if (view == ListView::all) return recs;
  std::vector<BoundRecord> best = best_per_id(recs);
  if (view == ListView::best) return best;
  std::set<std::string> present;
  for (const auto& r : best) present.insert(r.id);
  std::set<std::string> hidden;
  for (const auto& [winner, losers] : dominance_closure())
    if (present.count(winner))
      hidden.insert(losers.begin(), losers.end());
  std::vector<BoundRecord> out;
  for (auto& r : best)
    if (!hidden.count(r.id)) out.push_back(std::move(r));
  return out;
}

std::optional<TableView> table_view_from_name(const std::string& s) {
  static const std::map<std::string, TableView> names = {
      {"short", TableView::short_range},
      {"normal", TableView::normal},
      {"large", TableView::large},
      {"relative_gap", TableView::relative_gap},
      {"ratio", TableView::ratio},
      {"density", TableView::density},
      {"realized_density", TableView::realized_density},
      {"amount_multicomponent", TableView::amount_multicomponent},
      {"amount_lifted_mrd", TableView::amount_lifted_mrd},
      {"amount_mrd_bound", TableView::amount_mrd_bound},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string bold_text(const Int& value, const CellState* cell) {
  std::string s = qcalc::to_string(value);
  if (!cell || cell->iso.empty()) return s;
  if (cell->classified) return s + " * (" + cell->iso + ")";
  return s + " (" + cell->iso + ")";
}

std::string three_places(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

double to_double(const Int& v) { return mpz_get_d(v.get_mpz_t()); }

}  // namespace

std::string cell_text(const Table& tab, long q, long n, long d, long k) {
  auto norm = normalize_cdc({q, n, d, k});
  if (norm.out_of_range) return "0";
  if (norm.trivial) return qcalc::to_string(*norm.trivial);
  const CellState* cell =
      tab.cdc_cell(q, norm.canonical.n, norm.canonical.d, norm.canonical.k);
  Int lo = tab.cdc_lower(q, n, d, k), up = tab.cdc_upper(q, n, d, k);
  if (lo == up) return bold_text(lo, cell);
  return qcalc::to_string(lo) + "-" + qcalc::to_string(up);
}

std::string mdc_cell_text(const Table& tab, long q, long n, long d) {
  const CellState* cell = tab.mdc_cell(q, n, d);
  Int lo = tab.mdc_lower(q, n, d), up = tab.mdc_upper(q, n, d);
  if (lo == up) return bold_text(lo, cell);
  return qcalc::to_string(lo) + "-" + qcalc::to_string(up);
}

namespace {

std::string analysis_text(const Table& tab, long q, long n, long d, long k,
                          TableView view) {
  Int lo = tab.cdc_lower(q, n, d, k), up = tab.cdc_upper(q, n, d, k);
  auto ratio_text = [&](const Int& num, const Int& den) {
    if (den == 0) return std::string("-");
    return three_places(to_double(num) / to_double(den));
  };
  switch (view) {
    case TableView::relative_gap:
      return ratio_text(up - lo, lo);
    case TableView::ratio:
      return ratio_text(lo, up);
    case TableView::density:
      return ratio_text(up, cdc::anticode(q, n, d, k));
    case TableView::realized_density:
      return ratio_text(lo, cdc::anticode(q, n, d, k));
    case TableView::amount_multicomponent:
      return ratio_text(lo, cdc::multicomponent(q, n, d, k));
    case TableView::amount_lifted_mrd:
      return ratio_text(lo, cdc::lifted_mrd(q, n, d, k));
    case TableView::amount_mrd_bound: {
      const CellState* cell = tab.cdc_cell(q, n, d, k);
      if (!cell || !cell->lmrd || *cell->lmrd == 0) return "-";
      return ratio_text(lo, *cell->lmrd);
    }
    default:
      return "-";
  }
}

std::string layout(const std::string& title,
                   const std::vector<std::string>& col_labels,
                   const std::vector<std::string>& row_labels,
                   const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width(col_labels.size());
  for (size_t j = 0; j < col_labels.size(); ++j) {
    width[j] = col_labels[j].size();
    for (const auto& row : cells)
      if (j < row.size()) width[j] = std::max(width[j], row[j].size());
  }
  size_t label_width = 0;
  for (const auto& l : row_labels) label_width = std::max(label_width, l.size());
  auto emit_row = [&](const std::string& label,
                      const std::vector<std::string>* row) {
    std::string line = label + std::string(label_width - label.size(), ' ');
    for (size_t j = 0; j < col_labels.size(); ++j) {
      const std::string& c =
          row ? (j < row->size() ? (*row)[j] : std::string()) : col_labels[j];
      line += "  " + c + std::string(width[j] - c.size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + '\n';
  };
  std::string out = title + '\n';
  out += emit_row(std::string(), nullptr);
  for (size_t i = 0; i < row_labels.size(); ++i)
    out += emit_row(row_labels[i], &cells[i]);
  return out;
}

}  // namespace

std::string render_table(const Table& tab, long q, std::optional<long> n,
                         TableView view) {
  if (!n) {  // mixed dimension table: rows d, columns n
    long nmax = tab.config().nmax;
    std::vector<std::string> cols, rows;
    std::vector<std::vector<std::string>> cells;
    for (long nn = 1; nn <= nmax; ++nn) cols.push_back("n=" + std::to_string(nn));
    for (long d = 1; d <= nmax; ++d) {
      rows.push_back("d=" + std::to_string(d));
      std::vector<std::string> row;
      for (long nn = 1; nn <= nmax; ++nn) {
        if (d > nn) {
          row.emplace_back();
          continue;
        }
        if (view == TableView::relative_gap || view == TableView::ratio) {
          Int lo = tab.mdc_lower(q, nn, d), up = tab.mdc_upper(q, nn, d);
          if (lo == 0)
            row.emplace_back("-");
          else if (view == TableView::relative_gap)
            row.push_back(three_places(to_double(up - lo) / to_double(lo)));
          else
            row.push_back(three_places(to_double(lo) / to_double(up)));
        } else {
          row.push_back(mdc_cell_text(tab, q, nn, d));
        }
      }
      cells.push_back(std::move(row));
    }
    return layout("A_" + std::to_string(q) + "(n, d), n <= " +
                      std::to_string(nmax),
                  cols, rows, cells);
  }

  const long nn = *n;
  long kmin, kmax, dmin, dmax, dstep;
  switch (view) {
    case TableView::normal:
      kmin = 1, kmax = nn / 2, dmin = 2, dmax = 2 * (nn / 2), dstep = 2;
      break;
    case TableView::large:
      kmin = 0, kmax = nn, dmin = 1, dmax = nn, dstep = 1;
      break;
    default:  // short ranges, also for the analysis views
      kmin = 2, kmax = nn / 2, dmin = 4, dmax = 2 * (nn / 2), dstep = 2;
      break;
  }
  bool analysis = view != TableView::short_range && view != TableView::normal &&
                  view != TableView::large;
  std::vector<std::string> cols, rows;
  std::vector<std::vector<std::string>> cells;
  for (long k = kmin; k <= kmax; ++k) cols.push_back("k=" + std::to_string(k));
  for (long d = dmin; d <= dmax; d += dstep) {
    rows.push_back("d=" + std::to_string(d));
    std::vector<std::string> row;
    for (long k = kmin; k <= kmax; ++k) {
      if (analysis && (d > 2 * std::min(k, nn - k) || d < 4)) {
        row.emplace_back();
        continue;
      }
      if (view == TableView::short_range && d > 2 * k) {
        row.emplace_back();
        continue;
      }
      row.push_back(analysis ? analysis_text(tab, q, nn, d, k, view)
                             : cell_text(tab, q, nn, d, k));
    }
    cells.push_back(std::move(row));
  }
  return layout("A_" + std::to_string(q) + "(" + std::to_string(nn) +
                    ", d; k)",
                cols, rows, cells);
}

std::vector<TopEntry> toplist(const Table& tab, bool mdc, Direction dir) {
  std::map<std::string, long> points;
  long cells = 0;
  auto tally = [&](const CellState& cell) {
    ++cells;
    const Int& target = dir == Direction::lower ? cell.lower : cell.upper;
    std::set<std::string> achieved;
    for (const auto& r : cell.records) {
      if (r.external) continue;
      if (dir == Direction::lower && r.direction == Direction::upper) continue;
      if (dir == Direction::upper && r.direction == Direction::lower) continue;
      if (r.value == target) achieved.insert(r.id);
    }
    for (const auto& id : achieved) ++points[id];
  };
  if (mdc)
    for (const auto& [key, cell] : tab.mdc_cells()) tally(cell);
  else
    for (const auto& [key, cell] : tab.cdc_cells()) tally(cell);
  std::vector<TopEntry> out;
  for (const auto& [id, p] : points) {
    TopEntry e;
    e.id = id;
    e.points = p;
    e.score = cells ? static_cast<double>(p) / static_cast<double>(cells) : 0.0;
    e.exact = is_exact_kind(id);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const TopEntry& a, const TopEntry& b) {
    if (a.points != b.points) return a.points > b.points;
    return catalogue_rank(a.id) < catalogue_rank(b.id);
  });
  return out;
}

std::string render_toplists(const Table& tab) {
  std::ostringstream os;
  auto block = [&](const char* title, bool mdc, Direction dir) {
    os << title << '\n';
    auto list = toplist(tab, mdc, dir);
    int rank = 0;
    for (const auto& e : list) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * e.score);
      os << "  " << ++rank << ". " << e.id << (e.exact ? " *" : "") << "  "
         << buf << " (" << e.points << ")\n";
    }
  };
  block("CDC lower bounds", false, Direction::lower);
  block("CDC upper bounds", false, Direction::upper);
  block("MDC lower bounds", true, Direction::lower);
  block("MDC upper bounds", true, Direction::upper);
  return os.str();
}

}  // namespace engine
}  // namespace subspace
