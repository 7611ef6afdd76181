#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subspace/model.hpp"

namespace subspace {
namespace engine {

struct GridConfig {
  long qmax = 2;   // prime powers in [2, qmax]
  long nmax = 13;  // ambient dimensions 1..nmax
  long ef_node_budget = 200;
  bool ev_bb = false;  // Etzion-Vardy: floor of the LP optimum by default
  long ev_node_budget = 5000;
  unsigned long order_seed = 0;  // 0 = ascending sweeps; else shuffled
};

// one line of a facts file; k < 0 marks a mixed dimension entry
struct Fact {
  long q = 2, n = 1, d = 1, k = -1;
  std::string id;
  std::string parameter;
  Direction direction = Direction::lower;
  Int value;
  std::string source;
  std::string iso;  // "", a count, or ">=c"
};

// tab separated: q n d k id parameter direction value source iso
// ("-" for empty columns, # for comments)
std::vector<Fact> parse_facts(const std::string& text, std::string* error);
const std::string& builtin_facts();

struct CellState {
  Int lower = 0;
  Int upper = 0;
  std::vector<BoundRecord> records;  // catalogue order
  std::optional<Int> lmrd;           // CDC: lifted-MRD-containing bound
  bool classified = false;
  std::string iso;
  std::string comment;
};

class Table {
 public:
  explicit Table(const GridConfig& cfg);

  void seed_facts(const std::string& text);
  void fixpoint();
  bool converged() const { return converged_; }

  const GridConfig& config() const { return cfg_; }
  const std::vector<long>& qs() const { return qs_; }

  // stored canonical cells, nullptr outside the grid
  const CellState* cdc_cell(long q, long n, long d, long k) const;
  const CellState* mdc_cell(long q, long n, long d) const;

  // normalized best-bound lookups; any raw parameters
  Int cdc_lower(long q, long n, long d, long k) const;
  Int cdc_upper(long q, long n, long d, long k) const;
  Int mdc_lower(long q, long n, long d) const;
  Int mdc_upper(long q, long n, long d) const;

  // lower <= upper everywhere; offending records go to diag
  bool verify_consistent(std::ostream& diag) const;

  std::string grid_hash() const;
  void save(std::ostream& os) const;
  static std::optional<Table> load(std::istream& is, std::string* error);

  using CdcKey = std::array<long, 4>;  // q n d k
  using MdcKey = std::array<long, 3>;  // q n d
  const std::map<CdcKey, CellState>& cdc_cells() const { return cdc_cells_; }
  const std::map<MdcKey, CellState>& mdc_cells() const { return mdc_cells_; }

 private:
  bool sweep();
  bool eval_cdc(const CdcKey& key, CellState& cell);
  bool eval_mdc(const MdcKey& key, CellState& cell);
  BoundRecord ef_record(long q, long n, long d, long k);
  void apply_fact(const Fact& f);

  GridConfig cfg_;
  std::vector<long> qs_;
  std::map<CdcKey, CellState> cdc_cells_;
  std::map<MdcKey, CellState> mdc_cells_;
  std::map<CdcKey, BoundRecord> ef_cache_;
  std::map<MdcKey, std::pair<std::vector<Int>, Int>> ev_cache_;
  std::string facts_digest_;
  bool converged_ = false;
};

enum class ListView { all, best, dominance };

// best = best instance per constraint id; dominance additionally hides ids
// dominated by a present id (transitive closure of the published relations)
std::vector<BoundRecord> dominance_filter(const std::vector<BoundRecord>& recs,
                                          ListView view);

enum class TableView {
  short_range,
  normal,
  large,
  relative_gap,
  ratio,
  density,
  realized_density,
  amount_multicomponent,
  amount_lifted_mrd,
  amount_mrd_bound,
};

std::optional<TableView> table_view_from_name(const std::string& s);

// bold cells render as "m", "m * (c)", "m (>= c)"; open cells as "l-u"
std::string cell_text(const Table& tab, long q, long n, long d, long k);
std::string mdc_cell_text(const Table& tab, long q, long n, long d);

// CDC table for fixed q and n, or the MDC table when n is absent
std::string render_table(const Table& tab, long q, std::optional<long> n,
                         TableView view);

struct TopEntry {
  std::string id;
  long points = 0;
  double score = 0.0;  // points / number of cells
  bool exact = false;  // flagged with * in the listing
};

std::vector<TopEntry> toplist(const Table& tab, bool mdc, Direction dir);
std::string render_toplists(const Table& tab);

}  // namespace engine
}  // namespace subspace
