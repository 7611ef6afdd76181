#include <sstream>

#include "doctest.h"
#include "subspace/engine.hpp"

using namespace subspace;
using engine::Table;

namespace {

Table computed(long qmax, long nmax, bool seed, unsigned long order_seed = 0) {
  engine::GridConfig cfg;
  cfg.qmax = qmax;
  cfg.nmax = nmax;
  cfg.order_seed = order_seed;
  Table tab(cfg);
  if (seed) tab.seed_facts(engine::builtin_facts());
  tab.fixpoint();
  return tab;
}

const BoundRecord* find_rec(const std::vector<BoundRecord>& recs,
                            const std::string& id) {
  for (auto& r : recs)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("fixpoint settles the derivable exact cells without seeds") {
  Table tab = computed(2, 10, false);
  CHECK(tab.converged());
  std::ostringstream diag;
  CHECK(tab.verify_consistent(diag));

  auto exact = [&](long n, long d, long k, long v) {
    CHECK(tab.cdc_lower(2, n, d, k) == v);
    CHECK(tab.cdc_upper(2, n, d, k) == v);
  };
  exact(10, 8, 4, 65);
  exact(9, 8, 4, 33);
  exact(8, 8, 4, 17);
  exact(7, 6, 3, 17);
  exact(8, 6, 3, 34);
  exact(6, 6, 3, 9);
  exact(5, 4, 2, 9);
  exact(6, 4, 2, 21);
  exact(6, 4, 3, 77);
  exact(8, 6, 4, 257);

  // sharpened johnson: the plain recursion stops at 1158
  const engine::CellState* cell = tab.cdc_cell(2, 9, 6, 4);
  REQUIRE(cell != nullptr);
  CHECK(find_rec(cell->records, "johnson_1")->value == 1158);
  CHECK(find_rec(cell->records, "improved_johnson")->value == 1156);
  CHECK(tab.cdc_upper(2, 9, 6, 4) == 1156);

  cell = tab.cdc_cell(2, 7, 4, 3);
  REQUIRE(cell != nullptr);
  CHECK(find_rec(cell->records, "johnson_1")->value == 381);
  CHECK(tab.cdc_upper(2, 7, 4, 3) == 381);

  CHECK(tab.mdc_lower(2, 4, 2) == 37);
  CHECK(tab.mdc_upper(2, 4, 2) == 37);
  CHECK(tab.mdc_lower(2, 6, 6) == 9);
  CHECK(tab.mdc_upper(2, 6, 6) == 9);
  CHECK(tab.mdc_lower(2, 7, 6) == 17);
  CHECK(tab.mdc_upper(2, 7, 6) == 17);
  CHECK(tab.mdc_lower(2, 5, 3) == 18);
  CHECK(tab.mdc_upper(2, 5, 3) == 18);
  const engine::CellState* mcell = tab.mdc_cell(2, 5, 3);
  REQUIRE(mcell != nullptr);
  CHECK(find_rec(mcell->records, "cdc_average_argument")->value == 18);
}

TEST_CASE("q = 3 battery settles the hexagonal spread cell") {
  Table tab = computed(3, 6, false);
  CHECK(tab.cdc_lower(3, 6, 6, 3) == 28);
  CHECK(tab.cdc_upper(3, 6, 6, 3) == 28);
  CHECK(tab.mdc_lower(3, 5, 3) == 56);
  CHECK(tab.mdc_upper(3, 5, 3) == 56);
}

TEST_CASE("lookups normalize parameters") {
  Table tab = computed(2, 9, false);
  CHECK(tab.cdc_upper(2, 9, 6, 5) == tab.cdc_upper(2, 9, 6, 4));
  CHECK(tab.cdc_lower(2, 9, 5, 4) == tab.cdc_lower(2, 9, 6, 4));
  CHECK(tab.cdc_upper(2, 9, 14, 4) == 1);   // distance out of reach
  CHECK(tab.cdc_lower(2, 6, 2, 3) == 1395); // no constraint at d = 2
  CHECK(tab.cdc_lower(2, 9, 6, 10) == 0);
  CHECK(tab.cdc_upper(2, 9, 6, -1) == 0);
  CHECK(tab.mdc_lower(2, 3, 7) == 1);
  CHECK(tab.mdc_upper(2, 3, 7) == 1);
  CHECK(tab.mdc_lower(2, 5, 0) == 374);
}

TEST_CASE("sweep order does not change the fixpoint") {
  Table a = computed(2, 8, false);
  Table b = computed(2, 8, false, 42);
  for (const auto& [key, cell] : a.cdc_cells()) {
    const engine::CellState* other = b.cdc_cell(key[0], key[1], key[2], key[3]);
    REQUIRE(other != nullptr);
    CHECK(cell.lower == other->lower);
    CHECK(cell.upper == other->upper);
  }
  for (const auto& [key, cell] : a.mdc_cells()) {
    const engine::CellState* other = b.mdc_cell(key[0], key[1], key[2]);
    REQUIRE(other != nullptr);
    CHECK(cell.lower == other->lower);
    CHECK(cell.upper == other->upper);
  }
}

TEST_CASE("facts seed classifications and external records") {
  Table tab = computed(2, 9, true);
  const engine::CellState* cell = tab.cdc_cell(2, 6, 4, 3);
  REQUIRE(cell != nullptr);
  CHECK(cell->classified);
  CHECK(cell->iso == "5");
  CHECK(cell->lower == 77);
  CHECK(cell->upper == 77);
  CHECK(find_rec(cell->records, "known_exact") == nullptr);

  CHECK(tab.cdc_cell(2, 6, 4, 2)->iso == "131044");
  // iso count only bounded from below: not a finished classification
  cell = tab.cdc_cell(2, 8, 6, 3);
  CHECK_FALSE(cell->classified);
  CHECK(cell->iso == ">=624");

  cell = tab.cdc_cell(2, 9, 4, 3);
  CHECK(cell->lower == 5986);
  const BoundRecord* ext = find_rec(cell->records, "external");
  REQUIRE(ext != nullptr);
  CHECK(ext->external);
  CHECK(ext->parameter == "computer_search");
  CHECK(ext->value == 5986);

  CHECK(tab.mdc_lower(2, 6, 3) == 108);
  CHECK(tab.mdc_upper(2, 6, 3) == 118);

  Table bare = computed(2, 9, false);
  CHECK(tab.grid_hash() != bare.grid_hash());
}

TEST_CASE("cache round trip") {
  Table tab = computed(2, 8, true);
  std::ostringstream os;
  tab.save(os);
  std::istringstream is(os.str());
  std::string err;
  auto loaded = Table::load(is, &err);
  REQUIRE(loaded.has_value());
  CHECK(err.empty());
  CHECK(loaded->converged());
  for (const auto& [key, cell] : tab.cdc_cells()) {
    const engine::CellState* other =
        loaded->cdc_cell(key[0], key[1], key[2], key[3]);
    REQUIRE(other != nullptr);
    CHECK(cell.lower == other->lower);
    CHECK(cell.upper == other->upper);
    CHECK(cell.records.size() == other->records.size());
    CHECK(cell.classified == other->classified);
    CHECK(cell.iso == other->iso);
    CHECK(cell.lmrd == other->lmrd);
  }
  for (const auto& [key, cell] : tab.mdc_cells()) {
    const engine::CellState* other = loaded->mdc_cell(key[0], key[1], key[2]);
    CHECK(cell.lower == other->lower);
    CHECK(cell.upper == other->upper);
  }
  const engine::CellState* cell = loaded->cdc_cell(2, 6, 4, 3);
  CHECK(cell->classified);
  CHECK(cell->lmrd.value() == 71);

  std::istringstream garbage("not a cache\n");
  CHECK_FALSE(Table::load(garbage, &err).has_value());
  CHECK(err == "not a cache file");
  std::istringstream truncated("# subspace-cache v1 hash=0\n");
  CHECK_FALSE(Table::load(truncated, &err).has_value());
  CHECK(err == "missing config line");
}

TEST_CASE("facts parser") {
  std::string err;
  auto facts = engine::parse_facts(
      "# comment\n"
      "\n"
      "2\t6\t4\t3\texternal\t-\tlower\t100\n"
      "2\t6\t3\t-\texternal\tnote\tupper\t120\tsearch\t7\n",
      &err);
  CHECK(err.empty());
  REQUIRE(facts.size() == 2);
  CHECK(facts[0].k == 3);
  CHECK(facts[0].parameter == "");
  CHECK(facts[0].source == "");
  CHECK(facts[0].direction == Direction::lower);
  CHECK(facts[1].k == -1);
  CHECK(facts[1].parameter == "note");
  CHECK(facts[1].source == "search");
  CHECK(facts[1].iso == "7");
  CHECK(facts[1].direction == Direction::upper);

  CHECK(engine::parse_facts("2\t6\t4", &err).empty());
  CHECK(err == "facts line 1: expected at least 8 tab separated columns");
  engine::parse_facts("2\t6\t4\t3\tid\t-\tsideways\t100", &err);
  CHECK(err == "facts line 1: unparsable");
  engine::parse_facts("2\t6\t4\t3\tid\t-\tlower\t12x4", &err);
  CHECK(err == "facts line 1: unparsable");
}

TEST_CASE("second fixpoint changes nothing") {
  Table tab = computed(2, 8, true);
  std::ostringstream before;
  tab.save(before);
  tab.fixpoint();
  CHECK(tab.converged());
  std::ostringstream after;
  tab.save(after);
  CHECK(before.str() == after.str());
}
