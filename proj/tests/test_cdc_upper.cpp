#include <map>

#include "doctest.h"
#include "subspace/cdc_upper.hpp"

using namespace subspace;

namespace {

// lookup with exact uppers for the recursion cells the tests touch
cdc::Lookup upper_lookup(long q) {
  auto base = cdc::trivial_lookup(q);
  std::map<std::array<long, 3>, Int> known{
      {{5, 4, 2}, Int(9)},  {{6, 4, 2}, Int(21)}, {{6, 4, 3}, Int(77)},
      {{7, 6, 3}, Int(17)}, {{8, 6, 3}, Int(34)}, {{9, 6, 3}, Int(73)},
  };
  cdc::Lookup t;
  t.lower = base.lower;
  t.upper = [base, known, q](long n, long d, long k) -> Int {
    auto norm = normalize_cdc({q, n, d, k});
    if (norm.trivial) return *norm.trivial;
    if (norm.out_of_range) return 0;
    auto c = norm.canonical;
    auto it = known.find({c.n, c.d, c.k});
    return it != known.end() ? it->second : base.upper(n, d, k);
  };
  return t;
}

const BoundRecord* find_rec(const std::vector<BoundRecord>& recs,
                            const std::string& id, const std::string& par) {
  for (auto& r : recs)
    if (r.id == id && r.parameter == par) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("counting bounds") {
  CHECK(cdc::all_subs(2, 6, 3) == 1395);
  CHECK(cdc::all_subs(2, 8, 4) == 200787);
  CHECK(cdc::all_subs(3, 6, 3) == 33880);
  CHECK(cdc::singleton(2, 6, 4, 3) == 155);
  CHECK(cdc::singleton(2, 8, 6, 4) == 651);
  CHECK(cdc::sphere_packing(2, 6, 4, 3) == 1395);  // radius 0 ball
  CHECK(cdc::sphere_packing(2, 8, 6, 4) == 445);   // 200787 / 451
  CHECK(cdc::anticode(2, 6, 4, 3) == 93);
  CHECK(cdc::anticode(2, 8, 6, 4) == 308);
}

TEST_CASE("xia fu johnson applies only to maximal distance") {
  CHECK_FALSE(cdc::xia_fu_johnson(2, 6, 4, 3).has_value());
  CHECK(cdc::xia_fu_johnson(2, 6, 4, 2).value() == 21);
  CHECK(cdc::xia_fu_johnson(2, 8, 6, 3).value() == 36);  // floor(255/7)
}

TEST_CASE("johnson recursions") {
  auto tab = upper_lookup(2);
  CHECK(cdc::johnson_1(2, 6, 4, 3, tab) == 81);  // floor(63*9/7)
  CHECK(cdc::johnson_2(2, 6, 4, 3, tab) == 81);
  CHECK(cdc::johnson_1(2, 7, 4, 3, tab) == 381);  // floor(127*21/7)
  CHECK(cdc::johnson_2(2, 7, 4, 3, tab) == 651);  // floor(127*77/15)
}

TEST_CASE("ilp families enumerate their admissible range") {
  auto tab = upper_lookup(2);
  auto i1 = cdc::ilp_family(1, 2, 6, 4, 3, tab);
  REQUIRE(i1.size() == 1);
  CHECK(i1[0].parameter == "1");
  CHECK(i1[0].value == 81);
  auto i2 = cdc::ilp_family(2, 2, 6, 4, 3, tab);
  REQUIRE(i2.size() == 1);
  CHECK(i2[0].parameter == "2");
  CHECK(i2[0].value == 93);
  auto i3 = cdc::ilp_family(3, 2, 6, 4, 3, tab);
  REQUIRE(i3.size() == 1);
  CHECK(i3[0].parameter == "4");
  CHECK(i3[0].value == 93);
  auto i4 = cdc::ilp_family(4, 2, 6, 4, 3, tab);
  REQUIRE(i4.size() == 1);
  CHECK(i4[0].parameter == "5");
  CHECK(i4[0].value == 81);
  // wider cell: w resp. a sweeps more than one value
  auto w2 = cdc::ilp_family(2, 2, 10, 6, 4, tab);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0].parameter == "2");
  CHECK(w2[0].value == 4978);  // floor(174251/35)
  CHECK(w2[1].parameter == "3");
  CHECK(w2[1].value == 423181);
  auto w4 = cdc::ilp_family(4, 2, 10, 6, 4, tab);
  REQUIRE(w4.size() == 3);
  CHECK(w4[0].parameter == "7");
  CHECK(w4[2].parameter == "9");
  // empty range when k - d/2 < 1
  CHECK(cdc::ilp_family(1, 2, 6, 4, 2, tab).empty());
}

TEST_CASE("ahlswede aydinian pairs") {
  auto tab = upper_lookup(2);
  auto recs = cdc::ahlswede_aydinian_records(2, 6, 4, 3, tab);
  REQUIRE(recs.size() == 14);
  std::vector<std::pair<std::string, long>> expect{
      {"0, 3", 1395}, {"0, 4", 93}, {"0, 5", 81},  {"1, 2", 93},
      {"1, 3", 98},   {"1, 4", 112}, {"1, 5", 155},
  };
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(recs[i].parameter == expect[i].first);
    CHECK(recs[i].value == expect[i].second);
    // self dual cell: the orthogonal run repeats the values
    CHECK(recs[i + 7].parameter == expect[i].first + ", o");
    CHECK(recs[i + 7].value == expect[i].second);
  }
  // inadmissible corners
  CHECK_FALSE(cdc::ahlswede_aydinian(2, 6, 4, 3, 2, 4, false, tab).has_value());
  CHECK_FALSE(cdc::ahlswede_aydinian(2, 6, 4, 3, 1, 6, false, tab).has_value());
  // asymmetric cell distinguishes the orientations
  auto asym = cdc::ahlswede_aydinian_records(2, 7, 4, 3, tab);
  CHECK(asym.size() == 16);
  CHECK(cdc::ahlswede_aydinian(2, 7, 4, 3, 0, 6, false, tab).value() == 651);
}

TEST_CASE("improved johnson rounds into divisible code lengths") {
  auto tab = upper_lookup(2);
  CHECK(cdc::improved_johnson(2, 6, 4, 3, tab).value() == 81);
  // plain floor would give 1158, then 1157; both lengths are infeasible
  CHECK(cdc::improved_johnson(2, 9, 6, 4, tab).value() == 1156);
  CHECK(cdc::improved_johnson(2, 10, 6, 4, tab).value() == 4977);
  CHECK(cdc::improved_johnson(2, 8, 6, 4, tab).value() == 289);
}

TEST_CASE("mrd containing bound branches") {
  auto tab = upper_lookup(2);
  CHECK(cdc::mrd_containing_bound(2, 6, 4, 3, tab).value() == 71);
  CHECK(cdc::mrd_containing_bound(2, 8, 6, 4, tab).value() == 257);
  // d = 2k: middle term plus tail
  CHECK(cdc::mrd_containing_bound(2, 6, 4, 2, tab).value() == 70);
  CHECK(cdc::mrd_containing_bound(2, 7, 6, 3, tab).value() == 17);
  // generic cases by the relation of k to d
  CHECK(cdc::mrd_containing_bound(2, 10, 4, 4, tab).value() == 314245);
  CHECK(cdc::mrd_containing_bound(2, 11, 6, 5, tab).value() == 263539);
  CHECK(cdc::mrd_containing_bound(2, 12, 8, 6, tab).value() == 262165);
  CHECK(cdc::mrd_containing_bound(2, 14, 10, 7, tab).value() == 2097153);
  CHECK_FALSE(cdc::mrd_containing_bound(2, 6, 2, 3, tab).has_value());
}

TEST_CASE("ilp settled exact sizes") {
  CHECK(cdc::special_exact_cdc(2, 6, 4, 3).value() == 77);
  CHECK(cdc::special_exact_cdc(2, 8, 6, 4).value() == 257);
  CHECK_FALSE(cdc::special_exact_cdc(2, 7, 4, 3).has_value());
  CHECK_FALSE(cdc::special_exact_cdc(3, 6, 4, 3).has_value());
}

TEST_CASE("upper record battery") {
  auto tab = upper_lookup(2);
  auto recs = cdc::upper_records(2, 6, 4, 3, tab);
  REQUIRE(recs.size() == 25);
  for (auto& r : recs) CHECK(r.direction == Direction::upper);
  for (size_t i = 1; i < recs.size(); ++i)
    CHECK(catalogue_rank(recs[i - 1].id) <= catalogue_rank(recs[i].id));
  std::vector<std::string> head{"all_subs",  "singleton",      "ilp_2",
                                "ilp_3",     "anticode",       "sphere_packing",
                                "ilp_1",     "ilp_4",          "johnson_1",
                                "johnson_2", "Ahlswede_Aydinian"};
  for (size_t i = 0; i < head.size(); ++i) CHECK(recs[i].id == head[i]);
  CHECK(recs.back().id == "improved_johnson");
  CHECK(find_rec(recs, "all_subs", "")->value == 1395);
  CHECK(find_rec(recs, "singleton", "")->value == 155);
  CHECK(find_rec(recs, "ilp_2", "2")->value == 93);
  CHECK(find_rec(recs, "ilp_3", "4")->value == 93);
  CHECK(find_rec(recs, "anticode", "")->value == 93);
  CHECK(find_rec(recs, "sphere_packing", "")->value == 1395);
  CHECK(find_rec(recs, "ilp_1", "1")->value == 81);
  CHECK(find_rec(recs, "ilp_4", "5")->value == 81);
  CHECK(find_rec(recs, "johnson_1", "")->value == 81);
  CHECK(find_rec(recs, "johnson_2", "")->value == 81);
  CHECK(find_rec(recs, "Ahlswede_Aydinian", "1, 4, o")->value == 112);
  CHECK(find_rec(recs, "improved_johnson", "")->value == 81);
  CHECK(find_rec(recs, "XiaFuJohnson1", "") == nullptr);

  auto settled = cdc::upper_records(2, 8, 6, 4, tab);
  CHECK(settled.size() == 42);
  CHECK(find_rec(settled, "special_case_2_8_6_4", "")->value == 272);
  CHECK(find_rec(settled, "improved_johnson", "")->value == 289);
  CHECK(find_rec(settled, "johnson_1", "")->value == 289);
  CHECK(find_rec(settled, "anticode", "")->value == 308);

  auto maxdist = cdc::upper_records(2, 6, 4, 2, tab);
  auto* xfj = find_rec(maxdist, "XiaFuJohnson1", "");
  REQUIRE(xfj != nullptr);
  CHECK(xfj->value == 21);
  CHECK(find_rec(maxdist, "ilp_1", "1") == nullptr);
  CHECK(find_rec(maxdist, "johnson_1", "")->value == 21);
}
