#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abwords/report_io.hpp"

using namespace abw;

TEST_CASE("profile CSV round-trips the entry rows exactly") {
  ComplexityProfile p =
      abelian_complexity_profile(WordSpec::parse("fix(mu,0)"), 20, {});
  ComplexityProfile back = complexity_profile_from_csv(to_csv(p));
  CHECK(back.entries == p.entries);
  // exported bytes are stable across serializations
  CHECK(to_csv(p) == to_csv(back));
}

TEST_CASE("profile CSV uses the documented header and row shape") {
  ComplexityProfile p;
  p.entries = {{1, 3, true, 64}, {2, 4, false, 128}};
  CHECK(to_csv(p) == "n,value,stabilized,L_used\n1,3,true,64\n2,4,false,128\n");
}

TEST_CASE("profile JSON round-trips spec and entries") {
  ComplexityProfile p =
      abelian_complexity_profile(WordSpec::parse("fix(tau,0)"), 12, {});
  ComplexityProfile back = complexity_profile_from_json(to_json(p));
  CHECK(back.spec == p.spec);
  CHECK(back.entries == p.entries);
  CHECK(to_json(back).dump() == to_json(p).dump());
}

TEST_CASE("balance tables round-trip through both formats") {
  BalanceProfile p = balance_profile(WordSpec::parse("fix(tau,0)"), 16, {});
  BalanceProfile csv = balance_profile_from_csv(to_csv(p));
  CHECK(csv.entries == p.entries);
  CHECK(csv.alphabet_size == p.alphabet_size);
  BalanceProfile js = balance_profile_from_json(to_json(p));
  CHECK(js.entries == p.entries);
  CHECK(js.spec == p.spec);
  CHECK(js.c_estimate == p.c_estimate);
  CHECK(to_csv(js) == to_csv(p));
}

TEST_CASE("position reports keep empty period fields distinct from zero") {
  PositionPowerReport r;
  r.spec = "lit(01)";
  r.k = 2;
  r.m_max = 4;
  r.positions = 2;
  r.entries = {{0, std::uint32_t(2), false}, {1, std::nullopt, true}};
  std::string csv = to_csv(r);
  CHECK(csv == "pos,min_period,k,truncated\n0,2,2,false\n1,,2,true\n");
  PositionPowerReport back = position_report_from_csv(csv);
  CHECK(back.entries == r.entries);
  CHECK(back.k == r.k);
  PositionPowerReport jback = position_report_from_json(to_json(r));
  CHECK(jback.entries == r.entries);
  CHECK(jback.spec == r.spec);
  CHECK(jback.m_max == r.m_max);
  CHECK(jback.positions == r.positions);
}

TEST_CASE("survey output round-trips on real data") {
  PositionPowerReport r =
      position_coverage_report(WordSpec::parse("sturmian(1)"), 2, 40, 10, {});
  CHECK(position_report_from_csv(to_csv(r)).entries == r.entries);
  PositionPowerReport back = position_report_from_json(to_json(r));
  CHECK(back.entries == r.entries);
  CHECK(to_json(back).dump(2) == to_json(r).dump(2));
}

TEST_CASE("cover results serialize the pair or nulls") {
  CoverResult some{std::make_pair(std::uint32_t(1), std::uint32_t(5)), {}};
  Json j = to_json(some);
  CHECK(j["l1"] == 1);
  CHECK(j["l2"] == 5);
  CHECK(j["uncovered"].empty());
  CoverResult back = cover_result_from_json(j);
  CHECK(back.periods == some.periods);
  CHECK(back.uncovered == some.uncovered);

  CoverResult none{std::nullopt, {3, 7, 8}};
  Json nj = to_json(none);
  CHECK(nj["l1"].is_null());
  CHECK(nj["l2"].is_null());
  CoverResult nback = cover_result_from_json(nj);
  CHECK_FALSE(nback.periods.has_value());
  CHECK(nback.uncovered == none.uncovered);
}

TEST_CASE("central reports round-trip every field") {
  CentralReport r = tribonacci_central_check(9, {});
  CentralReport back = central_report_from_json(to_json(r));
  CHECK(back.n == r.n);
  CHECK(back.found_special == r.found_special);
  CHECK(back.special_factor == r.special_factor);
  CHECK(back.central == r.central);
  CHECK(back.spectrum == r.spectrum);
  CHECK(back.max_pairwise_norm == r.max_pairwise_norm);
  CHECK(back.central_in_spectrum == r.central_in_spectrum);
  CHECK(back.diameter_le2 == r.diameter_le2);
  CHECK(back.cardinality_le7 == r.cardinality_le7);
  CHECK(back.verified == r.verified);
  CHECK(to_json(back).dump() == to_json(r).dump());
}

TEST_CASE("right special reports serialize factors as display text") {
  RightSpecialReport r = right_special_factors(WordSpec::parse("fix(mu,0)"), 2, {});
  Json j = to_json(r);
  CHECK(j["n"] == 2);
  CHECK(j["specials"].is_array());
  for (const Json& s : j["specials"]) {
    CHECK(s.contains("factor"));
    CHECK(s.contains("extensions"));
    CHECK(s["factor"].get<std::string>().size() == 2);
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(complexity_profile_from_csv("x,y\n1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(position_report_from_csv("pos\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(balance_profile_from_csv("nope\n"), std::invalid_argument);
  CHECK_THROWS_AS(complexity_profile_from_csv("n,value,stabilized,L_used\n1,2\n"),
                  std::invalid_argument);
}

TEST_CASE("identical analyses produce identical bytes") {
  for (int run = 0; run < 2; ++run) {
    ComplexityProfile a =
        abelian_complexity_profile(WordSpec::parse("img(rauzy,fix(mu,0))"), 24, {});
    ComplexityProfile b =
        abelian_complexity_profile(WordSpec::parse("img(rauzy,fix(mu,0))"), 24, {});
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
  }
}
