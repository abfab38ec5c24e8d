#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "abwords/factors.hpp"
#include "reference.hpp"

using namespace abw;

TEST_CASE("distinct window counts match the naive set on random words") {
  for (int t = 0; t < 15; ++t) {
    unsigned k = 2 + t % 3;
    std::string w = ref::random_word(160, k, 321 + t);
    PrefixBuffer buf(w, "lit", k);
    ref::Lcg g(t);
    for (int s = 0; s < 6; ++s) {
      std::size_t n = 1 + g.next() % 40;
      std::vector<Word> fast = distinct_windows(buf, n);
      CHECK(fast.size() == ref::factor_count(w, n));
      CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
  }
}

TEST_CASE("window counts of the classical words match known values") {
  FactorProfile tm = factor_complexity_profile(WordSpec::parse("fix(mu,0)"), 4, {});
  CHECK(tm.entries[0].value == 2);
  CHECK(tm.entries[1].value == 4);
  CHECK(tm.entries[2].value == 6);
  CHECK(tm.entries[3].value == 10);

  FactorProfile tr = factor_complexity_profile(WordSpec::parse("fix(tau,0)"), 5, {});
  for (std::size_t i = 0; i < 5; ++i) CHECK(tr.entries[i].value == 2 * i + 3);

  FactorProfile fib = factor_complexity_profile(WordSpec::parse("sturmian(1)"), 20, {});
  for (const ProfileEntry& e : fib.entries) CHECK(e.value == e.n + 1);
}

TEST_CASE("two-class words have exactly n+1 distinct windows") {
  for (const char* s : {"sturmian(2,1)", "sturmian(1,2,3)", "sturmian(4;1,2)"}) {
    FactorProfile p = factor_complexity_profile(WordSpec::parse(s), 30, {});
    for (const ProfileEntry& e : p.entries) CHECK(e.value == e.n + 1);
  }
}

TEST_CASE("right special factors agree with the naive extension map") {
  for (const char* s : {"fix(mu,0)", "fix(tau,0)", "sturmian(1)"}) {
    WordSpec spec = WordSpec::parse(s);
    for (std::uint32_t n : {1u, 2u, 3u, 5u, 8u}) {
      RightSpecialReport rep = right_special_factors(spec, n, {});
      PrefixBuffer buf = materialize(spec, rep.prefix_length, kDefaultCapacity);
      auto naive = ref::right_specials(buf.letters(), n);
      REQUIRE(rep.specials.size() == naive.size());
      for (const RightSpecial& rs : rep.specials) {
        auto it = naive.find(std::string(rs.factor));
        REQUIRE(it != naive.end());
        CHECK(std::set<unsigned char>(rs.extensions.begin(), rs.extensions.end()) ==
              it->second);
      }
    }
  }
}

TEST_CASE("right special factors are sorted and genuinely special") {
  RightSpecialReport rep = right_special_factors(WordSpec::parse("fix(mu,0)"), 4, {});
  CHECK(std::is_sorted(rep.specials.begin(), rep.specials.end(),
                       [](const RightSpecial& a, const RightSpecial& b) {
                         return a.factor < b.factor;
                       }));
  for (const RightSpecial& rs : rep.specials) {
    CHECK(rs.factor.size() == 4);
    CHECK(rs.extensions.size() >= 2);
  }
  CHECK(rep.stabilized);
}

TEST_CASE("words with two classes keep exactly one special factor per length") {
  for (std::uint32_t n : {1u, 2u, 4u, 9u}) {
    RightSpecialReport rep = right_special_factors(WordSpec::parse("sturmian(1)"), n, {});
    CHECK(rep.specials.size() == 1);
    CHECK(rep.specials[0].extensions.size() == 2);
  }
}

TEST_CASE("ternary central vectors sit inside a small tight spectrum") {
  for (std::uint32_t n : {1u, 2u, 3u, 10u, 30u, 185u}) {
    CentralReport rep = tribonacci_central_check(n, {});
    CAPTURE(n);
    CHECK(rep.found_special);
    CHECK(rep.central_in_spectrum);
    CHECK(rep.diameter_le2);
    CHECK(rep.cardinality_le7);
    CHECK(rep.ok());
    CHECK(rep.verified);
    CHECK(rep.spectrum.size() >= 3);
    if (n > 1) CHECK(rep.special_factor.size() == n - 1);
    // the three extended vectors really are the special factor's vector
    // bumped by one letter each
    ParikhVector base = parikh(rep.special_factor, 3);
    for (unsigned a = 0; a < 3; ++a) {
      ParikhVector want = base;
      ++want[a];
      CHECK(rep.central[a] == want);
    }
  }
}

TEST_CASE("central batch agrees with the single-length checks") {
  std::vector<CentralReport> batch = tribonacci_central_range(1, 25, {});
  REQUIRE(batch.size() == 25);
  for (std::uint32_t n = 1; n <= 25; ++n) {
    CentralReport one = tribonacci_central_check(n, {});
    CHECK(batch[n - 1].n == n);
    CHECK(batch[n - 1].special_factor == one.special_factor);
    CHECK(batch[n - 1].spectrum == one.spectrum);
    CHECK(batch[n - 1].max_pairwise_norm == one.max_pairwise_norm);
    CHECK(batch[n - 1].ok() == one.ok());
  }
}

TEST_CASE("central spectrum equals the plain window spectrum") {
  StabilizationPolicy pol;
  CentralReport rep = tribonacci_central_check(12, pol);
  PrefixBuffer buf =
      materialize(WordSpec::parse("fix(tau,0)"), 4096, kDefaultCapacity);
  auto spec12 = window_spectrum(buf, 12);
  CHECK(rep.spectrum == spec12);
}

TEST_CASE("factor profile respects the capacity cap") {
  StabilizationPolicy pol;
  pol.capacity = 2000;
  // distinct windows at n=400 on a 2000-letter budget would exceed the cap
  CHECK_THROWS_AS(
      factor_complexity_profile(WordSpec::parse("fix(tau,0)"), 400, pol),
      CapacityError);
}
