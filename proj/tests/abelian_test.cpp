#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "abwords/profile.hpp"
#include "reference.hpp"

using namespace abw;

namespace {
PrefixBuffer buffer_of(const std::string& letters, unsigned k) {
  return PrefixBuffer(letters, "lit", k);
}
}  // namespace

TEST_CASE("letter counts match the naive count on random words") {
  for (unsigned k = 1; k <= 6; ++k) {
    std::string w = ref::random_word(150, k, 7 * k + 1);
    CHECK(parikh(w, k) == ref::parikh(w, k));
  }
  CHECK_THROWS_AS(parikh(std::string("\2"), 2), std::invalid_argument);
}

TEST_CASE("prefix sums answer window counts exactly") {
  std::string w = ref::random_word(200, 3, 42);
  ParikhPrefixSums sums(buffer_of(w, 3));
  ref::Lcg g(99);
  for (int t = 0; t < 200; ++t) {
    std::size_t i = g.next() % 200, j = i + g.next() % (201 - i);
    CHECK(sums.window(i, j) == ref::parikh(std::string_view(w).substr(i, j - i), 3));
  }
}

TEST_CASE("abelian equivalence is order-blind") {
  CHECK(abelian_equivalent(from_text("0110"), from_text("1010")));
  CHECK_FALSE(abelian_equivalent(from_text("011"), from_text("001")));
  CHECK(abelian_equivalent(Word{}, Word{}));
}

TEST_CASE("sliding spectra equal the naive recount on random words") {
  // narrow alphabets take the packed path, wider ones the generic path
  for (unsigned k = 2; k <= 6; ++k) {
    for (int t = 0; t < 25; ++t) {
      std::size_t L = 20 + (17 * t) % 180;
      std::string w = ref::random_word(L, k, 1000 * k + t);
      PrefixBuffer buf = buffer_of(w, k);
      ref::Lcg g(t);
      for (int s = 0; s < 8; ++s) {
        std::size_t n = 1 + g.next() % L;
        auto naive = ref::window_spectrum(w, n, k);
        CHECK(window_spectrum_size(buf, n) == naive.size());
        auto fast = window_spectrum(buf, n);
        CHECK(std::set<ParikhVector>(fast.begin(), fast.end()) == naive);
        CHECK(std::is_sorted(fast.begin(), fast.end()));
      }
    }
  }
}

TEST_CASE("window spreads and prefix deviation match the naive scan") {
  for (int t = 0; t < 20; ++t) {
    unsigned k = 2 + t % 4;
    std::string w = ref::random_word(120, k, 555 + t);
    PrefixBuffer buf = buffer_of(w, k);
    for (std::size_t n : {1, 2, 7, 30, 119, 120}) {
      CHECK(window_spreads(buf, n) == ref::spreads(w, n, k));
      CHECK(prefix_window_deviation(buf, n) == ref::prefix_deviation(w, n, k));
    }
  }
}

TEST_CASE("window queries reject lengths outside the buffer") {
  PrefixBuffer buf = buffer_of(ref::random_word(10, 2, 1), 2);
  CHECK_THROWS_AS(window_spectrum_size(buf, 0), std::out_of_range);
  CHECK_THROWS_AS(window_spectrum_size(buf, 11), std::out_of_range);
  CHECK(window_spectrum_size(buf, 10) == 1);
}

TEST_CASE("binary words: class count is spread plus one") {
  // counts of letter 1 over a sliding window change by at most 1 per step,
  // so the reachable counts form an interval
  for (const char* s : {"fix(mu,0)", "sturmian(1)", "fix(dekking,0)",
                        "champernowne", "up(0110,1001)", "up(,01)"}) {
    PrefixBuffer buf = materialize(WordSpec::parse(s), 4000, kDefaultCapacity);
    ref::Lcg g(11);
    for (int t = 0; t < 30; ++t) {
      std::size_t n = 1 + g.next() % 2000;
      CHECK(window_spectrum_size(buf, n) == window_spreads(buf, n)[1] + 1);
    }
  }
}

TEST_CASE("class counts never exceed the composition bound") {
  CHECK(max_abelian_complexity(5, 2) == 6);
  CHECK(max_abelian_complexity(4, 3) == 15);
  CHECK(max_abelian_complexity(1, 4) == 4);
  CHECK(max_abelian_complexity(100, 1) == 1);
  CHECK_THROWS_AS(max_abelian_complexity(~std::uint64_t(0) - 1, 5),
                  std::overflow_error);
  for (const char* s : {"fix(tau,0)", "fix(mu,0)", "sturmian(2,1)",
                        "img(rauzy,fix(mu,0))"}) {
    ComplexityProfile p =
        abelian_complexity_profile(WordSpec::parse(s), 40, {});
    for (const ProfileEntry& e : p.entries)
      CHECK(e.value <= max_abelian_complexity(e.n, p.alphabet_size));
  }
}

TEST_CASE("the stacked-blocks word attains the binary bound") {
  WordSpec spec =
      WordSpec::parse("img(0->0;1->1;2->0,fix(0->012;1->111;2->222,0))");
  PrefixBuffer buf = materialize(spec, 7000, kDefaultCapacity);
  CHECK(std::string(buf.letters()) == ref::stacked_blocks_word(7000));
  ComplexityProfile p = abelian_complexity_profile(spec, 60, {});
  for (const ProfileEntry& e : p.entries) CHECK(e.value == e.n + 1);
}

TEST_CASE("profiles report the doubling rounds they stabilized at") {
  StabilizationPolicy pol;
  pol.initial_length = 64;
  ComplexityProfile p = abelian_complexity_profile(WordSpec::parse("fix(mu,0)"), 30, pol);
  CHECK(p.entries.size() == 30);
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    CHECK(p.entries[i].n == i + 1);
    CHECK(p.entries[i].stabilized);
    CHECK(p.entries[i].prefix_length >= 64);
  }
  CHECK(p.stabilized);
}

TEST_CASE("profile values for the parity word alternate between 2 and 3") {
  ComplexityProfile p =
      abelian_complexity_profile(WordSpec::parse("fix(mu,0)"), 200, {});
  for (const ProfileEntry& e : p.entries)
    CHECK(e.value == (e.n % 2 ? 2u : 3u));
}

TEST_CASE("two-class words stay at two classes with spread one") {
  for (const char* s : {"sturmian(1)", "sturmian(2,1)", "sturmian(1,2,3)"}) {
    WordSpec spec = WordSpec::parse(s);
    ComplexityProfile p = abelian_complexity_profile(spec, 120, {});
    for (const ProfileEntry& e : p.entries) CHECK(e.value == 2);
    BalanceProfile b = balance_profile(spec, 120, {});
    CHECK(b.c_estimate == 1);
    CHECK(b.alphabet_size == 2);
    for (const BalanceEntry& e : b.entries) {
      CHECK(e.spreads.size() == 2);
      CHECK(e.spreads[0] <= 1);
      CHECK(e.spreads[1] <= 1);
    }
  }
}

TEST_CASE("balance profile matches naive spreads on a fixed buffer") {
  // the profile stabilizes over growing prefixes; on an eventually periodic
  // word the summaries settle to the naive values on a long enough buffer
  BalanceProfile b = balance_profile(WordSpec::parse("up(0110,1001)"), 24, {});
  PrefixBuffer buf =
      materialize(WordSpec::parse("up(0110,1001)"), 4096, kDefaultCapacity);
  for (const BalanceEntry& e : b.entries)
    CHECK(e.spreads == ref::spreads(buf.letters(), e.n, 2));
}

TEST_CASE("periodicity probe finds the block length of repeated words") {
  CHECK(periodicity_probe(WordSpec::parse("lit(01)"), 16, {}) == 2u);
  CHECK(periodicity_probe(WordSpec::parse("lit(012)"), 16, {}) == 3u);
  CHECK(periodicity_probe(WordSpec::parse("lit(0011)"), 16, {}) == 4u);
  CHECK(periodicity_probe(WordSpec::parse("lit(0)"), 16, {}) == 1u);
}

TEST_CASE("periodicity probe stays silent on words with long special factors") {
  for (const char* s :
       {"fix(mu,0)", "fix(tau,0)", "sturmian(1)", "fix(dekking,0)", "up(0,01)"})
    CHECK_FALSE(periodicity_probe(WordSpec::parse(s), 48, {}).has_value());
}

TEST_CASE("prefix deviation profile flags the first distance-two length") {
  DeviationProfile d =
      prefix_factor_balance(WordSpec::parse("fix(tau,0)"), 185, {});
  for (const ProfileEntry& e : d.entries)
    if (e.n <= 184) CHECK(e.value <= 1);
  CHECK(d.entries.back().n == 185);
  CHECK(d.entries.back().value == 2);
}
