#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abwords/wordspec.hpp"
#include "reference.hpp"

using namespace abw;

namespace {
std::string text_of(const WordSpec& spec, std::size_t len) {
  return to_text(materialize(spec, len, kDefaultCapacity).letters());
}
}  // namespace

TEST_CASE("morphism parsing accepts rules and named forms") {
  Morphism m = Morphism::parse("0->01;1->10");
  CHECK(m == Morphism::parse("mu"));
  CHECK(m.to_string() == "0->01;1->10");
  CHECK(Morphism::parse("tau").to_string() == "0->01;1->02;2->0");
  CHECK(Morphism::parse("dekking").to_string() == "0->011;1->0001");
  CHECK(Morphism::parse("rauzy").to_string() == "0->012;1->021");
  CHECK(Morphism::parse("delta").to_string() == "0->00;1->11");
  CHECK(Morphism::parse("pdbl").to_string() == "0->00;1->01");
  CHECK(Morphism::parse(" 1 -> 10 ; 0 -> 01 ") == m);
}

TEST_CASE("morphism parsing rejects malformed input") {
  CHECK_THROWS_AS(Morphism::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("0->"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("0->01;0->10"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("1->01"), std::invalid_argument);  // gap at 0
  CHECK_THROWS_AS(Morphism::parse("0->01;2->10"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("nosuchname"), std::invalid_argument);
}

TEST_CASE("morphism application and prolongability") {
  Morphism mu = Morphism::parse("mu");
  CHECK(to_text(apply_morphism(mu, from_text("0110"))) == "01101001");
  CHECK(mu.prolongable_on(0));
  CHECK(mu.prolongable_on(1));
  Morphism tau = Morphism::parse("tau");
  CHECK(tau.prolongable_on(0));
  CHECK_FALSE(tau.prolongable_on(2));  // image "0" too short
  CHECK_THROWS_AS(apply_morphism(mu, from_text("02")), std::invalid_argument);
}

TEST_CASE("fixed points match hand-computed prefixes") {
  CHECK(text_of(WordSpec::parse("fix(mu,0)"), 16) == "0110100110010110");
  CHECK(text_of(WordSpec::parse("fix(mu,1)"), 8) == "10010110");
  CHECK(text_of(WordSpec::parse("fix(tau,0)"), 14) == "01020100102010");
  CHECK(text_of(WordSpec::parse("fix(dekking,0)"), 11) == "01100010001");
  CHECK(text_of(WordSpec::parse("fix(pdbl,0)"), 8) == "00000000");  // degenerate
  CHECK(text_of(WordSpec::parse("fix(0->012;1->111;2->222,0)"), 12) ==
        "012111222111");
}

TEST_CASE("fixed point requires a prolongable seed") {
  CHECK_THROWS_AS(WordSpec::parse("fix(tau,2)"), std::invalid_argument);
  CHECK_THROWS_AS(WordSpec::parse("fix(mu,2)"), std::invalid_argument);
  CHECK_THROWS_AS(WordSpec::parse("fix(0->1;1->0,0)"), std::invalid_argument);
  // domain and codomain must agree for iteration
  CHECK_THROWS_AS(WordSpec::parse("fix(0->012;1->10,0)"), std::invalid_argument);
}

TEST_CASE("standard directive words match the floor-form oracle") {
  std::string fib = text_of(WordSpec::parse("sturmian(1)"), 13);
  CHECK(fib == "0100101001001");
  PrefixBuffer buf = materialize(WordSpec::parse("sturmian(1)"), 5000, kDefaultCapacity);
  CHECK(std::string(buf.letters()) == ref::mechanical_word(5000));
}

TEST_CASE("directive lists accept preperiod and trailing ellipsis") {
  CHECK(text_of(WordSpec::parse("sturmian(2,1)"), 10) ==
        text_of(WordSpec::parse("sturmian(2,1,2,1,...)"), 10));
  // preperiod;period form differs from the pure periodic list
  std::string a = text_of(WordSpec::parse("sturmian(1;2)"), 30);
  std::string b = text_of(WordSpec::parse("sturmian(1,2)"), 30);
  CHECK(a != b);
  CHECK_THROWS_AS(WordSpec::parse("sturmian()"), std::invalid_argument);
  CHECK_THROWS_AS(WordSpec::parse("sturmian(0,1)"), std::invalid_argument);
  CHECK_THROWS_AS(WordSpec::parse("sturmian(1;)"), std::invalid_argument);
}

TEST_CASE("directive words are binary and start with the first block") {
  for (const char* s : {"sturmian(1)", "sturmian(2,1)", "sturmian(1,2,3)",
                        "sturmian(3;2,1)"}) {
    PrefixBuffer buf = materialize(WordSpec::parse(s), 300, kDefaultCapacity);
    CHECK(buf.alphabet_size() == 2);
    for (std::size_t i = 0; i < buf.length(); ++i) CHECK(buf[i] <= 1);
    CHECK(buf[0] == 0);
  }
}

TEST_CASE("numeral concatenation starts with the displayed prefix") {
  CHECK(text_of(WordSpec::parse("champernowne"), 26) ==
        "01101110010111011110001001");
}

TEST_CASE("eventually periodic and literal repeat forever") {
  CHECK(text_of(WordSpec::parse("up(0110,1001)"), 12) == "011010011001");
  CHECK(text_of(WordSpec::parse("up(,01)"), 7) == "0101010");
  CHECK(text_of(WordSpec::parse("lit(012)"), 8) == "01201201");
  CHECK_THROWS_AS(WordSpec::parse("up(01,)"), std::invalid_argument);
  CHECK_THROWS_AS(WordSpec::parse("lit()"), std::invalid_argument);
}

TEST_CASE("image and prepend compose specs") {
  CHECK(text_of(WordSpec::parse("img(delta,sturmian(1))"), 14) ==
        "00110000110011");
  CHECK(text_of(WordSpec::parse("pre(2,sturmian(1))"), 8) == "20100101");
  CHECK(text_of(WordSpec::parse("img(rauzy,fix(mu,0))"), 12) == "012021021012");
  // image morphism must cover the inner alphabet
  CHECK_THROWS_AS(WordSpec::parse("img(mu,fix(tau,0))"), std::invalid_argument);
}

TEST_CASE("parsing round-trips through the canonical text form") {
  for (const char* s :
       {"fix(0->01;1->10,0)", "sturmian(1)", "sturmian(2,1;3)", "champernowne",
        "up(0110,1001)", "up(,01)", "lit(012)",
        "img(0->012;1->021,fix(0->01;1->10,0))", "pre(2,sturmian(1))"}) {
    WordSpec spec = WordSpec::parse(s);
    CHECK(WordSpec::parse(spec.to_string()) == spec);
    CHECK(WordSpec::parse(spec.to_string()).to_string() == spec.to_string());
  }
}

TEST_CASE("longer prefixes extend shorter ones") {
  for (const char* s : {"fix(mu,0)", "fix(tau,0)", "sturmian(1,2)", "champernowne",
                        "up(0,01)", "img(rauzy,fix(mu,0))", "fix(dekking,0)"}) {
    WordSpec spec = WordSpec::parse(s);
    std::string longer = text_of(spec, 700);
    for (std::size_t len : {1u, 13u, 256u, 699u})
      CHECK(text_of(spec, len) == longer.substr(0, len));
  }
}

TEST_CASE("alphabet size is derived from the construction") {
  CHECK(WordSpec::parse("fix(mu,0)").alphabet_size() == 2);
  CHECK(WordSpec::parse("fix(tau,0)").alphabet_size() == 3);
  CHECK(WordSpec::parse("pre(2,sturmian(1))").alphabet_size() == 3);
  CHECK(WordSpec::parse("img(0->0;1->1;2->0,fix(0->012;1->111;2->222,0))")
            .alphabet_size() == 2);
  CHECK(WordSpec::parse("lit(0123)").alphabet_size() == 4);
}

TEST_CASE("capacity cap aborts materialization") {
  CHECK_THROWS_AS(materialize(WordSpec::parse("fix(mu,0)"), 4096, 1000),
                  CapacityError);
  CHECK(materialize(WordSpec::parse("fix(mu,0)"), 1000, 1000).length() == 1000);
}

TEST_CASE("letter text mapping covers digits and letters") {
  CHECK(to_text(from_text("0129azAZ")) == "0129azAZ");
  CHECK(from_text("a")[0] == 10);
  CHECK(from_text("A")[0] == 36);
  CHECK_THROWS_AS(from_text("!"), std::invalid_argument);
  CHECK(min_alphabet(from_text("0120")) == 3);
  CHECK(min_alphabet(Word{}) == 1);
}
