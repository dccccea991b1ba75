#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hnnforge/word_text.hpp"
#include "oracles.hpp"

using namespace hnnforge;

TEST_CASE("parse_word basics") {
  CHECK(parse_word("").tail().empty());
  CHECK(h_is_identity(parse_word("").head()));
  CHECK(h_is_identity(parse_word("a^0").head()));

  GWord w = parse_word("t^-1 a t");
  REQUIRE(w.tail().size() == 2);
  CHECK(w.tail()[0].sign == -1);
  CHECK(w.tail()[0].h == HElement::a());
  CHECK(w.tail()[1].sign == +1);

  CHECK(parse_word("a^-1").head() == h_inv(HElement::a()));
  CHECK(parse_word("b^3").head() == HElement(Dyadic(0), 3));
  CHECK(parse_word("a^2 b^-1").head() == h_mul(HElement(Dyadic(2), 0), h_inv(HElement::b())));
  CHECK(parse_word("t^3").tail().size() == 3);
  CHECK(parse_word("  a   b ").head() == h_mul(HElement::a(), HElement::b()));
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(parse_word("x"), WordParseError);
  CHECK_THROWS_AS(parse_word("a^"), WordParseError);
  CHECK_THROWS_AS(parse_word("t^^2"), WordParseError);
  CHECK_THROWS_AS(parse_word("a 2"), WordParseError);
}

TEST_CASE("print_word output") {
  CHECK(print_word(GWord::identity()) == "a^0");
  CHECK(print_word(britton_reduce(parse_word("t^-1 a t"))) == "b");
  CHECK(print_word(britton_reduce(parse_word("t^2 b t^-2"))) == "t a t^-1");
  CHECK(print_word(GWord::from_h(HElement(Dyadic::make(1, 1), 0))) == "b a b^-1");
  CHECK(print_word(GWord::t_pow(-3)) == "t^-3");
}

TEST_CASE("print then parse round-trips in G") {
  std::mt19937_64 rng(0x5eed2001);
  for (int i = 0; i < 500; ++i) {
    GWord w = britton_reduce(oracles::gword_of(oracles::random_gletters(rng, 25)));
    GWord back = parse_word(print_word(w));
    CHECK(g_equal(w, back));
  }
}

TEST_CASE("parse_ulist") {
  auto u = parse_ulist("101, 102\n# a comment line\n103 104,105\n");
  CHECK(u == std::vector<long long>{101, 102, 103, 104, 105});
  CHECK(parse_ulist("").empty());
  CHECK(parse_ulist("# only comments\n").empty());
  CHECK(parse_ulist("-5") == std::vector<long long>{-5});
  CHECK_THROWS_AS(parse_ulist("3, x"), WordParseError);
  CHECK_THROWS_AS(parse_ulist("99999999999999999999"), WordParseError);
}

TEST_CASE("parse_gen_word") {
  std::map<char, int> alpha{{'a', 0}, {'b', 1}, {'c', 2}};
  auto terms = parse_gen_word("b^-1 a b a^-2", alpha);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].gen == 1);
  CHECK(terms[0].exp == -1);
  CHECK(terms[3].gen == 0);
  CHECK(terms[3].exp == -2);
  CHECK(parse_gen_word("c^0", alpha).empty());
  CHECK_THROWS_AS(parse_gen_word("d", alpha), WordParseError);
}
