#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "paramcode/core.hpp"
#include "test_support.hpp"

using namespace paramcode;
using namespace paramcode::testing;

TEST_CASE("validate_table accepts the three-language Romance table") {
  const ParameterTable t = example1_table();
  CHECK(&validate_table(t) == &t);
  CHECK(t.language_count() == 3);
  CHECK(t.parameter_count() == 6);
}

TEST_CASE("validate_table reports every violation") {
  ParameterTable t = example1_table();
  t.languages[1].name = "Italian";
  t.languages[2].values.pop_back();
  t.parameter_ids[1] = t.parameter_ids[0];
  try {
    validate_table(t);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.has(ErrorKind::DuplicateLanguage));
    CHECK(e.has(ErrorKind::RaggedRow));
    CHECK(e.has(ErrorKind::DuplicateParameter));
    CHECK(e.violations().size() == 3);
  }
}

TEST_CASE("validate_table single violations") {
  SUBCASE("duplicate language") {
    ParameterTable t = example1_table();
    t.languages[1].name = "Italian";
    CHECK_THROWS_AS(validate_table(t), ValidationError);
    try {
      validate_table(t);
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ErrorKind::DuplicateLanguage);
    }
  }
  SUBCASE("ragged row 6 vs 5") {
    ParameterTable t = example1_table();
    t.languages[0].values.resize(5);
    try {
      validate_table(t);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ErrorKind::RaggedRow);
    }
  }
  SUBCASE("empty") {
    try {
      validate_table(ParameterTable{});
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ErrorKind::EmptyTable);
    }
  }
}

TEST_CASE("validation is idempotent") {
  Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ParameterTable t = gen.table(gen.size(1, 6), gen.size(1, 8), true);
    const ParameterTable once = validate_table(t);
    CHECK(validate_table(once) == once);
    CHECK(once == t);
  }
}

TEST_CASE("Alphabet rejects q < 2") {
  CHECK_THROWS_AS(Alphabet(1), Error);
  CHECK(Alphabet(5).contains(4));
  CHECK_FALSE(Alphabet(5).contains(5));
}

TEST_CASE("Code collapses repeated words into collisions") {
  const Code code = code_of(2, {"0101", "1100", "0101", "0101"});
  CHECK(code.size() == 2);
  REQUIRE(code.collisions().size() == 2);
  CHECK(code.collisions()[0].language == "w3");
  CHECK(code.collisions()[0].merged_into == "w1");
  CHECK(code.word_of("w4").label == "w1");
  CHECK(code.languages().size() == 4);
}

TEST_CASE("Code rejects letters outside the alphabet and wrong lengths") {
  CHECK_THROWS_AS(code_of(2, {"012", "000"}), Error);
  try {
    code_of(2, {"012", "000"});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidLetter);
  }
  std::vector<Codeword> words{word("01", "a"), word("011", "b")};
  try {
    Code(Alphabet(2), 2, words);
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("word count equals language count iff no letter sequences repeat") {
  Gen gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = gen.size(1, 8);
    const Code code = gen.code(gen.size(1, 4), m, 2);
    CHECK(code.size() <= m);
    CHECK((code.size() == m) == code.collisions().empty());
    CHECK(code.size() + code.collisions().size() == m);
  }
}

TEST_CASE("Rational arithmetic and parsing") {
  CHECK(Rational(2, 12) == Rational(1, 6));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(13, 25).to_string() == "13/25");
  CHECK(Rational::parse("0.52") == Rational(13, 25));
  CHECK(Rational::parse("13/25") == Rational(13, 25));
  CHECK(Rational::parse("1") == Rational(1, 1));
  CHECK(Rational::parse("0.4643") == Rational(4643, 10000));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(2, 3) >= Rational(4, 6));
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}
