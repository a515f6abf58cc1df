#include "doctest.h"

#include "errors.hpp"
#include "rational.hpp"

using critic::CriticError;
using critic::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(42).num() == 42);
  CHECK(Rational(42).den() == 1);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), CriticError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), CriticError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(5, 8) / Rational(5, 2) == Rational(1, 4));
  // the K12 subdivision bound: 2*11 - 2 - 4/10 - 0
  Rational bound = Rational(2 * 11) - Rational(2) - Rational(6 * 2 - 8, 11 - 1);
  CHECK(bound == Rational(98, 5));
  CHECK(Rational(20) > bound);
}

TEST_CASE("comparisons avoid floating point") {
  CHECK(Rational(1, 3) > Rational(33333, 100000));
  CHECK(Rational(1, 3) < Rational(33334, 100000));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(Rational(-1, 2) < Rational(1, 100));
  // cross-multiplication territory that would overflow 64-bit naively;
  // (x+1)/x decreases in x, so the first is the larger one
  Rational big1(3037000499LL, 3037000498LL);
  Rational big2(3037000500LL, 3037000499LL);
  CHECK(big1 > big2);
  CHECK(big1 != big2);
}

TEST_CASE("parse and str round-trip") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-7/2") == Rational(-7, 2));
  CHECK(Rational::parse("68/81").str() == "68/81");
  CHECK(Rational(98, 5).str() == "98/5");
  CHECK(Rational(-3).str() == "-3/1");
  CHECK(Rational::parse(Rational(107, 162).str()) == Rational(107, 162));
  CHECK_THROWS_AS(Rational::parse("a/b"), CriticError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), CriticError);
  CHECK_THROWS_AS(Rational::parse(""), CriticError);
}

TEST_CASE("floor and integrality") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 3).floor() == 2);
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational(0).is_integer());
}
