#include "occ/rational.hpp"

#include <doctest.h>

#include <random>

using occ::Rational;

TEST_CASE("construction canonicalizes to lowest terms") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 3).num() == 2);
  CHECK(Rational(2, 3).den() == 3);
  CHECK(Rational(1, -2).den() == 2);  // denominator stays positive
}

TEST_CASE("parsing accepts integers and fractions") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(Rational::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("str round-trips through parse") {
  for (const char* s : {"0", "7", "-7", "22/7", "-22/7"}) {
    CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse(Rational::parse(s).str()) == Rational::parse(s));
  }
}

TEST_CASE("field arithmetic identities on random values") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational(0));
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering is total and consistent with sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(-1).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(5, 9).sign() == 1);
  CHECK(Rational(7, 2) >= Rational(7, 2));
}

TEST_CASE("equal values hash equally") {
  CHECK(occ::hash_rational(Rational(4, 6)) == occ::hash_rational(Rational(2, 3)));
  CHECK(occ::hash_rational(Rational(-1, 2)) == occ::hash_rational(Rational(1, -2)));
}
