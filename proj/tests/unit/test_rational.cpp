#include "doctest.h"
#include "virality/error.hpp"
#include "virality/random.hpp"
#include "virality/rational.hpp"

using virality::ParameterError;
using virality::Rational;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), ParameterError);
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(9, 10) == Rational::parse("0.9"));
  CHECK(Rational(8999, 10000) < Rational(9, 10));
  CHECK(Rational(500001, 10000) > Rational(50));
  CHECK(Rational(1, 3) < Rational(333334, 1000000));
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(Rational(big + 1, big) > Rational(1));
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("50") == Rational(50));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("1/3") == Rational(1, 3));
  CHECK(Rational::parse("50.0001") == Rational(500001, 10000));
  CHECK_THROWS_AS(Rational::parse(""), ParameterError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), ParameterError);
}

TEST_CASE("rational to_decimal rounds half away from zero") {
  CHECK(Rational(3, 2).to_decimal(6) == "1.500000");
  CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational(-1, 8).to_decimal(2) == "-0.13");
  CHECK(Rational(-1, 1000).to_decimal(2) == "0.00");
  CHECK(Rational(7).to_decimal(0) == "7");
  CHECK(Rational(1, 3).to_decimal(1) == "0.3");
}

TEST_CASE("rng derived distributions are pinned") {
  virality::Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  virality::Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(virality::derive_seed(1, 0) != virality::derive_seed(1, 1));
  CHECK(virality::derive_seed(1, 0) == virality::derive_seed(1, 0));
}
