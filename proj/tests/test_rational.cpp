#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "doctest.h"

#include "clumpdiam/rational.hpp"

using clumpdiam::Rational;
using clumpdiam::RationalOverflow;
using BigQ = boost::multiprecision::cpp_rational;

namespace {

BigQ big(const Rational& r) { return BigQ(r.num(), r.den()); }

}  // namespace

TEST_CASE("rational: normal form and text") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, -7).str() == "0");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/2/3"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational: floor rounds toward minus infinity") {
  CHECK(Rational(23, 2).floor() == 11);
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(-4, 2).floor() == -2);
  CHECK(Rational(46, 3).floor() == 15);
}

TEST_CASE("rational: arithmetic agrees with arbitrary precision") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000), den(1, 1000000);
  for (int t = 0; t < 5000; ++t) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(big(a + b) == big(a) + big(b));
    CHECK(big(a - b) == big(a) - big(b));
    CHECK(big(a * b) == big(a) * big(b));
    if (!b.is_zero()) CHECK(big(a / b) == big(a) / big(b));
    CHECK((a < b) == (big(a) < big(b)));
  }
}

TEST_CASE("rational: overflow is reported, never wrapped") {
  const Rational huge(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(huge + Rational(1), RationalOverflow);
  CHECK_THROWS_AS(huge * Rational(2), RationalOverflow);
  CHECK_THROWS_AS(Rational(1, std::numeric_limits<std::int64_t>::max()) / Rational(2), RationalOverflow);
  // products that reduce back into range are fine
  CHECK(huge * Rational(1, 3) * Rational(3) == huge);
}
