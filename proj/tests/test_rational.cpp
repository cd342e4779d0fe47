// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "casson3/rational.hpp"

#include <random>
#include <unordered_set>

using namespace casson3;

TEST_CASE("rationals are reduced with a positive denominator")
{
	Rational r(6, -8);
	CHECK(r.numerator() == -3);
	CHECK(r.denominator() == 4);
	CHECK(r.str() == "-3/4");
	CHECK(Rational(10, 5).str() == "2");
	CHECK(Rational(0, -7).str() == "0");
	CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("parse and print round trip")
{
	for (const char *s : {"0", "5", "-5", "17/12", "-41/84", "123456789012345678901234567891/7"})
		CHECK(Rational::parse(s).str() == s);
	CHECK(Rational::parse("4/8") == Rational(1, 2));
	CHECK_THROWS(Rational::parse("1/0"));
	CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("floor, ceil and modular helpers")
{
	CHECK(Rational(-7, 2).floor() == -4);
	CHECK(Rational(-7, 2).ceil() == -3);
	CHECK(Rational(7, 2).floor() == 3);
	CHECK(Rational(6).floor() == 6);
	CHECK(floor_div(-7, 2) == -4);
	CHECK(mod_floor(-7, 5) == 3);
	CHECK(mod_inverse(3, 7) == 5);
}

TEST_CASE("exactness round trip on random rationals")
{
	std::mt19937_64 rng(11);
	std::uniform_int_distribution<long long> num(-1000000000LL, 1000000000LL), den(1, 1000000000LL);
	for (int i = 0; i < 2000; ++i) {
		Rational a(num(rng), den(rng)), b(num(rng), den(rng));
		CHECK((a + b) - b == a);
		if (!b.is_zero())
			CHECK((a * b) / b == a);
	}
}

TEST_CASE("ordering and hashing")
{
	CHECK(Rational(1, 3) < Rational(1, 2));
	CHECK(Rational(-1, 2) < Rational(-1, 3));
	std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3, 6)};
	CHECK(s.size() == 1);
}

TEST_CASE("from_double is exact")
{
	CHECK(Rational::from_double(0.25) == Rational(1, 4));
	CHECK(Rational::from_double(-3.0) == Rational(-3));
	CHECK(Rational::from_double(0.1).to_double() == 0.1);
}
