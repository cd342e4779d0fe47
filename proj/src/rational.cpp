// SPDX-License-Identifier: Apache-2.0
#include "casson3/rational.hpp"

#include <boost/functional/hash.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace casson3 {

Rational::Rational(const BigInt &n, const BigInt &d)
{
	if (d.is_zero())
		throw std::domain_error("rational with zero denominator");
	// boost::rational rejects negative unbounded denominators; flip here.
	value_ = d < 0 ? Value(-n, -d) : Value(n, d);
}

Rational Rational::from_double(double x)
{
	if (!std::isfinite(x))
		throw std::domain_error("cannot convert non-finite double to a rational");
	int exp = 0;
	double mant = std::frexp(x, &exp);
	// 53 bits of mantissa as an integer.
	auto m = static_cast<long long>(std::ldexp(mant, 53));
	exp -= 53;
	BigInt num = m;
	BigInt den = 1;
	if (exp >= 0)
		num <<= exp;
	else
		den <<= -exp;
	return Rational(num, den);
}

Rational Rational::parse(std::string_view text)
{
	auto parse_int = [](std::string_view s) {
		if (s.empty())
			throw std::invalid_argument("empty integer");
		std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
		if (i == s.size())
			throw std::invalid_argument("bad integer: " + std::string(s));
		for (std::size_t j = i; j < s.size(); ++j)
			if (s[j] < '0' || s[j] > '9')
				throw std::invalid_argument("bad integer: " + std::string(s));
		BigInt v(std::string(s.substr(i)));
		return s[0] == '-' ? BigInt(-v) : v;
	};
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(parse_int(text));
	BigInt d = parse_int(text.substr(slash + 1));
	if (d.is_zero())
		throw std::invalid_argument("zero denominator: " + std::string(text));
	return Rational(parse_int(text.substr(0, slash)), d);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const
{
	if (is_integer())
		return numerator().str();
	return numerator().str() + "/" + denominator().str();
}

BigInt Rational::floor() const { return floor_div(numerator(), denominator()); }

BigInt Rational::ceil() const { return -floor_div(-numerator(), denominator()); }

Rational Rational::reciprocal() const
{
	if (is_zero())
		throw std::domain_error("reciprocal of zero");
	return Rational(denominator(), numerator());
}

Rational operator/(const Rational &a, const Rational &b)
{
	if (b.is_zero())
		throw std::domain_error("division by zero");
	return Rational(Rational::Raw{}, a.value_ / b.value_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
	int c = a.value_.compare(b.value_);
	return c < 0 ? std::strong_ordering::less
	     : c > 0 ? std::strong_ordering::greater
	             : std::strong_ordering::equal;
}

std::size_t Rational::hash() const
{
	std::size_t seed = 0;
	boost::hash_combine(seed, numerator().str());
	boost::hash_combine(seed, denominator().str());
	return seed;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

BigInt floor_div(const BigInt &a, const BigInt &b)
{
	if (b.is_zero())
		throw std::domain_error("division by zero");
	BigInt q = a / b; // truncates toward zero
	BigInt r = a - q * b;
	if (!r.is_zero() && ((r < 0) != (b < 0)))
		--q;
	return q;
}

BigInt mod_floor(const BigInt &a, const BigInt &m) { return a - floor_div(a, m) * m; }

BigInt mod_inverse(const BigInt &a, const BigInt &m)
{
	if (m < 1)
		throw std::domain_error("modulus must be positive");
	if (m == 1)
		return 0;
	BigInt r0 = mod_floor(a, m), r1 = m;
	BigInt s0 = 1, s1 = 0;
	while (!r1.is_zero()) {
		BigInt q = r0 / r1;
		BigInt t = r0 - q * r1;
		r0 = r1;
		r1 = t;
		t = s0 - q * s1;
		s0 = s1;
		s1 = t;
	}
	if (r0 != 1)
		throw std::domain_error("value not invertible modulo m");
	return mod_floor(s0, m);
}

} // namespace casson3
