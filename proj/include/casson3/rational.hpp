// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace casson3 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Values are immutable; every operation returns a new one.
class Rational {
public:
	Rational() = default;
	Rational(long long n) : value_(n) {}
	Rational(const BigInt &n) : value_(n) {}
	/// Throws std::domain_error when `d` is zero.
	Rational(const BigInt &n, const BigInt &d);

	/// Exact value of a finite double (every double is a dyadic rational).
	static Rational from_double(double x);
	/// Parses "p", "-p", "p/q". Throws std::invalid_argument on bad input.
	static Rational parse(std::string_view text);

	BigInt numerator() const;
	BigInt denominator() const;

	bool is_zero() const { return value_.is_zero(); }
	bool is_integer() const { return denominator() == 1; }
	int sign() const { return value_.sign(); }

	double to_double() const;
	/// "p/q", or "p" when the value is an integer.
	std::string str() const;

	BigInt floor() const;
	BigInt ceil() const;
	Rational abs() const { return sign() < 0 ? -*this : *this; }
	/// Throws std::domain_error on zero.
	Rational reciprocal() const;

	Rational operator-() const { return Rational(Raw{}, -value_); }

	friend Rational operator+(const Rational &a, const Rational &b) { return Rational(Raw{}, a.value_ + b.value_); }
	friend Rational operator-(const Rational &a, const Rational &b) { return Rational(Raw{}, a.value_ - b.value_); }
	friend Rational operator*(const Rational &a, const Rational &b) { return Rational(Raw{}, a.value_ * b.value_); }
	friend Rational operator/(const Rational &a, const Rational &b);

	Rational &operator+=(const Rational &o) { return *this = *this + o; }
	Rational &operator-=(const Rational &o) { return *this = *this - o; }
	Rational &operator*=(const Rational &o) { return *this = *this * o; }
	Rational &operator/=(const Rational &o) { return *this = *this / o; }

	friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

	std::size_t hash() const;

private:
	using Value = boost::multiprecision::cpp_rational;
	struct Raw {};
	Rational(Raw, Value v) : value_(std::move(v)) {}

	Value value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Floor division and non-negative remainder for signed big integers.
BigInt floor_div(const BigInt &a, const BigInt &b);
BigInt mod_floor(const BigInt &a, const BigInt &m);
/// Inverse of `a` modulo `m` (m >= 1); throws std::domain_error if gcd(a, m) != 1.
BigInt mod_inverse(const BigInt &a, const BigInt &m);

} // namespace casson3

template <>
struct std::hash<casson3::Rational> {
	std::size_t operator()(const casson3::Rational &r) const noexcept { return r.hash(); }
};
