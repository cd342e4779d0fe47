// SPDX-License-Identifier: Apache-2.0
#include "casson3/numeric.hpp"

#include "casson3/errors.hpp"

#include <cmath>
#include <limits>

namespace casson3 {

void KahanSum::add(double x)
{
	double t = sum_ + x;
	if (std::abs(sum_) >= std::abs(x))
		comp_ += (sum_ - t) + x;
	else
		comp_ += (x - t) + sum_;
	sum_ = t;
	max_abs_ = std::max(max_abs_, std::abs(x));
	++count_;
}

FloatEstimate KahanSum::estimate(double ulps_per_term) const
{
	constexpr double eps = std::numeric_limits<double>::epsilon();
	double v = value();
	double bound = static_cast<double>(count_ + 1) * ulps_per_term * eps * max_abs_ + std::abs(v) * eps;
	return {v, bound};
}

namespace {

struct Frac {
	BigInt p, q;
	Rational value() const { return Rational(p, q); }
};

// Largest k >= 0 with k < t, where t > 0.
BigInt below(const Rational &t)
{
	BigInt c = t.ceil();
	return c - 1;
}

} // namespace

FareyBracket farey_bracket(const Rational &x, const BigInt &bound)
{
	if (bound < 1)
		throw std::domain_error("denominator bound must be >= 1");
	BigInt f = x.floor();
	Rational y = x - Rational(f);
	if (y.is_zero())
		return {x, x};

	Frac lo{0, 1}, hi{1, 1};
	for (;;) {
		if (lo.q + hi.q > bound)
			break;
		Rational mediant(lo.p + hi.p, lo.q + hi.q);
		if (mediant == y)
			return {x, x};
		if (mediant < y) {
			// lo + k*hi stays below y for k < t.
			Rational t = (y * Rational(lo.q) - Rational(lo.p)) / (Rational(hi.p) - y * Rational(hi.q));
			BigInt k_den = (bound - lo.q) / hi.q;
			if (t.is_integer() && t.numerator() <= k_den)
				return {x, x};
			BigInt k = below(t);
			if (k > k_den)
				k = k_den;
			lo = {lo.p + k * hi.p, lo.q + k * hi.q};
		} else {
			Rational t = (Rational(hi.p) - y * Rational(hi.q)) / (y * Rational(lo.q) - Rational(lo.p));
			BigInt k_den = (bound - hi.q) / lo.q;
			if (t.is_integer() && t.numerator() <= k_den)
				return {x, x};
			BigInt k = below(t);
			if (k > k_den)
				k = k_den;
			hi = {hi.p + k * lo.p, hi.q + k * lo.q};
		}
	}
	return {lo.value() + Rational(f), hi.value() + Rational(f)};
}

Rational farey_predecessor(const Rational &x, const BigInt &bound)
{
	BigInt a = x.numerator(), b = x.denominator();
	if (b > bound)
		throw std::domain_error("fraction not in the Farey sequence of this order");
	// a*d - b*c = 1 with d maximal.
	BigInt d0 = mod_inverse(a, b);
	BigInt d = d0 + ((bound - d0) / b) * b;
	BigInt c = (a * d - 1) / b;
	return Rational(c, d);
}

Rational farey_successor(const Rational &x, const BigInt &bound)
{
	BigInt a = x.numerator(), b = x.denominator();
	if (b > bound)
		throw std::domain_error("fraction not in the Farey sequence of this order");
	// b*c - a*d = 1 with d maximal.
	BigInt d0 = mod_floor(-mod_inverse(a, b), b);
	BigInt d = d0 + ((bound - d0) / b) * b;
	BigInt c = (a * d + 1) / b;
	return Rational(c, d);
}

Rational snap_to_rational(const FloatEstimate &x, const BigInt &bound)
{
	if (!(x.error_bound >= 0.0))
		throw std::domain_error("error bound must be non-negative");
	Rational v = Rational::from_double(x.value);
	Rational err = Rational::from_double(x.error_bound);
	auto within = [&](const Rational &r) { return (v - r).abs() <= err; };

	auto [lower, upper] = farey_bracket(v, bound);
	bool lower_in = within(lower);
	bool upper_in = within(upper);

	auto ambiguous = [&](const Rational &a, const Rational &b) {
		return SnapError(SnapError::Kind::Ambiguous,
		                 "ambiguous snap of " + std::to_string(x.value) + ": " + a.str() + " and " + b.str() +
		                     " both lie within the error window");
	};

	if (lower == upper) {
		Rational p = farey_predecessor(lower, bound);
		if (within(p))
			throw ambiguous(p, lower);
		Rational s = farey_successor(lower, bound);
		if (within(s))
			throw ambiguous(lower, s);
		return lower;
	}
	if (lower_in && upper_in)
		throw ambiguous(lower, upper);
	if (lower_in) {
		Rational p = farey_predecessor(lower, bound);
		if (within(p))
			throw ambiguous(p, lower);
		return lower;
	}
	if (upper_in) {
		Rational s = farey_successor(upper, bound);
		if (within(s))
			throw ambiguous(upper, s);
		return upper;
	}
	throw SnapError(SnapError::Kind::NoCandidate,
	                "no rational with denominator <= " + bound.str() + " within " + std::to_string(x.error_bound) +
	                    " of " + std::to_string(x.value));
}

} // namespace casson3
