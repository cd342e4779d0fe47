// SPDX-License-Identifier: Apache-2.0
#include "casson3/knot_poly.hpp"

#include "casson3/errors.hpp"
#include "casson3/flat_moduli.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace casson3 {

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) { trim(); }

LaurentPoly LaurentPoly::monomial(const BigInt &c, long long power) { return LaurentPoly(Terms{{power, c}}); }

void LaurentPoly::trim()
{
	std::erase_if(terms_, [](const auto &kv) { return kv.second == 0; });
}

BigInt LaurentPoly::coefficient(long long power) const
{
	auto it = terms_.find(power);
	return it == terms_.end() ? BigInt(0) : it->second;
}

long long LaurentPoly::min_degree() const
{
	if (terms_.empty())
		throw std::domain_error("zero polynomial has no degree");
	return terms_.begin()->first;
}

long long LaurentPoly::max_degree() const
{
	if (terms_.empty())
		throw std::domain_error("zero polynomial has no degree");
	return terms_.rbegin()->first;
}

BigInt LaurentPoly::at_one() const
{
	BigInt s = 0;
	for (const auto &[n, c] : terms_)
		s += c;
	return s;
}

LaurentPoly LaurentPoly::mirror() const
{
	Terms t;
	for (const auto &[n, c] : terms_)
		t[-n] = c;
	return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::shift(long long k) const
{
	Terms t;
	for (const auto &[n, c] : terms_)
		t[n + k] = c;
	return LaurentPoly(std::move(t));
}

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b)
{
	LaurentPoly::Terms t = a.terms_;
	for (const auto &[n, c] : b.terms_)
		t[n] += c;
	return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b)
{
	LaurentPoly::Terms t = a.terms_;
	for (const auto &[n, c] : b.terms_)
		t[n] -= c;
	return LaurentPoly(std::move(t));
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
	LaurentPoly::Terms t;
	for (const auto &[n, c] : a.terms_)
		for (const auto &[m, d] : b.terms_)
			t[n + m] += c * d;
	return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::divide(const LaurentPoly &a, const LaurentPoly &b)
{
	if (b.is_zero())
		throw std::domain_error("division by the zero polynomial");
	const long long bmax = b.max_degree();
	const BigInt &lead = b.terms_.rbegin()->second;
	LaurentPoly rem = a;
	Terms quot;
	while (!rem.is_zero() && rem.max_degree() - bmax >= rem.min_degree() - b.min_degree()) {
		const long long shift = rem.max_degree() - bmax;
		const BigInt &top = rem.terms_.rbegin()->second;
		if (top % lead != 0)
			throw std::domain_error("inexact polynomial division");
		BigInt c = top / lead;
		quot[shift] = c;
		rem = rem - monomial(c, shift) * b;
	}
	if (!rem.is_zero())
		throw std::domain_error("inexact polynomial division");
	return LaurentPoly(std::move(quot));
}

std::string LaurentPoly::str(const std::string &var) const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const auto &[n, c] = *it;
		BigInt mag = c < 0 ? BigInt(-c) : c;
		if (first)
			os << (c < 0 ? "-" : "");
		else
			os << (c < 0 ? " - " : " + ");
		first = false;
		if (n == 0) {
			os << mag;
			continue;
		}
		if (mag != 1)
			os << mag << "*";
		os << var;
		if (n != 1)
			os << "^" << n;
	}
	return os.str();
}

LaurentPoly alexander_torus(long long p, long long q)
{
	if (p < 1 || q < 1)
		throw std::invalid_argument("torus knot parameters must be positive");
	if (std::gcd(p, q) != 1)
		throw NotCoprime("T(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime parameters");
	if (p == 1 || q == 1)
		return LaurentPoly::monomial(1, 0);
	auto binom = [](long long n) { return LaurentPoly({{n, 1}, {0, -1}}); };
	LaurentPoly num = binom(p * q) * binom(1);
	LaurentPoly den = binom(p) * binom(q);
	LaurentPoly delta = LaurentPoly::divide(num, den);
	// Degree span is (p-1)(q-1), which is even.
	return delta.shift(-(delta.max_degree() + delta.min_degree()) / 2);
}

Rational second_derivative_at_one(const LaurentPoly &P)
{
	BigInt s = 0;
	for (const auto &[n, c] : P.terms())
		s += BigInt(n) * BigInt(n - 1) * c;
	return Rational(s);
}

ConjectureReport check_conjecture(long long q, const RationalPoly &fit_plus, const RationalPoly &fit_minus)
{
	ConjectureReport r;
	r.q = q;
	r.P_plus = fit_plus;
	r.P_minus = fit_minus;
	r.difference = fit_plus - fit_minus;
	r.N = (q * q - 1) / 4;
	r.rep_count_per_k = count_connections(q, 1);
	r.alexander_second_derivative = second_derivative_at_one(alexander_torus(2, q));

	const RationalPoly quarter_N_K = RationalPoly::monomial(Rational(r.N, 4), 1);
	r.difference_matches_quarter_N = r.difference == quarter_N_K;
	r.N_matches_rep_count = r.N == r.rep_count_per_k;
	r.N_matches_abs_alexander = Rational(r.N) == r.alexander_second_derivative.abs();

	r.observed_slope = r.difference.coefficient(1);
	r.printed_slope = -r.alexander_second_derivative;
	r.printed_slope_asserted_sign = Rational(r.N);
	const bool linear = r.difference.degree() <= 1 && r.difference.coefficient(0).is_zero();
	r.printed_form_consistent = linear && (r.observed_slope == r.printed_slope);
	r.printed_factor = r.printed_slope_asserted_sign.is_zero() ? Rational(0)
	                                                            : r.observed_slope / r.printed_slope_asserted_sign;

	std::ostringstream note;
	if (r.printed_form_consistent) {
		note << "P+ - P- = -|K| D''(1) holds";
	} else {
		note << "P+ - P- = " << r.difference.str() << "; printed form -|K| D''(1) gives " << r.printed_slope.str()
		     << "*K with D''(1) = " << r.alexander_second_derivative.str() << " and " << r.printed_slope_asserted_sign.str()
		     << "*K with D''(1) = -N; observed slope is " << r.printed_factor.str() << " times the latter";
	}
	r.note = note.str();
	return r;
}

} // namespace casson3
