// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace casson3 {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending order. Trailing zeros are stripped, so the zero polynomial has
/// no coefficients and every other polynomial has a nonzero leading term.
class RationalPoly {
public:
	RationalPoly() = default;
	explicit RationalPoly(std::vector<Rational> coefficients);
	RationalPoly(std::initializer_list<Rational> coefficients);

	static RationalPoly monomial(const Rational &c, std::size_t power);

	/// -1 for the zero polynomial.
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	bool is_zero() const { return coeffs_.empty(); }
	const std::vector<Rational> &coefficients() const { return coeffs_; }
	Rational coefficient(std::size_t power) const;

	Rational operator()(const Rational &x) const;

	friend RationalPoly operator+(const RationalPoly &a, const RationalPoly &b);
	friend RationalPoly operator-(const RationalPoly &a, const RationalPoly &b);
	friend RationalPoly operator*(const RationalPoly &a, const RationalPoly &b);
	friend RationalPoly operator*(const Rational &c, const RationalPoly &p);
	RationalPoly operator-() const;

	friend bool operator==(const RationalPoly &, const RationalPoly &) = default;

	/// Human-readable form in the given variable, highest power first,
	/// e.g. "5/2*K^2 - 9/4*K".
	std::string str(const std::string &var = "K") const;

private:
	void trim();
	std::vector<Rational> coeffs_;
};

using Sample = std::pair<Rational, Rational>;

/// Exact interpolation: the unique polynomial of degree <= `degree` through
/// `points`. Requires points.size() == degree + 1 (std::invalid_argument
/// otherwise) and pairwise distinct abscissae (SingularSystem otherwise).
RationalPoly solve_vandermonde(std::span<const Sample> points, int degree);

} // namespace casson3
