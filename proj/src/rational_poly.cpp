// SPDX-License-Identifier: Apache-2.0
#include "casson3/rational_poly.hpp"

#include "casson3/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace casson3 {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

RationalPoly RationalPoly::monomial(const Rational &c, std::size_t power)
{
	std::vector<Rational> v(power + 1);
	v[power] = c;
	return RationalPoly(std::move(v));
}

void RationalPoly::trim()
{
	while (!coeffs_.empty() && coeffs_.back().is_zero())
		coeffs_.pop_back();
}

Rational RationalPoly::coefficient(std::size_t power) const
{
	return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational RationalPoly::operator()(const Rational &x) const
{
	Rational acc;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

RationalPoly operator+(const RationalPoly &a, const RationalPoly &b)
{
	std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
	for (std::size_t i = 0; i < v.size(); ++i)
		v[i] = a.coefficient(i) + b.coefficient(i);
	return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-() const
{
	std::vector<Rational> v;
	v.reserve(coeffs_.size());
	for (const auto &c : coeffs_)
		v.push_back(-c);
	return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly &a, const RationalPoly &b) { return a + (-b); }

RationalPoly operator*(const RationalPoly &a, const RationalPoly &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
			v[i + j] += a.coeffs_[i] * b.coeffs_[j];
	return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational &c, const RationalPoly &p) { return RationalPoly{c} * p; }

std::string RationalPoly::str(const std::string &var) const
{
	if (is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (int d = degree(); d >= 0; --d) {
		const Rational &c = coeffs_[static_cast<std::size_t>(d)];
		if (c.is_zero())
			continue;
		Rational mag = c.abs();
		if (first)
			os << (c.sign() < 0 ? "-" : "");
		else
			os << (c.sign() < 0 ? " - " : " + ");
		first = false;
		bool unit = mag == Rational(1);
		if (!unit || d == 0)
			os << mag;
		if (d > 0) {
			if (!unit)
				os << '*';
			os << var;
			if (d > 1)
				os << '^' << d;
		}
	}
	return os.str();
}

RationalPoly solve_vandermonde(std::span<const Sample> points, int degree)
{
	if (degree < 0 || points.size() != static_cast<std::size_t>(degree) + 1)
		throw std::invalid_argument("solve_vandermonde needs exactly degree+1 points");
	const std::size_t n = points.size();

	// Augmented Vandermonde system, rows x_i^0..x_i^d | y_i.
	std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
	for (std::size_t i = 0; i < n; ++i) {
		Rational p(1);
		for (std::size_t j = 0; j < n; ++j) {
			m[i][j] = p;
			p *= points[i].first;
		}
		m[i][n] = points[i].second;
	}

	for (std::size_t col = 0; col < n; ++col) {
		std::size_t pivot = col;
		while (pivot < n && m[pivot][col].is_zero())
			++pivot;
		if (pivot == n)
			throw SingularSystem("Vandermonde system is singular: abscissae repeat");
		std::swap(m[col], m[pivot]);
		Rational inv = m[col][col].reciprocal();
		for (std::size_t j = col; j <= n; ++j)
			m[col][j] *= inv;
		for (std::size_t r = 0; r < n; ++r) {
			if (r == col || m[r][col].is_zero())
				continue;
			Rational f = m[r][col];
			for (std::size_t j = col; j <= n; ++j)
				m[r][j] -= f * m[col][j];
		}
	}

	std::vector<Rational> coeffs(n);
	for (std::size_t i = 0; i < n; ++i)
		coeffs[i] = m[i][n];
	return RationalPoly(std::move(coeffs));
}

} // namespace casson3
