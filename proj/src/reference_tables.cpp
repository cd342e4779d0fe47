// SPDX-License-Identifier: Apache-2.0
#include "casson3/reference_tables.hpp"

#include "casson3/errors.hpp"

#include <array>
#include <string>
#include <vector>

namespace casson3 {

std::string ClosedForm::str() const
{
	if (denominator == RationalPoly{Rational(1)})
		return numerator.str();
	return "(" + numerator.str() + ")/(" + denominator.str() + ")";
}

namespace {

// L3 = L3_k k + L3_c + 2t, t = 1..t_per_k k, e = e_k k + e_t t + e_c
constexpr std::array<RotationFamily, 10> kPositive{{
    {3, 1, 1, 1, -2, 2, 36, 12, -17, std::nullopt},
    {5, 1, 2, 1, -2, 4, 100, 20, -29, std::nullopt},
    {5, 1, 4, 3, -2, 2, 160, 20, -33, std::nullopt},
    {7, 1, 1, 5, -2, 2, 196, 28, -37, std::nullopt},
    {7, 1, 3, 1, -2, 6, 196, 28, -41, std::nullopt},
    {7, 1, 5, 3, -2, 4, 280, 28, -45, std::nullopt},
    {9, 1, 2, 5, -2, 4, 324, 36, -49, std::nullopt},
    // printed with -49; sum L_i a/a_i gives -53 for every k, t
    {9, 1, 4, 1, -2, 8, 324, 36, -49, -53},
    {9, 1, 6, 3, -2, 6, 432, 36, -57, std::nullopt},
    {9, 1, 8, 7, -2, 2, 576, 36, -61, std::nullopt},
}};

constexpr std::array<RotationFamily, 10> kNegative{{
    {3, -1, 1, 1, 0, 2, 36, 12, 5, std::nullopt},
    {5, -1, 2, 1, 0, 4, 100, 20, 9, std::nullopt},
    {5, -1, 4, 3, 0, 2, 160, 20, 13, std::nullopt},
    {7, -1, 1, 5, 0, 2, 196, 28, 9, std::nullopt},
    {7, -1, 3, 1, 0, 6, 196, 28, 13, std::nullopt},
    {7, -1, 5, 3, 0, 4, 280, 28, 17, std::nullopt},
    {9, -1, 2, 5, 0, 4, 324, 36, 13, std::nullopt},
    {9, -1, 4, 1, 0, 8, 324, 36, 17, std::nullopt},
    {9, -1, 6, 3, 0, 6, 432, 36, 21, std::nullopt},
    {9, -1, 8, 7, 0, 2, 576, 36, 25, std::nullopt},
}};

ClosedForm poly2(long long c2, long long c1) { return {RationalPoly{0, c1, c2}}; }

// K (c3 K^2 + c2 K + c1) / (scale (slope K - 1))
ClosedForm cubic_over_linear(long long c3, long long c2, long long c1, long long scale, long long slope)
{
	return {RationalPoly{0, c1, c2, c3}, RationalPoly{-scale, scale * slope}};
}

// (c1 K + c0) K / 4
ClosedForm quarter_quadratic(long long c1, long long c0)
{
	return {RationalPoly{0, Rational(c0, 4), Rational(c1, 4)}};
}

const std::vector<ClosedFormRow> &standard_rows()
{
	static const std::vector<ClosedFormRow> rows{
	    {3, poly2(3, -1), cubic_over_linear(-24, -84, 13, 6, 6), cubic_over_linear(12, 84, -11, 12, 6),
	     // printed "12K^248K-5"; the missing operator is '+'
	     cubic_over_linear(12, 48, -5, 12, 6), quarter_quadratic(10, -9), quarter_quadratic(10, -11), std::nullopt},
	    {5, poly2(33, -9), cubic_over_linear(-200, -1620, 151, 10, 10), cubic_over_linear(100, 1120, -87, 20, 10),
	     cubic_over_linear(100, 820, -57, 20, 10), quarter_quadratic(126, -79), quarter_quadratic(126, -85),
	     // printed middle coefficient 48 disagrees with Λ - A - B at every K < 0
	     cubic_over_linear(100, 48, -57, 20, 10)},
	    {7, poly2(138, -26), cubic_over_linear(-784, -9128, 606, 14, 14), cubic_over_linear(392, 5992, -330, 28, 14),
	     cubic_over_linear(392, 4816, -246, 28, 14), quarter_quadratic(540, -230), quarter_quadratic(540, -242),
	     std::nullopt},
	    {9, poly2(390, -58), cubic_over_linear(-2160, -33192, 1714, 18, 18),
	     cubic_over_linear(1080, 20880, -890, 36, 18), cubic_over_linear(1080, 17640, -710, 36, 18),
	     quarter_quadratic(1540, -514), quarter_quadratic(1540, -534), std::nullopt},
	};
	return rows;
}

} // namespace

std::span<const RotationFamily> rotation_families(int sign)
{
	return sign > 0 ? std::span<const RotationFamily>(kPositive) : std::span<const RotationFamily>(kNegative);
}

const ClosedFormTable &ClosedFormTable::standard()
{
	static const ClosedFormTable table(standard_rows());
	return table;
}

const ClosedFormRow &ClosedFormTable::row(long long q) const
{
	for (const auto &r : rows_)
		if (r.q == q)
			return r;
	throw MissingClosedForm("no tabulated A/B closed forms for q = " + std::to_string(q));
}

} // namespace casson3
