// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational.hpp"

#include <cstddef>

namespace casson3 {

/// A double together with a conservative bound on its absolute error.
struct FloatEstimate {
	double value = 0.0;
	double error_bound = 0.0;
};

/// Compensated (Neumaier/Kahan) summation. Tracks the term count and the
/// largest term magnitude so the caller can derive an error bound.
class KahanSum {
public:
	void add(double x);
	double value() const { return sum_ + comp_; }
	std::size_t count() const { return count_; }
	double max_abs_term() const { return max_abs_; }

	/// Bound of the form count * ulps * eps * max|term|, plus the rounding of
	/// the result itself. `ulps_per_term` accounts for per-term evaluation error.
	FloatEstimate estimate(double ulps_per_term) const;

private:
	double sum_ = 0.0;
	double comp_ = 0.0;
	double max_abs_ = 0.0;
	std::size_t count_ = 0;
};

/// The Farey neighbours of x among rationals with denominator <= bound:
/// lower is the largest such value <= x, upper the smallest >= x.
struct FareyBracket {
	Rational lower;
	Rational upper;
};

FareyBracket farey_bracket(const Rational &x, const BigInt &denominator_bound);

/// Nearest neighbours of a reduced fraction inside the Farey sequence of
/// order `denominator_bound` (the fraction's denominator must not exceed it).
Rational farey_predecessor(const Rational &x, const BigInt &denominator_bound);
Rational farey_successor(const Rational &x, const BigInt &denominator_bound);

/// Returns the unique rational with denominator <= denominator_bound lying
/// within x.error_bound of x.value. Throws SnapError(NoCandidate) when no
/// such rational exists and SnapError(Ambiguous) when more than one does.
Rational snap_to_rational(const FloatEstimate &x, const BigInt &denominator_bound);

} // namespace casson3
