// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational.hpp"
#include "casson3/reference_tables.hpp"
#include "casson3/rho.hpp"
#include "casson3/seifert.hpp"

namespace casson3 {

/// All invariants of one 1/K surgery on T(2,q).
///   lambda_su3 = A + B            (Boden-Herald SU(3) invariant)
///   Lambda_su3 = A + B + C + D    (perturbative SU(3) invariant)
/// with A, B read from the closed-form table, C from the ρ-invariants and
/// D = -(1/4) Floer(X).
struct InvariantReport {
	long long q = 0;
	long long K = 0;
	int orientation = 0;
	Rational A, B, C, D;
	long long floer = 0;
	Rational lambda_su2;
	Rational lambda_su3;
	Rational Lambda_su3;

	/// 4 Λ is an integer.
	bool four_lambda_integral() const { return (Rational(4) * Lambda_su3).is_integer(); }
};

/// K (q^2 - 1) / 4. Throws InvalidSurgery for even q, q < 3 or K = 0.
Rational lambda_su2(long long q, long long K);

/// Full assembly on a sphere from the surgery family (either orientation).
/// Throws UnsupportedFamily if X has no surgery origin and MissingClosedForm
/// for q outside {3,5,7,9}.
InvariantReport assemble(const BrieskornSphere &X, RhoPath path = RhoPath::Float);
InvariantReport assemble(long long q, long long K, RhoPath path = RhoPath::Float);

/// A + B.
Rational lambda_su3_bh(long long q, long long K);

/// Data of one connect-sum factor. The SU(2) value is taken as given, so
/// the caller picks its normalization.
struct SummandData {
	Rational Lambda;
	Rational su2;
	long long floer = 0;
};

/// Λ(X1 # X2) = Λ1 + Λ2 + (9/2) su2_1 su2_2 - (1/4)[floer_sum - floer_1 - floer_2].
Rational connect_sum_Lambda(const SummandData &x1, const SummandData &x2, long long floer_sum);

/// λ(X1 # X2) = λ1 + λ2 + 4 su2_1 su2_2 for the Boden-Herald invariant.
Rational connect_sum_lambda_bh(const Rational &lambda1, const Rational &su2_1, const Rational &lambda2,
                               const Rational &su2_2);

} // namespace casson3
