// SPDX-License-Identifier: Apache-2.0
#pragma once

// ρ-invariants of the adjoint representation for the irreducible flat SU(2)
// connections of a Brieskorn sphere, through the cotangent sum
//
//   ρ/2 = ±( 3/2 + sum_{i=1}^{3} w_i sum_{m=1}^{a_i-1}
//                cot(π a m / a_i^2) cot(π m / a_i) sin^2(π e m / a_i) ),
//
// and their aggregate C = (-ε/8) sum_j ρ(Ad A_j).

#include "casson3/dedekind.hpp"
#include "casson3/flat_moduli.hpp"
#include "casson3/numeric.hpp"
#include "casson3/rational.hpp"
#include "casson3/seifert.hpp"

#include <string>
#include <vector>

namespace casson3 {

/// How the first cotangent argument is read: π (a/a_i) m / a_i, or
/// π a m / a_i (always a pole, kept so calibration can reject it).
enum class CotangentArgument { FiberReduced, Plain };

/// Per-fiber weight w_i: 2/a_i or 2a/a_i.
enum class CotangentWeight { PerFiber, Global };

/// Sign and argument conventions of the cotangent formula. The overall sign
/// is relative to the orientation sign o of the host sphere:
/// ρ = sign * o * (3 + 2 * W(e)).
struct RhoConvention {
	CotangentArgument argument = CotangentArgument::FiberReduced;
	CotangentWeight weight = CotangentWeight::PerFiber;
	int sign = -1;

	friend bool operator==(const RhoConvention &, const RhoConvention &) = default;
	std::string str() const;
};

/// The convention selected by calibrate_rho_convention(), frozen.
inline constexpr RhoConvention kRhoConvention{CotangentArgument::FiberReduced, CotangentWeight::PerFiber, -1};

/// Every candidate convention for which C(3,1) = 17/12 and C(3,-1) = -41/84
/// are reproduced exactly. Throws ConventionMismatch if none does.
std::vector<RhoConvention> calibrate_rho_convention();

/// W(e) = sum_i w_i sum_m cot cot sin^2 in double precision (compensated
/// summation, arguments reduced in integers). Throws ConventionMismatch when
/// the convention hits a cotangent pole.
FloatEstimate cotangent_sum_float(const BrieskornSphere &X, long long e, const RhoConvention &conv = kRhoConvention);

/// W(e) exactly, via Dedekind-type sawtooth sums.
Rational cotangent_sum_exact(const BrieskornSphere &X, long long e, const RhoConvention &conv = kRhoConvention,
                             FloorSumMethod method = FloorSumMethod::Euclid);

enum class RhoPath { Float, Exact, Lattice };

std::string to_string(RhoPath path);
RhoPath parse_rho_path(const std::string &name);

struct RhoValue {
	Rational exact;
	FloatEstimate float_check;
	FlatConnection connection;
	RhoPath path_used = RhoPath::Float;
	/// Float path could not snap and fell back to exact summation.
	bool escalated = false;
};

/// Denominator bound used to snap float evaluations: 4 a1 a2 a3.
BigInt rho_denominator_bound(const BrieskornSphere &X);

/// ρ(Ad A) for one connection. The float path snaps the compensated sum to
/// a rational with denominator <= 4a and falls back to exact summation if
/// the snap is ambiguous, finds no candidate, or the error bound exceeds 1e-6.
RhoValue rho_adjoint(const FlatConnection &c, RhoPath path = RhoPath::Float,
                     const RhoConvention &conv = kRhoConvention);

/// ρ for every connection of X, in enumeration order. On the float path the
/// aggregate is checked against the exact path (throws SnapFailure on
/// disagreement).
std::vector<RhoValue> rho_all(const BrieskornSphere &X, RhoPath path = RhoPath::Float,
                              const RhoConvention &conv = kRhoConvention);

/// C = (-ε/8) sum_j ρ(Ad A_j).
Rational c_correction(const BrieskornSphere &X, RhoPath path = RhoPath::Float,
                      const RhoConvention &conv = kRhoConvention);

} // namespace casson3
