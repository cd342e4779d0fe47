// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational.hpp"

#include <array>
#include <optional>

namespace casson3 {

/// 1/K surgery on the (2,q) torus knot.
struct SurgeryOrigin {
	long long q = 0;
	long long K = 0;

	friend bool operator==(const SurgeryOrigin &, const SurgeryOrigin &) = default;
};

/// Brieskorn homology sphere Σ(a1,a2,a3) with Seifert invariants
/// (b0; b1,b2,b3) and an explicit orientation sign (+1 for the natural
/// orientation as a singularity link, -1 for its reverse).
///
/// Construction checks pairwise coprimality of the multiplicities,
/// gcd(b_i, a_i) = 1 and the homology-sphere condition
/// |a1 a2 a3 (b0 + sum b_i/a_i)| = 1, and throws InvalidSeifertData otherwise.
class BrieskornSphere {
public:
	BrieskornSphere(std::array<long long, 3> a, long long b0, std::array<long long, 3> b, int orientation,
	                std::optional<SurgeryOrigin> surgery = std::nullopt);

	const std::array<long long, 3> &a() const { return a_; }
	long long b0() const { return b0_; }
	const std::array<long long, 3> &b() const { return b_; }
	int orientation() const { return orientation_; }
	const std::optional<SurgeryOrigin> &surgery() const { return surgery_; }

	/// a = a1 a2 a3.
	long long order() const { return a_[0] * a_[1] * a_[2]; }
	/// b0 + b1/a1 + b2/a2 + b3/a3.
	Rational euler_number() const;
	/// The sign ε of the surgery decomposition: -1 for K > 0, +1 for K < 0.
	/// Equal to the orientation sign.
	int epsilon() const { return orientation_; }

	friend bool operator==(const BrieskornSphere &, const BrieskornSphere &) = default;

private:
	std::array<long long, 3> a_;
	long long b0_;
	std::array<long long, 3> b_;
	int orientation_;
	std::optional<SurgeryOrigin> surgery_;
};

/// The Brieskorn sphere obtained by 1/K surgery on T(2,q):
/// -Σ(2,q,2qk-1) with (b0;b) = (-1; 1, m, k) for K = k > 0 and
/// Σ(2,q,2qk+1) with (b0;b) = (1; -1, -m, -k) for K = -k < 0, m = (q-1)/2.
/// Throws InvalidSurgery unless q is odd, q >= 3 and K != 0.
BrieskornSphere from_surgery(long long q, long long K);

/// Negates b0 and every b_i and flips the orientation sign.
BrieskornSphere reverse_orientation(const BrieskornSphere &X);

} // namespace casson3
