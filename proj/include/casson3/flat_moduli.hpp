// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/seifert.hpp"

#include <array>
#include <vector>

namespace casson3 {

/// An irreducible flat SU(2) connection on a Brieskorn sphere Σ(2,a2,a3),
/// described by its rotation numbers (L1,L2,L3) with L1 = 1.
struct FlatConnection {
	std::array<long long, 3> L{};
	/// 1-based rank of L3 among the connections sharing the same L2.
	int t_index = 0;
	/// sum L_i a/a_i before normalization.
	long long e_raw = 0;
	/// e_raw reduced into [0, 2a).
	long long e = 0;
	BrieskornSphere host;
};

/// Rotation-number admissibility for Σ(2,a2,a3): parity L_i ≡ b_i (mod 2),
/// 0 < L2 < a2, 0 < L3 < a3, and the strict inequality
/// |a3/2 - L3| < a3 * min(L2, a2 - L2) / a2, evaluated in integers.
bool is_admissible(const BrieskornSphere &X, long long L2, long long L3);

/// All irreducible flat SU(2) connections of X, sorted by (L2, L3).
/// Throws UnsupportedFamily unless X = ±Σ(2,q,2qk±1).
std::vector<FlatConnection> enumerate_connections(const BrieskornSphere &X);

/// Normalized e-invariant of an admissible connection (same as c.e).
long long e_invariant(const FlatConnection &c);

/// (q^2 - 1) k / 4.
long long count_connections(long long q, long long k);

} // namespace casson3
