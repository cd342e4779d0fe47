// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact evaluation of the finite cotangent sums
//
//   T(h, c, e) = sum_{m=1}^{c-1} cot(pi h m / c) cot(pi m / c) sin^2(pi e m / c)
//
// through the sawtooth function ((x)). With gcd(h, c) = 1,
//
//   T(h, c, e) = 2c [ s(h, c) - S(h, c, e) ],
//   S(h, c, e) = sum_{j mod c} ((j/c)) (((h j + e)/c)),
//
// where s(h, c) = S(h, c, 0) is the Dedekind sum. S is expressed through the
// floor sums sum_j floor((h j + e)/c) and sum_j j floor((h j + e)/c), which are
// evaluated either by a Euclid-like recursion or by counting lattice points.

#include "casson3/rational.hpp"

namespace casson3 {

/// ((x)) = x - floor(x) - 1/2 for non-integral x, 0 for integral x.
Rational sawtooth(const Rational &x);

/// Dedekind sum s(h, c) by the reciprocity law; requires c >= 1, gcd(h, c) = 1.
Rational dedekind_sum(const BigInt &h, const BigInt &c);

struct FloorSums {
	BigInt f; ///< sum_{j=0}^{n} floor((a j + b)/c)
	BigInt g; ///< sum_{j=0}^{n} j floor((a j + b)/c)
	BigInt h; ///< sum_{j=0}^{n} floor((a j + b)/c)^2
};

/// Euclid-like recursion in O(log) steps. Requires a, b >= 0, c > 0, n >= 0.
FloorSums floor_sums(const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &n);

/// Same sums by enumerating the lattice points (j, y) with
/// 0 <= j <= n and 1 <= y <= (a j + b)/c. Cost grows with the point count.
FloorSums floor_sums_by_lattice_count(long long a, long long b, long long c, long long n);

enum class FloorSumMethod { Euclid, LatticeCount };

/// S(h, c, e) = sum_{j mod c} ((j/c)) (((h j + e)/c)); requires gcd(h, c) = 1.
Rational shifted_sawtooth_sum(long long h, long long c, long long e, FloorSumMethod method = FloorSumMethod::Euclid);

/// T(h, c, e) exactly; requires c >= 2 and gcd(h, c) = 1.
Rational cot_product_sum(long long h, long long c, long long e, FloorSumMethod method = FloorSumMethod::Euclid);

} // namespace casson3
