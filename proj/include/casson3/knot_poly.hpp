// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational.hpp"
#include "casson3/rational_poly.hpp"

#include <map>
#include <string>

namespace casson3 {

/// Integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
public:
	using Terms = std::map<long long, BigInt>;

	LaurentPoly() = default;
	explicit LaurentPoly(Terms terms);
	static LaurentPoly monomial(const BigInt &c, long long power);

	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	BigInt coefficient(long long power) const;
	long long min_degree() const;
	long long max_degree() const;
	BigInt at_one() const;
	/// t -> 1/t.
	LaurentPoly mirror() const;
	/// Multiply by t^k.
	LaurentPoly shift(long long k) const;

	friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
	friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
	friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
	friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

	/// Exact division; throws std::domain_error if b does not divide a.
	static LaurentPoly divide(const LaurentPoly &a, const LaurentPoly &b);

	/// e.g. "t - 1 + t^-1".
	std::string str(const std::string &var = "t") const;

private:
	void trim();
	Terms terms_;
};

/// Symmetric Alexander polynomial of T(p,q):
/// (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)) shifted so Δ(t) = Δ(1/t).
/// Returns 1 when p or q is 1. Throws NotCoprime if gcd(p,q) != 1 and
/// std::invalid_argument for p or q < 1.
LaurentPoly alexander_torus(long long p, long long q);

/// sum_n n(n-1) c_n.
Rational second_derivative_at_one(const LaurentPoly &P);

/// Comparison of fitted Λ polynomials against both printed forms of the
/// surgery conjecture. Nothing here is asserted; fields record what holds.
struct ConjectureReport {
	long long q = 0;
	RationalPoly P_plus;
	RationalPoly P_minus;
	RationalPoly difference;
	/// (q^2 - 1) / 4.
	long long N = 0;
	/// Number of irreducible SU(2) connections per unit |K|.
	long long rep_count_per_k = 0;
	Rational alexander_second_derivative;
	/// P+ - P- = (1/4) N K.
	bool difference_matches_quarter_N = false;
	bool N_matches_rep_count = false;
	bool N_matches_abs_alexander = false;
	/// Coefficient of K in P+ - P- on K > 0.
	Rational observed_slope;
	/// Slope predicted by P+ = P- - |K| Δ''(1) on K > 0, with our Δ''(1).
	Rational printed_slope;
	/// Same, with the asserted value Δ''(1) = -N.
	Rational printed_slope_asserted_sign;
	/// observed_slope / printed_slope_asserted_sign.
	Rational printed_factor;
	bool printed_form_consistent = false;
	std::string note;
};

ConjectureReport check_conjecture(long long q, const RationalPoly &fit_plus, const RationalPoly &fit_minus);

} // namespace casson3
