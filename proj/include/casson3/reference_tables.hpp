// SPDX-License-Identifier: Apache-2.0
#pragma once

// Published closed forms for 1/K surgery on T(2,q), q = 3,5,7,9: the
// rotation-number families of the irreducible SU(2) representations and the
// invariant columns A, B, C, Λ. Where a printed entry is inconsistent with
// its own defining formula the corrected value is stored next to the
// printed one so reports can show both.

#include "casson3/rational_poly.hpp"

#include <optional>
#include <span>
#include <string>

namespace casson3 {

/// Rational function numerator(K) / denominator(K).
struct ClosedForm {
	RationalPoly numerator;
	RationalPoly denominator{Rational(1)};

	Rational operator()(const Rational &K) const { return numerator(K) / denominator(K); }
	std::string str() const;
};

/// One row of the rotation-number tables:
/// L3 = L3_k*k + L3_c + 2t for t = 1..t_per_k*k and e = e_k*k + e_t*t + e_c,
/// with k = |K|.
struct RotationFamily {
	long long q;
	int sign; ///< sign of K
	long long L2;
	long long L3_k, L3_c;
	long long t_per_k;
	long long e_k, e_t, e_c;
	/// Constant term consistent with e = sum L_i a/a_i when the printed one is not.
	std::optional<long long> e_c_corrected;

	long long t_max(long long k) const { return t_per_k * k; }
	long long L3(long long k, long long t) const { return L3_k * k + L3_c + 2 * t; }
	long long e_printed(long long k, long long t) const { return e_k * k + e_t * t + e_c; }
	long long e(long long k, long long t) const { return e_k * k + e_t * t + e_c_corrected.value_or(e_c); }
};

/// Rows for K > 0 (sign = +1) or K < 0 (sign = -1), all q.
std::span<const RotationFamily> rotation_families(int sign);

struct ClosedFormRow {
	long long q;
	ClosedForm A;
	ClosedForm B;
	ClosedForm C_plus;
	ClosedForm C_minus;
	ClosedForm Lambda_plus;
	ClosedForm Lambda_minus;
	/// Printed C for K < 0 when it disagrees with Λ - A - B.
	std::optional<ClosedForm> C_minus_as_printed;

	const ClosedForm &C(long long K) const { return K > 0 ? C_plus : C_minus; }
	const ClosedForm &Lambda(long long K) const { return K > 0 ? Lambda_plus : Lambda_minus; }
	const ClosedForm &C_as_printed(long long K) const
	{
		return K < 0 && C_minus_as_printed ? *C_minus_as_printed : C(K);
	}
};

/// Table lookup keyed by q; throws MissingClosedForm for q outside {3,5,7,9}.
class ClosedFormTable {
public:
	static const ClosedFormTable &standard();

	const ClosedFormRow &row(long long q) const;
	std::span<const ClosedFormRow> rows() const { return rows_; }

	Rational A(long long q, long long K) const { return row(q).A(Rational(K)); }
	Rational B(long long q, long long K) const { return row(q).B(Rational(K)); }
	Rational C(long long q, long long K) const { return row(q).C(K)(Rational(K)); }
	Rational Lambda(long long q, long long K) const { return row(q).Lambda(K)(Rational(K)); }

private:
	explicit ClosedFormTable(std::span<const ClosedFormRow> rows) : rows_(rows) {}
	std::span<const ClosedFormRow> rows_;
};

} // namespace casson3
