// SPDX-License-Identifier: Apache-2.0
#include "casson3/seifert.hpp"

#include "casson3/errors.hpp"

#include <numeric>
#include <string>

namespace casson3 {

BrieskornSphere::BrieskornSphere(std::array<long long, 3> a, long long b0, std::array<long long, 3> b, int orientation,
                                 std::optional<SurgeryOrigin> surgery)
    : a_(a), b0_(b0), b_(b), orientation_(orientation), surgery_(surgery)
{
	if (orientation != 1 && orientation != -1)
		throw InvalidSeifertData("orientation must be +1 or -1");
	for (int i = 0; i < 3; ++i) {
		if (a_[i] < 2)
			throw InvalidSeifertData("Seifert multiplicities must be >= 2");
		if (std::gcd(b_[i], a_[i]) != 1)
			throw InvalidSeifertData("gcd(b" + std::to_string(i + 1) + ", a" + std::to_string(i + 1) + ") != 1");
		for (int j = i + 1; j < 3; ++j)
			if (std::gcd(a_[i], a_[j]) != 1)
				throw InvalidSeifertData("Seifert multiplicities are not pairwise coprime");
	}
	Rational scaled = Rational(order()) * euler_number();
	if (scaled.abs() != Rational(1))
		throw InvalidSeifertData("not an integral homology sphere: a*(b0 + sum b_i/a_i) = " + scaled.str());
}

Rational BrieskornSphere::euler_number() const
{
	Rational e(b0_);
	for (int i = 0; i < 3; ++i)
		e += Rational(b_[i], a_[i]);
	return e;
}

BrieskornSphere from_surgery(long long q, long long K)
{
	if (q < 3 || q % 2 == 0)
		throw InvalidSurgery("q must be odd and >= 3, got " + std::to_string(q));
	if (K == 0)
		throw InvalidSurgery("K must be nonzero");
	const long long m = (q - 1) / 2;
	const long long k = K > 0 ? K : -K;
	const SurgeryOrigin origin{q, K};
	if (K > 0)
		return BrieskornSphere({2, q, 2 * q * k - 1}, -1, {1, m, k}, -1, origin);
	return BrieskornSphere({2, q, 2 * q * k + 1}, 1, {-1, -m, -k}, 1, origin);
}

BrieskornSphere reverse_orientation(const BrieskornSphere &X)
{
	const auto &b = X.b();
	return BrieskornSphere(X.a(), -X.b0(), {-b[0], -b[1], -b[2]}, -X.orientation(), X.surgery());
}

} // namespace casson3
