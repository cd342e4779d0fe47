// SPDX-License-Identifier: Apache-2.0
#include "casson3/dedekind.hpp"

#include <boost/integer/common_factor.hpp>

#include <stdexcept>

namespace casson3 {

Rational sawtooth(const Rational &x)
{
	if (x.is_integer())
		return Rational();
	return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum(const BigInt &h_in, const BigInt &c_in)
{
	if (c_in < 1)
		throw std::domain_error("dedekind_sum needs c >= 1");
	if (boost::multiprecision::gcd(h_in, c_in) != 1)
		throw std::domain_error("dedekind_sum needs gcd(h, c) = 1");
	// s(h,c) + s(c,h) = (h/c + c/h + 1/(hc))/12 - 1/4
	Rational acc;
	int sign = 1;
	BigInt h = mod_floor(h_in, c_in), c = c_in;
	while (c > 1) {
		Rational hr(h), cr(c);
		acc += Rational(sign) * ((hr / cr + cr / hr + (hr * cr).reciprocal()) / Rational(12) - Rational(1, 4));
		sign = -sign;
		BigInt next = c % h;
		c = h;
		h = next;
	}
	return acc;
}

FloorSums floor_sums(const BigInt &a, const BigInt &b, const BigInt &c, const BigInt &n)
{
	if (a < 0 || b < 0 || c <= 0 || n < 0)
		throw std::domain_error("floor_sums needs a, b, n >= 0 and c > 0");
	const BigInt s1 = n * (n + 1) / 2;
	const BigInt s2 = n * (n + 1) * (2 * n + 1) / 6;
	if (a.is_zero()) {
		BigInt q = b / c;
		return {(n + 1) * q, q * s1, (n + 1) * q * q};
	}
	if (a >= c || b >= c) {
		BigInt qa = a / c, qb = b / c;
		FloorSums sub = floor_sums(a % c, b % c, c, n);
		return {
		    sub.f + qa * s1 + qb * (n + 1),
		    sub.g + qa * s2 + qb * s1,
		    sub.h + qa * qa * s2 + qb * qb * (n + 1) + 2 * qa * qb * s1 + 2 * qb * sub.f + 2 * qa * sub.g,
		};
	}
	BigInt m = (a * n + b) / c;
	if (m.is_zero())
		return {0, 0, 0};
	FloorSums sub = floor_sums(c, c - b - 1, a, m - 1);
	FloorSums out;
	out.f = n * m - sub.f;
	out.g = (m * n * (n + 1) - sub.h - sub.f) / 2;
	out.h = n * m * (m + 1) - 2 * sub.g - 2 * sub.f - out.f;
	return out;
}

FloorSums floor_sums_by_lattice_count(long long a, long long b, long long c, long long n)
{
	if (a < 0 || b < 0 || c <= 0 || n < 0)
		throw std::domain_error("floor_sums_by_lattice_count needs a, b, n >= 0 and c > 0");
	// F^2 = sum_{y=1}^{F} (2y - 1).
	long long points = 0, weighted = 0, squares = 0;
	for (long long j = 0; j <= n; ++j)
		for (long long y = 1; c * y <= a * j + b; ++y) {
			++points;
			weighted += j;
			squares += 2 * y - 1;
		}
	return {points, weighted, squares};
}

Rational shifted_sawtooth_sum(long long h, long long c, long long e, FloorSumMethod method)
{
	if (c < 1)
		throw std::domain_error("shifted_sawtooth_sum needs c >= 1");
	if (c == 1)
		return Rational();
	h = ((h % c) + c) % c;
	e = ((e % c) + c) % c;
	if (boost::integer::gcd(h, c) != 1)
		throw std::domain_error("shifted_sawtooth_sum needs gcd(h, c) = 1");

	// For j = 1..c-1 write ((j/c)) = j/c - 1/2 and
	// (((hj+e)/c)) = (hj+e)/c - F_j - 1/2, F_j = floor((hj+e)/c); the one j
	// with hj + e = 0 (mod c) is corrected afterwards.
	const Rational C(c), H(h), E(e), half(1, 2);
	const Rational sj((c - 1) * c / 2);
	const Rational sjj(Rational((c - 1) * c) * Rational(2 * c - 1) / Rational(6));
	Rational smooth = H / (C * C) * sjj + E / (C * C) * sj - sj / (C * 2) - H * sj / (C * 2) -
	                  E * Rational(c - 1) / (C * 2) + Rational(c - 1, 4);

	FloorSums fs = method == FloorSumMethod::Euclid ? floor_sums(h, e, c, c - 1)
	                                                : floor_sums_by_lattice_count(h, e, c, c - 1);
	Rational lattice = Rational(fs.g) / C - Rational(fs.f) * half;

	Rational total = smooth - lattice;
	long long j0 = static_cast<long long>(mod_floor(BigInt(-e) * mod_inverse(h, c), c));
	if (j0 != 0)
		total += (Rational(j0, c) - half) * half;
	return total;
}

Rational cot_product_sum(long long h, long long c, long long e, FloorSumMethod method)
{
	if (c < 2)
		throw std::domain_error("cot_product_sum needs c >= 2");
	Rational s0 = method == FloorSumMethod::Euclid ? dedekind_sum(h, c) : shifted_sawtooth_sum(h, c, 0, method);
	return Rational(2 * c) * (s0 - shifted_sawtooth_sum(h, c, e, method));
}

} // namespace casson3
