// SPDX-License-Identifier: Apache-2.0
#include "casson3/flat_moduli.hpp"

#include "casson3/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace casson3 {

namespace {

bool same_parity(long long x, long long y) { return ((x - y) % 2) == 0; }

void require_family(const BrieskornSphere &X)
{
	const auto &a = X.a();
	if (a[0] != 2 || a[1] % 2 == 0 || ((a[2] - 1) % (2 * a[1]) != 0 && (a[2] + 1) % (2 * a[1]) != 0))
		throw UnsupportedFamily("rotation-number enumeration needs Σ(2,q,2qk±1)");
}

} // namespace

bool is_admissible(const BrieskornSphere &X, long long L2, long long L3)
{
	const auto &a = X.a();
	const auto &b = X.b();
	if (L2 <= 0 || L2 >= a[1] || L3 <= 0 || L3 >= a[2])
		return false;
	if (!same_parity(L2, b[1]) || !same_parity(L3, b[2]))
		return false;
	const long long d = std::min(L2, a[1] - L2);
	// |a3/2 - L3| < a3 d / a2  <=>  |a3 - 2 L3| a2 < 2 a3 d
	return std::llabs(a[2] - 2 * L3) * a[1] < 2 * a[2] * d;
}

std::vector<FlatConnection> enumerate_connections(const BrieskornSphere &X)
{
	require_family(X);
	const auto &a = X.a();
	const long long order = X.order();
	std::vector<FlatConnection> out;
	for (long long L2 = 1; L2 < a[1]; ++L2) {
		int t = 0;
		for (long long L3 = 1; L3 < a[2]; ++L3) {
			if (!is_admissible(X, L2, L3))
				continue;
			FlatConnection c{{1, L2, L3}, ++t, 0, 0, X};
			c.e_raw = order / a[0] + L2 * (order / a[1]) + L3 * (order / a[2]);
			c.e = ((c.e_raw % (2 * order)) + 2 * order) % (2 * order);
			out.push_back(std::move(c));
		}
	}
	return out;
}

long long e_invariant(const FlatConnection &c) { return c.e; }

long long count_connections(long long q, long long k) { return (q * q - 1) * k / 4; }

} // namespace casson3
