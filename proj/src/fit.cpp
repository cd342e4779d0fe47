// SPDX-License-Identifier: Apache-2.0
#include "casson3/fit.hpp"

#include "casson3/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace casson3 {

RationalPoly fit_and_verify(const std::map<long long, Rational> &values, int degree, std::size_t extra_check_points)
{
	if (degree < 0)
		throw std::invalid_argument("degree must be non-negative");
	std::vector<Sample> samples;
	int sign = 0;
	for (const auto &[K, v] : values) {
		const int s = K > 0 ? 1 : (K < 0 ? -1 : 0);
		if (s == 0)
			throw std::invalid_argument("sample at K = 0");
		if (sign != 0 && s != sign)
			throw std::invalid_argument("samples span both sign branches");
		sign = s;
		samples.emplace_back(Rational(K), v);
	}
	const std::size_t need = static_cast<std::size_t>(degree) + 1;
	if (samples.size() < need + extra_check_points)
		throw std::invalid_argument("need " + std::to_string(need + extra_check_points) + " samples, got " +
		                            std::to_string(samples.size()));
	std::sort(samples.begin(), samples.end(),
	          [](const Sample &x, const Sample &y) { return x.first.abs() < y.first.abs(); });

	RationalPoly P = solve_vandermonde(std::span<const Sample>(samples.data(), need), degree);
	for (std::size_t i = need; i < need + extra_check_points; ++i) {
		const auto &[K, v] = samples[i];
		if (P(K) != v)
			throw DegreeExceeded("sample at K = " + K.str() + " is " + v.str() + ", degree-" +
			                     std::to_string(degree) + " fit gives " + P(K).str());
	}
	return P;
}

} // namespace casson3
