// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "casson3/rational_poly.hpp"

#include <map>

namespace casson3 {

/// Interpolates the first degree+1 samples (in order of increasing |K|)
/// and checks the next extra_check_points samples against the result.
/// All keys must be nonzero and share a sign, and there must be at least
/// degree+1+extra_check_points of them (std::invalid_argument otherwise).
/// Throws DegreeExceeded when a check point is off the polynomial.
RationalPoly fit_and_verify(const std::map<long long, Rational> &values, int degree, std::size_t extra_check_points);

} // namespace casson3
