// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "casson3/errors.hpp"
#include "casson3/numeric.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace casson3;

namespace {

// Every rational with denominator <= bound inside [x - err, x + err], by scanning denominators.
std::vector<Rational> scan_candidates(double x, double err, long long bound)
{
	const Rational lo = Rational::from_double(x) - Rational::from_double(err);
	const Rational hi = Rational::from_double(x) + Rational::from_double(err);
	std::vector<Rational> out;
	for (long long q = 1; q <= bound; ++q) {
		const long long p0 = static_cast<long long>(std::floor((x - err) * static_cast<double>(q))) - 1;
		for (long long p = p0; p <= p0 + static_cast<long long>(2 * err * q) + 3; ++p) {
			Rational r(p, q);
			if (r.denominator() == q && lo <= r && r <= hi)
				out.push_back(r);
		}
	}
	return out;
}

} // namespace

TEST_CASE("snap examples")
{
	CHECK(snap_to_rational({0.25, 1e-12}, 4) == Rational(1, 4));
	CHECK(snap_to_rational({1.4166666666, 1e-9}, 60) == Rational(17, 12));
	try {
		snap_to_rational({0.3333333, 1e-10}, 2);
		FAIL("expected NoCandidate");
	} catch (const SnapError &e) {
		CHECK(e.kind() == SnapError::Kind::NoCandidate);
	}
}

TEST_CASE("ambiguous snap is reported")
{
	try {
		snap_to_rational({0.5, 0.2}, 10);
		FAIL("expected Ambiguous");
	} catch (const SnapError &e) {
		CHECK(e.kind() == SnapError::Kind::Ambiguous);
	}
}

TEST_CASE("snap agrees with an exhaustive denominator scan")
{
	std::mt19937_64 rng(5);
	std::uniform_real_distribution<double> xs(-3.0, 3.0);
	for (int i = 0; i < 300; ++i) {
		const double x = xs(rng);
		const double err = std::ldexp(1.0, -static_cast<int>(rng() % 20) - 4);
		const long long bound = 1 + static_cast<long long>(rng() % 60);
		auto cands = scan_candidates(x, err, bound);
		if (cands.size() == 1) {
			CHECK(snap_to_rational({x, err}, bound) == cands[0]);
		} else {
			try {
				snap_to_rational({x, err}, bound);
				FAIL("snap should have failed");
			} catch (const SnapError &e) {
				CHECK(e.kind() ==
				      (cands.empty() ? SnapError::Kind::NoCandidate : SnapError::Kind::Ambiguous));
			}
		}
	}
}

TEST_CASE("snap recovers random p/q with q up to 1e6")
{
	std::mt19937_64 rng(1);
	for (int i = 0; i < 1000; ++i) {
		const long long q = 1 + static_cast<long long>(rng() % 1000000);
		const long long p = static_cast<long long>(rng() % (4 * q)) - 2 * q;
		const Rational r(p, q);
		const double x = r.to_double();
		CHECK(snap_to_rational({x, 1e-13}, r.denominator()) == r);
	}
}

TEST_CASE("farey neighbours match a scan")
{
	for (long long n = 1; n <= 12; ++n) {
		std::vector<Rational> seq;
		for (long long q = 1; q <= n; ++q)
			for (long long p = 0; p <= q; ++p)
				if (Rational(p, q).denominator() == q)
					seq.push_back(Rational(p, q));
		std::sort(seq.begin(), seq.end());
		for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
			CHECK(farey_predecessor(seq[i], n) == seq[i - 1]);
			CHECK(farey_successor(seq[i], n) == seq[i + 1]);
		}
	}
	auto br = farey_bracket(Rational(3, 10), 4);
	CHECK(br.lower == Rational(1, 4));
	CHECK(br.upper == Rational(1, 3));
}

TEST_CASE("compensated sum and its bound")
{
	KahanSum s;
	for (int i = 0; i < 10000; ++i)
		s.add(0.1);
	auto est = s.estimate(1.0);
	CHECK(std::abs(est.value - 1000.0) <= est.error_bound);
	CHECK(s.count() == 10000);

	KahanSum c;
	c.add(1e16);
	c.add(1.0);
	c.add(-1e16);
	CHECK(c.value() == 1.0);
}
