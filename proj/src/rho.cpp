// SPDX-License-Identifier: Apache-2.0
#include "casson3/rho.hpp"

#include "casson3/dedekind.hpp"
#include "casson3/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace casson3 {

namespace {

constexpr double kMaxSnapError = 1e-6;
// Per-term rounding budget: two cotangents, one sine, three products.
constexpr double kUlpsPerTerm = 16.0;

long long cot_multiplier(const BrieskornSphere &X, int i, const RhoConvention &conv)
{
	const long long ai = X.a()[i];
	return conv.argument == CotangentArgument::FiberReduced ? X.order() / ai : X.order();
}

Rational weight(const BrieskornSphere &X, int i, const RhoConvention &conv)
{
	const long long ai = X.a()[i];
	return conv.weight == CotangentWeight::PerFiber ? Rational(2, ai) : Rational(2 * X.order(), ai);
}

void require_no_pole(const BrieskornSphere &X, int i, const RhoConvention &conv)
{
	if (cot_multiplier(X, i, conv) % X.a()[i] == 0)
		throw ConventionMismatch("cotangent argument " + conv.str() + " hits a pole at a" + std::to_string(i + 1));
}

Rational rho_from_sum(const BrieskornSphere &X, const Rational &w, const RhoConvention &conv)
{
	return Rational(conv.sign * X.orientation()) * (Rational(3) + Rational(2) * w);
}

} // namespace

std::string RhoConvention::str() const
{
	std::string s = argument == CotangentArgument::FiberReduced ? "cot(pi a m/a_i^2)" : "cot(pi a m/a_i)";
	s += weight == CotangentWeight::PerFiber ? ", w=2/a_i" : ", w=2a/a_i";
	s += sign > 0 ? ", sign=+o" : ", sign=-o";
	return s;
}

std::string to_string(RhoPath path)
{
	switch (path) {
	case RhoPath::Float: return "float";
	case RhoPath::Exact: return "exact";
	case RhoPath::Lattice: return "lattice";
	}
	return "?";
}

RhoPath parse_rho_path(const std::string &name)
{
	if (name == "float")
		return RhoPath::Float;
	if (name == "exact")
		return RhoPath::Exact;
	if (name == "lattice")
		return RhoPath::Lattice;
	throw std::invalid_argument("unknown evaluation path: " + name);
}

FloatEstimate cotangent_sum_float(const BrieskornSphere &X, long long e, const RhoConvention &conv)
{
	constexpr double pi = std::numbers::pi;
	KahanSum sum;
	for (int i = 0; i < 3; ++i) {
		require_no_pole(X, i, conv);
		const long long c = X.a()[i];
		const long long h = cot_multiplier(X, i, conv) % c;
		const long long er = ((e % c) + c) % c;
		const double w = weight(X, i, conv).to_double();
		for (long long m = 1; m < c; ++m) {
			const double u = pi * static_cast<double>((h * m) % c) / static_cast<double>(c);
			const double v = pi * static_cast<double>(m) / static_cast<double>(c);
			const double s = std::sin(pi * static_cast<double>((er * m) % c) / static_cast<double>(c));
			sum.add(w * (std::cos(u) / std::sin(u)) * (std::cos(v) / std::sin(v)) * s * s);
		}
	}
	return sum.estimate(kUlpsPerTerm);
}

Rational cotangent_sum_exact(const BrieskornSphere &X, long long e, const RhoConvention &conv, FloorSumMethod method)
{
	Rational total;
	for (int i = 0; i < 3; ++i) {
		require_no_pole(X, i, conv);
		const long long c = X.a()[i];
		total += weight(X, i, conv) * cot_product_sum(cot_multiplier(X, i, conv) % c, c, e, method);
	}
	return total;
}

BigInt rho_denominator_bound(const BrieskornSphere &X) { return BigInt(4) * X.order(); }

RhoValue rho_adjoint(const FlatConnection &c, RhoPath path, const RhoConvention &conv)
{
	const BrieskornSphere &X = c.host;
	FloatEstimate w = cotangent_sum_float(X, c.e, conv);
	const double rho = static_cast<double>(conv.sign * X.orientation()) * (3.0 + 2.0 * w.value);
	FloatEstimate rho_float{rho, 2.0 * w.error_bound + 2.0 * std::abs(rho) * std::numeric_limits<double>::epsilon()};

	RhoValue out{Rational(), rho_float, c, path, false};
	switch (path) {
	case RhoPath::Float:
		if (rho_float.error_bound <= kMaxSnapError) {
			try {
				out.exact = snap_to_rational(rho_float, rho_denominator_bound(X));
				return out;
			} catch (const SnapError &) {
			}
		}
		out.escalated = true;
		out.exact = rho_from_sum(X, cotangent_sum_exact(X, c.e, conv, FloorSumMethod::Euclid), conv);
		return out;
	case RhoPath::Exact:
		out.exact = rho_from_sum(X, cotangent_sum_exact(X, c.e, conv, FloorSumMethod::Euclid), conv);
		return out;
	case RhoPath::Lattice:
		out.exact = rho_from_sum(X, cotangent_sum_exact(X, c.e, conv, FloorSumMethod::LatticeCount), conv);
		return out;
	}
	return out;
}

std::vector<RhoValue> rho_all(const BrieskornSphere &X, RhoPath path, const RhoConvention &conv)
{
	std::vector<RhoValue> out;
	Rational aggregate;
	Rational exact_aggregate;
	for (const auto &c : enumerate_connections(X)) {
		out.push_back(rho_adjoint(c, path, conv));
		aggregate += out.back().exact;
		if (path == RhoPath::Float)
			exact_aggregate += rho_from_sum(X, cotangent_sum_exact(X, c.e, conv), conv);
	}
	if (path == RhoPath::Float && aggregate != exact_aggregate)
		throw SnapFailure("snapped ρ aggregate " + aggregate.str() + " disagrees with exact aggregate " +
		                  exact_aggregate.str());
	return out;
}

Rational c_correction(const BrieskornSphere &X, RhoPath path, const RhoConvention &conv)
{
	Rational sum;
	for (const auto &r : rho_all(X, path, conv))
		sum += r.exact;
	return Rational(-X.epsilon(), 8) * sum;
}

std::vector<RhoConvention> calibrate_rho_convention()
{
	struct Anchor {
		long long q, K;
		Rational C;
	};
	const Anchor anchors[] = {{3, 1, Rational(17, 12)}, {3, -1, Rational(-41, 84)}};

	std::vector<RhoConvention> good;
	for (auto argument : {CotangentArgument::FiberReduced, CotangentArgument::Plain})
		for (auto w : {CotangentWeight::PerFiber, CotangentWeight::Global})
			for (int sign : {1, -1}) {
				RhoConvention conv{argument, w, sign};
				bool ok = true;
				for (const auto &anchor : anchors) {
					try {
						if (c_correction(from_surgery(anchor.q, anchor.K), RhoPath::Exact, conv) != anchor.C)
							ok = false;
					} catch (const ConventionMismatch &) {
						ok = false;
					}
					if (!ok)
						break;
				}
				if (ok)
					good.push_back(conv);
			}
	if (good.empty())
		throw ConventionMismatch("no cotangent convention reproduces the C(3,±1) anchors");
	return good;
}

} // namespace casson3
