// SPDX-License-Identifier: Apache-2.0
#include "casson3/floer.hpp"

#include "casson3/errors.hpp"
#include "casson3/rho.hpp"

#include <numeric>

namespace casson3 {

namespace {

Z2ChainComplex::Boundaries zero_boundaries(const Z2ChainComplex::Dims &dims)
{
	Z2ChainComplex::Boundaries b;
	for (int p = 0; p < kFloerPeriod; ++p)
		b[p] = Gf2Matrix(dims[mod8(p - 1)], dims[p]);
	return b;
}

} // namespace

Z2ChainComplex::Z2ChainComplex(const Dims &dims) : dims_(dims), boundary_(zero_boundaries(dims)) {}

Z2ChainComplex::Z2ChainComplex(const Dims &dims, Boundaries boundary) : dims_(dims), boundary_(std::move(boundary))
{
	for (int p = 0; p < kFloerPeriod; ++p)
		if (boundary_[p].rows() != dims_[mod8(p - 1)] || boundary_[p].cols() != dims_[p])
			throw InvalidComplex("boundary map out of degree " + std::to_string(p) + " has the wrong shape");
	if (!is_chain_complex())
		throw InvalidComplex("d∘d != 0");
}

std::size_t Z2ChainComplex::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

bool Z2ChainComplex::is_chain_complex() const
{
	for (int p = 0; p < kFloerPeriod; ++p)
		if (!(boundary(p - 1) * boundary(p)).is_zero())
			return false;
	return true;
}

Z2ChainComplex::Dims Z2ChainComplex::homology_ranks() const
{
	Dims h{};
	for (int p = 0; p < kFloerPeriod; ++p)
		h[p] = dims_[p] - boundary(p).rank() - boundary(p + 1).rank();
	return h;
}

Z2ChainComplex Z2ChainComplex::dual() const
{
	// C_p sits in degree -3-p; the transpose of d: C_{p+1} -> C_p maps
	// degree -3-p to degree -4-p, i.e. it is the new boundary out of -3-p.
	Dims dims{};
	Boundaries b;
	for (int p = 0; p < kFloerPeriod; ++p)
		dims[mod8(-3 - p)] = dims_[p];
	for (int p = 0; p < kFloerPeriod; ++p)
		b[mod8(-3 - p)] = boundary(p + 1).transpose();
	return Z2ChainComplex(dims, std::move(b));
}

long long floer_correction(const Z2ChainComplex &cc)
{
	long long total = 0;
	for (int p = 0; p < kFloerPeriod; ++p) {
		const auto r = static_cast<long long>(cc.rank_into(p));
		total += (p % 2 == 0) ? r : -r;
	}
	return total;
}

long long MorseMove::expected_correction_delta() const
{
	const long long parity = (p % 2 == 0) ? 1 : -1;
	switch (kind) {
	case Kind::Birth: return parity;
	case Kind::Death: return -parity;
	default: return 0;
	}
}

std::string to_string(MorseMove::Kind kind)
{
	switch (kind) {
	case MorseMove::Kind::Isotopy: return "isotopy";
	case MorseMove::Kind::HandleSlide: return "handle_slide";
	case MorseMove::Kind::Birth: return "birth";
	case MorseMove::Kind::Death: return "death";
	}
	return "?";
}

Z2ChainComplex apply_move(const Z2ChainComplex &cc, const MorseMove &mv)
{
	Z2ChainComplex out = cc;
	const int p = mod8(mv.p);
	const int up = mod8(p + 1), up2 = mod8(p + 2);
	auto &b = out.boundary_;
	auto &dims = out.dims_;

	switch (mv.kind) {
	case MorseMove::Kind::Isotopy:
		break;

	case MorseMove::Kind::HandleSlide:
		if (mv.target == mv.source || mv.target >= dims[p] || mv.source >= dims[p])
			throw InapplicableMove("handle slide needs two distinct generators of degree " + std::to_string(p));
		// New basis x_t' = x_t + x_s: column op on d out of C_p, row op on d into C_p.
		b[p].add_col(mv.target, mv.source);
		b[up].add_row(mv.source, mv.target);
		break;

	case MorseMove::Kind::Birth:
		b[up].append_row();
		b[up].append_col();
		b[up].set(dims[p], dims[up], true);
		b[up2].append_row();
		b[p].append_col();
		++dims[p];
		++dims[up];
		break;

	case MorseMove::Kind::Death: {
		if (mv.upper >= dims[up] || mv.lower >= dims[p] || !b[up].get(mv.lower, mv.upper))
			throw InapplicableMove("no cancellable pair at degree " + std::to_string(p));
		Gf2Matrix &d = b[up];
		for (std::size_t y = 0; y < d.rows(); ++y)
			if (y != mv.lower && d.get(y, mv.upper))
				d.add_row(y, mv.lower);
		d.erase_row(mv.lower);
		d.erase_col(mv.upper);
		b[up2].erase_row(mv.upper);
		b[p].erase_col(mv.lower);
		--dims[p];
		--dims[up];
		break;
	}
	}
	return out;
}

Rational fintushel_stern_r(const FlatConnection &c)
{
	const BrieskornSphere &X = c.host;
	const RhoConvention conv{CotangentArgument::FiberReduced, CotangentWeight::PerFiber, 1};
	const Rational e(c.e);
	return Rational(2) * e * e / Rational(X.order()) + Rational(3) + cotangent_sum_exact(X, c.e, conv);
}

int floer_grading(const FlatConnection &c)
{
	Rational R = fintushel_stern_r(c);
	if (!R.is_integer())
		throw GradingFormulaUnavailable("R-invariant " + R.str() + " is not an integer");
	const long long r = static_cast<long long>(mod_floor(R.numerator(), 8));
	return c.host.orientation() > 0 ? mod8(r) : mod8(-3 - r);
}

std::vector<GradedConnection> graded_connections(const BrieskornSphere &X)
{
	std::vector<GradedConnection> out;
	for (auto &c : enumerate_connections(X)) {
		int g = floer_grading(c);
		out.push_back({std::move(c), g});
	}
	return out;
}

Z2ChainComplex build_floer_complex(const BrieskornSphere &X)
{
	Z2ChainComplex::Dims dims{};
	int parity = -1;
	for (const auto &gc : graded_connections(X)) {
		if (parity < 0)
			parity = gc.grading % 2;
		else if (parity != gc.grading % 2)
			throw GradingFormulaUnavailable("gradings of mixed parity: boundary map not determined");
		++dims[gc.grading];
	}
	return Z2ChainComplex(dims);
}

} // namespace casson3
