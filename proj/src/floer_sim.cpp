// SPDX-License-Identifier: Apache-2.0
#include "casson3/floer_sim.hpp"

#include <algorithm>

namespace casson3 {

namespace {

struct Pair {
	int p;
	std::size_t upper, lower;
};

std::vector<Pair> cancellable_pairs(const Z2ChainComplex &cc)
{
	std::vector<Pair> out;
	for (int p = 0; p < kFloerPeriod; ++p) {
		const Gf2Matrix &d = cc.boundary(p + 1);
		for (std::size_t lower = 0; lower < d.rows(); ++lower)
			for (std::size_t upper = 0; upper < d.cols(); ++upper)
				if (d.get(lower, upper))
					out.push_back({p, upper, lower});
	}
	return out;
}

} // namespace

Z2ChainComplex random_complex(SimRng &rng, std::size_t max_dim)
{
	// Cycles that survive to homology, then cancelling pairs, then slides to
	// mix the bases.
	Z2ChainComplex::Dims dims{};
	for (int p = 0; p < kFloerPeriod; ++p)
		dims[p] = rng.below(max_dim / 2 + 1);
	Z2ChainComplex cc(dims);
	const std::size_t pairs = rng.below(2 * max_dim + 1);
	for (std::size_t i = 0; i < pairs; ++i) {
		int p = static_cast<int>(rng.below(kFloerPeriod));
		if (cc.dim(p) < max_dim && cc.dim(p + 1) < max_dim)
			cc = apply_move(cc, MorseMove::birth(p));
	}
	const std::size_t slides = rng.below(8 * max_dim + 1);
	for (std::size_t i = 0; i < slides; ++i) {
		int p = static_cast<int>(rng.below(kFloerPeriod));
		if (cc.dim(p) < 2)
			continue;
		std::size_t t = rng.below(cc.dim(p));
		std::size_t s = rng.below(cc.dim(p) - 1);
		if (s >= t)
			++s;
		cc = apply_move(cc, MorseMove::handle_slide(p, t, s));
	}
	return cc;
}

MorseMove random_move(SimRng &rng, const Z2ChainComplex &cc, std::size_t max_dim)
{
	for (;;) {
		switch (rng.below(4)) {
		case 0:
			return MorseMove::isotopy();
		case 1: {
			int p = static_cast<int>(rng.below(kFloerPeriod));
			if (cc.dim(p) < 2)
				break;
			std::size_t t = rng.below(cc.dim(p));
			std::size_t s = rng.below(cc.dim(p) - 1);
			if (s >= t)
				++s;
			return MorseMove::handle_slide(p, t, s);
		}
		case 2: {
			int p = static_cast<int>(rng.below(kFloerPeriod));
			if (cc.dim(p) >= max_dim || cc.dim(p + 1) >= max_dim)
				break;
			return MorseMove::birth(p);
		}
		default: {
			auto pairs = cancellable_pairs(cc);
			if (pairs.empty())
				break;
			const Pair &pr = pairs[rng.below(pairs.size())];
			return MorseMove::death(pr.p, pr.upper, pr.lower);
		}
		}
	}
}

bool Transcript::consistent() const
{
	return std::all_of(records.begin(), records.end(), [](const MoveRecord &r) { return r.consistent(); });
}

Transcript simulate(const SimulationConfig &config)
{
	SimRng rng(config.seed);
	Transcript t{config, random_complex(rng, config.max_dim), {}};
	Z2ChainComplex cc = t.initial;
	auto homology = cc.homology_ranks();
	long long correction = floer_correction(cc);
	t.records.reserve(config.moves);
	for (std::size_t i = 0; i < config.moves; ++i) {
		MorseMove mv = random_move(rng, cc, config.max_dim);
		Z2ChainComplex next = apply_move(cc, mv);
		MoveRecord rec{mv, correction, floer_correction(next), next.is_chain_complex(),
		               next.homology_ranks() == homology};
		t.records.push_back(rec);
		cc = std::move(next);
		correction = rec.correction_after;
	}
	return t;
}

} // namespace casson3
