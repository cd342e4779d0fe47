// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded random walks through the move calculus, used by the property
// tests and by the floer-sim command.

#include "casson3/floer.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace casson3 {

/// Deterministic across platforms: draws use only the raw mt19937_64 stream.
class SimRng {
public:
	explicit SimRng(std::uint64_t seed) : engine_(seed) {}
	/// Uniform-ish integer in [0, n); n > 0.
	std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
	bool coin() { return (engine_() >> 63) != 0; }

private:
	std::mt19937_64 engine_;
};

/// Random complex with at most max_dim generators per degree: random
/// cancelling pairs and homology generators scrambled by handle slides.
Z2ChainComplex random_complex(SimRng &rng, std::size_t max_dim);

/// A move applicable to cc that keeps every degree at or below max_dim.
MorseMove random_move(SimRng &rng, const Z2ChainComplex &cc, std::size_t max_dim);

struct MoveRecord {
	MorseMove move;
	long long correction_before = 0;
	long long correction_after = 0;
	bool d_squared_zero = true;
	bool homology_preserved = true;

	long long delta() const { return correction_after - correction_before; }
	bool consistent() const
	{
		return d_squared_zero && homology_preserved && delta() == move.expected_correction_delta();
	}
};

struct SimulationConfig {
	std::uint64_t seed = 0;
	std::size_t moves = 100;
	std::size_t max_dim = 6;
};

struct Transcript {
	SimulationConfig config;
	Z2ChainComplex initial;
	std::vector<MoveRecord> records;

	bool consistent() const;
};

Transcript simulate(const SimulationConfig &config);

} // namespace casson3
