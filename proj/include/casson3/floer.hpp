// SPDX-License-Identifier: Apache-2.0
#pragma once

// Z/8-graded Floer chain complexes over GF(2), the Floer correction term
// sum_p (-1)^p rank(d: C_{p+1} -> C_p), and the four elementary moves of a
// generic one-parameter family of perturbations (isotopy, handle slide,
// birth, death).

#include "casson3/flat_moduli.hpp"
#include "casson3/gf2_matrix.hpp"
#include "casson3/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace casson3 {

inline constexpr int kFloerPeriod = 8;

/// p reduced into [0, 8).
constexpr int mod8(long long p) { return static_cast<int>(((p % kFloerPeriod) + kFloerPeriod) % kFloerPeriod); }

struct MorseMove;

class Z2ChainComplex {
public:
	using Dims = std::array<std::size_t, kFloerPeriod>;
	using Boundaries = std::array<Gf2Matrix, kFloerPeriod>;

	Z2ChainComplex() : Z2ChainComplex(Dims{}) {}
	/// Zero boundary maps.
	explicit Z2ChainComplex(const Dims &dims);
	/// boundary[p] : C_p -> C_{p-1} must have shape dims[p-1] x dims[p] and
	/// satisfy d∘d = 0; throws InvalidComplex otherwise.
	Z2ChainComplex(const Dims &dims, Boundaries boundary);

	std::size_t dim(long long p) const { return dims_[mod8(p)]; }
	const Dims &dims() const { return dims_; }
	std::size_t total_dim() const;
	/// d : C_p -> C_{p-1}.
	const Gf2Matrix &boundary(long long p) const { return boundary_[mod8(p)]; }
	const Boundaries &boundaries() const { return boundary_; }

	/// rank of d : C_{p+1} -> C_p.
	std::size_t rank_into(long long p) const { return boundary(p + 1).rank(); }
	/// dim_{GF(2)} H_p for every p.
	Dims homology_ranks() const;
	bool is_chain_complex() const;

	/// Degree-reflected dual: C_p moves to degree -3-p and boundaries are transposed.
	Z2ChainComplex dual() const;

	friend bool operator==(const Z2ChainComplex &, const Z2ChainComplex &) = default;

private:
	friend Z2ChainComplex apply_move(const Z2ChainComplex &cc, const MorseMove &mv);
	Dims dims_{};
	Boundaries boundary_;
};

/// sum_{p=0}^{7} (-1)^p rank(d: C_{p+1} -> C_p).
long long floer_correction(const Z2ChainComplex &cc);

struct MorseMove {
	enum class Kind { Isotopy, HandleSlide, Birth, Death };

	Kind kind = Kind::Isotopy;
	/// Slide: degree of the two generators. Birth/death: the lower degree of the pair.
	int p = 0;
	/// Slide: basis change x_target <- x_target + x_source in C_p.
	std::size_t target = 0;
	std::size_t source = 0;
	/// Death: the cancelled pair, upper in C_{p+1} and lower in C_p.
	std::size_t upper = 0;
	std::size_t lower = 0;

	static MorseMove isotopy() { return {}; }
	static MorseMove handle_slide(int p, std::size_t target, std::size_t source)
	{
		return {Kind::HandleSlide, mod8(p), target, source, 0, 0};
	}
	static MorseMove birth(int p) { return {Kind::Birth, mod8(p), 0, 0, 0, 0}; }
	static MorseMove death(int p, std::size_t upper, std::size_t lower)
	{
		return {Kind::Death, mod8(p), 0, 0, upper, lower};
	}

	/// Jump of the Floer correction term this move must produce: 0 for
	/// isotopy and slides, (-1)^p for a birth at p, -(-1)^p for a death.
	long long expected_correction_delta() const;

	friend bool operator==(const MorseMove &, const MorseMove &) = default;
};

std::string to_string(MorseMove::Kind kind);

/// Birth appends the new pair (f in C_p, e in C_{p+1}, de = f) after the
/// existing generators; death removes a pair with <d upper, lower> = 1 and
/// updates d: C_{p+1} -> C_p by the cancellation (Schur complement) formula.
/// Throws InapplicableMove for out-of-range indices or a non-cancellable pair.
Z2ChainComplex apply_move(const Z2ChainComplex &cc, const MorseMove &mv);

/// Fintushel-Stern R-invariant 2e^2/a + 3 + sum_i (2/a_i) sum_m cot cot sin^2.
Rational fintushel_stern_r(const FlatConnection &c);

/// Floer grading mod 8: R mod 8 on the natural orientation, (-3 - R) mod 8 on
/// the reversed one. Throws GradingFormulaUnavailable if R is not an integer.
int floer_grading(const FlatConnection &c);

struct GradedConnection {
	FlatConnection connection;
	int grading = 0;
};

std::vector<GradedConnection> graded_connections(const BrieskornSphere &X);

/// Complex generated by the irreducible flat connections in their Floer
/// degrees. All gradings have one parity on this family, so d = 0; mixed
/// parity throws GradingFormulaUnavailable since d would be unknown.
Z2ChainComplex build_floer_complex(const BrieskornSphere &X);

} // namespace casson3
