// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "casson3/errors.hpp"
#include "casson3/floer.hpp"
#include "casson3/floer_sim.hpp"

#include <set>

using namespace casson3;

namespace {

using Dims = Z2ChainComplex::Dims;

// Rank over GF(2) by elimination on plain int rows.
std::size_t rank_oracle(const Gf2Matrix &m)
{
	std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			a[r][c] = m.get(r, c);
	std::size_t rank = 0;
	for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
		std::size_t piv = rank;
		while (piv < a.size() && !a[piv][c])
			++piv;
		if (piv == a.size())
			continue;
		std::swap(a[piv], a[rank]);
		for (std::size_t r = 0; r < a.size(); ++r)
			if (r != rank && a[r][c])
				for (std::size_t k = 0; k < m.cols(); ++k)
					a[r][k] ^= a[rank][k];
		++rank;
	}
	return rank;
}

long long correction_oracle(const Z2ChainComplex &cc)
{
	long long s = 0;
	for (int p = 0; p < 8; ++p)
		s += (p % 2 ? -1 : 1) * static_cast<long long>(rank_oracle(cc.boundary(p + 1)));
	return s;
}

long long jump_oracle(const MorseMove &mv)
{
	const long long sign = mv.p % 2 ? -1 : 1;
	if (mv.kind == MorseMove::Kind::Birth)
		return sign;
	if (mv.kind == MorseMove::Kind::Death)
		return -sign;
	return 0;
}

std::multiset<int> gradings(const BrieskornSphere &X)
{
	std::multiset<int> g;
	for (const auto &gc : graded_connections(X))
		g.insert(gc.grading);
	return g;
}

} // namespace

TEST_CASE("floer_correction examples")
{
	Dims d{3, 1, 4, 1, 5, 9, 2, 6};
	CHECK(floer_correction(Z2ChainComplex(d)) == 0);

	Dims d1{};
	d1[2] = d1[3] = 1;
	Z2ChainComplex::Boundaries b1;
	for (int p = 0; p < 8; ++p)
		b1[p] = Gf2Matrix(d1[(p + 7) % 8], d1[p]);
	b1[3].set(0, 0, true);
	CHECK(floer_correction(Z2ChainComplex(d1, b1)) == 1);

	// rank into 0 is 1 and rank into 2 is 2.
	Dims d2{1, 1, 2, 2, 0, 0, 0, 0};
	Z2ChainComplex::Boundaries b2;
	for (int p = 0; p < 8; ++p)
		b2[p] = Gf2Matrix(d2[(p + 7) % 8], d2[p]);
	b2[1].set(0, 0, true);
	b2[3].set(0, 0, true);
	b2[3].set(1, 1, true);
	Z2ChainComplex cc(d2, b2);
	CHECK(cc.rank_into(0) == 1);
	CHECK(cc.rank_into(2) == 2);
	CHECK(floer_correction(cc) == 3);
}

TEST_CASE("invalid complexes are rejected")
{
	Dims d{1, 1, 1, 0, 0, 0, 0, 0};
	Z2ChainComplex::Boundaries b;
	for (int p = 0; p < 8; ++p)
		b[p] = Gf2Matrix(d[(p + 7) % 8], d[p]);
	b[1].set(0, 0, true);
	b[2].set(0, 0, true);
	CHECK_THROWS_AS(Z2ChainComplex(d, b), InvalidComplex);
	b[2] = Gf2Matrix(2, 1);
	CHECK_THROWS_AS(Z2ChainComplex(d, b), InvalidComplex);
}

TEST_CASE("single moves")
{
	Z2ChainComplex cc(Dims{1, 2, 0, 1, 0, 0, 3, 0});
	for (int p = 0; p < 8; ++p) {
		auto born = apply_move(cc, MorseMove::birth(p));
		CHECK(floer_correction(born) - floer_correction(cc) == (p % 2 ? -1 : 1));
		CHECK(born.dim(p) == cc.dim(p) + 1);
		CHECK(born.dim(p + 1) == cc.dim(p + 1) + 1);
		auto back = apply_move(born, MorseMove::death(p, born.dim(p + 1) - 1, born.dim(p) - 1));
		CHECK(back == cc);
	}
	CHECK(apply_move(cc, MorseMove::isotopy()) == cc);
	auto slid = apply_move(apply_move(cc, MorseMove::birth(0)), MorseMove::handle_slide(1, 0, 2));
	CHECK(slid.is_chain_complex());
	CHECK(floer_correction(slid) == 1);
	CHECK_THROWS_AS(apply_move(cc, MorseMove::death(0, 0, 0)), InapplicableMove);
	CHECK_THROWS_AS(apply_move(cc, MorseMove::handle_slide(0, 0, 0)), InapplicableMove);
	CHECK_THROWS_AS(apply_move(cc, MorseMove::handle_slide(1, 0, 5)), InapplicableMove);
}

TEST_CASE("fuzzed move sequences obey the jump law")
{
	const int sequences = 10000;
	int failures = 0;
	for (int s = 0; s < sequences; ++s) {
		const Transcript t = simulate({static_cast<std::uint64_t>(s), 12, 6});
		Z2ChainComplex cc = t.initial;
		const auto homology = cc.homology_ranks();
		bool ok = correction_oracle(cc) == floer_correction(cc);
		for (const auto &r : t.records) {
			Z2ChainComplex next = apply_move(cc, r.move);
			for (int p = 0; p < 8; ++p)
				ok = ok && next.dim(p) <= 6 && rank_oracle(next.boundary(p)) == next.boundary(p).rank();
			ok = ok && next.is_chain_complex() && next.homology_ranks() == homology;
			ok = ok && correction_oracle(next) - correction_oracle(cc) == jump_oracle(r.move);
			ok = ok && r.consistent();
			cc = std::move(next);
		}
		ok = ok && t.consistent();
		failures += !ok;
	}
	CHECK(failures == 0);
}

TEST_CASE("simulation is deterministic")
{
	auto a = simulate({7, 100, 6});
	auto b = simulate({7, 100, 6});
	REQUIRE(a.records.size() == 100);
	CHECK(a.initial == b.initial);
	for (std::size_t i = 0; i < a.records.size(); ++i)
		CHECK(a.records[i].move == b.records[i].move);
	std::set<long long> deltas;
	for (const auto &r : a.records)
		deltas.insert(r.delta());
	for (long long d : deltas)
		CHECK((d == 0 || d == 1 || d == -1));
}

TEST_CASE("duality preserves the correction term")
{
	for (int s = 0; s < 500; ++s) {
		SimRng rng(1000 + s);
		auto cc = random_complex(rng, 6);
		auto dual = cc.dual();
		CHECK(dual.is_chain_complex());
		CHECK(floer_correction(dual) == floer_correction(cc));
		CHECK(dual.dual() == cc);
		for (int p = 0; p < 8; ++p)
			CHECK(dual.dim(-3 - p) == cc.dim(p));
	}
}

TEST_CASE("gradings on the surgery family")
{
	CHECK(gradings(from_surgery(3, 1)) == std::multiset<int>{1, 5});
	CHECK(gradings(reverse_orientation(from_surgery(3, 1))) == std::multiset<int>{0, 4});
	for (int g : gradings(from_surgery(3, -1)))
		CHECK(g % 2 == 0);
	auto g91 = gradings(from_surgery(9, 1));
	CHECK(g91.size() == 20);
	for (int g : g91)
		CHECK(g % 2 == 1);
	for (long long q : {3, 5, 7, 9})
		for (long long k = 1; k <= 6; ++k) {
			for (int g : gradings(from_surgery(q, k)))
				CHECK(g % 2 == 1);
			for (int g : gradings(from_surgery(q, -k)))
				CHECK(g % 2 == 0);
		}
}

TEST_CASE("R-invariant is an even integer")
{
	for (long long q : {3, 5, 7, 9})
		for (long long K : {-3, -1, 1, 2})
			for (const auto &c : enumerate_connections(from_surgery(q, K))) {
				Rational R = fintushel_stern_r(c);
				CHECK(R.is_integer());
				CHECK(mod_floor(R.numerator(), 2) == 0);
			}
}

TEST_CASE("floer complexes of the family have zero correction")
{
	auto c1 = build_floer_complex(from_surgery(3, 1));
	CHECK(c1.total_dim() == 2);
	CHECK(floer_correction(c1) == 0);
	auto c2 = build_floer_complex(from_surgery(5, -2));
	CHECK(c2.total_dim() == 12);
	for (int p = 1; p < 8; p += 2)
		CHECK(c2.dim(p) == 0);
	CHECK(floer_correction(c2) == 0);
	auto c3 = build_floer_complex(from_surgery(9, 3));
	CHECK(c3.total_dim() == 60);
	for (int p = 0; p < 8; p += 2)
		CHECK(c3.dim(p) == 0);
	CHECK(floer_correction(c3) == 0);
}
