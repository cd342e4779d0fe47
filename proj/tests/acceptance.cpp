// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "casson3/casson.hpp"
#include "casson3/errors.hpp"
#include "casson3/fit.hpp"
#include "casson3/flat_moduli.hpp"
#include "casson3/floer_sim.hpp"
#include "casson3/knot_poly.hpp"
#include "casson3/reference_tables.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

using namespace casson3;

namespace {

struct Outcome {
	bool pass = true;
	std::ostringstream detail;
	std::vector<std::string> notes;

	void fail(const std::string &why)
	{
		if (pass)
			detail << "first failure: " << why << "; ";
		pass = false;
	}
};

constexpr std::array<long long, 4> kQs{3, 5, 7, 9};

std::vector<long long> grid_K()
{
	std::vector<long long> Ks;
	for (long long K = -6; K <= 6; ++K)
		if (K != 0)
			Ks.push_back(K);
	return Ks;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Outcome &o)
{
	const auto t0 = std::chrono::steady_clock::now();
	const auto &table = ClosedFormTable::standard();
	int cells = 0;
	for (long long q : kQs)
		for (long long K : grid_K()) {
			++cells;
			const Rational L = assemble(q, K).Lambda_su3;
			if (L != table.Lambda(q, K))
				o.fail("q=" + std::to_string(q) + " K=" + std::to_string(K) + " gives " + L.str());
		}
	const double secs = seconds_since(t0);
	if (assemble(3, 1).Lambda_su3 != Rational(1, 4) || assemble(3, -1).Lambda_su3 != Rational(21, 4) ||
	    assemble(5, 1).Lambda_su3 != Rational(47, 4))
		o.fail("anchor values");
	if (secs >= 5.0)
		o.fail("runtime " + std::to_string(secs) + " s");
	o.detail << cells << " cells exact, anchors 1/4, 21/4, 47/4, " << secs << " s";
}

void criterion2(Outcome &o)
{
	const auto t0 = std::chrono::steady_clock::now();
	const auto &table = ClosedFormTable::standard();
	int cells = 0, printed_match = 0;
	double worst_rel = 0;
	for (long long q : kQs)
		for (long long K : grid_K()) {
			++cells;
			const BrieskornSphere X = from_surgery(q, K);
			const Rational C = c_correction(X, RhoPath::Float);
			const Rational C_exact = c_correction(X, RhoPath::Exact);
			if (C != C_exact)
				o.fail("float and exact paths differ at q=" + std::to_string(q) + " K=" + std::to_string(K));
			for (const auto &v : rho_all(X, RhoPath::Float)) {
				const double ex = v.exact.to_double();
				const double rel = std::abs(ex - v.float_check.value) / std::max(1.0, std::abs(ex));
				worst_rel = std::max(worst_rel, rel);
			}
			const ClosedFormRow &row = table.row(q);
			const Rational printed = row.C_as_printed(K)(Rational(K));
			if (C == printed) {
				++printed_match;
				continue;
			}
			if (C == row.C(K)(Rational(K)) && C == table.Lambda(q, K) - table.A(q, K) - table.B(q, K))
				o.notes.push_back("ERRATUM q=" + std::to_string(q) + " K=" + std::to_string(K) + ": computed " +
				                  C.str() + ", printed form gives " + printed.str() +
				                  "; computed value equals Lambda - A - B and the corrected form " +
				                  row.C(K).str());
			else
				o.fail("q=" + std::to_string(q) + " K=" + std::to_string(K) + " gives " + C.str());
		}
	const double secs = seconds_since(t0);
	if (worst_rel > 1e-8)
		o.fail("float/exact relative gap " + std::to_string(worst_rel));
	if (secs >= 30.0)
		o.fail("runtime " + std::to_string(secs) + " s");
	o.detail << cells << " cells, " << printed_match << " equal the printed form, " << (cells - printed_match)
	         << " equal the corrected form; worst float/exact relative gap " << worst_rel << ", " << secs << " s";
}

void criterion3(Outcome &o)
{
	using Row = std::tuple<long long, long long, long long, long long>;
	int checked = 0;
	for (int sign : {1, -1})
		for (long long q : kQs)
			for (long long k = 1; k <= 5; ++k) {
				std::set<Row> tab, tab_printed, got;
				for (const auto &f : rotation_families(sign))
					if (f.q == q)
						for (long long t = 1; t <= f.t_max(k); ++t) {
							tab.insert({f.L2, f.L3(k, t), t, f.e(k, t)});
							tab_printed.insert({f.L2, f.L3(k, t), t, f.e_printed(k, t)});
						}
				const auto conns = enumerate_connections(from_surgery(q, sign * k));
				for (const auto &c : conns)
					got.insert({c.L[1], c.L[2], c.t_index, c.e});
				++checked;
				const std::string cell = "q=" + std::to_string(q) + " K=" + std::to_string(sign * k);
				if (got != tab)
					o.fail(cell + " enumeration differs from the tabulated families");
				if (static_cast<long long>(conns.size()) != (q * q - 1) * k / 4)
					o.fail(cell + " count");
				if (got == tab && got != tab_printed && k == 1)
					o.notes.push_back("ERRATUM " + cell +
					                  ": printed e constant of one family is off by 4; enumeration matches the "
					                  "corrected constant (sum L_i a/a_i)");
			}
	o.detail << checked << " (q, K) cells, families and counts (q^2-1)k/4 exact";
}

void criterion4(Outcome &o)
{
	int cells = 0;
	for (long long q : kQs)
		for (long long K : grid_K()) {
			++cells;
			const Rational four = Rational(4) * assemble(q, K).Lambda_su3;
			if (!four.is_integer())
				o.fail("4*Lambda = " + four.str() + " at q=" + std::to_string(q) + " K=" + std::to_string(K));
		}
	o.detail << "4*Lambda integral on " << cells << " cells";
}

void criterion5(Outcome &o)
{
	std::mt19937_64 rng(20241016);
	int cells = 0;
	for (int i = 0; i < 20; ++i) {
		const long long q = kQs[rng() % kQs.size()];
		long long K = static_cast<long long>(rng() % 10) + 1;
		if (rng() % 2)
			K = -K;
		const BrieskornSphere X = from_surgery(q, K);
		const Rational a = assemble(X).Lambda_su3;
		const Rational b = assemble(reverse_orientation(X)).Lambda_su3;
		++cells;
		if (a != b)
			o.fail("q=" + std::to_string(q) + " K=" + std::to_string(K) + ": " + a.str() + " vs " + b.str());
	}
	o.detail << cells << " random cells give identical Lambda on X and -X";
}

void criterion6(Outcome &o)
{
	const auto t0 = std::chrono::steady_clock::now();
	const int sequences = 10000;
	std::size_t moves = 0;
	std::array<std::size_t, 4> by_kind{};
	int bad = 0;
	for (int s = 0; s < sequences; ++s) {
		const Transcript t = simulate({static_cast<std::uint64_t>(s), 16, 6});
		moves += t.records.size();
		for (const auto &r : t.records)
			++by_kind[static_cast<int>(r.move.kind)];
		if (!t.consistent())
			++bad;
	}
	const double secs = seconds_since(t0);
	if (bad)
		o.fail(std::to_string(bad) + " inconsistent sequences");
	if (secs >= 60.0)
		o.fail("runtime " + std::to_string(secs) + " s");
	o.detail << sequences << " sequences, " << moves << " moves (isotopy " << by_kind[0] << ", slide " << by_kind[1]
	         << ", birth " << by_kind[2] << ", death " << by_kind[3] << "), " << secs << " s";
}

std::pair<RationalPoly, RationalPoly> fit_branches(long long q)
{
	std::map<long long, Rational> plus, minus;
	for (long long k = 1; k <= 6; ++k) {
		plus[k] = assemble(q, k).Lambda_su3;
		minus[-k] = assemble(q, -k).Lambda_su3;
	}
	return {fit_and_verify(plus, 2, 3), fit_and_verify(minus, 2, 3)};
}

void criterion7(Outcome &o)
{
	for (long long q : kQs) {
		std::map<long long, Rational> plus, minus;
		for (long long k = 1; k <= 6; ++k) {
			plus[k] = assemble(q, k).Lambda_su3;
			minus[-k] = assemble(q, -k).Lambda_su3;
		}
		RationalPoly P, M;
		try {
			P = fit_and_verify(plus, 2, 3);
			M = fit_and_verify(minus, 2, 3);
		} catch (const std::exception &e) {
			o.fail("q=" + std::to_string(q) + " degree-2 fit: " + e.what());
			continue;
		}
		for (const auto *branch : {&plus, &minus}) {
			bool rejected = false;
			try {
				fit_and_verify(*branch, 1, 3);
			} catch (const DegreeExceeded &) {
				rejected = true;
			}
			if (!rejected)
				o.fail("q=" + std::to_string(q) + " degree-1 fit accepted");
		}
		if (P == M)
			o.fail("q=" + std::to_string(q) + " P+ = P-");
		if (P - M != RationalPoly::monomial(Rational(q * q - 1, 16), 1))
			o.fail("q=" + std::to_string(q) + " P+ - P- = " + (P - M).str());
		o.detail << "q=" << q << ": P+ = " << P.str() << ", P- = " << M.str() << "; ";
	}
	o.detail << "degree 1 rejected on every branch";
}

void criterion8(Outcome &o)
{
	for (long long q : kQs) {
		const auto [P, M] = fit_branches(q);
		const ConjectureReport r = check_conjecture(q, P, M);
		if (!r.N_matches_rep_count)
			o.fail("q=" + std::to_string(q) + " N vs representation count");
		if (!r.N_matches_abs_alexander)
			o.fail("q=" + std::to_string(q) + " N vs |D''(1)|");
		if (r.printed_form_consistent || r.note.empty())
			o.fail("q=" + std::to_string(q) + " printed form not flagged");
		o.detail << "q=" << q << ": N=" << r.N << ", reps/k=" << r.rep_count_per_k
		         << ", D''(1)=" << r.alexander_second_derivative.str() << ", factor " << r.printed_factor.str() << "; ";
		o.notes.push_back("q=" + std::to_string(q) + ": " + r.note);
	}
	o.detail << "printed formula flagged for every q";
}

void criterion9(Outcome &o)
{
	const InvariantReport r = assemble(3, 1);
	const SummandData x{r.Lambda_su3, r.lambda_su2, r.floer};
	const Rational zero_floer = connect_sum_Lambda(x, x, 0);
	const Rational floer_two = connect_sum_Lambda(x, x, 2);
	if (connect_sum_Lambda({}, {}, 0) != Rational(0))
		o.fail("all-zero inputs");
	if (zero_floer != Rational(37, 2))
		o.fail("(3,1) # (3,1) gives " + zero_floer.str());
	if (floer_two != Rational(18))
		o.fail("floer_sum = 2 gives " + floer_two.str());
	o.detail << "(3,1) # (3,1) = " << zero_floer.str() << ", with floer_sum 2: " << floer_two.str();
}

} // namespace

int main()
{
	const std::vector<std::pair<std::string, std::function<void(Outcome &)>>> criteria{
	    {"Lambda closed forms on the q x K grid", criterion1},
	    {"C closed forms from the rho sums", criterion2},
	    {"rotation-number families and counts", criterion3},
	    {"integrality of 4*Lambda", criterion4},
	    {"orientation symmetry", criterion5},
	    {"Floer move calculus", criterion6},
	    {"quadratic structure of Lambda", criterion7},
	    {"conjecture report", criterion8},
	    {"connect-sum combinator", criterion9},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i) {
		Outcome o;
		try {
			criteria[i].second(o);
		} catch (const std::exception &e) {
			o.fail(std::string("exception: ") + e.what());
		}
		failed += !o.pass;
		std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
		          << "): " << o.detail.str() << "\n";
		for (const auto &n : o.notes)
			std::cout << "    " << n << "\n";
	}
	std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
	return failed ? 1 : 0;
}
