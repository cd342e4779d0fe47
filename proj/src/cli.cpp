// SPDX-License-Identifier: Apache-2.0
#include "casson3/cli.hpp"

#include "casson3/casson.hpp"
#include "casson3/errors.hpp"
#include "casson3/fit.hpp"
#include "casson3/flat_moduli.hpp"
#include "casson3/floer_sim.hpp"
#include "casson3/knot_poly.hpp"
#include "casson3/serialize.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

namespace casson3::cli {

namespace {

/// Invalid flag value; reported with exit status 2.
class UsageError : public std::runtime_error {
public:
	UsageError(const std::string &flag, const std::string &what) : std::runtime_error(flag + ": " + what) {}
};

/// f(0..n-1) on up to thread_count() workers; results in index order.
template <class F> auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))>
{
	using R = decltype(f(std::size_t{}));
	std::vector<std::optional<R>> slots(n);
	std::vector<std::exception_ptr> errors(n);
	std::atomic<std::size_t> next{0};
	auto worker = [&] {
		for (std::size_t i; (i = next.fetch_add(1)) < n;) {
			try {
				slots[i].emplace(f(i));
			} catch (...) {
				errors[i] = std::current_exception();
			}
		}
	};
	const std::size_t workers = std::min<std::size_t>(thread_count(), n);
	std::vector<std::thread> pool;
	for (std::size_t w = 1; w < workers; ++w)
		pool.emplace_back(worker);
	worker();
	for (auto &t : pool)
		t.join();
	std::vector<R> out;
	out.reserve(n);
	for (std::size_t i = 0; i < n; ++i) {
		if (errors[i])
			std::rethrow_exception(errors[i]);
		out.push_back(std::move(*slots[i]));
	}
	return out;
}

void check_q(long long q, const std::string &flag)
{
	if (q < 3 || q % 2 == 0)
		throw UsageError(flag, "q must be odd and >= 3, got " + std::to_string(q));
}

void check_K(long long K, const std::string &flag)
{
	if (K == 0)
		throw UsageError(flag, "K = 0 is not a valid surgery");
}

std::vector<long long> parse_q_list(const std::string &text, const std::string &flag)
{
	std::vector<long long> out;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t comma = text.find(',', pos);
		std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
		try {
			std::size_t used = 0;
			long long q = std::stoll(item, &used);
			if (used != item.size())
				throw std::invalid_argument(item);
			check_q(q, flag);
			out.push_back(q);
		} catch (const std::logic_error &) {
			throw UsageError(flag, "bad list entry '" + item + "'");
		}
		if (comma == std::string::npos)
			break;
		pos = comma + 1;
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::vector<long long> K_values(const std::string &range, const std::string &flag)
{
	std::pair<long long, long long> r;
	try {
		r = parse_range(range);
	} catch (const std::invalid_argument &e) {
		throw UsageError(flag, e.what());
	}
	std::vector<long long> out;
	for (long long K = r.first; K <= r.second; ++K)
		if (K != 0)
			out.push_back(K);
	if (out.empty())
		throw UsageError(flag, "range contains no nonzero K");
	return out;
}

struct Cell {
	long long q;
	long long K;
};

std::vector<Cell> grid(const std::vector<long long> &qs, const std::vector<long long> &Ks)
{
	std::vector<Cell> cells;
	for (long long q : qs)
		for (long long K : Ks)
			cells.push_back({q, K});
	return cells;
}

/// Plain table writer for csv and markdown.
class Table {
public:
	explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
	void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

	void write_csv(std::ostream &os) const
	{
		write_csv_row(os, header_);
		for (const auto &r : rows_)
			write_csv_row(os, r);
	}

	void write_markdown(std::ostream &os) const
	{
		write_md_row(os, header_);
		os << "|";
		for (std::size_t i = 0; i < header_.size(); ++i)
			os << "---|";
		os << "\n";
		for (const auto &r : rows_)
			write_md_row(os, r);
	}

private:
	static void write_csv_row(std::ostream &os, const std::vector<std::string> &r)
	{
		for (std::size_t i = 0; i < r.size(); ++i)
			os << (i ? "," : "") << r[i];
		os << "\n";
	}
	static void write_md_row(std::ostream &os, const std::vector<std::string> &r)
	{
		os << "|";
		for (const auto &c : r)
			os << " " << c << " |";
		os << "\n";
	}

	std::vector<std::string> header_;
	std::vector<std::vector<std::string>> rows_;
};

std::string b2s(bool b) { return b ? "true" : "false"; }

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << "\n"; }

// Subcommand bodies. Each returns an exit status.

struct RepsOpts {
	long long q = 0, K = 0;
	std::string format = "csv";
};

int cmd_reps(const RepsOpts &o, std::ostream &out)
{
	check_q(o.q, "--q");
	check_K(o.K, "--K");
	const auto conns = enumerate_connections(from_surgery(o.q, o.K));
	if (o.format == "json") {
		Json j = document("reps");
		j["q"] = o.q;
		j["K"] = o.K;
		j["sphere"] = to_json(from_surgery(o.q, o.K));
		j["count"] = conns.size();
		Json rows = Json::array();
		for (const auto &c : conns)
			rows.push_back(to_json(c));
		j["connections"] = rows;
		emit(out, j);
		return kExitOk;
	}
	Table t({"q", "K", "L1", "L2", "L3", "t", "e"});
	for (const auto &c : conns)
		t.add({std::to_string(o.q), std::to_string(o.K), std::to_string(c.L[0]), std::to_string(c.L[1]),
		       std::to_string(c.L[2]), std::to_string(c.t_index), std::to_string(c.e)});
	t.write_csv(out);
	return kExitOk;
}

struct RhoOpts {
	long long q = 0, K = 0;
	bool per_connection = false;
	std::string path = "float";
	std::string format = "csv";
};

int cmd_rho(const RhoOpts &o, std::ostream &out)
{
	check_q(o.q, "--q");
	check_K(o.K, "--K");
	const RhoPath path = parse_rho_path(o.path);
	const BrieskornSphere X = from_surgery(o.q, o.K);
	const auto values = rho_all(X, path);
	Rational sum(0);
	for (const auto &v : values)
		sum = sum + v.exact;
	const Rational C = Rational(-X.epsilon(), 8) * sum;

	if (o.format == "json") {
		Json j = document("rho");
		j["q"] = o.q;
		j["K"] = o.K;
		j["path"] = o.path;
		j["convention"] = kRhoConvention.str();
		j["rho_sum"] = to_json(sum);
		j["C"] = to_json(C);
		if (o.per_connection) {
			Json rows = Json::array();
			for (const auto &v : values)
				rows.push_back(to_json(v));
			j["connections"] = rows;
		}
		emit(out, j);
		return kExitOk;
	}
	if (o.per_connection) {
		Table t({"q", "K", "L1", "L2", "L3", "t", "e", "rho", "rho_float", "path", "escalated"});
		for (const auto &v : values) {
			const auto &c = v.connection;
			t.add({std::to_string(o.q), std::to_string(o.K), std::to_string(c.L[0]), std::to_string(c.L[1]),
			       std::to_string(c.L[2]), std::to_string(c.t_index), std::to_string(c.e), v.exact.str(),
			       format_double(v.float_check.value), to_string(v.path_used), b2s(v.escalated)});
		}
		t.write_csv(out);
		return kExitOk;
	}
	Table t({"q", "K", "connections", "rho_sum", "C"});
	t.add({std::to_string(o.q), std::to_string(o.K), std::to_string(values.size()), sum.str(), C.str()});
	t.write_csv(out);
	return kExitOk;
}

struct InvariantsOpts {
	std::string q_list;
	std::string K_range;
	std::string path = "float";
	std::string format = "csv";
};

int cmd_invariants(const InvariantsOpts &o, std::ostream &out)
{
	const auto qs = parse_q_list(o.q_list, "--q");
	const auto Ks = K_values(o.K_range, "--K-range");
	const RhoPath path = parse_rho_path(o.path);
	for (long long q : qs)
		ClosedFormTable::standard().row(q);
	const auto cells = grid(qs, Ks);
	const auto reports = parallel_map(cells.size(), [&](std::size_t i) { return assemble(cells[i].q, cells[i].K, path); });

	if (o.format == "json") {
		Json j = document("invariants");
		Json rows = Json::array();
		for (const auto &r : reports)
			rows.push_back(to_json(r));
		j["rows"] = rows;
		emit(out, j);
		return kExitOk;
	}
	Table t({"q", "K", "A", "B", "C", "D", "lambda_su2", "lambda_su3", "Lambda_su3", "four_Lambda_integral"});
	for (const auto &r : reports)
		t.add({std::to_string(r.q), std::to_string(r.K), r.A.str(), r.B.str(), r.C.str(), r.D.str(), r.lambda_su2.str(),
		       r.lambda_su3.str(), r.Lambda_su3.str(), b2s(r.four_lambda_integral())});
	if (o.format == "markdown-table")
		t.write_markdown(out);
	else
		t.write_csv(out);
	return kExitOk;
}

struct TableOpts {
	std::string q_list = "3,5,7,9";
	std::string K_range = "-6..6";
	std::string format = "markdown-table";
};

int cmd_table(const TableOpts &o, std::ostream &out)
{
	const auto qs = parse_q_list(o.q_list, "--q-list");
	const auto Ks = K_values(o.K_range, "--K-range");
	const auto &table = ClosedFormTable::standard();
	for (long long q : qs)
		table.row(q);
	const auto cells = grid(qs, Ks);
	const auto reports = parallel_map(cells.size(), [&](std::size_t i) { return assemble(cells[i].q, cells[i].K); });

	Table t({"q", "K", "Lambda", "Lambda_table", "C", "C_table", "status"});
	Json rows = Json::array();
	bool mismatch = false;
	for (const auto &r : reports) {
		const ClosedFormRow &row = table.row(r.q);
		const Rational K(r.K);
		const Rational lam_tab = row.Lambda(r.K)(K);
		const Rational c_printed = row.C_as_printed(r.K)(K);
		const Rational c_corrected = row.C(r.K)(K);
		std::string status;
		if (r.Lambda_su3 == lam_tab && r.C == c_printed)
			status = "MATCH";
		else if (r.Lambda_su3 == lam_tab && r.C == c_corrected)
			status = "ERRATUM";
		else
			status = "MISMATCH";
		mismatch = mismatch || status == "MISMATCH";
		t.add({std::to_string(r.q), std::to_string(r.K), r.Lambda_su3.str(), lam_tab.str(), r.C.str(), c_printed.str(),
		       status});
		rows.push_back(Json{{"q", r.q},
		                    {"K", r.K},
		                    {"Lambda", to_json(r.Lambda_su3)},
		                    {"Lambda_table", to_json(lam_tab)},
		                    {"C", to_json(r.C)},
		                    {"C_table", to_json(c_printed)},
		                    {"C_corrected", to_json(c_corrected)},
		                    {"status", status}});
	}
	if (o.format == "json") {
		Json j = document("table");
		j["rows"] = rows;
		j["mismatch"] = mismatch;
		emit(out, j);
	} else if (o.format == "csv") {
		t.write_csv(out);
	} else {
		t.write_markdown(out);
	}
	return mismatch ? kExitMismatch : kExitOk;
}

struct FitOpts {
	long long q = 0;
	std::string sign = "+";
	std::string target = "Lambda";
	int degree = 2;
	int samples = 6;
	std::string format = "text";
};

/// Factor that makes the target polynomial in K: 4q(2qK - 1) for C and B.
Rational fit_scale(const std::string &target, long long q, long long K)
{
	if (target == "C" || target == "B")
		return Rational(4 * q * (2 * q * K - 1));
	return Rational(1);
}

int cmd_fit(const FitOpts &o, std::ostream &out)
{
	check_q(o.q, "--q");
	ClosedFormTable::standard().row(o.q);
	if (o.degree < 0)
		throw UsageError("--degree", "must be non-negative");
	if (o.samples < o.degree + 1)
		throw UsageError("--samples", "need at least degree + 1 samples");
	const int sgn = o.sign == "+" ? 1 : -1;
	std::vector<long long> Ks;
	for (long long k = 1; k <= o.samples; ++k)
		Ks.push_back(sgn * k);

	const auto &table = ClosedFormTable::standard();
	const auto vals = parallel_map(Ks.size(), [&](std::size_t i) {
		const long long K = Ks[i];
		Rational v;
		if (o.target == "A")
			v = table.A(o.q, K);
		else if (o.target == "B")
			v = table.B(o.q, K);
		else if (o.target == "C")
			v = c_correction(from_surgery(o.q, K));
		else
			v = assemble(o.q, K).Lambda_su3;
		return fit_scale(o.target, o.q, K) * v;
	});
	std::map<long long, Rational> samples;
	for (std::size_t i = 0; i < Ks.size(); ++i)
		samples[Ks[i]] = vals[i];
	const RationalPoly P = fit_and_verify(samples, o.degree, static_cast<std::size_t>(o.samples - o.degree - 1));

	const std::string scale = (o.target == "C" || o.target == "B")
	                              ? "4*" + std::to_string(o.q) + "*(" + std::to_string(2 * o.q) + "*K - 1)"
	                              : "1";
	if (o.format == "json") {
		Json j = document("fit");
		j["q"] = o.q;
		j["sign"] = o.sign;
		j["target"] = o.target;
		j["scale"] = scale;
		j["degree"] = o.degree;
		j["samples"] = o.samples;
		j["check_points"] = o.samples - o.degree - 1;
		j["polynomial"] = to_json(P);
		emit(out, j);
		return kExitOk;
	}
	out << "q=" << o.q << " sign=" << o.sign << " target=" << o.target << " scale=" << scale << "\n";
	out << "fit: " << P.str() << "\n";
	out << "verified at " << (o.samples - o.degree - 1) << " extra points\n";
	return kExitOk;
}

struct ConjectureOpts {
	std::string q_list = "3,5,7,9";
	std::string format = "json";
};

ConjectureReport conjecture_for(long long q)
{
	std::map<long long, Rational> plus, minus;
	for (long long k = 1; k <= 6; ++k) {
		plus[k] = assemble(q, k).Lambda_su3;
		minus[-k] = assemble(q, -k).Lambda_su3;
	}
	return check_conjecture(q, fit_and_verify(plus, 2, 3), fit_and_verify(minus, 2, 3));
}

int cmd_conjecture(const ConjectureOpts &o, std::ostream &out)
{
	const auto qs = parse_q_list(o.q_list, "--q-list");
	for (long long q : qs)
		ClosedFormTable::standard().row(q);
	const auto reports = parallel_map(qs.size(), [&](std::size_t i) { return conjecture_for(qs[i]); });
	if (o.format == "markdown") {
		Table t({"q", "P_plus", "P_minus", "P_plus - P_minus", "N", "reps per k", "D''(1)", "quarter-N law",
		         "printed form", "printed factor"});
		for (const auto &r : reports)
			t.add({std::to_string(r.q), r.P_plus.str(), r.P_minus.str(), r.difference.str(), std::to_string(r.N),
			       std::to_string(r.rep_count_per_k), r.alexander_second_derivative.str(),
			       b2s(r.difference_matches_quarter_N), r.printed_form_consistent ? "consistent" : "FLAGGED",
			       r.printed_factor.str()});
		t.write_markdown(out);
		for (const auto &r : reports)
			out << "\nq=" << r.q << ": " << r.note << "\n";
		return kExitOk;
	}
	Json j = document("conjecture");
	Json rows = Json::array();
	for (const auto &r : reports)
		rows.push_back(to_json(r));
	j["reports"] = rows;
	emit(out, j);
	return kExitOk;
}

struct FloerSimOpts {
	std::uint64_t seed = 0;
	std::size_t moves = 100;
	std::size_t max_dim = 6;
};

int cmd_floer_sim(const FloerSimOpts &o, std::ostream &out)
{
	if (o.max_dim < 1)
		throw UsageError("--max-dim", "must be positive");
	const Transcript t = simulate({o.seed, o.moves, o.max_dim});
	Json j = document("floer-sim");
	j.update(to_json(t));
	emit(out, j);
	return t.consistent() ? kExitOk : kExitComputation;
}

} // namespace

unsigned thread_count()
{
	if (const char *env = std::getenv("CASSON3_THREADS")) {
		char *end = nullptr;
		long n = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && n > 0)
			return static_cast<unsigned>(n);
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

std::pair<long long, long long> parse_range(const std::string &text)
{
	const auto dots = text.find("..");
	if (dots == std::string::npos)
		throw std::invalid_argument("expected a..b, got '" + text + "'");
	try {
		std::size_t u1 = 0, u2 = 0;
		const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
		long long a = std::stoll(lo, &u1), b = std::stoll(hi, &u2);
		if (u1 != lo.size() || u2 != hi.size())
			throw std::invalid_argument(text);
		if (a > b)
			throw std::invalid_argument("empty range '" + text + "'");
		return {a, b};
	} catch (const std::out_of_range &) {
		throw std::invalid_argument("range bound out of range in '" + text + "'");
	} catch (const std::invalid_argument &e) {
		throw std::invalid_argument(std::string("expected a..b, got '") + text + "'");
	}
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Perturbative SU(3) Casson invariants of 1/K surgeries on (2,q) torus knots", "casson3"};
	app.require_subcommand(1);
	bool verbose = false;
	app.add_flag("-v,--verbose", verbose, "Diagnostics on stderr");

	RepsOpts reps;
	auto *s_reps = app.add_subcommand("reps", "Irreducible flat SU(2) connections");
	s_reps->add_option("--q", reps.q, "Odd q >= 3")->required();
	s_reps->add_option("--K", reps.K, "Nonzero surgery coefficient")->required();
	s_reps->add_option("--format", reps.format)->check(CLI::IsMember({"csv", "json"}));

	RhoOpts rho;
	auto *s_rho = app.add_subcommand("rho", "Adjoint rho-invariants and C(q,K)");
	s_rho->add_option("--q", rho.q)->required();
	s_rho->add_option("--K", rho.K)->required();
	s_rho->add_flag("--per-connection", rho.per_connection);
	s_rho->add_option("--path", rho.path)->check(CLI::IsMember({"float", "exact", "lattice"}));
	s_rho->add_option("--format", rho.format)->check(CLI::IsMember({"csv", "json"}));

	InvariantsOpts inv;
	auto *s_inv = app.add_subcommand("invariants", "A, B, C, D and Lambda over a K range");
	s_inv->add_option("--q", inv.q_list, "q or comma-separated list")->required();
	s_inv->add_option("--K-range", inv.K_range, "a..b, zero skipped")->required();
	s_inv->add_option("--path", inv.path)->check(CLI::IsMember({"float", "exact", "lattice"}));
	s_inv->add_option("--format", inv.format)->check(CLI::IsMember({"csv", "json", "markdown-table"}));

	TableOpts tab;
	auto *s_tab = app.add_subcommand("table", "Computed Lambda and C against the closed forms");
	s_tab->add_option("--q-list", tab.q_list);
	s_tab->add_option("--K-range", tab.K_range);
	s_tab->add_option("--format", tab.format)->check(CLI::IsMember({"csv", "json", "markdown-table"}));

	FitOpts fit;
	auto *s_fit = app.add_subcommand("fit", "Exact polynomial fit with check points");
	s_fit->add_option("--q", fit.q)->required();
	s_fit->add_option("--sign", fit.sign)->check(CLI::IsMember({"+", "-"}));
	s_fit->add_option("--target", fit.target)->check(CLI::IsMember({"Lambda", "C", "A", "B"}));
	s_fit->add_option("--degree", fit.degree);
	s_fit->add_option("--samples", fit.samples);
	s_fit->add_option("--format", fit.format)->check(CLI::IsMember({"text", "json"}));

	ConjectureOpts conj;
	auto *s_conj = app.add_subcommand("conjecture", "Compare fitted branches with the surgery conjecture");
	s_conj->add_option("--q-list", conj.q_list);
	s_conj->add_option("--format", conj.format)->check(CLI::IsMember({"json", "markdown"}));

	FloerSimOpts sim;
	auto *s_sim = app.add_subcommand("floer-sim", "Random walk through the Floer move calculus");
	s_sim->add_option("--seed", sim.seed);
	s_sim->add_option("--moves", sim.moves);
	s_sim->add_option("--max-dim", sim.max_dim);

	std::vector<std::string> argv(args.rbegin(), args.rend());
	try {
		app.parse(argv);
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::CallForAllHelp &) {
		out << app.help("", CLI::AppFormatMode::All);
		return kExitOk;
	} catch (const CLI::ParseError &e) {
		err << "usage error: " << e.what() << "\n";
		return kExitUsage;
	}

	if (verbose)
		err << "threads: " << thread_count() << "\n";
	try {
		if (*s_reps)
			return cmd_reps(reps, out);
		if (*s_rho)
			return cmd_rho(rho, out);
		if (*s_inv)
			return cmd_invariants(inv, out);
		if (*s_tab)
			return cmd_table(tab, out);
		if (*s_fit)
			return cmd_fit(fit, out);
		if (*s_conj)
			return cmd_conjecture(conj, out);
		if (*s_sim)
			return cmd_floer_sim(sim, out);
	} catch (const UsageError &e) {
		err << "usage error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const MissingClosedForm &e) {
		err << "usage error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const std::exception &e) {
		err << "error: " << e.what() << "\n";
		return kExitComputation;
	}
	return kExitUsage;
}

} // namespace casson3::cli
