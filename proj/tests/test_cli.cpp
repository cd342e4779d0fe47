// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "casson3/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

using casson3::cli::run;
using nlohmann::json;

namespace {

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result call(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s)
{
	std::vector<std::string> v;
	std::istringstream is(s);
	for (std::string l; std::getline(is, l);)
		v.push_back(l);
	return v;
}

} // namespace

TEST_CASE("invariants over a K range skip zero")
{
	auto r = call({"invariants", "--q", "3", "--K-range", "-3..3"});
	CHECK(r.code == 0);
	auto ls = lines(r.out);
	REQUIRE(ls.size() == 7);
	CHECK(ls[0] == "q,K,A,B,C,D,lambda_su2,lambda_su3,Lambda_su3,four_Lambda_integral");
	CHECK(ls[4] == "3,1,2,-19/6,17/12,0,2,-7/6,1/4,true");
	CHECK(ls[3] == "3,-1,4,73/42,-41/84,0,-2,241/42,21/4,true");
	for (std::size_t i = 1; i < ls.size(); ++i)
		CHECK(ls[i].substr(ls[i].size() - 4) == "true");
}

TEST_CASE("invariants formats")
{
	auto j = json::parse(call({"invariants", "--q", "3,5", "--K-range", "1..2", "--format", "json"}).out);
	CHECK(j["schema"] == "casson3/1");
	REQUIRE(j["rows"].size() == 4);
	CHECK(j["rows"][0]["Lambda_su3"] == "1/4");
	CHECK(j["rows"][2]["Lambda_su3"] == "47/4");
	auto md = call({"invariants", "--q", "3", "--K-range", "1..1", "--format", "markdown-table"});
	CHECK(lines(md.out).size() == 3);
	CHECK(md.out.rfind("| q | K |", 0) == 0);
}

TEST_CASE("reps csv")
{
	auto r = call({"reps", "--q", "3", "--K", "1", "--format", "csv"});
	CHECK(r.code == 0);
	CHECK(r.out == "q,K,L1,L2,L3,t,e\n3,1,1,1,1,1,31\n3,1,1,1,3,2,43\n");
	auto j = json::parse(call({"reps", "--q", "5", "--K=-2", "--format", "json"}).out);
	CHECK(j["count"] == 12);
	CHECK(j["sphere"]["a"] == json::array({2, 5, 21}));
}

TEST_CASE("rho subcommand")
{
	auto r = call({"rho", "--q", "3", "--K", "1"});
	CHECK(r.code == 0);
	CHECK(lines(r.out)[1] == "3,1,2,34/3,17/12");
	for (const char *path : {"float", "exact", "lattice"}) {
		auto j = json::parse(call({"rho", "--q", "5", "--K", "1", "--path", path, "--per-connection", "--format", "json"}).out);
		CHECK(j["rho_sum"] == "2266/45");
		CHECK(j["C"] == "1133/180");
		CHECK(j["connections"].size() == 6);
	}
}

TEST_CASE("table reports errata without mismatches")
{
	auto r = call({"table", "--format", "csv"});
	CHECK(r.code == 0);
	auto ls = lines(r.out);
	REQUIRE(ls.size() == 49);
	int match = 0, erratum = 0, mismatch = 0;
	for (std::size_t i = 1; i < ls.size(); ++i) {
		match += ls[i].ends_with(",MATCH");
		erratum += ls[i].ends_with(",ERRATUM");
		mismatch += ls[i].ends_with(",MISMATCH");
	}
	CHECK(match == 42);
	CHECK(erratum == 6);
	CHECK(mismatch == 0);
}

TEST_CASE("fit subcommand")
{
	auto r = call({"fit", "--q", "3", "--sign", "+", "--target", "Lambda", "--degree", "2", "--samples", "6"});
	CHECK(r.code == 0);
	CHECK(r.out.find("fit: 5/2*K^2 - 9/4*K") != std::string::npos);
	auto c = json::parse(call({"fit", "--q", "3", "--target", "C", "--degree", "3", "--samples", "6", "--format", "json"}).out);
	CHECK(c["polynomial"]["coefficients"] == json::array({"0", "-11", "84", "12"}));
	auto a = call({"fit", "--q", "5", "--sign", "-", "--target", "A", "--degree", "2", "--samples", "5"});
	CHECK(a.out.find("fit: 33*K^2 - 9*K") != std::string::npos);
	auto bad = call({"fit", "--q", "3", "--degree", "1", "--samples", "6"});
	CHECK(bad.code == 1);
	CHECK(bad.err.find("degree-1") != std::string::npos);
}

TEST_CASE("conjecture subcommand")
{
	auto j = json::parse(call({"conjecture", "--q-list", "3,7"}).out);
	REQUIRE(j["reports"].size() == 2);
	CHECK(j["reports"][0]["difference"]["expression"] == "1/2*K");
	CHECK(j["reports"][0]["difference_matches_quarter_N"] == true);
	CHECK(j["reports"][0]["printed_form_consistent"] == false);
	CHECK(j["reports"][1]["N"] == 12);
	CHECK(j["reports"][1]["rep_count_per_k"] == 12);
}

TEST_CASE("floer-sim transcript")
{
	auto r = call({"floer-sim", "--seed", "7", "--moves", "100"});
	CHECK(r.code == 0);
	auto j = json::parse(r.out);
	CHECK(j["schema"] == "casson3/1");
	REQUIRE(j["records"].size() == 100);
	for (const auto &rec : j["records"]) {
		const long long d = rec["delta"];
		CHECK((d == 0 || d == 1 || d == -1));
		CHECK(d == rec["correction_after"].get<long long>() - rec["correction_before"].get<long long>());
		const std::string kind = rec["move"]["kind"];
		if (kind == "isotopy" || kind == "handle_slide") {
			CHECK(d == 0);
		} else {
			const int p = rec["move"]["p"];
			const long long s = p % 2 ? -1 : 1;
			CHECK(d == (kind == "birth" ? s : -s));
		}
	}
	CHECK(call({"floer-sim", "--seed", "7", "--moves", "100"}).out == r.out);
}

TEST_CASE("output does not depend on the worker count")
{
	setenv("CASSON3_THREADS", "1", 1);
	CHECK(casson3::cli::thread_count() == 1);
	auto one = call({"table", "--format", "json"});
	setenv("CASSON3_THREADS", "4", 1);
	CHECK(casson3::cli::thread_count() == 4);
	auto four = call({"table", "--format", "json"});
	auto again = call({"table", "--format", "json"});
	unsetenv("CASSON3_THREADS");
	CHECK(one.out == four.out);
	CHECK(four.out == again.out);
}

TEST_CASE("usage errors exit with 2 and name the flag")
{
	auto q = call({"reps", "--q", "4", "--K", "1"});
	CHECK(q.code == 2);
	CHECK(q.err.find("--q") != std::string::npos);
	auto k = call({"reps", "--q", "3", "--K", "0"});
	CHECK(k.code == 2);
	CHECK(k.err.find("--K") != std::string::npos);
	auto range = call({"invariants", "--q", "3", "--K-range", "3..1"});
	CHECK(range.code == 2);
	CHECK(range.err.find("--K-range") != std::string::npos);
	CHECK(call({"invariants", "--q", "11", "--K-range", "1..2"}).code == 2);
	CHECK(call({"rho", "--q", "3", "--K", "1", "--path", "fast"}).code == 2);
	CHECK(call({"bogus"}).code == 2);
	CHECK(call({}).code == 2);
	CHECK(call({"--help"}).code == 0);
}

TEST_CASE("range parsing")
{
	CHECK(casson3::cli::parse_range("-3..3") == std::pair<long long, long long>{-3, 3});
	CHECK(casson3::cli::parse_range("1..1") == std::pair<long long, long long>{1, 1});
	CHECK_THROWS(casson3::cli::parse_range("1-3"));
	CHECK_THROWS(casson3::cli::parse_range("a..3"));
	CHECK_THROWS(casson3::cli::parse_range("4..3"));
}
