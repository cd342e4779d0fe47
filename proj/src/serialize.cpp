// SPDX-License-Identifier: Apache-2.0
#include "casson3/serialize.hpp"

#include <array>
#include <charconv>

namespace casson3 {

Json document(const std::string &command)
{
	Json j;
	j["schema"] = kSchema;
	j["command"] = command;
	return j;
}

std::string format_double(double x)
{
	std::array<char, 64> buf{};
	auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
	return std::string(buf.data(), res.ptr);
}

Json to_json(const Rational &r) { return r.str(); }

Json to_json(const RationalPoly &p)
{
	Json coeffs = Json::array();
	for (const auto &c : p.coefficients())
		coeffs.push_back(c.str());
	return Json{{"expression", p.str()}, {"coefficients", coeffs}};
}

Json to_json(const LaurentPoly &p)
{
	Json terms = Json::array();
	for (const auto &[n, c] : p.terms())
		terms.push_back(Json{{"power", n}, {"coefficient", c.str()}});
	return Json{{"expression", p.str()}, {"terms", terms}};
}

Json to_json(const BrieskornSphere &X)
{
	Json j{{"a", X.a()}, {"b0", X.b0()}, {"b", X.b()}, {"orientation", X.orientation()}};
	if (X.surgery())
		j["surgery"] = Json{{"q", X.surgery()->q}, {"K", X.surgery()->K}};
	return j;
}

Json to_json(const FlatConnection &c)
{
	return Json{{"L", c.L}, {"t", c.t_index}, {"e", c.e}, {"e_raw", c.e_raw}};
}

Json to_json(const RhoValue &v)
{
	Json j = to_json(v.connection);
	j["rho"] = to_json(v.exact);
	j["rho_float"] = format_double(v.float_check.value);
	j["rho_float_error_bound"] = format_double(v.float_check.error_bound);
	j["path"] = to_string(v.path_used);
	j["escalated"] = v.escalated;
	return j;
}

Json to_json(const InvariantReport &r)
{
	return Json{{"q", r.q},
	            {"K", r.K},
	            {"A", to_json(r.A)},
	            {"B", to_json(r.B)},
	            {"C", to_json(r.C)},
	            {"D", to_json(r.D)},
	            {"floer", r.floer},
	            {"lambda_su2", to_json(r.lambda_su2)},
	            {"lambda_su3", to_json(r.lambda_su3)},
	            {"Lambda_su3", to_json(r.Lambda_su3)},
	            {"four_Lambda_integral", r.four_lambda_integral()}};
}

Json to_json(const ConjectureReport &r)
{
	return Json{{"q", r.q},
	            {"P_plus", to_json(r.P_plus)},
	            {"P_minus", to_json(r.P_minus)},
	            {"difference", to_json(r.difference)},
	            {"N", r.N},
	            {"rep_count_per_k", r.rep_count_per_k},
	            {"alexander", to_json(alexander_torus(2, r.q))},
	            {"alexander_second_derivative", to_json(r.alexander_second_derivative)},
	            {"difference_matches_quarter_N", r.difference_matches_quarter_N},
	            {"N_matches_rep_count", r.N_matches_rep_count},
	            {"N_matches_abs_alexander", r.N_matches_abs_alexander},
	            {"observed_slope", to_json(r.observed_slope)},
	            {"printed_slope", to_json(r.printed_slope)},
	            {"printed_slope_asserted_sign", to_json(r.printed_slope_asserted_sign)},
	            {"printed_factor", to_json(r.printed_factor)},
	            {"printed_form_consistent", r.printed_form_consistent},
	            {"note", r.note}};
}

Json to_json(const MorseMove &m)
{
	Json j{{"kind", to_string(m.kind)}};
	switch (m.kind) {
	case MorseMove::Kind::Isotopy:
		break;
	case MorseMove::Kind::HandleSlide:
		j["p"] = m.p;
		j["target"] = m.target;
		j["source"] = m.source;
		break;
	case MorseMove::Kind::Birth:
		j["p"] = m.p;
		break;
	case MorseMove::Kind::Death:
		j["p"] = m.p;
		j["upper"] = m.upper;
		j["lower"] = m.lower;
		break;
	}
	return j;
}

Json to_json(const Transcript &t)
{
	Json j;
	j["seed"] = t.config.seed;
	j["moves"] = t.config.moves;
	j["max_dim"] = t.config.max_dim;
	j["initial_dims"] = t.initial.dims();
	j["initial_homology"] = t.initial.homology_ranks();
	j["initial_correction"] = floer_correction(t.initial);
	Json records = Json::array();
	for (std::size_t i = 0; i < t.records.size(); ++i) {
		const MoveRecord &r = t.records[i];
		records.push_back(Json{{"index", i},
		                       {"move", to_json(r.move)},
		                       {"correction_before", r.correction_before},
		                       {"correction_after", r.correction_after},
		                       {"delta", r.delta()},
		                       {"expected_delta", r.move.expected_correction_delta()},
		                       {"consistent", r.consistent()}});
	}
	j["records"] = records;
	j["consistent"] = t.consistent();
	return j;
}

} // namespace casson3
