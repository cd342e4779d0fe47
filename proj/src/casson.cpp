// SPDX-License-Identifier: Apache-2.0
#include "casson3/casson.hpp"

#include "casson3/errors.hpp"
#include "casson3/floer.hpp"

namespace casson3 {

Rational lambda_su2(long long q, long long K)
{
	if (q < 3 || q % 2 == 0)
		throw InvalidSurgery("q must be odd and >= 3");
	if (K == 0)
		throw InvalidSurgery("K = 0 is not a valid surgery");
	return Rational(K * (q * q - 1), 4);
}

InvariantReport assemble(const BrieskornSphere &X, RhoPath path)
{
	if (!X.surgery())
		throw UnsupportedFamily("assembly needs a sphere from 1/K surgery on T(2,q)");
	const auto [q, K] = *X.surgery();
	const ClosedFormRow &row = ClosedFormTable::standard().row(q);

	InvariantReport r;
	r.q = q;
	r.K = K;
	r.orientation = X.orientation();
	r.A = row.A(Rational(K));
	r.B = row.B(Rational(K));
	r.C = c_correction(X, path);
	r.floer = floer_correction(build_floer_complex(X));
	r.D = Rational(-r.floer, 4);
	r.lambda_su2 = lambda_su2(q, K);
	r.lambda_su3 = r.A + r.B;
	r.Lambda_su3 = r.A + r.B + r.C + r.D;
	return r;
}

InvariantReport assemble(long long q, long long K, RhoPath path)
{
	ClosedFormTable::standard().row(q);
	return assemble(from_surgery(q, K), path);
}

Rational lambda_su3_bh(long long q, long long K)
{
	const auto &table = ClosedFormTable::standard();
	if (K == 0)
		throw InvalidSurgery("K = 0 is not a valid surgery");
	return table.A(q, K) + table.B(q, K);
}

Rational connect_sum_Lambda(const SummandData &x1, const SummandData &x2, long long floer_sum)
{
	return x1.Lambda + x2.Lambda + Rational(9, 2) * x1.su2 * x2.su2 -
	       Rational(1, 4) * Rational(floer_sum - x1.floer - x2.floer);
}

Rational connect_sum_lambda_bh(const Rational &lambda1, const Rational &su2_1, const Rational &lambda2,
                               const Rational &su2_2)
{
	return lambda1 + lambda2 + Rational(4) * su2_1 * su2_2;
}

} // namespace casson3
