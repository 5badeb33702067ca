#include "schurforge/lambda.hpp"

namespace schurforge {

Series<BigInt> IntegerLambda::lambda_series(BigInt const &x, std::size_t order) const
{
	if (!x.fits_slong_p())
		fail(ErrorKind::BoundExceeded, "integer too large for a binomial series");
	long m = x.get_si();
	Series<BigInt> s(order);
	for (std::size_t k = 0; k <= order; ++k)
		s[k] = binomial(m, static_cast<long>(k));
	return s;
}

Series<Rational> RationalLambda::lambda_series(Rational const &x, std::size_t order) const
{
	Series<Rational> s(order);
	Rational c = 1;
	for (std::size_t k = 0; k <= order; ++k)
	{
		s[k] = c;
		c = c * (x - Rational(static_cast<long>(k))) / Rational(static_cast<long>(k + 1));
	}
	return s;
}

Series<LaurentZ> LaurentLambda::lambda_series(LaurentZ const &x, std::size_t order) const
{
	Series<LaurentZ> s = Series<LaurentZ>::one(order);
	for (auto const &[d, c] : x.terms())
	{
		if (!c.fits_slong_p())
			fail(ErrorKind::BoundExceeded, "multiplicity too large for a binomial series");
		long mult = c.get_si();
		Series<LaurentZ> factor(order);
		for (std::size_t k = 0; k <= order; ++k)
			factor[k] = LaurentZ::monomial(binomial(mult, static_cast<long>(k)), d * static_cast<int>(k));
		s = s * factor;
	}
	return s;
}

} // namespace schurforge
