#include "schurforge/rational.hpp"

#include "schurforge/error.hpp"
#include "text.hpp"

namespace schurforge {

std::string_view to_string(ErrorKind kind)
{
	switch (kind)
	{
	case ErrorKind::DivisionByZero: return "DivisionByZero";
	case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
	case ErrorKind::NonQAlgebra: return "NonQAlgebra";
	case ErrorKind::SizeMismatch: return "SizeMismatch";
	case ErrorKind::BoundExceeded: return "BoundExceeded";
	case ErrorKind::IncompleteClassFunction: return "IncompleteClassFunction";
	case ErrorKind::NotEndomorphism: return "NotEndomorphism";
	case ErrorKind::GroupMismatch: return "GroupMismatch";
	case ErrorKind::NotEquivariant: return "NotEquivariant";
	case ErrorKind::NotAComplex: return "NotAComplex";
	case ErrorKind::NotEffective: return "NotEffective";
	case ErrorKind::NonIntegral: return "NonIntegral";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	case ErrorKind::Parse: return "ParseError";
	}
	return "Error";
}

std::string to_string(BigInt const &x) { return x.get_str(); }

BigInt parse_bigint(std::string_view s)
{
	std::string t = text::strip(s);
	if (!t.empty() && t.front() == '+')
		t.erase(0, 1);
	BigInt r;
	if (t.empty() || r.set_str(t, 10) != 0)
		text::parse_error("expected an integer", s);
	return r;
}

BigInt factorial(int n)
{
	BigInt r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return r;
}

BigInt binomial(long n, long k)
{
	if (k < 0)
		return 0;
	BigInt r;
	if (n >= 0)
	{
		mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
		return r;
	}
	// C(n, k) = (-1)^k C(k - n - 1, k)
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
	return k % 2 ? BigInt(-r) : r;
}

Rational::Rational(BigInt const &num, BigInt const &den)
{
	if (den == 0)
		fail(ErrorKind::DivisionByZero, "zero denominator");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

Rational Rational::parse(std::string_view s)
{
	std::string t = text::remove_spaces(s);
	auto slash = t.find('/');
	if (slash == std::string::npos)
		return Rational(parse_bigint(t));
	return Rational(parse_bigint(t.substr(0, slash)), parse_bigint(t.substr(slash + 1)));
}

BigInt Rational::to_integer() const
{
	if (!is_integer())
		fail(ErrorKind::NonIntegral, str() + " is not an integer");
	return v_.get_num();
}

std::string Rational::str() const { return v_.get_str(); }

Rational &Rational::operator/=(Rational const &o)
{
	if (o.is_zero())
		fail(ErrorKind::DivisionByZero, "division by zero");
	v_ /= o.v_;
	return *this;
}

} // namespace schurforge
