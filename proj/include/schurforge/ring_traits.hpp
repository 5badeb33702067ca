#pragma once

#include "schurforge/error.hpp"
#include "schurforge/rational.hpp"

#include <string>

namespace schurforge {

// Coefficient-ring interface used by Series, Witt vectors and the universal
// polynomials. Specializations live next to each ring type.
template <class A>
struct RingTraits;

template <>
struct RingTraits<Rational>
{
	static Rational zero() { return Rational(0); }
	static Rational one() { return Rational(1); }
	static bool is_zero(Rational const &a) { return a.is_zero(); }
	static bool is_unit(Rational const &a) { return !a.is_zero(); }
	static Rational unit_inverse(Rational const &a) { return Rational(1) / a; }
	static Rational from_int(long n) { return Rational(n); }
	static Rational exact_div(Rational const &a, long d) { return a / Rational(d); }
	static std::string str(Rational const &a) { return a.str(); }
	static bool compound(Rational const &) { return false; }
};

template <>
struct RingTraits<BigInt>
{
	static BigInt zero() { return 0; }
	static BigInt one() { return 1; }
	static bool is_zero(BigInt const &a) { return sgn(a) == 0; }
	static bool is_unit(BigInt const &a) { return a == 1 || a == -1; }
	static BigInt unit_inverse(BigInt const &a) { return a; }
	static BigInt from_int(long n) { return n; }
	static BigInt exact_div(BigInt const &a, long d)
	{
		if (d == 0 || !mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d)))
			fail(ErrorKind::NonQAlgebra, to_string(a) + " is not divisible by " + std::to_string(d));
		BigInt r = a / d;
		return r;
	}
	static std::string str(BigInt const &a) { return to_string(a); }
	static bool compound(BigInt const &) { return false; }
};

} // namespace schurforge
