#pragma once

#include "schurforge/rational.hpp"
#include "schurforge/ring_traits.hpp"

#include <map>
#include <string>
#include <string_view>

namespace schurforge {

/// Laurent polynomial in q with integer coefficients. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class LaurentZ
{
  public:
	LaurentZ() = default;
	LaurentZ(long c) { add_term(0, c); }
	LaurentZ(BigInt const &c) { add_term(0, c); }

	static LaurentZ monomial(BigInt const &coeff, int exponent);
	static LaurentZ q(int exponent = 1) { return monomial(1, exponent); }
	static LaurentZ parse(std::string_view text);

	std::map<int, BigInt> const &terms() const { return terms_; }
	BigInt coeff(int exponent) const;
	bool is_zero() const { return terms_.empty(); }
	/// A unit of Z[q, q^-1] is exactly a monomial with coefficient +-1.
	bool is_unit() const;
	LaurentZ unit_inverse() const;
	int min_exponent() const;
	int max_exponent() const;

	/// Value at q = 1.
	BigInt at_one() const;
	/// q -> q^k, the Adams operation of the line-decomposition lambda structure.
	LaurentZ substitute_power(int k) const;
	LaurentZ exact_div(long d) const;

	void add_term(int exponent, BigInt const &coeff);
	std::string str() const;

	LaurentZ operator-() const;
	LaurentZ &operator+=(LaurentZ const &o);
	LaurentZ &operator-=(LaurentZ const &o);
	LaurentZ &operator*=(LaurentZ const &o);
	friend LaurentZ operator+(LaurentZ a, LaurentZ const &b) { return a += b; }
	friend LaurentZ operator-(LaurentZ a, LaurentZ const &b) { return a -= b; }
	friend LaurentZ operator*(LaurentZ const &a, LaurentZ const &b);
	friend bool operator==(LaurentZ const &a, LaurentZ const &b) = default;

  private:
	std::map<int, BigInt> terms_;
};

LaurentZ pow(LaurentZ const &x, unsigned k);

template <>
struct RingTraits<LaurentZ>
{
	static LaurentZ zero() { return {}; }
	static LaurentZ one() { return LaurentZ(1); }
	static bool is_zero(LaurentZ const &a) { return a.is_zero(); }
	static bool is_unit(LaurentZ const &a) { return a.is_unit(); }
	static LaurentZ unit_inverse(LaurentZ const &a) { return a.unit_inverse(); }
	static LaurentZ from_int(long n) { return LaurentZ(n); }
	static LaurentZ exact_div(LaurentZ const &a, long d) { return a.exact_div(d); }
	static std::string str(LaurentZ const &a) { return a.str(); }
	static bool compound(LaurentZ const &a) { return a.terms().size() > 1; }
};

} // namespace schurforge
