#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace schurforge {

using BigInt = mpz_class;

std::string to_string(BigInt const &x);
BigInt parse_bigint(std::string_view text);
BigInt factorial(int n);
BigInt binomial(long n, long k);

/// Exact rational number, always in lowest terms with positive denominator.
class Rational
{
  public:
	Rational() = default;
	Rational(long n) : v_(n) {}
	Rational(int n) : v_(static_cast<long>(n)) {}
	Rational(BigInt const &n) : v_(n) {}
	Rational(BigInt const &num, BigInt const &den);
	explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	static Rational parse(std::string_view text);

	BigInt num() const { return v_.get_num(); }
	BigInt den() const { return v_.get_den(); }
	bool is_zero() const { return sgn(v_) == 0; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }
	/// Throws NonIntegral unless the denominator is 1.
	BigInt to_integer() const;
	mpq_class const &raw() const { return v_; }
	std::string str() const;

	Rational operator-() const { return Rational(mpq_class(-v_)); }
	Rational &operator+=(Rational const &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rational &operator-=(Rational const &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rational &operator*=(Rational const &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rational &operator/=(Rational const &o);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

	friend bool operator==(Rational const &a, Rational const &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

  private:
	mpq_class v_;
};

} // namespace schurforge
