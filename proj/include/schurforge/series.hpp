#pragma once

#include "schurforge/error.hpp"
#include "schurforge/ring_traits.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over a commutative
/// ring A. Binary operations between series of different orders truncate to
/// the smaller order.
template <class A>
class Series
{
	using Traits = RingTraits<A>;

  public:
	explicit Series(std::size_t order = 0) : c_(order + 1, Traits::zero()) {}
	explicit Series(std::vector<A> coeffs) : c_(std::move(coeffs))
	{
		if (c_.empty())
			c_.push_back(Traits::zero());
	}
	Series(std::vector<A> coeffs, std::size_t order) : c_(std::move(coeffs))
	{
		c_.resize(order + 1, Traits::zero());
	}

	static Series one(std::size_t order)
	{
		Series s(order);
		s.c_[0] = Traits::one();
		return s;
	}

	std::size_t order() const { return c_.size() - 1; }
	A const &operator[](std::size_t k) const { return c_.at(k); }
	A &operator[](std::size_t k) { return c_.at(k); }
	std::vector<A> const &coeffs() const { return c_; }

	Series truncated(std::size_t order) const
	{
		return Series(std::vector<A>(c_.begin(), c_.begin() + std::min(order, this->order()) + 1));
	}

	/// Zero-padded to a higher order. Only meaningful when the caller knows the
	/// series is a polynomial of degree <= order().
	Series extended(std::size_t order) const { return Series(c_, std::max(order, this->order())); }

	Series operator-() const
	{
		Series r(*this);
		for (auto &x : r.c_)
			x = Traits::zero() - x;
		return r;
	}

	friend Series operator+(Series const &f, Series const &g)
	{
		std::size_t n = std::min(f.order(), g.order());
		Series r(n);
		for (std::size_t k = 0; k <= n; ++k)
			r.c_[k] = f.c_[k] + g.c_[k];
		return r;
	}

	friend Series operator-(Series const &f, Series const &g) { return f + (-g); }

	friend Series operator*(Series const &f, Series const &g)
	{
		std::size_t n = std::min(f.order(), g.order());
		Series r(n);
		for (std::size_t i = 0; i <= n; ++i)
		{
			if (Traits::is_zero(f.c_[i]))
				continue;
			for (std::size_t j = 0; i + j <= n; ++j)
				if (!Traits::is_zero(g.c_[j]))
					r.c_[i + j] += f.c_[i] * g.c_[j];
		}
		return r;
	}

	friend Series operator*(A const &a, Series const &f)
	{
		Series r(f);
		for (auto &x : r.c_)
			x = a * x;
		return r;
	}

	/// Equality up to the smaller of the two orders.
	friend bool operator==(Series const &f, Series const &g)
	{
		std::size_t n = std::min(f.order(), g.order());
		for (std::size_t k = 0; k <= n; ++k)
			if (!(f.c_[k] == g.c_[k]))
				return false;
		return true;
	}

	/// Canonical text: ascending powers of t, zero terms omitted.
	std::string str() const
	{
		std::string out;
		for (std::size_t k = 0; k <= order(); ++k)
		{
			if (Traits::is_zero(c_[k]))
				continue;
			std::string coeff = Traits::str(c_[k]);
			std::string term;
			if (k == 0)
				term = coeff;
			else
			{
				std::string power = k == 1 ? "t" : "t^" + std::to_string(k);
				if (Traits::compound(c_[k]))
					term = "(" + coeff + ")*" + power;
				else if (coeff == "1")
					term = power;
				else if (coeff == "-1")
					term = "-" + power;
				else
					term = coeff + "*" + power;
			}
			if (out.empty())
				out = term;
			else if (term.front() == '-')
				out += " - " + term.substr(1);
			else
				out += " + " + term;
		}
		return out.empty() ? "0" : out;
	}

  private:
	std::vector<A> c_;
};

/// Multiplicative inverse up to the series' order.
template <class A>
Series<A> inverse(Series<A> const &f)
{
	using Traits = RingTraits<A>;
	if (!Traits::is_unit(f[0]))
		fail(ErrorKind::NonUnitConstantTerm, "constant term " + Traits::str(f[0]) + " is not a unit");
	A c0inv = Traits::unit_inverse(f[0]);
	Series<A> g(f.order());
	g[0] = c0inv;
	for (std::size_t n = 1; n <= f.order(); ++n)
	{
		A acc = Traits::zero();
		for (std::size_t k = 1; k <= n; ++k)
			if (!Traits::is_zero(f[k]))
				acc += f[k] * g[n - k];
		g[n] = Traits::zero() - c0inv * acc;
	}
	return g;
}

/// -t f'(t) / f(t) for a series with constant term 1. The coefficient of t^m
/// times (-1)^m is the m-th ghost component.
template <class A>
Series<A> neg_log_derivative(Series<A> const &f)
{
	using Traits = RingTraits<A>;
	if (!(f[0] == Traits::one()))
		fail(ErrorKind::NonUnitConstantTerm, "log-derivative needs constant term 1, got " + Traits::str(f[0]));
	Series<A> tdf(f.order());
	for (std::size_t m = 1; m <= f.order(); ++m)
		tdf[m] = Traits::from_int(-static_cast<long>(m)) * f[m];
	return tdf * inverse(f);
}

template <class A>
Series<A> pow(Series<A> const &f, long k)
{
	Series<A> base = k < 0 ? inverse(f) : f;
	Series<A> r = Series<A>::one(f.order());
	for (long i = 0; i < (k < 0 ? -k : k); ++i)
		r = r * base;
	return r;
}

class Rational;
Series<Rational> parse_series(std::string_view text);

} // namespace schurforge
