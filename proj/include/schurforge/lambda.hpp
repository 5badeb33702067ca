#pragma once

#include "schurforge/laurent.hpp"
#include "schurforge/rational.hpp"
#include "schurforge/series.hpp"
#include "schurforge/universal_poly.hpp"

#include <string>
#include <vector>

namespace schurforge {

/// Element of Lambda(A) = 1 + tA[[t]], truncated.
template <class A>
class WittSeries
{
	using Traits = RingTraits<A>;

  public:
	explicit WittSeries(Series<A> s) : s_(std::move(s))
	{
		if (s_.order() < 1)
			fail(ErrorKind::InvalidArgument, "Witt series need truncation order >= 1");
		if (!(s_[0] == Traits::one()))
			fail(ErrorKind::InvalidArgument, "Witt series must have constant term 1");
	}
	static WittSeries zero(std::size_t order) { return WittSeries(Series<A>::one(order)); }
	/// lambda_t(1) = 1 + t, the unit for the Witt product.
	static WittSeries unit(std::size_t order)
	{
		Series<A> s = Series<A>::one(order);
		s[1] = Traits::one();
		return WittSeries(s);
	}

	Series<A> const &series() const { return s_; }
	std::size_t order() const { return s_.order(); }
	A const &operator[](std::size_t k) const { return s_[k]; }
	std::string str() const { return s_.str(); }
	friend bool operator==(WittSeries const &a, WittSeries const &b) { return a.s_ == b.s_; }

  private:
	Series<A> s_;
};

/// Addition in Lambda(A): the series product.
template <class A>
WittSeries<A> witt_add(WittSeries<A> const &f, WittSeries<A> const &g)
{
	return WittSeries<A>(f.series() * g.series());
}

/// Additive inverse in Lambda(A): the series inverse.
template <class A>
WittSeries<A> witt_neg(WittSeries<A> const &f)
{
	return WittSeries<A>(inverse(f.series()));
}

/// Grothendieck product: the t^n coefficient is P_n(f_1..f_n; g_1..g_n).
template <class A>
WittSeries<A> witt_mul(WittSeries<A> const &f, WittSeries<A> const &g)
{
	std::size_t order = std::min(f.order(), g.order());
	if (order > static_cast<std::size_t>(kProductPolyBound))
		fail(ErrorKind::BoundExceeded, "Witt product is available up to order " + std::to_string(kProductPolyBound));
	Series<A> r = Series<A>::one(order);
	std::vector<A> fx(f.series().coeffs().begin() + 1, f.series().coeffs().begin() + order + 1);
	std::vector<A> gy(g.series().coeffs().begin() + 1, g.series().coeffs().begin() + order + 1);
	for (std::size_t n = 1; n <= order; ++n)
	{
		auto const &p = universal_product_poly(static_cast<int>(n));
		r[n] = p.evaluate<A>(std::span<A const>(fx.data(), n), std::span<A const>(gy.data(), n));
	}
	return WittSeries<A>(r);
}

/// Ghost components g_1..g_N with sum g_m (-t)^m = -t f'/f.
template <class A>
std::vector<A> ghost(WittSeries<A> const &f)
{
	Series<A> d = neg_log_derivative(f.series());
	std::vector<A> g;
	for (std::size_t m = 1; m <= f.order(); ++m)
		g.push_back(m % 2 == 0 ? d[m] : A(RingTraits<A>::zero() - d[m]));
	return g;
}

/// Inverse of ghost(): Newton recursion m c_m = -sum_{k=1}^m (-1)^k g_k c_{m-k}.
/// Throws NonQAlgebra when a division by m is not exact in A.
template <class A>
WittSeries<A> from_ghost(std::vector<A> const &g)
{
	using Traits = RingTraits<A>;
	Series<A> c = Series<A>::one(g.size());
	for (std::size_t m = 1; m <= g.size(); ++m)
	{
		A acc = Traits::zero();
		for (std::size_t k = 1; k <= m; ++k)
		{
			A term = g[k - 1] * c[m - k];
			if (k % 2 == 0)
				acc -= term;
			else
				acc += term;
		}
		c[m] = Traits::exact_div(acc, static_cast<long>(m));
	}
	return WittSeries<A>(c);
}

/// Frobenius psi_n on Lambda(A): ghost(psi_n f)_m = ghost(f)_{n m}. The
/// result has order floor(order(f) / n).
template <class A>
WittSeries<A> adams_on_witt(WittSeries<A> const &f, int n)
{
	if (n < 1)
		fail(ErrorKind::InvalidArgument, "Adams operations are indexed by n >= 1");
	std::size_t out = f.order() / static_cast<std::size_t>(n);
	if (out < 1)
		fail(ErrorKind::InvalidArgument, "series order " + std::to_string(f.order()) + " too small for psi_" + std::to_string(n));
	auto g = ghost(f);
	std::vector<A> h;
	for (std::size_t m = 1; m <= out; ++m)
		h.push_back(g[n * m - 1]);
	return from_ghost(h);
}

/// lambda_t(m) = (1 + t)^m on Z.
struct IntegerLambda
{
	using Element = BigInt;
	static std::string name() { return "Z"; }
	Series<BigInt> lambda_series(BigInt const &x, std::size_t order) const;
};

/// lambda_t(r) = (1 + t)^r on Q (binomial series).
struct RationalLambda
{
	using Element = Rational;
	static std::string name() { return "Q"; }
	Series<Rational> lambda_series(Rational const &x, std::size_t order) const;
};

/// lambda_t(sum c_d q^d) = prod_d (1 + q^d t)^{c_d} on Z[q, q^-1].
struct LaurentLambda
{
	using Element = LaurentZ;
	static std::string name() { return "Z[q,q^-1]"; }
	Series<LaurentZ> lambda_series(LaurentZ const &x, std::size_t order) const;
};

/// psi_n(x) read off -t d lambda(x)/dt / lambda(x) = sum psi_n(x) (-t)^n.
template <class Ctx>
typename Ctx::Element adams_on_base(Ctx const &ctx, typename Ctx::Element const &x, int n)
{
	using A = typename Ctx::Element;
	if (n < 1)
		fail(ErrorKind::InvalidArgument, "Adams operations are indexed by n >= 1");
	Series<A> d = neg_log_derivative(ctx.lambda_series(x, static_cast<std::size_t>(n)));
	return n % 2 == 0 ? d[n] : A(RingTraits<A>::zero() - d[n]);
}

/// lambda^k(x) for k = 1..order.
template <class Ctx>
std::vector<typename Ctx::Element> lambda_powers(Ctx const &ctx, typename Ctx::Element const &x, std::size_t order)
{
	auto s = ctx.lambda_series(x, order);
	return std::vector<typename Ctx::Element>(s.coeffs().begin() + 1, s.coeffs().end());
}

/// Checks lambda^n(x y) = P_n(lambda(x); lambda(y)) and
/// lambda^n(lambda^m(x)) = P_{n,m}(lambda(x)) exactly.
template <class Ctx>
bool special_check(Ctx const &ctx, typename Ctx::Element const &x, typename Ctx::Element const &y, int n, int m)
{
	using A = typename Ctx::Element;
	if (n < 1 || m < 1)
		fail(ErrorKind::InvalidArgument, "special_check needs n, m >= 1");
	if (n > kProductPolyBound || n * m > kCompositionPolyBound)
		fail(ErrorKind::BoundExceeded, "universal polynomials are bounded by n <= 4, n m <= 6");
	auto lx = lambda_powers(ctx, x, static_cast<std::size_t>(n * m));
	auto ly = lambda_powers(ctx, y, static_cast<std::size_t>(n));
	A xy = x * y;
	A lhs_product = ctx.lambda_series(xy, n)[n];
	A rhs_product = universal_product_poly(n).evaluate<A>(std::span<A const>(lx.data(), n), std::span<A const>(ly));
	if (!(lhs_product == rhs_product))
		return false;
	A lm = lx[m - 1];
	A lhs_comp = ctx.lambda_series(lm, n)[n];
	A rhs_comp = universal_composition_poly(n, m).evaluate<A>(std::span<A const>(lx));
	return lhs_comp == rhs_comp;
}

} // namespace schurforge
