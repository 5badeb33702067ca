#pragma once

#include "schurforge/rational.hpp"
#include "schurforge/ring_traits.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace schurforge {

/// Polynomial with integer coefficients in a fixed number of variables,
/// keyed by exponent vectors (lexicographic order).
class IntPoly
{
  public:
	using Exponents = std::vector<int>;

	IntPoly() = default;
	explicit IntPoly(int nvars) : nvars_(nvars) {}
	static IntPoly constant(int nvars, BigInt const &c);
	static IntPoly variable(int nvars, int index);

	int nvars() const { return nvars_; }
	std::map<Exponents, BigInt> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	void add_term(Exponents const &e, BigInt const &c);

	IntPoly &operator+=(IntPoly const &o);
	IntPoly &operator-=(IntPoly const &o);
	friend IntPoly operator*(IntPoly const &a, IntPoly const &b);
	friend IntPoly operator*(BigInt const &c, IntPoly const &a);
	friend bool operator==(IntPoly const &, IntPoly const &) = default;

  private:
	int nvars_ = 0;
	std::map<Exponents, BigInt> terms_;
};

IntPoly pow(IntPoly const &p, int k);

/// Grothendieck universal polynomial in the elementary values e_1..e_a of an
/// x-alphabet and e_1..e_b of a y-alphabet (b = 0 for composition).
struct UniversalPoly
{
	int x_vars = 0;
	int y_vars = 0;
	IntPoly poly;

	/// ex[i] is e_{i+1}(x). Missing trailing values are treated as zero.
	template <class A>
	A evaluate(std::span<A const> ex, std::span<A const> ey = {}) const
	{
		using Traits = RingTraits<A>;
		A total = Traits::zero();
		for (auto const &[exps, c] : poly.terms())
		{
			A term = Traits::from_int(1);
			bool vanished = false;
			for (int v = 0; v < poly.nvars() && !vanished; ++v)
			{
				if (exps[v] == 0)
					continue;
				bool is_x = v < x_vars;
				std::size_t idx = static_cast<std::size_t>(is_x ? v : v - x_vars);
				auto const &vals = is_x ? ex : ey;
				if (idx >= vals.size())
				{
					vanished = true;
					break;
				}
				for (int k = 0; k < exps[v]; ++k)
					term = term * vals[idx];
			}
			if (vanished)
				continue;
			total += A(c) * term;
		}
		return total;
	}

	std::string str() const;
};

inline constexpr int kProductPolyBound = 4;
inline constexpr int kCompositionPolyBound = 6;

/// P_n with e_n({x_i y_j}) = P_n(e(x); e(y)). Memoized. n <= 4.
UniversalPoly const &universal_product_poly(int n);
/// P_{n,m} with e_n({x_{i1}...x_{im}}) = P_{n,m}(e(x)). Memoized. n m <= 6.
UniversalPoly const &universal_composition_poly(int n, int m);

} // namespace schurforge
