#include "oracles.hpp"

#include "schurforge/error.hpp"
#include "schurforge/lambda.hpp"

#include <catch_amalgamated.hpp>

using namespace schurforge;

namespace {

// e_k of a list of integers, k = 0..n.
std::vector<BigInt> elementary_values(std::vector<BigInt> const &xs, int n)
{
	std::vector<BigInt> e(n + 1, 0);
	e[0] = 1;
	for (auto const &x : xs)
		for (int k = n; k >= 1; --k)
			e[k] += x * e[k - 1];
	return e;
}

std::vector<BigInt> tail(std::vector<BigInt> const &e) { return {e.begin() + 1, e.end()}; }

WittSeries<BigInt> line(long a, std::size_t order)
{
	Series<BigInt> s = Series<BigInt>::one(order);
	s[1] = a;
	return WittSeries<BigInt>(s);
}

} // namespace

TEST_CASE("universal product polynomials in low degree", "[lambda-ring]")
{
	CHECK(universal_product_poly(1).str() == "e1(x)*e1(y)");
	CHECK(universal_product_poly(2).str() == "e1(x)^2*e2(y) + e2(x)*e1(y)^2 - 2*e2(x)*e2(y)");
	CHECK_THROWS_AS(universal_product_poly(5), Error);
	CHECK_THROWS_AS(universal_composition_poly(4, 2), Error);
	CHECK(universal_composition_poly(1, 3).str() == "e3(x)");
	CHECK(universal_composition_poly(2, 1).str() == "e2(x)");
}

TEST_CASE("universal polynomials evaluate e_n of products and subsets", "[lambda-ring]")
{
	auto g = oracle::rng(7);
	std::uniform_int_distribution<int> val(-3, 3);
	for (int n = 1; n <= 4; ++n)
		for (int trial = 0; trial < 4; ++trial)
		{
			std::vector<BigInt> xs(n), ys(n), prod;
			for (auto &x : xs)
				x = val(g);
			for (auto &y : ys)
				y = val(g);
			for (auto const &x : xs)
				for (auto const &y : ys)
					prod.push_back(x * y);
			auto ex = tail(elementary_values(xs, n)), ey = tail(elementary_values(ys, n));
			BigInt got = universal_product_poly(n).evaluate<BigInt>(ex, ey);
			CHECK(got == elementary_values(prod, n)[n]);
		}
	for (int n = 1; n <= 6; ++n)
		for (int m = 1; n * m <= 6; ++m)
		{
			int k = n * m;
			std::vector<BigInt> xs(k);
			for (auto &x : xs)
				x = val(g);
			std::vector<BigInt> subsets;
			std::vector<bool> mask(k, false);
			std::fill(mask.begin(), mask.begin() + m, true);
			do
			{
				BigInt p = 1;
				for (int i = 0; i < k; ++i)
					if (mask[i])
						p *= xs[i];
				subsets.push_back(p);
			} while (std::prev_permutation(mask.begin(), mask.end()));
			auto ex = tail(elementary_values(xs, k));
			CHECK(universal_composition_poly(n, m).evaluate<BigInt>(ex) == elementary_values(subsets, n)[n]);
		}
}

TEST_CASE("Witt vectors: lines multiply like their parameters", "[lambda-ring]")
{
	CHECK(witt_mul(line(2, 4), line(-3, 4)) == line(-6, 4));
	CHECK(witt_mul(WittSeries<BigInt>::unit(4), line(5, 4)) == line(5, 4));
	auto sum = witt_add(line(2, 3), line(3, 3));
	CHECK(sum.str() == "1 + 5*t + 6*t^2");
	CHECK(witt_add(sum, witt_neg(sum)) == WittSeries<BigInt>::zero(3));
	CHECK_THROWS_AS(witt_mul(line(1, 5), line(1, 5)), Error);
	CHECK_THROWS_AS(WittSeries<BigInt>(Series<BigInt>::one(0)), Error);
	Series<BigInt> bad(2);
	CHECK_THROWS_AS(WittSeries<BigInt>(bad), Error);
}

TEST_CASE("ghost map is a ring homomorphism", "[lambda-ring]")
{
	auto g = oracle::rng(8);
	std::uniform_int_distribution<int> val(-4, 4);
	auto random_witt = [&] {
		Series<Rational> s = Series<Rational>::one(4);
		for (std::size_t k = 1; k <= 4; ++k)
			s[k] = Rational(val(g), 1 + (val(g) + 4) % 3);
		return WittSeries<Rational>(s);
	};
	for (int trial = 0; trial < 10; ++trial)
	{
		auto f = random_witt(), h = random_witt();
		auto gf = ghost(f), gh = ghost(h), gs = ghost(witt_add(f, h)), gp = ghost(witt_mul(f, h));
		for (std::size_t m = 0; m < 4; ++m)
		{
			CHECK(gs[m] == gf[m] + gh[m]);
			CHECK(gp[m] == gf[m] * gh[m]);
		}
		CHECK(from_ghost(gf) == f);
		// distributivity
		auto k = random_witt();
		CHECK(witt_mul(f, witt_add(h, k)) == witt_add(witt_mul(f, h), witt_mul(f, k)));
	}
}

TEST_CASE("Frobenius operations on Witt vectors", "[lambda-ring]")
{
	CHECK(adams_on_witt(line(3, 6), 2) == line(9, 3));
	CHECK(adams_on_witt(line(-2, 6), 3) == line(-8, 2));
	auto f = witt_add(line(2, 6), witt_neg(line(5, 6)));
	CHECK(adams_on_witt(adams_on_witt(f, 2), 3) == adams_on_witt(f, 6));
	CHECK(adams_on_witt(f, 1) == f);
	CHECK_THROWS_AS(adams_on_witt(f, 7), Error);
	std::vector<BigInt> not_integral{1, 0};
	try
	{
		from_ghost(not_integral);
		FAIL("expected NonQAlgebra");
	}
	catch (Error const &e)
	{
		CHECK(e.kind() == ErrorKind::NonQAlgebra);
	}
}

TEST_CASE("lambda structures on Z, Q and Z[q,q^-1]", "[lambda-ring]")
{
	IntegerLambda z;
	CHECK(z.lambda_series(3, 4).str() == "1 + 3*t + 3*t^2 + t^3");
	CHECK(z.lambda_series(-1, 3).str() == "1 - t + t^2 - t^3");
	CHECK(adams_on_base(z, BigInt(-5), 3) == -5);
	RationalLambda qq;
	CHECK(qq.lambda_series(Rational(1, 2), 2).str() == "1 + 1/2*t - 1/8*t^2");
	LaurentLambda lq;
	CHECK(lq.lambda_series(LaurentZ::parse("1 - q"), 2).str() == "1 + (1 - q)*t + (-q + q^2)*t^2");
	for (auto const &text : {"q", "1 + q^2", "1 - q", "2q - q^-1"})
	{
		LaurentZ x = LaurentZ::parse(text);
		for (int n = 1; n <= 4; ++n)
			CHECK(adams_on_base(lq, x, n) == x.substitute_power(n));
	}
}

TEST_CASE("specialness of the lambda structures", "[lambda-ring]")
{
	IntegerLambda z;
	RationalLambda qq;
	LaurentLambda lq;
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; n * m <= 6 && m <= 2; ++m)
		{
			CHECK(special_check(z, BigInt(3), BigInt(-2), n, m));
			CHECK(special_check(qq, Rational(1, 2), Rational(-3, 4), n, m));
		}
	std::vector<LaurentZ> samples;
	for (auto const &t : {"q", "1 + q^2", "1 - q", "2q - q^-1"})
		samples.push_back(LaurentZ::parse(t));
	for (auto const &x : samples)
		for (auto const &y : samples)
		{
			CHECK(special_check(lq, x, y, 2, 1));
			CHECK(special_check(lq, x, y, 2, 2));
		}
	CHECK_THROWS_AS(special_check(z, BigInt(1), BigInt(1), 5, 1), Error);
}
