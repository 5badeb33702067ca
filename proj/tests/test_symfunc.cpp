#include "oracles.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/symfunc.hpp"

#include <catch_amalgamated.hpp>

using namespace schurforge;

namespace {

// c^pi_{mu,eta} as the multiplicity of V_mu (x) V_eta in the restriction of
// V_pi to S_a x S_b, summed over the subgroup element by element.
long restriction_lr(Partition const &mu, Partition const &eta, Partition const &pi)
{
	int a = mu.size(), b = eta.size();
	BigInt total = 0;
	for (auto const &s : all_permutations(a))
		for (auto const &t : all_permutations(b))
		{
			std::vector<int> im(a + b);
			for (int i = 0; i < a; ++i)
				im[i] = s(i);
			for (int j = 0; j < b; ++j)
				im[a + j] = a + t(j);
			total += BigInt(character(pi, Permutation(im).cycle_type())) * character(mu, s.cycle_type()) *
			         character(eta, t.cycle_type());
		}
	BigInt order = factorial(a) * factorial(b);
	REQUIRE(total % order == 0);
	return BigInt(total / order).get_si();
}

} // namespace

TEST_CASE("Littlewood-Richardson coefficients match restriction multiplicities", "[symfunc]")
{
	for (int a = 0; a <= 3; ++a)
		for (int b = 0; b <= 3; ++b)
			for (auto const &mu : partitions_of(a))
				for (auto const &eta : partitions_of(b))
					for (auto const &pi : partitions_of(a + b))
						CHECK(lr(mu, eta, pi) == restriction_lr(mu, eta, pi));
	CHECK(lr(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
	CHECK(lr(Partition{1}, Partition{1}, Partition{2}) == 1);
	CHECK(lr(Partition{1}, Partition{1}, Partition{3}) == 0);
}

TEST_CASE("Schur products are commutative and associative", "[symfunc]")
{
	std::vector<SymFunc> samples{SymFunc::schur(Partition{1}), SymFunc::schur(Partition{2}),
	                             SymFunc::schur(Partition{1, 1}), SymFunc::schur(Partition{2, 1}),
	                             SymFunc::parse("s[2] - 3*s[1,1] + 2")};
	for (auto const &f : samples)
		for (auto const &g : samples)
		{
			CHECK(f * g == g * f);
			for (auto const &h : samples)
				if (f.terms().size() + g.terms().size() + h.terms().size() < 6)
					CHECK((f * g) * h == f * (g * h));
		}
	CHECK((SymFunc(1) * samples[3]) == samples[3]);
}

TEST_CASE("symmetric function literals", "[symfunc]")
{
	SymFunc f = SymFunc::parse("s[2,1] + 3*s[1,1,1]");
	CHECK(f.coeff(Partition{2, 1}) == Rational(1));
	CHECK(f.coeff(Partition{1, 1, 1}) == Rational(3));
	CHECK(f.str() == "s[2,1] + 3*s[1,1,1]");
	CHECK(SymFunc::parse("s[]").str() == "s[]");
	CHECK(SymFunc::parse("-s[2] + 1/2*s[1,1]").str() == "-s[2] + 1/2*s[1,1]");
	CHECK(SymFunc().str() == "0");
	CHECK_THROWS_AS(SymFunc::parse("s[1,2]"), Error);
	CHECK_THROWS_AS(SymFunc::parse("s[2"), Error);
}

TEST_CASE("power sums in the Schur basis", "[symfunc]")
{
	CHECK(power_sum(2).str() == "s[2] - s[1,1]");
	CHECK(power_sum(3).str() == "s[3] - s[2,1] + s[1,1,1]");
	CHECK(powersum_str(schur_to_powersum(Partition{2})) == "p[2]/2 + p[1,1]/2");
	CHECK(powersum_str(schur_to_powersum(Partition{1, 1})) == "-p[2]/2 + p[1,1]/2");
	for (int n = 0; n <= 5; ++n)
		for (auto const &pi : partitions_of(n))
			CHECK(from_powersum(schur_to_powersum(pi)) == SymFunc::schur(pi));
}

TEST_CASE("omega is an involutive ring map sending e to h", "[symfunc]")
{
	for (int k = 0; k <= 5; ++k)
	{
		CHECK(omega(elementary(k)) == complete(k));
		SymFunc sign = Rational(k % 2 ? 1 : -1) * power_sum(k);
		if (k > 0)
			CHECK(omega(power_sum(k)) == sign);
	}
	SymFunc f = SymFunc::parse("s[2,1] - s[3]"), g = SymFunc::parse("s[1,1] + 2*s[1]");
	CHECK(omega(f * g) == omega(f) * omega(g));
	CHECK(omega(omega(f)) == f);
}

TEST_CASE("Newton identities and the vanishing Schur sums", "[symfunc]")
{
	for (int n = 1; n <= 8; ++n)
		CHECK(newton_check(n));
	for (int n = 1; n <= 4; ++n)
		for (auto const &pi : partitions_of(n))
			CHECK(vanishing_schur_sum(pi).is_zero());
	CHECK(vanishing_schur_sum(Partition()) == SymFunc(1));
}

TEST_CASE("characteristic map sends irreducible characters to Schur functions", "[symfunc]")
{
	for (int n = 1; n <= 4; ++n)
		for (auto const &pi : partitions_of(n))
		{
			ClassFunction chi;
			for (auto const &mu : partitions_of(n))
				chi[mu] = character(pi, mu);
			CHECK(ch(n, chi) == SymFunc::schur(pi));
		}
	ClassFunction partial{{Partition{2}, Rational(1)}};
	try
	{
		ch(2, partial);
		FAIL("expected IncompleteClassFunction");
	}
	catch (Error const &e)
	{
		CHECK(e.kind() == ErrorKind::IncompleteClassFunction);
	}
	// the regular character maps to sum dim(pi) s_pi
	ClassFunction reg{{Partition{3}, 0}, {Partition{2, 1}, 0}, {Partition{1, 1, 1}, 6}};
	CHECK(ch(3, reg).str() == "s[3] + 2*s[2,1] + s[1,1,1]");
}
