#include "oracles.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/group.hpp"

#include <catch_amalgamated.hpp>

using namespace schurforge;

TEST_CASE("cycle notation round trips", "[symgroup]")
{
	Permutation p = Permutation::parse("(1 2 3)(4 5)", 5);
	CHECK(p(0) == 1);
	CHECK(p(2) == 0);
	CHECK(p.str() == "(1 2 3)(4 5)");
	CHECK(p.cycle_type() == Partition{3, 2});
	CHECK(p.sign() == -1);
	CHECK(Permutation::parse("()", 3).is_identity());
	CHECK(Permutation::parse("(1,3)", 3).str() == "(1 3)");
	CHECK_THROWS_AS(Permutation::parse("(1 1)", 3), Error);
	CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), Error);
	CHECK_THROWS_AS(Permutation::parse("1 2", 3), Error);
}

TEST_CASE("composition applies the right factor first", "[symgroup]")
{
	Permutation a = Permutation::parse("(1 2)", 3), b = Permutation::parse("(2 3)", 3);
	CHECK((a * b)(1) == 2);
	CHECK((a * b).str() == "(1 2 3)");
	CHECK((a * a.inverse()).is_identity());
	for (auto const &s : all_permutations(4))
	{
		CHECK(Permutation::of_cycle_type(s.cycle_type()).cycle_type() == s.cycle_type());
		CHECK(s.sign() * s.inverse().sign() == 1);
	}
	CHECK(all_permutations(5).size() == 120);
}

TEST_CASE("Murnaghan-Nakayama agrees with the Frobenius formula", "[symgroup]")
{
	for (int n = 0; n <= 5; ++n)
		for (auto const &pi : partitions_of(n))
			for (auto const &mu : partitions_of(n))
				CHECK(character(pi, mu) == oracle::frobenius_character(pi, mu));
	CHECK_THROWS_AS(character(Partition{2}, Partition{1}), Error);
}

TEST_CASE("character tables are orthogonal", "[symgroup]")
{
	for (int n = 1; n <= 7; ++n)
	{
		auto t = character_table(n);
		BigInt order = factorial(n);
		for (std::size_t a = 0; a < t->labels.size(); ++a)
			for (std::size_t b = 0; b < t->labels.size(); ++b)
			{
				BigInt inner = 0;
				for (std::size_t c = 0; c < t->labels.size(); ++c)
					inner += t->class_sizes[c] * t->values[a][c] * t->values[b][c];
				CHECK(inner == (a == b ? order : BigInt(0)));
			}
		// the identity class comes last
		for (std::size_t a = 0; a < t->labels.size(); ++a)
			CHECK(t->values[a].back() == t->labels[a].dimension());
	}
	CHECK_THROWS_AS(character_table(9), Error);
	CHECK(character_table(9, 9)->labels.size() == 30);
}

TEST_CASE("isotypic projectors are central orthogonal idempotents", "[symgroup]")
{
	for (int n = 1; n <= 3; ++n)
	{
		GroupAlgebraElement sum(n);
		for (auto const &pi : partitions_of(n))
		{
			auto e = isotypic_projector(pi);
			CHECK((e * e) == e);
			for (auto const &s : all_permutations(n))
			{
				GroupAlgebraElement g(n);
				g.add(s, 1);
				CHECK((g * e) == (e * g));
			}
			for (auto const &rho : partitions_of(n))
				if (!(rho == pi))
					CHECK((e * isotypic_projector(rho)).terms().empty());
			sum = sum + e;
		}
		GroupAlgebraElement one(n);
		one.add(Permutation::identity(n), 1);
		CHECK(sum == one);
	}
}

TEST_CASE("finite groups from tables and permutations", "[symgroup]")
{
	auto s3 = FiniteGroup::symmetric(3);
	CHECK(s3->size() == 6);
	CHECK(s3->symmetric_degree() == 3);
	int g = s3->find("(1 2 3)");
	CHECK(s3->power(g, 3) == s3->identity());
	CHECK(s3->mul(g, s3->inverse(g)) == s3->identity());
	auto c4 = FiniteGroup::cyclic(4);
	CHECK(!c4->symmetric_degree());
	CHECK(c4->find("g^2") == c4->find("(1 3)(2 4)"));
	CHECK(c4->power(c4->find("g"), -1) == c4->find("g^3"));
	CHECK_THROWS_AS(c4->find("(1 2)"), Error);
	CHECK_THROWS_AS(FiniteGroup("bad", {"a", "b"}, {{0, 1}, {1, 1}}), Error);
	FiniteGroup z2("Z2", {"e", "a"}, {{0, 1}, {1, 0}});
	CHECK(z2.inverse(1) == 1);
	CHECK(!z2.has_permutations());
}
