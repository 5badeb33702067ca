#include "oracles.hpp"

#include "schurforge/error.hpp"
#include "schurforge/partition.hpp"

#include <catch_amalgamated.hpp>

using namespace schurforge;

TEST_CASE("partition counts match p(n)", "[partitions]")
{
	std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
	for (int n = 0; n <= 10; ++n)
		CHECK(partitions_of(n).size() == p[n]);
}

TEST_CASE("partitions enumerate in reverse-lexicographic order", "[partitions]")
{
	auto ps = partitions_of(4);
	std::vector<std::string> names;
	for (auto const &p : ps)
		names.push_back(p.str());
	CHECK(names == std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"});
	for (std::size_t i = 1; i < ps.size(); ++i)
		CHECK(ps[i - 1] < ps[i]);
	CHECK(Partition{3} < Partition{2, 1});
	CHECK(Partition{1, 1, 1} < Partition{4});
}

TEST_CASE("partition literals", "[partitions]")
{
	CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
	CHECK(Partition::parse("[3,1,1]") == Partition{3, 1, 1});
	CHECK(Partition::parse("3 1 1") == Partition{3, 1, 1});
	CHECK(Partition::parse("[]").empty());
	CHECK(Partition().str() == "[]");
	CHECK_THROWS_AS(Partition::parse("1,3"), Error);
	CHECK_THROWS_AS(Partition::parse("2,,1"), Error);
	CHECK_THROWS_AS(Partition::parse("a"), Error);
	CHECK_THROWS_AS(Partition({2, 0}), Error);
}

TEST_CASE("conjugation is an involution preserving size", "[partitions]")
{
	for (int n = 0; n <= 9; ++n)
		for (auto const &p : partitions_of(n))
		{
			CHECK(p.conjugate().conjugate() == p);
			CHECK(p.conjugate().size() == n);
		}
	CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
}

TEST_CASE("hook length formula counts standard tableaux", "[partitions]")
{
	for (int n = 0; n <= 8; ++n)
	{
		BigInt sum_sq = 0;
		for (auto const &p : partitions_of(n))
		{
			CHECK(p.dimension() == oracle::syt_count(p));
			sum_sq += p.dimension() * p.dimension();
		}
		CHECK(sum_sq == factorial(n));
	}
	CHECK(Partition{3, 1}.hook(0, 0) == 4);
}

TEST_CASE("hook content formula counts semistandard tableaux", "[partitions]")
{
	for (int n = 0; n <= 5; ++n)
		for (auto const &p : partitions_of(n))
			for (int m = 0; m <= 4; ++m)
				CHECK(dim_poly_eval(p, m) == oracle::ssyt_count(p, m));
	CHECK(dim_poly_eval(Partition{2, 1}, 2) == 2);
}

TEST_CASE("centralizer orders sum to one over n!", "[partitions]")
{
	for (int n = 1; n <= 8; ++n)
	{
		mpq_class total = 0;
		for (auto const &mu : partitions_of(n))
			total += mpq_class(1, 1) / mpq_class(mu.centralizer_order());
		CHECK(total == 1);
	}
	CHECK(Partition{2, 1, 1}.centralizer_order() == 4);
}
