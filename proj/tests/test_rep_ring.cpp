#include "oracles.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/rep_ring.hpp"
#include "schurforge/schur_functor.hpp"

#include <catch_amalgamated.hpp>

using namespace schurforge;

namespace {

ErrorKind kind_of(auto &&f)
{
	try
	{
		f();
	}
	catch (Error const &e)
	{
		return e.kind();
	}
	FAIL("expected an exception");
	return ErrorKind::InvalidArgument;
}

K0Class cls(char const *text) { return K0Class::parse(text); }

SymFunc schur(Partition const &pi) { return SymFunc::schur(pi); }

// every graded object of total dimension <= 2 spread over degrees {0,1,2}
std::vector<GradedObject> small_objects()
{
	std::vector<GradedObject> out;
	for (int a = 0; a <= 2; ++a)
		for (int b = 0; a + b <= 2; ++b)
			for (int c = 0; a + b + c <= 2; ++c)
			{
				std::map<int, int> dims;
				if (a)
					dims[0] = a;
				if (b)
					dims[1] = b;
				if (c)
					dims[2] = c;
				out.emplace_back(dims);
			}
	return out;
}

std::vector<K0Class> sample_classes() { return {cls("1"), cls("2"), cls("q"), cls("1 - q"), cls("1 + q^2")}; }

SchurSeries power_series_inverse(SchurSeries const &s) { return inverse(s); }

// t -> q t on a Schur series
SchurSeries rescale(SchurSeries s)
{
	LaurentZ qn(1);
	for (std::size_t n = 0; n <= s.order(); ++n)
	{
		RDElement r;
		for (auto const &[pi, c] : s[n].terms())
			r.add(pi, c * qn);
		s[n] = r;
		qn *= LaurentZ::parse("q");
	}
	return s;
}

} // namespace

TEST_CASE("classes in K0", "[rep-ring]")
{
	CHECK(k0_class(GradedObject::unit()) == K0Class(1));
	CHECK(k0_class(GradedObject::line(1)) == cls("-q"));
	CHECK(k0_class(GradedObject::parse("{-1:1, 0:2, 3:1}")) == cls("-q^-1 + 2 - q^3"));
	GradedObject x = GradedObject::parse("{0:1, 1:2}"), y = GradedObject::parse("{1:1, 2:1}");
	CHECK(k0_class(tensor(x, y)) == k0_class(x) * k0_class(y));
	CHECK(k0_class(x + y) == k0_class(x) + k0_class(y));
	CHECK(k0_class(x.shifted(1)) == cls("-q") * k0_class(x));

	GradedMap id = GradedMap::identity(GradedObject::unit());
	ComplexObject acyclic({{0, GradedObject::unit()}, {1, GradedObject::unit()}}, {{0, id}});
	CHECK(k0_class(acyclic) == K0Class(0));
	GradedObject plane(std::map<int, int>{{0, 2}});
	ComplexObject z({{0, plane}, {1, plane}}, {{0, GradedMap(plane, plane, {{0, MatrixQ{{1, 0}, {0, 0}}}})}});
	CHECK(k0_class(z) == k0_class(gr_tau(z)));
	CHECK(k0_class(z) == K0Class(0));
	CHECK(k0_class(ComplexObject::concentrated(x, 1)) == -k0_class(x));
}

TEST_CASE("lambda of a class matches exterior powers", "[rep-ring]")
{
	auto two = lambda_of_class(K0Class(2), 4);
	CHECK(two.series().str() == "1 + 2*t + t^2");
	auto odd = lambda_of_class(cls("-q"), 4);
	for (std::size_t n = 0; n <= 4; ++n)
		CHECK(odd[n] == k0_class(schur_object(GradedObject::line(1), column_partition(static_cast<int>(n)))).value());
	CHECK(odd.series().str() == "1 - q*t + q^2*t^2 - q^3*t^3 + q^4*t^4");
	auto mixed = lambda_of_class(cls("1 - q"), 3);
	CHECK(mixed.series() == Series<LaurentZ>(std::vector<LaurentZ>{LaurentZ(1), LaurentZ::parse("1 - q"),
	                                                               LaurentZ::parse("q^2 - q"),
	                                                               LaurentZ::parse("q^2 - q^3")}));
	for (auto const &x : small_objects())
	{
		auto l = lambda_of_class(k0_class(x), 3);
		for (int n = 0; n <= 3; ++n)
			CHECK(l[static_cast<std::size_t>(n)] == k0_class(schur_object(x, column_partition(n))).value());
	}
}

TEST_CASE("ev examples", "[rep-ring]")
{
	CHECK(ev(cls("1 + q^2"), schur({1, 1})) == cls("q^2"));
	CHECK(ev(cls("1 - q"), schur({1, 1})) == cls("q^2 - q"));
	CHECK(ev(cls("2 - 3q"), schur({1})) == cls("2 - 3q"));
	CHECK(ev(cls("2"), schur({2})) == K0Class(3));
	CHECK(ev(cls("2"), schur({1, 1, 1})) == K0Class(0));
	CHECK(ev(cls("5"), SymFunc()) == K0Class(0));
	CHECK(ev(cls("5"), schur(Partition())) == K0Class(1));
	CHECK(kind_of([] { ev(K0Class(1), Rational(1, 2) * schur({2})); }) == ErrorKind::NonIntegral);
}

TEST_CASE("ev agrees with Schur functors of graded objects", "[rep-ring]")
{
	for (auto const &x : small_objects())
		for (int n = 0; n <= 3; ++n)
			for (auto const &pi : partitions_of(n))
				CHECK(ev(k0_class(x), schur(pi)) == k0_class(schur_object(x, pi)));
}

TEST_CASE("ev is a ring homomorphism with the sum and negation rules", "[rep-ring]")
{
	for (auto const &x : sample_classes())
	{
		for (int a = 0; a <= 4; ++a)
			for (int b = 0; a + b <= 4; ++b)
				for (auto const &mu : partitions_of(a))
					for (auto const &eta : partitions_of(b))
						CHECK(ev(x, schur(mu) * schur(eta)) == ev(x, schur(mu)) * ev(x, schur(eta)));
		for (int n = 0; n <= 4; ++n)
			for (auto const &pi : partitions_of(n))
			{
				K0Class rhs = ev(x, schur(pi.conjugate()));
				CHECK(ev(-x, schur(pi)) == (n % 2 ? -rhs : rhs));
			}
		for (auto const &y : sample_classes())
			for (int n = 0; n <= 3; ++n)
				for (auto const &pi : partitions_of(n))
				{
					K0Class sum;
					for (int a = 0; a <= n; ++a)
						for (auto const &mu : partitions_of(a))
							for (auto const &eta : partitions_of(n - a))
							{
								long c = lr(mu, eta, pi);
								if (c)
									sum = sum + K0Class(c) * ev(x, schur(mu)) * ev(y, schur(eta));
							}
					CHECK(ev(x + y, schur(pi)) == sum);
				}
	}
}

TEST_CASE("elements of the representation ring", "[rep-ring]")
{
	RDElement one = RDElement::parse("[1]⊗(1)");
	CHECK((one * one).str() == "[2]⊗(1) + [1,1]⊗(1)");
	CHECK(RDElement::parse("[2]⊗(1) + [1,1]⊗(-q)").str() == "[2]⊗(1) + [1,1]⊗(-q)");
	CHECK(RDElement::parse("[2] (x) (1 - q) - [1,1]") ==
	      RDElement::basis(Partition{2}, LaurentZ::parse("1 - q")) - RDElement::basis(Partition{1, 1}));
	CHECK(RDElement::parse("0").is_zero());
	CHECK(RDElement::parse("3") == RDElement(3));
	CHECK(RDElement(3).str() == "[]⊗(3)");
	CHECK(kind_of([] { RDElement::parse("[2"); }) == ErrorKind::Parse);
	CHECK(kind_of([] { RDElement::parse("[2]*q"); }) == ErrorKind::Parse);
	CHECK(RingTraits<RDElement>::is_unit(RDElement::parse("[]⊗(-q^2)")));
	CHECK(!RingTraits<RDElement>::is_unit(RDElement(2)));
	CHECK(RingTraits<RDElement>::unit_inverse(RDElement::parse("[]⊗(-q)")) == RDElement::parse("[]⊗(-q^-1)"));
	CHECK(total_class(RDElement::parse("[2,1]⊗(q) + [3]")) == LaurentZ::parse("1 + 2q"));

	auto g = oracle::rng(21);
	auto random_element = [&](int n) {
		RDElement r;
		std::uniform_int_distribution<int> coef(-2, 2), deg(-1, 2);
		for (auto const &pi : partitions_of(n))
		{
			LaurentZ c;
			c.add_term(deg(g), coef(g));
			r.add(pi, c);
		}
		return r;
	};
	for (int trial = 0; trial < 10; ++trial)
	{
		std::uniform_int_distribution<int> grade(0, 2);
		RDElement a = random_element(grade(g)), b = random_element(grade(g)), c = random_element(grade(g));
		CHECK(a * b == b * a);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * RDElement(1) == a);
		CHECK(total_class(a * b) == total_class(a) * total_class(b) *
		                                LaurentZ(binomial(static_cast<long>((a * b).terms().empty()
		                                                                        ? 0
		                                                                        : (a * b).terms().begin()->first.size()),
		                                                  static_cast<long>(a.terms().empty()
		                                                                        ? 0
		                                                                        : a.terms().begin()->first.size()))));
		CHECK(induction_product(a, b) == a * b);
	}
}

TEST_CASE("lambda_Sigma of graded objects", "[rep-ring]")
{
	SchurSeries line = lambda_sigma(GradedObject::unit(), 4);
	for (int n = 0; n <= 4; ++n)
		CHECK(line[static_cast<std::size_t>(n)] == RDElement::basis(row_partition(n)));
	CHECK(lambda_sigma(GradedObject(), 4) == SchurSeries::one(4));

	std::vector<GradedObject> pieces{GradedObject::unit(), GradedObject::line(1), GradedObject::line(2),
	                                 GradedObject::parse("{0:2}"), GradedObject::parse("{0:1, 1:1}")};
	for (auto const &x : pieces)
		for (auto const &y : pieces)
			CHECK(lambda_sigma(x + y, 4) == lambda_sigma(x, 4) * lambda_sigma(y, 4));
}

TEST_CASE("shifts invert lambda_Sigma", "[rep-ring]")
{
	for (auto const &x : {GradedObject::unit(), GradedObject::parse("{0:2}"), GradedObject::parse("{0:1, 1:1}")})
	{
		SchurSeries l = lambda_sigma(x, 5);
		ComplexObject shifted = ComplexObject::concentrated(x).shifted(1);
		CHECK(lambda_sigma(shifted, 5) == power_series_inverse(l));
		CHECK(lambda_sigma(shifted, 5) * l == SchurSeries::one(5));
		// the internal grading shift: lambda(X<1>)(t) = lambda(X)^{-1}(q t)
		CHECK(lambda_sigma(x.shifted(1), 5) == rescale(power_series_inverse(l)));
	}
}

TEST_CASE("lambda_Sigma of complexes", "[rep-ring]")
{
	GradedObject plane(std::map<int, int>{{0, 2}});
	ComplexObject z({{0, plane}, {1, plane}}, {{0, GradedMap(plane, plane, {{0, MatrixQ{{1, 0}, {0, 0}}}})}});
	SchurSeries l = lambda_sigma(z, 3);
	CHECK(l == lambda_sigma(plane, 3) * inverse(lambda_sigma(plane, 3)));
	auto h = cohomology(z);
	CHECK(l == lambda_sigma(h.at(0), 3) * inverse(lambda_sigma(h.at(1), 3)));
	CHECK(lambda_sigma_via_cohomology(z, 3) == l);
	CHECK(lambda_sigma(z.shifted(1), 3) == inverse(l));

	GradedMap id = GradedMap::identity(GradedObject::line(2));
	ComplexObject acyclic({{0, GradedObject::line(2)}, {1, GradedObject::line(2)}}, {{0, id}});
	CHECK(lambda_sigma_via_cohomology(acyclic, 3) == SchurSeries::one(3));
	CHECK(lambda_sigma(acyclic, 3) == SchurSeries::one(3));
}

TEST_CASE("h and g are inverse", "[rep-ring]")
{
	for (int n = 0; n <= 3; ++n)
		for (auto const &pi : partitions_of(n))
			for (auto const &c : {"1", "2", "q^2", "-q", "1 - q^3"})
			{
				RDElement a = RDElement::basis(pi, LaurentZ::parse(c));
				CHECK(g_map(h_map(a)) == a);
			}
	RDElement mixed = RDElement::parse("[2,1]⊗(2) + [3]⊗(-q) + [1,1,1]");
	CHECK(g_map(h_map(mixed)) == mixed);
	CHECK(kind_of([] { h_map(RDElement::parse("[2]⊗(q)")); }) == ErrorKind::NotEffective);
	CHECK(kind_of([] { h_map(RDElement::parse("[2]⊗(-1)")); }) == ErrorKind::NotEffective);
	CHECK(kind_of([] { h_map(RDElement::parse("[2] + [1]")); }) == ErrorKind::InvalidArgument);
	CHECK(kind_of([] { g_map(preset("reg:cyc4")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("g on permutation representations", "[rep-ring]")
{
	CHECK(g_map(preset("perm:sym2")) == RDElement::parse("[2] + [1,1]"));
	GObject square = sym_action(GradedObject::parse("{0:2}"), 2);
	CHECK(g_map(square) == RDElement::parse("[2]⊗(3) + [1,1]⊗(1)"));
	CHECK(g_map(preset("perm:sym3")) == RDElement::parse("[3] + [2,1]"));
	CHECK(g_map(preset("reg:sym3")) == RDElement::parse("[3] + [2,1]⊗(2) + [1,1,1]"));
	CHECK(g_map(preset("twisted:sym3")) == RDElement::parse("[1,1,1] + [2,1]"));
	for (int n = 1; n <= 3; ++n)
		for (auto const &x : {GradedObject::parse("{0:2}"), GradedObject::parse("{0:1, 1:1}")})
		{
			// g of the tensor power is lambda_Sigma's coefficient
			CHECK(g_map(sym_action(x, n)) == lambda_sigma(x, 3)[static_cast<std::size_t>(n)]);
		}
}

TEST_CASE("decomposition of tensor powers", "[rep-ring]")
{
	for (int n = 1; n <= 3; ++n)
	{
		CHECK(aw_check(GradedObject::parse("{0:2}"), n));
		CHECK(aw_check(GradedObject::parse("{0:1, 1:1}"), n));
		CHECK(aw_check(GradedObject::parse("{1:2, 2:1}"), n));
	}
	long sym2 = schur_object(GradedObject::parse("{0:2}"), Partition{2}).total_dim();
	long alt2 = schur_object(GradedObject::parse("{0:2}"), Partition{1, 1}).total_dim();
	CHECK(sym2 + alt2 == 4);
}

TEST_CASE("the mu series", "[rep-ring]")
{
	SchurSeries line = mu_series(GradedObject::unit(), 4);
	for (int n = 0; n <= 4; ++n)
		CHECK(line[static_cast<std::size_t>(n)] == RDElement::basis(row_partition(n)));
	GradedObject x = GradedObject::parse("{0:1, 1:1}");
	SchurSeries m = mu_series(x, 3);
	LaurentZ cx = k0_class(x).value(), power(1);
	for (std::size_t n = 0; n <= 3; ++n)
	{
		CHECK(total_class(m[n]) == power);
		power *= cx;
	}
	SchurSeries plane = mu_series(GradedObject::parse("{0:2}"), 2);
	SchurSeries factor = SchurSeries::one(2);
	factor[1] = RDElement::basis(Partition{1}, LaurentZ(-2));
	SchurSeries product = plane * factor;
	CHECK(product[2] == RDElement::parse("-[2] - [1,1]⊗(3)"));
	CHECK(!(product == SchurSeries::one(2)));
}

TEST_CASE("Euler characteristic of equivariant complexes", "[rep-ring]")
{
	GObject triv = preset("trivial:sym2"), sign = preset("sign:sym2");
	EquivariantComplex split({{0, triv}, {1, sign}}, {});
	CHECK(euler_xi(split) == RDElement::parse("[2] - [1,1]"));
	GObject perm = preset("perm:sym2");
	EquivariantComplex acyclic({{0, perm}, {1, perm}}, {{0, GradedMap::identity(perm.object())}});
	CHECK(euler_xi(acyclic).is_zero());
	EquivariantComplex single({{0, preset("reg:sym3")}}, {});
	CHECK(euler_xi(single) == g_map(preset("reg:sym3")));
	GradedMap sum(perm.object(), triv.object(), {{0, MatrixQ{{1, 1}}}});
	EquivariantComplex z({{0, perm}, {1, triv}}, {{0, sum}});
	CHECK(euler_xi(z) == g_map(perm) - g_map(triv));
}
