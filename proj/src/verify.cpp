#include "schurforge/verify.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/complex.hpp"
#include "schurforge/error.hpp"
#include "schurforge/kernels.hpp"
#include "schurforge/rep_ring.hpp"
#include "schurforge/schur_functor.hpp"
#include "schurforge/symfunc.hpp"
#include "schurforge/universal_poly.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace schurforge::verify {

namespace {

struct Context
{
	std::mt19937_64 rng;
	std::size_t bound;
	long cases = 0;
	std::string failure;

	void expect(bool ok, std::string const &what)
	{
		++cases;
		if (!ok && failure.empty())
			failure = what;
	}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

struct CheckDef
{
	std::string suite;
	std::string name;
	std::vector<std::string> covers;
	std::function<void(Context &)> body;
};

std::uint64_t fnv1a(std::string_view s)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : s)
	{
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

// ---- shared fixtures ----

GradedObject plane() { return GradedObject(std::map<int, int>{{0, 2}}); }

ComplexObject rank_one_complex()
{
	GradedObject p = plane();
	return ComplexObject({{0, p}, {1, p}}, {{0, GradedMap(p, p, {{0, MatrixQ{{1, 0}, {0, 0}}}})}});
}

std::vector<GradedObject> small_objects()
{
	std::vector<GradedObject> out;
	for (int a = 0; a <= 2; ++a)
		for (int b = 0; a + b <= 2; ++b)
			for (int c = 0; a + b + c <= 2; ++c)
			{
				std::map<int, int> dims;
				for (auto [d, k] : {std::pair{0, a}, std::pair{1, b}, std::pair{2, c}})
					if (k)
						dims[d] = k;
				out.emplace_back(dims);
			}
	return out;
}

std::vector<K0Class> sample_classes()
{
	return {K0Class(1), K0Class(2), K0Class::parse("q"), K0Class::parse("1 - q"), K0Class::parse("1 + q^2")};
}

std::vector<GradedObject> lines_and_planes()
{
	return {GradedObject::line(0), GradedObject::line(1), GradedObject::parse("{0:2}"), GradedObject::parse("{1:2}"),
	        GradedObject::parse("{0:1, 1:1}")};
}

MatrixQ random_matrix(Context &ctx, std::size_t rows, std::size_t cols)
{
	MatrixQ m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j)
			if (ctx.uniform(0, 2))
				m(i, j) = Rational(ctx.uniform(-3, 3), ctx.uniform(1, 3));
	return m;
}

GradedMap random_endomorphism(Context &ctx, GradedObject const &x)
{
	std::map<int, MatrixQ> blocks;
	for (auto const &[d, n] : x.dims())
		blocks.emplace(d, random_matrix(ctx, n, n));
	return GradedMap(x, x, std::move(blocks));
}

std::vector<int> parities(GradedObject const &x)
{
	std::vector<int> p;
	for (int d : x.basis_degrees())
		p.push_back(((d % 2) + 2) % 2);
	return p;
}

template <class A>
WittSeries<A> random_witt(Context &ctx, std::size_t order)
{
	std::vector<A> c{RingTraits<A>::one()};
	for (std::size_t k = 1; k <= order; ++k)
	{
		if constexpr (std::is_same_v<A, LaurentZ>)
		{
			LaurentZ v;
			v.add_term(ctx.uniform(-1, 2), ctx.uniform(-2, 2));
			v.add_term(ctx.uniform(-1, 2), ctx.uniform(-2, 2));
			c.push_back(v);
		}
		else
			c.push_back(A(ctx.uniform(-3, 3)));
	}
	return WittSeries<A>(Series<A>(c));
}

// f^lambda by removing corners one at a time
BigInt syt_count(Partition const &pi, std::map<Partition, BigInt> &memo)
{
	if (pi.size() <= 1)
		return 1;
	if (auto it = memo.find(pi); it != memo.end())
		return it->second;
	BigInt total = 0;
	auto parts = pi.parts();
	for (std::size_t i = 0; i < parts.size(); ++i)
		if (i + 1 == parts.size() || parts[i] > parts[i + 1])
		{
			auto smaller = parts;
			if (--smaller[i] == 0)
				smaller.pop_back();
			total += syt_count(Partition(smaller), memo);
		}
	memo[pi] = total;
	return total;
}

std::vector<Rational> det_one_plus_t(MatrixQ const &m)
{
	std::size_t n = m.rows();
	std::vector<Rational> out(n + 1);
	// det(I + tM): expand over permutations, picking t M or the identity on each fixed index
	for (auto const &s : all_permutations(static_cast<int>(n)))
	{
		std::vector<Rational> poly{Rational(s.sign())};
		for (std::size_t i = 0; i < n; ++i)
		{
			int j = s(static_cast<int>(i));
			std::vector<Rational> next(poly.size() + 1);
			for (std::size_t k = 0; k < poly.size(); ++k)
			{
				if (static_cast<std::size_t>(j) == i)
					next[k] += poly[k];
				next[k + 1] += poly[k] * m(i, static_cast<std::size_t>(j));
			}
			poly = std::move(next);
		}
		for (std::size_t k = 0; k <= n; ++k)
			out[k] += poly[k];
	}
	return out;
}

GradedMap power(GradedMap const &f, int k)
{
	GradedMap r = GradedMap::identity(f.source());
	for (int i = 0; i < k; ++i)
		r = r * f;
	return r;
}

bool horizontal_strip(Partition const &mu, Partition const &nu)
{
	if (nu.length() > mu.length() + 1)
		return false;
	for (int i = 0; i < std::max(mu.length(), nu.length()); ++i)
		if (mu[i] > nu[i] || mu[i] < nu[i + 1])
			return false;
	return true;
}

SchurSeries class_series(std::function<RDElement(int)> const &coeff, std::size_t order)
{
	SchurSeries s(order);
	for (std::size_t n = 0; n <= order; ++n)
		s[n] = coeff(static_cast<int>(n));
	return s;
}

// ---- suites ----

void add_partition_checks(std::vector<CheckDef> &out)
{
	out.push_back({"partitions", "partition-counts-match-euler-product", {"partitions.partitions_of", "exact-core.series"},
	               [](Context &ctx) {
		               std::size_t const n = 16;
		               Series<BigInt> f = Series<BigInt>::one(n);
		               for (std::size_t k = 1; k <= n; ++k)
		               {
			               Series<BigInt> g = Series<BigInt>::one(n);
			               g[k] = BigInt(-1);
			               f = f * g;
		               }
		               Series<BigInt> gen = inverse(f);
		               for (std::size_t k = 0; k <= n; ++k)
			               ctx.expect(gen[k] == BigInt(static_cast<long>(partitions_of(static_cast<int>(k)).size())),
			                          "p(" + std::to_string(k) + ")");
	               }});
	out.push_back({"partitions", "conjugation-is-an-involution", {"partitions.conjugate"}, [](Context &ctx) {
		               for (int n = 0; n <= 10; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               Partition c = pi.conjugate();
				               ctx.expect(c.conjugate() == pi && c.size() == n && c.length() == pi[0],
				                          "conjugate of " + pi.str());
			               }
		               ctx.expect(row_partition(5).conjugate() == column_partition(5), "row vs column");
	               }});
	out.push_back({"partitions", "hook-length-formula-counts-standard-tableaux", {"partitions.hook_dimension"},
	               [](Context &ctx) {
		               std::map<Partition, BigInt> memo;
		               for (int n = 0; n <= 9; ++n)
			               for (auto const &pi : partitions_of(n))
				               ctx.expect(pi.dimension() == syt_count(pi, memo), "f^" + pi.str());
	               }});
	out.push_back({"partitions", "hook-content-formula-matches-jacobi-trudi", {"partitions.dim_poly_eval", "rep-ring.ev"},
	               [](Context &ctx) {
		               for (long m = 0; m <= 4; ++m)
			               for (int n = 0; n <= 6; ++n)
				               for (auto const &pi : partitions_of(n))
					               ctx.expect(ev(K0Class(m), SymFunc::schur(pi)).value() == LaurentZ(dim_poly_eval(pi, m)),
					                          "d_" + pi.str() + "(" + std::to_string(m) + ")");
	               }});
	out.push_back({"partitions", "class-sizes-sum-to-factorial", {"partitions.centralizer_order"}, [](Context &ctx) {
		               for (int n = 0; n <= 9; ++n)
		               {
			               BigInt total = 0, nf = factorial(n);
			               for (auto const &mu : partitions_of(n))
				               total += nf / mu.centralizer_order();
			               ctx.expect(total == nf, "n=" + std::to_string(n));
		               }
	               }});
	out.push_back({"partitions", "literals-round-trip-and-order-is-total", {"partitions.ordering"}, [](Context &ctx) {
		               for (int n = 0; n <= 7; ++n)
		               {
			               auto ps = partitions_of(n);
			               for (auto const &a : ps)
			               {
				               ctx.expect(Partition::parse(a.str()) == a, "literal " + a.str());
				               for (auto const &b : ps)
					               ctx.expect((a < b) + (b < a) + (a == b) == 1, a.str() + " vs " + b.str());
			               }
		               }
	               }});
}

void add_character_checks(std::vector<CheckDef> &out)
{
	out.push_back({"characters", "row-orthogonality", {"symgroup.character_table", "symgroup.character"}, [](Context &ctx) {
		               for (int n = 1; n <= 6; ++n)
		               {
			               auto t = character_table(n);
			               for (auto const &pi : t->labels)
				               for (auto const &rho : t->labels)
				               {
					               Rational s;
					               for (auto const &mu : t->labels)
						               s += Rational((*t)(pi, mu) * (*t)(rho, mu)) / Rational(mu.centralizer_order());
					               ctx.expect(s == Rational(pi == rho ? 1 : 0), "<" + pi.str() + "," + rho.str() + ">");
				               }
		               }
	               }});
	out.push_back({"characters", "column-orthogonality", {"symgroup.character_table"}, [](Context &ctx) {
		               for (int n = 1; n <= 6; ++n)
		               {
			               auto t = character_table(n);
			               for (auto const &mu : t->labels)
				               for (auto const &nu : t->labels)
				               {
					               BigInt s = 0;
					               for (auto const &pi : t->labels)
						               s += BigInt((*t)(pi, mu) * (*t)(pi, nu));
					               ctx.expect(s == (mu == nu ? mu.centralizer_order() : BigInt(0)),
					                          "columns " + mu.str() + "," + nu.str());
				               }
		               }
	               }});
	out.push_back({"characters", "degree-squares-sum-to-order", {"symgroup.character"}, [](Context &ctx) {
		               for (int n = 0; n <= 8; ++n)
		               {
			               BigInt s = 0;
			               for (auto const &pi : partitions_of(n))
			               {
				               long chi1 = character(pi, column_partition(n));
				               s += BigInt(chi1) * chi1;
			               }
			               ctx.expect(s == factorial(n), "n=" + std::to_string(n));
		               }
	               }});
	out.push_back({"characters", "murnaghan-nakayama-matches-specht-traces",
	               {"symgroup.character", "tensor-model.irreducible_representation", "symgroup.permutation"},
	               [](Context &ctx) {
		               for (int n = 1; n <= 4; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               GObject v = irreducible_representation(pi);
				               for (int g = 0; g < v.group()->size(); ++g)
				               {
					               Permutation const &s = v.group()->permutation(g);
					               ctx.expect(categorical_trace(v.action(g)) == Rational(character(pi, s.cycle_type())),
					                          "chi_" + pi.str() + s.str());
				               }
			               }
	               }});
	out.push_back({"characters", "isotypic-projectors-are-orthogonal-idempotents", {"symgroup.isotypic_projector"},
	               [](Context &ctx) {
		               for (int n = 1; n <= 4; ++n)
		               {
			               GroupAlgebraElement sum(n);
			               for (auto const &pi : partitions_of(n))
			               {
				               auto p = isotypic_projector(pi);
				               ctx.expect(p * p == p, "idempotent " + pi.str());
				               for (auto const &rho : partitions_of(n))
					               if (!(rho == pi))
						               ctx.expect((p * isotypic_projector(rho)).terms().empty(),
						                          "orthogonal " + pi.str() + "," + rho.str());
				               sum = sum + p;
			               }
			               GroupAlgebraElement one(n);
			               one.add(Permutation::identity(n), 1);
			               ctx.expect(sum == one, "completeness n=" + std::to_string(n));
		               }
	               }});
	out.push_back({"characters", "projector-ranks-on-regular-representation",
	               {"tensor-model.isotypic_projector_map", "exact-core.matrix.rank"}, [](Context &ctx) {
		               for (int n = 1; n <= 4; ++n)
		               {
			               GObject reg = preset("reg:sym" + std::to_string(n));
			               for (auto const &pi : partitions_of(n))
			               {
				               BigInt d = pi.dimension();
				               GradedMap p = isotypic_projector_map(reg, pi);
				               ctx.expect(BigInt(static_cast<long>(rank(p.block(0)))) == d * d, "rank " + pi.str());
			               }
		               }
	               }});
	out.push_back({"characters", "characteristic-map-sends-irreducibles-to-schur", {"symfunc.ch"}, [](Context &ctx) {
		               for (int n = 0; n <= 5; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               ClassFunction chi;
				               for (auto const &mu : partitions_of(n))
					               chi[mu] = Rational(character(pi, mu));
				               ctx.expect(ch(n, chi) == SymFunc::schur(pi), "ch chi_" + pi.str());
			               }
	               }});
	out.push_back({"characters", "sign-is-the-alternating-character", {"symgroup.permutation"}, [](Context &ctx) {
		               for (int n = 1; n <= 5; ++n)
			               for (auto const &s : all_permutations(n))
			               {
				               ctx.expect(s.sign() == character(column_partition(n), s.cycle_type()), "sign " + s.str());
				               ctx.expect((s * s.inverse()).is_identity(), "inverse " + s.str());
			               }
	               }});
	out.push_back({"characters", "finite-groups-multiply-like-permutations", {"symgroup.finite_group"}, [](Context &ctx) {
		               auto s4 = FiniteGroup::symmetric(4);
		               for (int g = 0; g < s4->size(); ++g)
			               for (int h = 0; h < s4->size(); ++h)
				               ctx.expect(s4->permutation(s4->mul(g, h)) == s4->permutation(g) * s4->permutation(h),
				                          s4->label(g) + "*" + s4->label(h));
		               auto c6 = FiniteGroup::cyclic(6);
		               for (int g = 0; g < 6; ++g)
			               ctx.expect(c6->power(g, 6) == c6->identity() && c6->mul(g, c6->inverse(g)) == c6->identity(),
			                          c6->label(g));
	               }});
}

void add_symfunc_checks(std::vector<CheckDef> &out)
{
	out.push_back({"symfunc", "newton-identities", {"symfunc.newton_check", "symfunc.power_sum"}, [](Context &ctx) {
		               for (int n = 1; n <= 8; ++n)
			               ctx.expect(newton_check(n), "n=" + std::to_string(n));
	               }});
	out.push_back({"symfunc", "vanishing-schur-sums", {"symfunc.vanishing_schur_sum"}, [](Context &ctx) {
		               for (int n = 1; n <= 4; ++n)
			               for (auto const &pi : partitions_of(n))
				               ctx.expect(vanishing_schur_sum(pi).is_zero(), "pi=" + pi.str());
	               }});
	out.push_back({"symfunc", "pieri-rule", {"symfunc.lr", "symfunc.schur_product"}, [](Context &ctx) {
		               for (int a = 0; a <= 5; ++a)
			               for (int k = 0; a + k <= 7; ++k)
				               for (auto const &mu : partitions_of(a))
				               {
					               SymFunc prod = SymFunc::schur(mu) * complete(k);
					               for (auto const &nu : partitions_of(a + k))
						               ctx.expect(prod.coeff(nu) == Rational(horizontal_strip(mu, nu) ? 1 : 0),
						                          "s_" + mu.str() + " h_" + std::to_string(k) + " at " + nu.str());
				               }
	               }});
	out.push_back({"symfunc", "lr-symmetries", {"symfunc.lr"}, [](Context &ctx) {
		               for (int a = 0; a <= 3; ++a)
			               for (int b = 0; a + b <= 6; ++b)
				               for (auto const &mu : partitions_of(a))
					               for (auto const &eta : partitions_of(b))
						               for (auto const &pi : partitions_of(a + b))
						               {
							               long c = lr(mu, eta, pi);
							               ctx.expect(c == lr(eta, mu, pi) &&
							                              c == lr(mu.conjugate(), eta.conjugate(), pi.conjugate()),
							                          mu.str() + "," + eta.str() + "->" + pi.str());
						               }
	               }});
	out.push_back({"symfunc", "product-is-associative", {"symfunc.schur_product"}, [](Context &ctx) {
		               auto random_f = [&](int n) {
			               SymFunc f;
			               for (auto const &pi : partitions_of(n))
				               f.add(pi, Rational(ctx.uniform(-2, 2)));
			               return f;
		               };
		               for (int trial = 0; trial < 12; ++trial)
		               {
			               SymFunc f = random_f(ctx.uniform(0, 2)), g = random_f(ctx.uniform(0, 2)),
			                       h = random_f(ctx.uniform(0, 2));
			               ctx.expect((f * g) * h == f * (g * h), "associativity");
			               ctx.expect(f * g == g * f, "commutativity");
			               ctx.expect(f * (g + h) == f * g + f * h, "distributivity");
		               }
	               }});
	out.push_back({"symfunc", "omega-is-an-involution-transposing-schur", {"symfunc.omega"}, [](Context &ctx) {
		               for (int n = 0; n <= 6; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               SymFunc w = omega(SymFunc::schur(pi));
				               ctx.expect(w == SymFunc::schur(pi.conjugate()) && omega(w) == SymFunc::schur(pi),
				                          "omega s_" + pi.str());
			               }
	               }});
	out.push_back({"symfunc", "power-sums-are-alternating-hook-sums", {"symfunc.powersum"}, [](Context &ctx) {
		               for (int k = 1; k <= 7; ++k)
		               {
			               SymFunc hooks;
			               for (int leg = 0; leg < k; ++leg)
			               {
				               std::vector<int> parts{k - leg};
				               parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
				               hooks.add(Partition(parts), Rational(leg % 2 ? -1 : 1));
			               }
			               ctx.expect(power_sum(k) == hooks, "p_" + std::to_string(k));
		               }
		               for (int n = 0; n <= 5; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               SymFunc s = SymFunc::schur(pi, Rational(ctx.uniform(1, 5)));
				               ctx.expect(from_powersum(to_powersum(s)) == s, "round trip " + pi.str());
			               }
	               }});
}

template <class A>
void witt_axioms(Context &ctx, std::string const &ring)
{
	std::size_t const order = 3;
	auto one = WittSeries<A>(Series<A>(std::vector<A>{RingTraits<A>::one(), RingTraits<A>::one()}, order));
	auto zero = WittSeries<A>::zero(order);
	for (int trial = 0; trial < 6; ++trial)
	{
		auto f = random_witt<A>(ctx, order), g = random_witt<A>(ctx, order), h = random_witt<A>(ctx, order);
		ctx.expect(witt_add(f, g) == witt_add(g, f), ring + ": addition commutes");
		ctx.expect(witt_add(witt_add(f, g), h) == witt_add(f, witt_add(g, h)), ring + ": addition associates");
		ctx.expect(witt_add(f, zero) == f && witt_add(f, witt_neg(f)) == zero, ring + ": additive inverse");
		ctx.expect(witt_mul(f, g) == witt_mul(g, f), ring + ": product commutes");
		ctx.expect(witt_mul(witt_mul(f, g), h) == witt_mul(f, witt_mul(g, h)), ring + ": product associates");
		ctx.expect(witt_mul(f, witt_add(g, h)) == witt_add(witt_mul(f, g), witt_mul(f, h)), ring + ": distributive");
		ctx.expect(witt_mul(f, one) == f, ring + ": unit 1 + t");
		auto gf = ghost(f), gg = ghost(g), gs = ghost(witt_add(f, g)), gp = ghost(witt_mul(f, g));
		for (std::size_t m = 0; m < order; ++m)
			ctx.expect(gs[m] == gf[m] + gg[m] && gp[m] == gf[m] * gg[m], ring + ": ghost map");
		ctx.expect(from_ghost(gf) == f, ring + ": ghost inverse");
	}
}

void add_witt_checks(std::vector<CheckDef> &out)
{
	out.push_back({"witt", "witt-ring-axioms",
	               {"lambda-ring.witt_add", "lambda-ring.witt_neg", "lambda-ring.witt_mul", "lambda-ring.ghost",
	                "lambda-ring.from_ghost"},
	               [](Context &ctx) {
		               witt_axioms<BigInt>(ctx, "Z");
		               witt_axioms<Rational>(ctx, "Q");
		               witt_axioms<LaurentZ>(ctx, "Z[q,q^-1]");
	               }});
	out.push_back({"witt", "universal-polynomials-on-alphabets",
	               {"lambda-ring.universal_product_poly", "lambda-ring.universal_composition_poly"}, [](Context &ctx) {
		               auto elementary_values = [](std::vector<BigInt> const &alpha, int upto) {
			               std::vector<BigInt> e(static_cast<std::size_t>(upto) + 1, BigInt(0));
			               e[0] = 1;
			               for (auto const &a : alpha)
				               for (int k = upto; k >= 1; --k)
					               e[k] += a * e[k - 1];
			               return std::vector<BigInt>(e.begin() + 1, e.end());
		               };
		               for (int trial = 0; trial < 4; ++trial)
		               {
			               std::vector<BigInt> x, y;
			               for (int i = 0; i < 3; ++i)
				               x.push_back(BigInt(ctx.uniform(-3, 3)));
			               for (int i = 0; i < 2; ++i)
				               y.push_back(BigInt(ctx.uniform(-3, 3)));
			               std::vector<BigInt> xy;
			               for (auto const &a : x)
				               for (auto const &b : y)
					               xy.push_back(a * b);
			               auto ex = elementary_values(x, 6), ey = elementary_values(y, 4), exy = elementary_values(xy, 4);
			               for (int n = 1; n <= 4; ++n)
				               ctx.expect(universal_product_poly(n).evaluate<BigInt>(std::span<BigInt const>(ex.data(), n),
				                                                                     std::span<BigInt const>(ey.data(), n)) ==
				                              exy[n - 1],
				                          "P_" + std::to_string(n));
			               for (int m = 1; m <= 3; ++m)
			               {
				               // monomials x_{i1}...x_{im} with i1 < ... < im
				               std::vector<BigInt> prods;
				               std::function<void(std::size_t, int, BigInt)> rec = [&](std::size_t from, int left, BigInt acc) {
					               if (left == 0)
					               {
						               prods.push_back(acc);
						               return;
					               }
					               for (std::size_t i = from; i < x.size(); ++i)
						               rec(i + 1, left - 1, acc * x[i]);
				               };
				               rec(0, m, BigInt(1));
				               for (int n = 1; n * m <= 6; ++n)
				               {
					               auto e = elementary_values(prods, n);
					               ctx.expect(universal_composition_poly(n, m).evaluate<BigInt>(
					                              std::span<BigInt const>(ex.data(), static_cast<std::size_t>(n * m))) ==
					                              e[n - 1],
					                          "P_" + std::to_string(n) + "," + std::to_string(m));
				               }
			               }
		               }
	               }});
	out.push_back({"witt", "special-lambda-rings",
	               {"lambda-ring.special_check", "lambda-ring.lambda_series"}, [](Context &ctx) {
		               for (long a = -2; a <= 3; ++a)
			               for (long b = -1; b <= 2; ++b)
				               for (int n = 1; n <= 3; ++n)
					               for (int m = 1; n * m <= 6; ++m)
						               ctx.expect(special_check(IntegerLambda(), BigInt(a), BigInt(b), n, m),
						                          "Z " + std::to_string(a) + "," + std::to_string(b));
		               for (auto const &x : {Rational(1, 2), Rational(-2, 3)})
			               for (int n = 1; n <= 3; ++n)
				               ctx.expect(special_check(RationalLambda(), x, Rational(3), n, 2), "Q " + x.str());
		               std::vector<LaurentZ> samples{LaurentZ::parse("q"), LaurentZ::parse("1 + q^2"), LaurentZ::parse("1 - q"),
		                                             LaurentZ::parse("2q - q^-1")};
		               for (auto const &x : samples)
			               for (auto const &y : samples)
			               {
				               ctx.expect(special_check(LaurentLambda(), x, y, 2, 1), "P_2 at " + x.str() + "," + y.str());
				               ctx.expect(special_check(LaurentLambda(), x, y, 2, 2), "P_2,2 at " + x.str());
			               }
	               }});
	out.push_back({"witt", "frobenius-operators-compose", {"lambda-ring.adams_on_witt"}, [](Context &ctx) {
		               for (int trial = 0; trial < 4; ++trial)
		               {
			               auto f = random_witt<BigInt>(ctx, 12), g = random_witt<BigInt>(ctx, 12);
			               for (int m = 2; m <= 3; ++m)
				               for (int n = 2; n <= 2; ++n)
					               ctx.expect(adams_on_witt(adams_on_witt(f, n), m) == adams_on_witt(f, m * n),
					                          "psi_" + std::to_string(m) + " psi_" + std::to_string(n));
			               for (int n = 1; n <= 4; ++n)
				               ctx.expect(adams_on_witt(witt_add(f, g), n) == witt_add(adams_on_witt(f, n), adams_on_witt(g, n)),
				                          "psi additive");
		               }
	               }});
}

void add_schur_checks(std::vector<CheckDef> &out)
{
	out.push_back({"schur", "hook-content-equals-projector-rank", {"tensor-model.schur_object"}, [](Context &ctx) {
		               for (int m = 0; m <= 3; ++m)
		               {
			               GradedObject x(std::map<int, int>{{0, m}});
			               for (int n = 0; n <= 4; ++n)
				               for (auto const &pi : partitions_of(n))
					               ctx.expect(BigInt(schur_object(x, pi, ctx.bound).dim(0)) == dim_poly_eval(pi, m),
					                          "S_" + pi.str() + " of dim " + std::to_string(m));
		               }
	               }});
	out.push_back({"schur", "odd-objects-transpose-shapes", {"tensor-model.schur_object"}, [](Context &ctx) {
		               for (int m = 1; m <= 3; ++m)
		               {
			               GradedObject odd(std::map<int, int>{{1, m}});
			               for (int n = 1; n <= 4; ++n)
				               for (auto const &pi : partitions_of(n))
				               {
					               GradedObject s = schur_object(odd, pi, ctx.bound);
					               ctx.expect(BigInt(s.dim(n)) == dim_poly_eval(pi.conjugate(), m) &&
					                              s.total_dim() == s.dim(n),
					                          "S_" + pi.str() + " of odd dim " + std::to_string(m));
				               }
		               }
	               }});
	out.push_back({"schur", "tensor-power-decomposition", {"rep-ring.aw_check"}, [](Context &ctx) {
		               for (auto const &x : {GradedObject::parse("{0:2}"), GradedObject::parse("{0:1, 1:1}"),
		                                     GradedObject::parse("{1:2, 2:1}")})
			               for (int n = 1; n <= 3; ++n)
				               ctx.expect(aw_check(x, n, ctx.bound), x.str() + " n=" + std::to_string(n));
	               }});
	out.push_back({"schur", "serial-and-parallel-kernels-agree",
	               {"exact-core.matrix.rank", "tensor-model.permuted_trace"}, [](Context &ctx) {
		               for (int trial = 0; trial < 8; ++trial)
		               {
			               MatrixQ m = random_matrix(ctx, 20, 16);
			               std::size_t r = kernels::serial::bareiss_rank(m);
			               ctx.expect(r == kernels::parallel::bareiss_rank(m), "bareiss");
			               ctx.expect(r + nullspace(m).cols() == m.cols(), "rank-nullity");
		               }
		               std::vector<Bidegree> basis{{0, 0}, {1, 0}, {1, 2}, {0, 3}};
		               for (int n = 1; n <= 4; ++n)
			               for (auto const &pi : partitions_of(n))
				               ctx.expect(kernels::serial::schur_dims(basis, pi) == kernels::parallel::schur_dims(basis, pi),
				                          "schur_dims " + pi.str());
		               GradedObject x = GradedObject::parse("{0:2, 1:1}");
		               MatrixQ f = random_endomorphism(ctx, x).dense();
		               for (int n = 1; n <= 4; ++n)
			               for (auto const &s : all_permutations(n))
				               ctx.expect(kernels::serial::permuted_trace(f, parities(x), s) ==
				                              kernels::parallel::permuted_trace(f, parities(x), s),
				                          "permuted trace " + s.str());
	               }});
	out.push_back({"schur", "permuted-traces-factor-over-cycles", {"tensor-model.permuted_trace"}, [](Context &ctx) {
		               GradedObject x = GradedObject::parse("{0:2, 1:2}");
		               GradedMap f = random_endomorphism(ctx, x);
		               for (int n = 1; n <= 5; ++n)
			               for (auto const &mu : partitions_of(n))
			               {
				               Rational expected = 1;
				               for (int len : mu.parts())
					               expected *= categorical_trace(power(f, len));
				               ctx.expect(kernels::parallel::permuted_trace(f.dense(), parities(x),
				                                                            Permutation::of_cycle_type(mu)) == expected,
				                          "cycle type " + mu.str());
			               }
	               }});
	out.push_back({"schur", "symmetric-action-is-a-homomorphism", {"tensor-model.sym_action"}, [](Context &ctx) {
		               for (auto const &x : {GradedObject::parse("{0:2}"), GradedObject::parse("{0:1, 1:1}"),
		                                     GradedObject::parse("{1:1, 2:1}")})
			               for (int n = 0; n <= 3; ++n)
			               {
				               bool ok = true;
				               try
				               {
					               GObject p = sym_action(x, n, ctx.bound);
					               GObject(p.object(), p.group(), p.actions(), GObject::Check::yes);
				               }
				               catch (Error const &)
				               {
					               ok = false;
				               }
				               ctx.expect(ok, x.str() + " n=" + std::to_string(n));
			               }
	               }});
	out.push_back({"schur", "exterior-traces-are-characteristic-polynomial-coefficients",
	               {"tensor-model.char_series", "tensor-model.trace_schur"}, [](Context &ctx) {
		               for (auto const &name : {"perm:sym3", "twisted:sym3", "reg:cyc4", "perm:sym4"})
		               {
			               GObject x = preset(name);
			               for (int g = 0; g < x.group()->size(); ++g)
			               {
				               auto expected = det_one_plus_t(x.action(g).dense());
				               auto chi = char_series(x, g, 4);
				               for (std::size_t k = 0; k <= 4; ++k)
					               ctx.expect(chi[k] == (k < expected.size() ? expected[k] : Rational(0)),
					                          std::string(name) + " at " + x.group()->label(g));
			               }
		               }
	               }});
	out.push_back({"schur", "schur-traces-at-identity-are-dimensions", {"tensor-model.trace_schur"}, [](Context &ctx) {
		               GObject x = preset("perm:sym3");
		               for (int n = 1; n <= 4; ++n)
			               for (auto const &pi : partitions_of(n))
				               ctx.expect(trace_schur(x, x.group()->identity(), pi) == Rational(dim_poly_eval(pi, 3)),
				                          "tr id on S_" + pi.str());
	               }});
	out.push_back({"schur", "lambda-sigma-is-multiplicative", {"rep-ring.lambda_sigma"}, [](Context &ctx) {
		               auto pieces = lines_and_planes();
		               for (auto const &x : pieces)
			               for (auto const &y : pieces)
				               ctx.expect(lambda_sigma(x + y, 4, ctx.bound) ==
				                              lambda_sigma(x, 4, ctx.bound) * lambda_sigma(y, 4, ctx.bound),
				                          x.str() + " + " + y.str());
	               }});
	out.push_back({"schur", "equivariant-kernel-of-augmentation",
	               {"tensor-model.equivariant_kernel", "symgroup.character"}, [](Context &ctx) {
		               for (int n = 2; n <= 4; ++n)
		               {
			               GObject perm = preset("perm:sym" + std::to_string(n));
			               GObject triv = preset("trivial:sym" + std::to_string(n));
			               MatrixQ ones(1, static_cast<std::size_t>(n));
			               for (int i = 0; i < n; ++i)
				               ones(0, static_cast<std::size_t>(i)) = 1;
			               GObject k = equivariant_kernel(perm, triv, GradedMap(perm.object(), triv.object(), {{0, ones}}));
			               std::vector<int> hook{n - 1, 1};
			               for (int g = 0; g < k.group()->size(); ++g)
				               ctx.expect(categorical_trace(k.action(g)) ==
				                              Rational(character(Partition(hook), k.group()->permutation(g).cycle_type())),
				                          "n=" + std::to_string(n));
		               }
	               }});
	out.push_back({"schur", "graded-traces-multiply-under-tensor",
	               {"tensor-model.graded_object", "tensor-model.graded_map", "tensor-model.categorical_trace",
	                "tensor-model.graded_trace"},
	               [](Context &ctx) {
		               GradedObject x = GradedObject::parse("{0:2, 1:1}"), y = GradedObject::parse("{-1:1, 0:1, 2:1}");
		               for (int trial = 0; trial < 6; ++trial)
		               {
			               GradedMap f = random_endomorphism(ctx, x), h = random_endomorphism(ctx, y);
			               GradedMap fh = tensor(f, h);
			               ctx.expect(categorical_trace(fh) == categorical_trace(f) * categorical_trace(h), "supertrace");
			               ctx.expect(graded_trace(Rational(36) * fh) ==
			                              graded_trace(Rational(6) * f) * graded_trace(Rational(6) * h),
			                          "graded trace");
			               ctx.expect(tensor(x, y).total_dim() == x.total_dim() * y.total_dim(), "dimension");
		               }
	               }});
}

void add_adams_checks(std::vector<CheckDef> &out)
{
	static char const *const reps[] = {"perm:sym3", "twisted:sym3", "reg:cyc4"};
	out.push_back({"adams", "ghost-components-are-power-traces", {"tensor-model.char_series", "lambda-ring.ghost"},
	               [](Context &ctx) {
		               for (auto const *name : reps)
		               {
			               GObject x = preset(name);
			               for (int g = 0; g < x.group()->size(); ++g)
			               {
				               auto gh = ghost(char_series(x, g, 6));
				               for (int m = 1; m <= 6; ++m)
					               ctx.expect(gh[static_cast<std::size_t>(m - 1)] == categorical_trace(power(x.action(g), m)),
					                          std::string(name) + " g=" + x.group()->label(g) + " m=" + std::to_string(m));
			               }
		               }
	               }});
	out.push_back({"adams", "frobenius-on-characteristic-series", {"lambda-ring.adams_on_witt", "tensor-model.char_series"},
	               [](Context &ctx) {
		               for (auto const *name : reps)
		               {
			               GObject x = preset(name);
			               for (int g = 0; g < x.group()->size(); ++g)
			               {
				               auto chi = char_series(x, g, 6);
				               for (int n = 1; n <= 6; ++n)
				               {
					               // char_series is a polynomial of degree dim X, so padding is exact
					               WittSeries<Rational> padded(chi.series().extended(static_cast<std::size_t>(6 * n)));
					               ctx.expect(adams_on_witt(padded, n) == char_series(x, x.group()->power(g, n), 6),
					                          std::string(name) + " g=" + x.group()->label(g) + " n=" + std::to_string(n));
				               }
			               }
		               }
	               }});
	out.push_back({"adams", "adams-on-laurent-classes-substitutes-powers", {"lambda-ring.adams_on_base"}, [](Context &ctx) {
		               for (auto const &text : {"q", "1 + q^2", "1 - q", "2q - q^-1", "-3 + q^-2"})
		               {
			               LaurentZ x = LaurentZ::parse(text);
			               for (int n = 1; n <= 6; ++n)
				               ctx.expect(adams_on_base(LaurentLambda(), x, n) == x.substitute_power(n),
				                          std::string("psi_") + std::to_string(n) + "(" + text + ")");
		               }
		               for (long m = -3; m <= 3; ++m)
			               for (int n = 1; n <= 5; ++n)
				               ctx.expect(adams_on_base(IntegerLambda(), BigInt(m), n) == BigInt(m), "psi on Z");
	               }});
	out.push_back({"adams", "characteristic-series-of-sums-and-products",
	               {"tensor-model.char_series", "lambda-ring.witt_add", "lambda-ring.witt_mul"}, [](Context &ctx) {
		               GObject a = preset("perm:sym3"), b = preset("sign:sym3");
		               GObject sum = direct_sum(a, b), prod = tensor(a, b);
		               for (int g = 0; g < 6; ++g)
		               {
			               ctx.expect(char_series(sum, g, 4) == witt_add(char_series(a, g, 4), char_series(b, g, 4)),
			                          "sum at " + a.group()->label(g));
			               ctx.expect(char_series(prod, g, 3) == witt_mul(char_series(a, g, 3), char_series(b, g, 3)),
			                          "product at " + a.group()->label(g));
		               }
	               }});
}

void add_complex_checks(std::vector<CheckDef> &out)
{
	out.push_back({"complexes", "cohomology-of-rank-one-differential",
	               {"tensor-model.complex", "tensor-model.cohomology"}, [](Context &ctx) {
		               auto h = cohomology(rank_one_complex());
		               ctx.expect(h.size() == 2 && h.at(0) == GradedObject::unit() && h.at(1) == GradedObject::unit(),
		                          "H of rank one map on Q^2");
		               GradedMap id = GradedMap::identity(GradedObject::unit());
		               ctx.expect(cohomology(ComplexObject({{0, GradedObject::unit()}, {1, GradedObject::unit()}}, {{0, id}}))
		                              .empty(),
		                          "acyclic");
	               }});
	out.push_back({"complexes", "euler-class-unchanged-by-filtrations",
	               {"rep-ring.k0_class", "tensor-model.gr_S", "tensor-model.gr_tau"}, [](Context &ctx) {
		               ComplexObject z = rank_one_complex();
		               ctx.expect(k0_class(z) == k0_class(gr_tau(z)) && k0_class(z) == k0_class(gr_S(z)), "rank one");
		               ComplexObject w = direct_sum(z.shifted(1), ComplexObject::concentrated(GradedObject::parse("{1:1}"), 2));
		               ctx.expect(k0_class(w) == k0_class(gr_tau(w)), "mixed");
	               }});
	out.push_back({"complexes", "lambda-sigma-is-a-product-over-terms", {"rep-ring.lambda_sigma"}, [](Context &ctx) {
		               ComplexObject z = rank_one_complex();
		               SchurSeries rhs = SchurSeries::one(3);
		               for (auto const &[n, x] : z.terms())
		               {
			               SchurSeries l = lambda_sigma(x, 3, ctx.bound);
			               rhs = rhs * (n % 2 ? inverse(l) : l);
		               }
		               ctx.expect(lambda_sigma(z, 3, ctx.bound) == rhs, "product over terms");
	               }});
	out.push_back({"complexes", "lambda-sigma-is-a-product-over-cohomology",
	               {"rep-ring.lambda_sigma", "tensor-model.schur_complex_cohomology"}, [](Context &ctx) {
		               ComplexObject z = rank_one_complex();
		               SchurSeries rhs = SchurSeries::one(3);
		               for (auto const &[n, h] : cohomology(z))
		               {
			               SchurSeries l = lambda_sigma(h, 3, ctx.bound);
			               rhs = rhs * (n % 2 ? inverse(l) : l);
		               }
		               ctx.expect(lambda_sigma(z, 3, ctx.bound) == rhs, "product over cohomology");
		               ctx.expect(lambda_sigma_via_cohomology(z, 3, ctx.bound) == rhs, "cohomology of S_mu(Z)");
	               }});
	out.push_back({"complexes", "shift-inverts-lambda", {"tensor-model.shifted", "rep-ring.lambda_of_class"},
	               [](Context &ctx) {
		               for (auto const &x : lines_and_planes())
		               {
			               ComplexObject z = ComplexObject::concentrated(x);
			               ComplexObject s = z.shifted(1);
			               // exterior powers by projector ranks on both sides
			               Series<LaurentZ> alt(6), alt_shift(6);
			               for (int n = 0; n <= 6; ++n)
			               {
				               alt[static_cast<std::size_t>(n)] =
				                   k0_class(schur_bidegree_dims(z.basis(), column_partition(n), ctx.bound)).value();
				               alt_shift[static_cast<std::size_t>(n)] =
				                   k0_class(schur_bidegree_dims(s.basis(), column_partition(n), ctx.bound)).value();
			               }
			               ctx.expect(alt_shift == inverse(alt), "lambda(X[1]) for " + x.str());
			               ctx.expect(lambda_of_class(k0_class(s), 6).series() == alt_shift, "class of X[1] for " + x.str());
			               ctx.expect(lambda_sigma(s, 4, ctx.bound) * lambda_sigma(z, 4, ctx.bound) == SchurSeries::one(4),
			                          "lambda_Sigma(X[1]) for " + x.str());
		               }
	               }});
	out.push_back({"complexes", "symmetric-powers-invert-lambda", {"tensor-model.schur_object", "rep-ring.lambda_of_class"},
	               [](Context &ctx) {
		               for (auto const &x : lines_and_planes())
		               {
			               Series<LaurentZ> sym(6);
			               for (int n = 0; n <= 6; ++n)
			               {
				               LaurentZ c = k0_class(schur_object(x, row_partition(n), ctx.bound)).value();
				               sym[static_cast<std::size_t>(n)] = n % 2 ? -c : c;
			               }
			               ctx.expect(sym * lambda_of_class(k0_class(x), 6).series() == Series<LaurentZ>::one(6),
			                          "Sym series of " + x.str());
		               }
	               }});
	out.push_back({"complexes", "schur-functors-preserve-euler-characteristic",
	               {"tensor-model.schur_complex_cohomology", "tensor-model.complex"}, [](Context &ctx) {
		               ComplexObject z = rank_one_complex();
		               GradedMap id = GradedMap::identity(GradedObject::line(1));
		               ComplexObject acyclic({{0, GradedObject::line(1)}, {1, GradedObject::line(1)}}, {{0, id}});
		               for (int n = 1; n <= 3; ++n)
			               for (auto const &pi : partitions_of(n))
			               {
				               ctx.expect(k0_class(schur_bidegree_dims(z.basis(), pi, ctx.bound)) ==
				                              k0_class(schur_complex_cohomology(z, pi, ctx.bound)),
				                          "S_" + pi.str());
				               ctx.expect(schur_complex_cohomology(acyclic, pi, ctx.bound).empty(), "acyclic S_" + pi.str());
			               }
	               }});
	out.push_back({"complexes", "equivariant-euler-class",
	               {"tensor-model.equivariant_complex", "rep-ring.euler_xi"}, [](Context &ctx) {
		               GObject triv = preset("trivial:sym2"), sign = preset("sign:sym2"), perm = preset("perm:sym2");
		               ctx.expect(euler_xi(EquivariantComplex({{0, triv}, {1, sign}}, {})) == RDElement::parse("[2] - [1,1]"),
		                          "trivial minus sign");
		               ctx.expect(euler_xi(EquivariantComplex({{0, perm}, {1, perm}}, {{0, GradedMap::identity(perm.object())}}))
		                              .is_zero(),
		                          "acyclic");
		               GradedMap sum(perm.object(), triv.object(), {{0, MatrixQ{{1, 1}}}});
		               EquivariantComplex z({{0, perm}, {1, triv}}, {{0, sum}});
		               RDElement xi = euler_xi(z);
		               ctx.expect(xi == RDElement::parse("[1,1]"), "augmentation");
		               ctx.expect(K0Class(total_class(xi)) == k0_class(gr_tau(z.underlying())), "total class");
	               }});
}

void add_repring_checks(std::vector<CheckDef> &out)
{
	out.push_back({"repring", "ev-matches-schur-functors", {"rep-ring.ev", "tensor-model.schur_object"}, [](Context &ctx) {
		               for (auto const &x : small_objects())
			               for (int n = 0; n <= 3; ++n)
				               for (auto const &pi : partitions_of(n))
					               ctx.expect(ev(k0_class(x), SymFunc::schur(pi)) == k0_class(schur_object(x, pi, ctx.bound)),
					                          "S_" + pi.str() + " of " + x.str());
	               }});
	out.push_back({"repring", "ev-is-a-ring-homomorphism", {"rep-ring.ev"}, [](Context &ctx) {
		               for (auto const &x : sample_classes())
			               for (int a = 0; a <= 4; ++a)
				               for (int b = 0; a + b <= 4; ++b)
					               for (auto const &mu : partitions_of(a))
						               for (auto const &eta : partitions_of(b))
							               ctx.expect(ev(x, SymFunc::schur(mu) * SymFunc::schur(eta)) ==
							                              ev(x, SymFunc::schur(mu)) * ev(x, SymFunc::schur(eta)),
							                          "x=" + x.str() + " " + mu.str() + "*" + eta.str());
	               }});
	out.push_back({"repring", "ev-negation-rule", {"rep-ring.ev"}, [](Context &ctx) {
		               for (auto const &x : sample_classes())
			               for (int n = 0; n <= 4; ++n)
				               for (auto const &pi : partitions_of(n))
				               {
					               K0Class rhs = ev(x, SymFunc::schur(pi.conjugate()));
					               ctx.expect(ev(-x, SymFunc::schur(pi)) == (n % 2 ? -rhs : rhs),
					                          "x=" + x.str() + " pi=" + pi.str());
				               }
	               }});
	out.push_back({"repring", "ev-addition-rule", {"rep-ring.ev", "symfunc.lr"}, [](Context &ctx) {
		               for (auto const &x : sample_classes())
			               for (auto const &y : sample_classes())
				               for (int n = 0; n <= 3; ++n)
					               for (auto const &pi : partitions_of(n))
					               {
						               K0Class sum;
						               for (int a = 0; a <= n; ++a)
							               for (auto const &mu : partitions_of(a))
								               for (auto const &eta : partitions_of(n - a))
									               if (long c = lr(mu, eta, pi))
										               sum = sum + K0Class(c) * ev(x, SymFunc::schur(mu)) *
										                               ev(y, SymFunc::schur(eta));
						               ctx.expect(ev(x + y, SymFunc::schur(pi)) == sum,
						                          "x=" + x.str() + " y=" + y.str() + " pi=" + pi.str());
					               }
	               }});
	out.push_back({"repring", "h-and-g-are-inverse", {"rep-ring.h_map", "rep-ring.g_map"}, [](Context &ctx) {
		               for (int n = 0; n <= 3; ++n)
			               for (auto const &pi : partitions_of(n))
				               for (auto const &c : {"1", "2", "q^2", "-q", "1 - q^3"})
				               {
					               RDElement a = RDElement::basis(pi, LaurentZ::parse(c));
					               ctx.expect(g_map(h_map(a)) == a, "g(h(" + a.str() + "))");
				               }
		               ctx.expect(g_map(preset("perm:sym2")) == RDElement::parse("[2] + [1,1]"), "swap action");
		               ctx.expect(g_map(sym_action(plane(), 2, ctx.bound)) == RDElement::parse("[2]⊗(3) + [1,1]"),
		                          "square of the plane");
	               }});
	out.push_back({"repring", "induction-product-is-a-commutative-ring", {"rep-ring.induction_product"}, [](Context &ctx) {
		               auto random_element = [&](int n) {
			               RDElement r;
			               for (auto const &pi : partitions_of(n))
				               r.add(pi, LaurentZ::monomial(ctx.uniform(-2, 2), ctx.uniform(-1, 2)));
			               return r;
		               };
		               for (int trial = 0; trial < 10; ++trial)
		               {
			               RDElement a = random_element(ctx.uniform(0, 2)), b = random_element(ctx.uniform(0, 2)),
			                         c = random_element(ctx.uniform(0, 1));
			               ctx.expect(induction_product(a, b) == induction_product(b, a), "commutative");
			               ctx.expect(induction_product(induction_product(a, b), c) ==
			                              induction_product(a, induction_product(b, c)),
			                          "associative");
			               ctx.expect(induction_product(a, RDElement(1)) == a, "unit");
		               }
		               RDElement one = RDElement::basis(Partition{1});
		               ctx.expect(one * one == RDElement::parse("[2] + [1,1]"), "[1][1]");
	               }});
	out.push_back({"repring", "mu-series-records-tensor-powers", {"rep-ring.mu_series"}, [](Context &ctx) {
		               GradedObject x = GradedObject::parse("{0:1, 1:1}");
		               SchurSeries m = mu_series(x, 3, ctx.bound);
		               LaurentZ cx = k0_class(x).value(), p(1);
		               for (std::size_t n = 0; n <= 3; ++n)
		               {
			               ctx.expect(total_class(m[n]) == p, "total class at t^" + std::to_string(n));
			               p *= cx;
		               }
		               SchurSeries mp = mu_series(plane(), 2, ctx.bound);
		               SchurSeries factor = SchurSeries::one(2);
		               factor[1] = RDElement::basis(Partition{1}, LaurentZ(-2));
		               SchurSeries prod = mp * factor;
		               ctx.expect(prod[2] == RDElement::parse("-[2] - [1,1]⊗(3)"), "witness at t^2");
		               auto unit_series = class_series([](int n) { return RDElement::basis(row_partition(n)); }, 4);
		               ctx.expect(mu_series(GradedObject::unit(), 4, ctx.bound) == unit_series, "even line");
	               }});
	out.push_back({"repring", "lambda-of-class-matches-exterior-powers", {"rep-ring.lambda_of_class"}, [](Context &ctx) {
		               for (auto const &x : small_objects())
		               {
			               auto l = lambda_of_class(k0_class(x), 3);
			               for (int n = 0; n <= 3; ++n)
				               ctx.expect(l[static_cast<std::size_t>(n)] ==
				                              k0_class(schur_object(x, column_partition(n), ctx.bound)).value(),
				                          "Alt^" + std::to_string(n) + " of " + x.str());
		               }
	               }});
}

std::vector<CheckDef> const &registry()
{
	static std::vector<CheckDef> const checks = [] {
		std::vector<CheckDef> v;
		add_partition_checks(v);
		add_character_checks(v);
		add_symfunc_checks(v);
		add_witt_checks(v);
		add_schur_checks(v);
		add_adams_checks(v);
		add_complex_checks(v);
		add_repring_checks(v);
		return v;
	}();
	return checks;
}

} // namespace

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names{"partitions", "characters", "symfunc", "witt",
	                                            "schur",      "adams",      "complexes", "repring"};
	return names;
}

std::vector<std::string> const &operations()
{
	static std::vector<std::string> const ops{
		"exact-core.matrix.rank",
		"exact-core.series",
		"lambda-ring.adams_on_base",
		"lambda-ring.adams_on_witt",
		"lambda-ring.from_ghost",
		"lambda-ring.ghost",
		"lambda-ring.lambda_series",
		"lambda-ring.special_check",
		"lambda-ring.universal_composition_poly",
		"lambda-ring.universal_product_poly",
		"lambda-ring.witt_add",
		"lambda-ring.witt_mul",
		"lambda-ring.witt_neg",
		"partitions.centralizer_order",
		"partitions.conjugate",
		"partitions.dim_poly_eval",
		"partitions.hook_dimension",
		"partitions.ordering",
		"partitions.partitions_of",
		"rep-ring.aw_check",
		"rep-ring.euler_xi",
		"rep-ring.ev",
		"rep-ring.g_map",
		"rep-ring.h_map",
		"rep-ring.induction_product",
		"rep-ring.k0_class",
		"rep-ring.lambda_of_class",
		"rep-ring.lambda_sigma",
		"rep-ring.mu_series",
		"symfunc.ch",
		"symfunc.lr",
		"symfunc.newton_check",
		"symfunc.omega",
		"symfunc.power_sum",
		"symfunc.powersum",
		"symfunc.schur_product",
		"symfunc.vanishing_schur_sum",
		"symgroup.character",
		"symgroup.character_table",
		"symgroup.finite_group",
		"symgroup.isotypic_projector",
		"symgroup.permutation",
		"tensor-model.categorical_trace",
		"tensor-model.char_series",
		"tensor-model.cohomology",
		"tensor-model.complex",
		"tensor-model.equivariant_complex",
		"tensor-model.equivariant_kernel",
		"tensor-model.gr_S",
		"tensor-model.gr_tau",
		"tensor-model.graded_map",
		"tensor-model.graded_object",
		"tensor-model.graded_trace",
		"tensor-model.irreducible_representation",
		"tensor-model.isotypic_projector_map",
		"tensor-model.permuted_trace",
		"tensor-model.schur_complex_cohomology",
		"tensor-model.schur_object",
		"tensor-model.shifted",
		"tensor-model.sym_action",
		"tensor-model.trace_schur",
	};
	return ops;
}

std::vector<CheckResult> run(std::string_view suite, Options const &options)
{
	auto const &names = suite_names();
	if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
		fail(ErrorKind::InvalidArgument, "unknown verification suite \"" + std::string(suite) + "\"");
	std::vector<CheckDef const *> selected;
	for (auto const &c : registry())
		if (suite == "all" || c.suite == suite)
			selected.push_back(&c);
	std::vector<CheckResult> results(selected.size());
	long const count = static_cast<long>(selected.size());
#pragma omp parallel for schedule(dynamic)
	for (long i = 0; i < count; ++i)
	{
		CheckDef const &c = *selected[static_cast<std::size_t>(i)];
		Context ctx{std::mt19937_64(options.seed ^ fnv1a(c.suite + "/" + c.name)), options.bound, 0, {}};
		CheckResult &r = results[static_cast<std::size_t>(i)];
		r.suite = c.suite;
		r.check = c.name;
		r.covers = c.covers;
		try
		{
			c.body(ctx);
			r.passed = ctx.failure.empty();
			r.detail = ctx.failure;
		}
		catch (std::exception const &e)
		{
			r.passed = false;
			r.detail = e.what();
		}
		r.cases = ctx.cases;
	}
	return results;
}

std::map<std::string, std::vector<std::string>> coverage(std::vector<CheckResult> const &results)
{
	std::map<std::string, std::vector<std::string>> out;
	for (auto const &op : operations())
		out[op];
	for (auto const &r : results)
		for (auto const &op : r.covers)
			out[op].push_back(r.suite + "/" + r.check);
	return out;
}

} // namespace schurforge::verify
