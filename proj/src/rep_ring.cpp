#include "schurforge/rep_ring.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "schurforge/schur_functor.hpp"
#include "text.hpp"

namespace schurforge {

K0Class k0_class(GradedObject const &x)
{
	LaurentZ v;
	for (auto const &[d, n] : x.dims())
		v.add_term(d, d % 2 ? -n : n);
	return K0Class(v);
}

K0Class k0_class(ComplexObject const &z)
{
	K0Class c;
	for (auto const &[n, x] : z.terms())
		c = n % 2 ? c - k0_class(x) : c + k0_class(x);
	return c;
}

K0Class k0_class(kernels::BidegreeDims const &dims)
{
	LaurentZ v;
	for (auto const &[b, n] : dims)
		v.add_term(b.internal, b.parity() ? -n : n);
	return K0Class(v);
}

WittSeries<LaurentZ> lambda_of_class(K0Class const &x, std::size_t order)
{
	return WittSeries<LaurentZ>(LaurentLambda().lambda_series(x.value(), order));
}

namespace {

LaurentZ determinant(std::vector<std::vector<LaurentZ>> const &m)
{
	int n = static_cast<int>(m.size());
	LaurentZ det;
	for (auto const &p : all_permutations(n))
	{
		LaurentZ term(p.sign());
		for (int i = 0; i < n && !term.is_zero(); ++i)
			term *= m[i][p(i)];
		det += term;
	}
	return det;
}

} // namespace

K0Class schur_class(K0Class const &x, Partition const &pi)
{
	if (pi.empty())
		return K0Class(1);
	int l = pi.length();
	std::size_t top = static_cast<std::size_t>(pi[0] + l);
	// sum h_k t^k = 1 / lambda_{-t}(x)
	Series<LaurentZ> lam = LaurentLambda().lambda_series(x.value(), top);
	for (std::size_t k = 1; k <= top; k += 2)
		lam[k] = -lam[k];
	Series<LaurentZ> h = inverse(lam);
	std::vector<std::vector<LaurentZ>> m(l, std::vector<LaurentZ>(l));
	for (int i = 0; i < l; ++i)
		for (int j = 0; j < l; ++j)
		{
			int k = pi[i] - i + j;
			if (k >= 0)
				m[i][j] = h[static_cast<std::size_t>(k)];
		}
	return K0Class(determinant(m));
}

K0Class ev(K0Class const &x, SymFunc const &f)
{
	if (!f.is_integral())
		fail(ErrorKind::NonIntegral, "ev needs an integral symmetric function, got " + f.str());
	K0Class r;
	for (auto const &[pi, c] : f.terms())
		r = r + K0Class(LaurentZ(c.num())) * schur_class(x, pi);
	return r;
}

RDElement::RDElement(long c) { add(Partition(), LaurentZ(c)); }

RDElement RDElement::basis(Partition const &pi, LaurentZ const &c)
{
	RDElement a;
	a.add(pi, c);
	return a;
}

LaurentZ RDElement::coeff(Partition const &pi) const
{
	auto it = terms_.find(pi);
	return it == terms_.end() ? LaurentZ() : it->second;
}

void RDElement::add(Partition const &pi, LaurentZ const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(pi, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

RDElement RDElement::graded_part(int n) const
{
	RDElement r;
	for (auto const &[pi, c] : terms_)
		if (pi.size() == n)
			r.terms_.emplace(pi, c);
	return r;
}

std::string RDElement::str() const
{
	std::string out;
	for (auto const &[pi, c] : terms_)
	{
		std::string label = pi.empty() ? "[]" : "[" + pi.str() + "]";
		out += (out.empty() ? "" : " + ") + label + "⊗(" + c.str() + ")";
	}
	return out.empty() ? "0" : out;
}

RDElement RDElement::parse(std::string_view input)
{
	std::string s = text::remove_spaces(input);
	for (std::size_t pos; (pos = s.find("(x)")) != std::string::npos;)
		s.replace(pos, 3, "⊗");
	RDElement r;
	std::string const tensor_sign = "⊗";
	for (std::string term : text::split_terms(s))
	{
		bool negative = term.front() == '-';
		if (negative)
			term.erase(0, 1);
		if (term.empty())
			text::parse_error("empty term", input);
		if (term.front() != '[')
		{
			LaurentZ c = LaurentZ::parse(term);
			r.add(Partition(), negative ? -c : c);
			continue;
		}
		auto close = term.find(']');
		if (close == std::string::npos)
			text::parse_error("unclosed partition label", input);
		Partition pi = Partition::parse(term.substr(0, close + 1));
		std::string rest = term.substr(close + 1);
		LaurentZ c(1);
		if (!rest.empty())
		{
			if (rest.rfind(tensor_sign, 0) != 0)
				text::parse_error("expected ⊗ after a partition label", input);
			rest = rest.substr(tensor_sign.size());
			if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
				rest = rest.substr(1, rest.size() - 2);
			c = LaurentZ::parse(rest);
		}
		r.add(pi, negative ? -c : c);
	}
	return r;
}

RDElement RDElement::operator-() const
{
	RDElement r;
	for (auto const &[pi, c] : terms_)
		r.terms_.emplace(pi, -c);
	return r;
}

RDElement &RDElement::operator+=(RDElement const &o)
{
	for (auto const &[pi, c] : o.terms_)
		add(pi, c);
	return *this;
}

RDElement operator*(RDElement const &a, RDElement const &b)
{
	RDElement r;
	for (auto const &[mu, u] : a.terms_)
		for (auto const &[eta, v] : b.terms_)
		{
			LaurentZ uv = u * v;
			for (auto const &[pi, c] : schur_product(mu, eta).terms())
				r.add(pi, LaurentZ(c.num()) * uv);
		}
	return r;
}

RDElement induction_product(RDElement const &a, RDElement const &b) { return a * b; }

LaurentZ total_class(RDElement const &a)
{
	LaurentZ t;
	for (auto const &[pi, c] : a.terms())
		t += LaurentZ(pi.dimension()) * c;
	return t;
}

bool RingTraits<RDElement>::is_unit(RDElement const &a)
{
	return a.terms().size() == 1 && a.terms().begin()->first.empty() && a.terms().begin()->second.is_unit();
}

RDElement RingTraits<RDElement>::unit_inverse(RDElement const &a)
{
	if (!is_unit(a))
		fail(ErrorKind::NonUnitConstantTerm, a.str() + " is not a unit");
	return RDElement::basis(Partition(), a.terms().begin()->second.unit_inverse());
}

SchurSeries lambda_sigma(GradedObject const &x, std::size_t order, std::size_t bound)
{
	SchurSeries s = SchurSeries::one(order);
	for (std::size_t n = 1; n <= order; ++n)
		for (auto const &mu : partitions_of(static_cast<int>(n)))
			s[n].add(mu, k0_class(schur_object(x, mu, bound)).value());
	return s;
}

SchurSeries lambda_sigma(ComplexObject const &z, std::size_t order, std::size_t bound)
{
	auto basis = z.basis();
	SchurSeries s = SchurSeries::one(order);
	for (std::size_t n = 1; n <= order; ++n)
		for (auto const &mu : partitions_of(static_cast<int>(n)))
			s[n].add(mu, k0_class(schur_bidegree_dims(basis, mu, bound)).value());
	return s;
}

SchurSeries lambda_sigma_via_cohomology(ComplexObject const &z, std::size_t order, std::size_t bound)
{
	SchurSeries s = SchurSeries::one(order);
	for (std::size_t n = 1; n <= order; ++n)
		for (auto const &mu : partitions_of(static_cast<int>(n)))
			s[n].add(mu, k0_class(schur_complex_cohomology(z, mu, bound)).value());
	return s;
}

GObject h_map(RDElement const &a)
{
	if (a.is_zero())
		return GObject::trivial(GradedObject(), FiniteGroup::symmetric(0));
	int n = a.terms().begin()->first.size();
	auto group = FiniteGroup::symmetric(n);
	GObject total = GObject::trivial(GradedObject(), group);
	for (auto const &[pi, c] : a.terms())
	{
		if (pi.size() != n)
			fail(ErrorKind::InvalidArgument, "h_map needs a homogeneous element");
		std::map<int, int> dims;
		for (auto const &[d, k] : c.terms())
		{
			BigInt count = d % 2 ? BigInt(-k) : k;
			if (count < 0)
				fail(ErrorKind::NotEffective,
				     "class " + c.str() + " at " + pi.str() + " is virtual and has no object");
			dims[d] = static_cast<int>(count.get_si());
		}
		GObject v = irreducible_representation(pi);
		GObject piece = tensor(v, GObject::trivial(GradedObject(dims), v.group()));
		total = direct_sum(total, piece);
	}
	return total;
}

RDElement g_map(GObject const &x)
{
	auto degree = x.group()->symmetric_degree();
	if (!degree || !x.group()->has_permutations())
		fail(ErrorKind::InvalidArgument, "g_map needs an action of a full symmetric group");
	RDElement r;
	for (auto const &pi : partitions_of(*degree))
	{
		GradedMap p = isotypic_projector_map(x, pi);
		long chi1 = pi.dimension().get_si();
		std::map<int, int> dims;
		for (auto const &[d, b] : p.blocks())
		{
			long rk = static_cast<long>(rank(b));
			if (rk % chi1 != 0)
				fail(ErrorKind::NonIntegral, "isotypic rank is not divisible by the character degree");
			if (rk)
				dims[d] = static_cast<int>(rk / chi1);
		}
		r.add(pi, k0_class(GradedObject(dims)).value());
	}
	return r;
}

SchurSeries mu_series(GradedObject const &x, std::size_t order, std::size_t bound)
{
	SchurSeries s = SchurSeries::one(order);
	for (std::size_t n = 1; n <= order; ++n)
		s[n] = g_map(sym_action(x, static_cast<int>(n), bound));
	return s;
}

RDElement euler_xi(EquivariantComplex const &z)
{
	RDElement r;
	for (auto const &[n, h] : cohomology(z))
		r += n % 2 ? -g_map(h) : g_map(h);
	return r;
}

bool aw_check(GradedObject const &x, int n, std::size_t bound)
{
	GradedObject power = GradedObject::unit();
	for (int i = 0; i < n; ++i)
		power = tensor(power, x);
	std::map<int, long> sum;
	for (auto const &pi : partitions_of(n))
	{
		long chi1 = pi.dimension().get_si();
		GradedObject s = schur_object(x, pi, bound);
		for (auto const &[d, k] : s.dims())
			sum[d] += chi1 * k;
	}
	std::map<int, long> expected;
	for (auto const &[d, k] : power.dims())
		expected[d] = k;
	return sum == expected;
}

} // namespace schurforge
