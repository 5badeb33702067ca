#include "schurforge/universal_poly.hpp"

#include "schurforge/error.hpp"

#include <algorithm>
#include <mutex>

namespace schurforge {

IntPoly IntPoly::constant(int nvars, BigInt const &c)
{
	IntPoly p(nvars);
	p.add_term(Exponents(nvars, 0), c);
	return p;
}

IntPoly IntPoly::variable(int nvars, int index)
{
	IntPoly p(nvars);
	Exponents e(nvars, 0);
	e.at(index) = 1;
	p.add_term(e, 1);
	return p;
}

void IntPoly::add_term(Exponents const &e, BigInt const &c)
{
	if (static_cast<int>(e.size()) != nvars_)
		fail(ErrorKind::SizeMismatch, "exponent vector has the wrong number of variables");
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

IntPoly &IntPoly::operator+=(IntPoly const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

IntPoly &IntPoly::operator-=(IntPoly const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

IntPoly operator*(IntPoly const &a, IntPoly const &b)
{
	if (a.nvars_ != b.nvars_)
		fail(ErrorKind::SizeMismatch, "product of polynomials in different variables");
	IntPoly r(a.nvars_);
	IntPoly::Exponents e(a.nvars_);
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
		{
			for (int v = 0; v < a.nvars_; ++v)
				e[v] = ea[v] + eb[v];
			r.add_term(e, ca * cb);
		}
	return r;
}

IntPoly operator*(BigInt const &c, IntPoly const &a)
{
	IntPoly r(a.nvars_);
	for (auto const &[e, x] : a.terms_)
		r.add_term(e, c * x);
	return r;
}

IntPoly pow(IntPoly const &p, int k)
{
	IntPoly r = IntPoly::constant(p.nvars(), 1);
	for (int i = 0; i < k; ++i)
		r = r * p;
	return r;
}

std::string UniversalPoly::str() const
{
	std::string out;
	for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
	{
		auto const &[e, c] = *it;
		std::string mono;
		for (int v = 0; v < poly.nvars(); ++v)
		{
			if (e[v] == 0)
				continue;
			bool is_x = v < x_vars;
			std::string name =
				"e" + std::to_string(is_x ? v + 1 : v - x_vars + 1) + (is_x ? "(x)" : "(y)");
			mono += (mono.empty() ? "" : "*") + name + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
		}
		BigInt mag = c < 0 ? BigInt(-c) : c;
		std::string t = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
		if (out.empty())
			out = c < 0 ? "-" + t : t;
		else
			out += (c < 0 ? " - " : " + ") + t;
	}
	return out.empty() ? "0" : out;
}

namespace {

// e_k of a list of monomials, for k = 0..n, in the raw variables.
std::vector<IntPoly> elementary_of(std::vector<IntPoly> const &items, int nvars, int n)
{
	std::vector<IntPoly> e(n + 1, IntPoly(nvars));
	e[0] = IntPoly::constant(nvars, 1);
	for (auto const &m : items)
		for (int k = n; k >= 1; --k)
			e[k] += m * e[k - 1];
	return e;
}

// Rewrites a polynomial in raw variables, symmetric separately in each block,
// as a polynomial in the elementary symmetric functions of the blocks. Each
// step cancels the lex-leading monomial.
IntPoly to_elementary(IntPoly f, std::vector<int> const &blocks)
{
	int nvars = f.nvars();
	int total_e = 0;
	for (int b : blocks)
		total_e += b;
	std::vector<std::vector<IntPoly>> e_raw; // per block, e_0..e_b in raw variables
	int start = 0;
	for (int b : blocks)
	{
		std::vector<IntPoly> vars;
		for (int v = 0; v < b; ++v)
			vars.push_back(IntPoly::variable(nvars, start + v));
		e_raw.push_back(elementary_of(vars, nvars, b));
		start += b;
	}
	std::map<std::pair<int, int>, IntPoly> powers; // (global e index, exponent)
	auto power_of = [&](int block, int k, int exp) -> IntPoly const & {
		int global = 0;
		for (int i = 0; i < block; ++i)
			global += blocks[i];
		global += k - 1;
		auto key = std::make_pair(global, exp);
		auto it = powers.find(key);
		if (it == powers.end())
			it = powers.emplace(key, pow(e_raw[block][k], exp)).first;
		return it->second;
	};

	IntPoly result(total_e);
	while (!f.is_zero())
	{
		auto const [lead, c] = *f.terms().rbegin();
		IntPoly::Exponents mono(total_e, 0);
		IntPoly sub = IntPoly::constant(nvars, c);
		int offset = 0, eoffset = 0;
		for (std::size_t block = 0; block < blocks.size(); ++block)
		{
			int b = blocks[block];
			for (int k = 1; k <= b; ++k)
			{
				int a = lead[offset + k - 1] - (k < b ? lead[offset + k] : 0);
				if (a < 0)
					fail(ErrorKind::InvalidArgument, "polynomial is not symmetric");
				mono[eoffset + k - 1] = a;
				if (a > 0)
					sub = sub * power_of(static_cast<int>(block), k, a);
			}
			offset += b;
			eoffset += b;
		}
		result.add_term(mono, c);
		f -= sub;
	}
	return result;
}

std::mutex cache_mutex;

} // namespace

UniversalPoly const &universal_product_poly(int n)
{
	if (n < 1)
		fail(ErrorKind::InvalidArgument, "universal product polynomial index must be positive");
	if (n > kProductPolyBound)
		fail(ErrorKind::BoundExceeded,
		     "universal product polynomial P_" + std::to_string(n) + " exceeds bound " +
		         std::to_string(kProductPolyBound));
	static std::map<int, UniversalPoly> cache;
	std::lock_guard lock(cache_mutex);
	if (auto it = cache.find(n); it != cache.end())
		return it->second;
	int nvars = 2 * n;
	std::vector<IntPoly> items;
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			items.push_back(IntPoly::variable(nvars, i) * IntPoly::variable(nvars, n + j));
	IntPoly en = elementary_of(items, nvars, n)[n];
	UniversalPoly u{n, n, to_elementary(std::move(en), {n, n})};
	return cache.emplace(n, std::move(u)).first->second;
}

UniversalPoly const &universal_composition_poly(int n, int m)
{
	if (n < 1 || m < 1)
		fail(ErrorKind::InvalidArgument, "universal composition polynomial indices must be positive");
	if (n * m > kCompositionPolyBound)
		fail(ErrorKind::BoundExceeded,
		     "universal composition polynomial P_{" + std::to_string(n) + "," + std::to_string(m) +
		         "} exceeds bound n*m <= " + std::to_string(kCompositionPolyBound));
	static std::map<std::pair<int, int>, UniversalPoly> cache;
	std::lock_guard lock(cache_mutex);
	if (auto it = cache.find({n, m}); it != cache.end())
		return it->second;
	int nvars = n * m;
	std::vector<IntPoly> items;
	// every m-subset of the variables, as a squarefree monomial
	std::vector<bool> mask(nvars, false);
	std::fill(mask.begin(), mask.begin() + m, true);
	do
	{
		IntPoly mono = IntPoly::constant(nvars, 1);
		for (int v = 0; v < nvars; ++v)
			if (mask[v])
				mono = mono * IntPoly::variable(nvars, v);
		items.push_back(std::move(mono));
	} while (std::prev_permutation(mask.begin(), mask.end()));
	IntPoly en = elementary_of(items, nvars, n)[n];
	UniversalPoly u{nvars, 0, to_elementary(std::move(en), {nvars})};
	return cache.emplace(std::make_pair(n, m), std::move(u)).first->second;
}

} // namespace schurforge
