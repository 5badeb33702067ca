#include "schurforge/symfunc.hpp"

#include "schurforge/characters.hpp"
#include "schurforge/error.hpp"
#include "text.hpp"

#include <mutex>

namespace schurforge {

SymFunc::SymFunc(Rational const &c) { add(Partition(), c); }

SymFunc SymFunc::schur(Partition const &pi, Rational const &c)
{
	SymFunc f;
	f.add(pi, c);
	return f;
}

Rational SymFunc::coeff(Partition const &pi) const
{
	auto it = terms_.find(pi);
	return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(Partition const &pi, Rational const &c)
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

bool SymFunc::is_integral() const
{
	for (auto const &[pi, c] : terms_)
		if (!c.is_integer())
			return false;
	return true;
}

bool SymFunc::is_homogeneous(int degree) const
{
	for (auto const &[pi, c] : terms_)
		if (pi.size() != degree)
			return false;
	return true;
}

SymFunc SymFunc::operator-() const { return Rational(-1) * *this; }

SymFunc &SymFunc::operator+=(SymFunc const &o)
{
	for (auto const &[pi, c] : o.terms_)
		add(pi, c);
	return *this;
}

SymFunc operator*(Rational const &c, SymFunc const &f)
{
	SymFunc r;
	for (auto const &[pi, x] : f.terms_)
		r.add(pi, c * x);
	return r;
}

SymFunc operator*(SymFunc const &f, SymFunc const &g)
{
	SymFunc r;
	for (auto const &[mu, a] : f.terms_)
		for (auto const &[eta, b] : g.terms_)
			r += (a * b) * schur_product(mu, eta);
	if (f.is_integral() && g.is_integral() && !r.is_integral())
		fail(ErrorKind::NonIntegral, "product of integral symmetric functions left the integral lattice");
	return r;
}

namespace {

std::string schur_label(Partition const &pi) { return pi.empty() ? "s[]" : "s[" + pi.str() + "]"; }

std::string join_terms(std::vector<std::pair<std::string, Rational>> const &terms)
{
	std::string out;
	for (auto const &[label, c] : terms)
	{
		Rational mag = c.sign() < 0 ? -c : c;
		std::string t = mag == Rational(1) ? label : mag.str() + "*" + label;
		if (out.empty())
			out = c.sign() < 0 ? "-" + t : t;
		else
			out += (c.sign() < 0 ? " - " : " + ") + t;
	}
	return out.empty() ? "0" : out;
}

Partition merge(Partition const &a, Partition const &b)
{
	std::vector<int> parts = a.parts();
	parts.insert(parts.end(), b.parts().begin(), b.parts().end());
	std::sort(parts.rbegin(), parts.rend());
	return Partition(std::move(parts));
}

} // namespace

std::string SymFunc::str() const
{
	std::vector<std::pair<std::string, Rational>> terms;
	for (auto const &[pi, c] : terms_)
		terms.emplace_back(schur_label(pi), c);
	return join_terms(terms);
}

SymFunc SymFunc::parse(std::string_view input)
{
	SymFunc f;
	for (std::string term : text::split_terms(input))
	{
		bool negative = term.front() == '-';
		if (negative)
			term.erase(0, 1);
		auto spos = term.find("s[");
		Rational c = 1;
		Partition pi;
		if (spos == std::string::npos)
			c = Rational::parse(term);
		else
		{
			std::string head = term.substr(0, spos);
			if (!head.empty() && head.back() == '*')
				head.pop_back();
			if (!head.empty())
				c = Rational::parse(head);
			if (term.back() != ']')
				text::parse_error("expected ']' after a Schur label", input);
			pi = Partition::parse(term.substr(spos + 1));
		}
		f.add(pi, negative ? -c : c);
	}
	return f;
}

PowerSumExpansion schur_to_powersum(Partition const &pi)
{
	PowerSumExpansion p;
	for (auto const &mu : partitions_of(pi.size()))
	{
		long chi = character(pi, mu);
		if (chi != 0)
			p[mu] = Rational(BigInt(chi), mu.centralizer_order());
	}
	return p;
}

PowerSumExpansion to_powersum(SymFunc const &f)
{
	PowerSumExpansion p;
	for (auto const &[pi, c] : f.terms())
		for (auto const &[mu, x] : schur_to_powersum(pi))
		{
			auto &slot = p[mu];
			slot += c * x;
			if (slot.is_zero())
				p.erase(mu);
		}
	return p;
}

SymFunc from_powersum(PowerSumExpansion const &p)
{
	SymFunc f;
	for (auto const &[mu, c] : p)
		for (auto const &pi : partitions_of(mu.size()))
			f.add(pi, c * Rational(character(pi, mu)));
	return f;
}

std::string powersum_str(PowerSumExpansion const &p)
{
	std::string out;
	for (auto const &[mu, c] : p)
	{
		if (c.is_zero())
			continue;
		Rational mag = c.sign() < 0 ? -c : c;
		std::string label = mu.empty() ? "p[]" : "p[" + mu.str() + "]";
		std::string t;
		if (mag == Rational(1))
			t = label;
		else if (mag.num() == 1)
			t = label + "/" + to_string(mag.den());
		else
			t = mag.str() + "*" + label;
		if (out.empty())
			out = c.sign() < 0 ? "-" + t : t;
		else
			out += (c.sign() < 0 ? " - " : " + ") + t;
	}
	return out.empty() ? "0" : out;
}

SymFunc elementary(int k) { return SymFunc::schur(column_partition(k)); }
SymFunc complete(int k) { return SymFunc::schur(row_partition(k)); }
SymFunc power_sum(int k) { return from_powersum({{row_partition(k), Rational(1)}}); }

SymFunc omega(SymFunc const &f)
{
	SymFunc r;
	for (auto const &[pi, c] : f.terms())
		r.add(pi.conjugate(), c);
	return r;
}

SymFunc const &schur_product(Partition const &mu, Partition const &eta)
{
	static std::mutex m;
	static std::map<std::pair<Partition, Partition>, SymFunc> cache;
	auto key = std::make_pair(mu, eta);
	{
		std::lock_guard lock(m);
		if (auto it = cache.find(key); it != cache.end())
			return it->second;
	}
	PowerSumExpansion prod;
	for (auto const &[a, x] : schur_to_powersum(mu))
		for (auto const &[b, y] : schur_to_powersum(eta))
			prod[merge(a, b)] += x * y;
	SymFunc r = from_powersum(prod);
	if (!r.is_integral())
		fail(ErrorKind::NonIntegral, "Schur product with non-integral coefficients");
	std::lock_guard lock(m);
	return cache.emplace(key, std::move(r)).first->second;
}

long lr(Partition const &mu, Partition const &eta, Partition const &pi)
{
	if (pi.size() != mu.size() + eta.size())
		return 0;
	return schur_product(mu, eta).coeff(pi).to_integer().get_si();
}

bool newton_check(int n)
{
	SymFunc lhs;
	for (int k = 1; k <= n; ++k)
		lhs += Rational(k % 2 ? -1 : 1) * (power_sum(k) * elementary(n - k));
	return lhs == Rational(-n) * elementary(n);
}

SymFunc vanishing_schur_sum(Partition const &pi)
{
	SymFunc total;
	int n = pi.size();
	for (int a = 0; a <= n; ++a)
		for (auto const &mu : partitions_of(a))
			for (auto const &eta : partitions_of(n - a))
			{
				long c = lr(mu, eta, pi);
				if (c != 0)
					total += Rational((n - a) % 2 ? -c : c) * schur_product(mu, eta.conjugate());
			}
	return total;
}

SymFunc ch(int n, ClassFunction const &values)
{
	PowerSumExpansion p;
	for (auto const &mu : partitions_of(n))
	{
		auto it = values.find(mu);
		if (it == values.end())
			fail(ErrorKind::IncompleteClassFunction, "class function has no value on cycle type " + mu.str());
		p[mu] = it->second / Rational(mu.centralizer_order());
	}
	for (auto const &[mu, v] : values)
		if (mu.size() != n)
			fail(ErrorKind::SizeMismatch, "class function value on a cycle type of the wrong size");
	return from_powersum(p);
}

} // namespace schurforge
