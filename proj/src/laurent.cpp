#include "schurforge/laurent.hpp"

#include "text.hpp"

namespace schurforge {

LaurentZ LaurentZ::monomial(BigInt const &coeff, int exponent)
{
	LaurentZ r;
	r.add_term(exponent, coeff);
	return r;
}

void LaurentZ::add_term(int exponent, BigInt const &coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(exponent, coeff);
	if (!inserted)
	{
		it->second += coeff;
		if (it->second == 0)
			terms_.erase(it);
	}
}

BigInt LaurentZ::coeff(int exponent) const
{
	auto it = terms_.find(exponent);
	return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentZ::is_unit() const
{
	if (terms_.size() != 1)
		return false;
	auto const &c = terms_.begin()->second;
	return c == 1 || c == -1;
}

LaurentZ LaurentZ::unit_inverse() const
{
	if (!is_unit())
		fail(ErrorKind::NonUnitConstantTerm, str() + " is not a unit of Z[q,q^-1]");
	auto const &[e, c] = *terms_.begin();
	return monomial(c, -e);
}

int LaurentZ::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentZ::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

BigInt LaurentZ::at_one() const
{
	BigInt s = 0;
	for (auto const &[e, c] : terms_)
		s += c;
	return s;
}

LaurentZ LaurentZ::substitute_power(int k) const
{
	LaurentZ r;
	for (auto const &[e, c] : terms_)
		r.add_term(e * k, c);
	return r;
}

LaurentZ LaurentZ::exact_div(long d) const
{
	LaurentZ r;
	for (auto const &[e, c] : terms_)
		r.add_term(e, RingTraits<BigInt>::exact_div(c, d));
	return r;
}

LaurentZ LaurentZ::operator-() const
{
	LaurentZ r;
	for (auto const &[e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

LaurentZ &LaurentZ::operator+=(LaurentZ const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

LaurentZ &LaurentZ::operator-=(LaurentZ const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

LaurentZ operator*(LaurentZ const &a, LaurentZ const &b)
{
	LaurentZ r;
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
			r.add_term(ea + eb, ca * cb);
	return r;
}

LaurentZ &LaurentZ::operator*=(LaurentZ const &o)
{
	*this = *this * o;
	return *this;
}

LaurentZ pow(LaurentZ const &x, unsigned k)
{
	LaurentZ r(1);
	for (unsigned i = 0; i < k; ++i)
		r *= x;
	return r;
}

std::string LaurentZ::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto const &[e, c] : terms_)
	{
		std::string mag = to_string(c < 0 ? BigInt(-c) : c);
		std::string term;
		if (e == 0)
			term = mag;
		else
		{
			std::string power = e == 1 ? "q" : "q^" + std::to_string(e);
			term = mag == "1" ? power : mag + "*" + power;
		}
		if (out.empty())
			out = c < 0 ? "-" + term : term;
		else
			out += (c < 0 ? " - " : " + ") + term;
	}
	return out;
}

LaurentZ LaurentZ::parse(std::string_view input)
{
	std::string stripped = text::strip(input);
	if (stripped.empty())
		text::parse_error("empty Laurent polynomial", input);
	LaurentZ r;
	for (std::string term : text::split_terms(stripped))
	{
		bool negative = term.front() == '-';
		if (negative)
			term.erase(0, 1);
		if (term.size() >= 2 && term.front() == '(' && term.back() == ')')
		{
			LaurentZ inner = parse(term.substr(1, term.size() - 2));
			r += negative ? -inner : inner;
			continue;
		}
		auto qpos = term.find('q');
		BigInt coeff = 1;
		int exponent = 0;
		if (qpos == std::string::npos)
			coeff = parse_bigint(term);
		else
		{
			std::string head = term.substr(0, qpos);
			if (!head.empty() && head.back() == '*')
				head.pop_back();
			if (!head.empty())
				coeff = parse_bigint(head);
			std::string tail = term.substr(qpos + 1);
			if (tail.empty())
				exponent = 1;
			else if (tail.front() == '^')
			{
				std::string ex = tail.substr(1);
				if (ex.size() >= 2 && ex.front() == '(' && ex.back() == ')')
					ex = ex.substr(1, ex.size() - 2);
				exponent = static_cast<int>(text::parse_long(ex));
			}
			else
				text::parse_error("unexpected text after q", input);
		}
		r.add_term(exponent, negative ? BigInt(-coeff) : coeff);
	}
	return r;
}

} // namespace schurforge
