#include "schurforge/series.hpp"

#include "schurforge/rational.hpp"
#include "text.hpp"

#include <map>

namespace schurforge {

Series<Rational> parse_series(std::string_view input)
{
	std::map<std::size_t, Rational> coeffs;
	std::size_t top = 0;
	for (std::string term : text::split_terms(input))
	{
		bool negative = term.front() == '-';
		if (negative)
			term.erase(0, 1);
		auto tpos = term.find('t');
		Rational c = 1;
		std::size_t power = 0;
		if (tpos == std::string::npos)
			c = Rational::parse(term);
		else
		{
			std::string head = term.substr(0, tpos);
			if (!head.empty() && head.back() == '*')
				head.pop_back();
			if (head.size() >= 2 && head.front() == '(' && head.back() == ')')
				head = head.substr(1, head.size() - 2);
			if (!head.empty())
				c = Rational::parse(head);
			std::string tail = term.substr(tpos + 1);
			if (tail.empty())
				power = 1;
			else if (tail.front() == '^')
			{
				long p = text::parse_long(tail.substr(1));
				if (p < 0)
					text::parse_error("negative power of t", input);
				power = static_cast<std::size_t>(p);
			}
			else
				text::parse_error("unexpected text after t", input);
		}
		coeffs[power] += negative ? -c : c;
		top = std::max(top, power);
	}
	Series<Rational> s(top);
	for (auto const &[k, c] : coeffs)
		s[k] = c;
	return s;
}

} // namespace schurforge
