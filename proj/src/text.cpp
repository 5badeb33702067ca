#include "text.hpp"

#include <cctype>
#include <charconv>

namespace schurforge::text {

std::string strip(std::string_view s)
{
	std::size_t b = 0, e = s.size();
	while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
		++b;
	while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
		--e;
	return std::string(s.substr(b, e - b));
}

std::string remove_spaces(std::string_view s)
{
	std::string r;
	for (char c : s)
		if (!std::isspace(static_cast<unsigned char>(c)))
			r.push_back(c);
	return r;
}

std::vector<std::string> split_terms(std::string_view input)
{
	std::string s = remove_spaces(input);
	std::vector<std::string> terms;
	std::string cur;
	bool negative = false;
	int depth = 0;
	auto flush = [&] {
		if (cur.empty())
			parse_error("empty term", input);
		terms.push_back(negative ? "-" + cur : cur);
		cur.clear();
	};
	for (std::size_t i = 0; i < s.size(); ++i)
	{
		char c = s[i];
		if (c == '(' || c == '[' || c == '{')
			++depth;
		else if (c == ')' || c == ']' || c == '}')
			--depth;
		if (depth < 0)
			parse_error("unbalanced brackets", input);
		// '^-' is an exponent sign, not a term separator
		bool exponent_sign = i > 0 && s[i - 1] == '^';
		if (depth == 0 && (c == '+' || c == '-') && !exponent_sign)
		{
			if (!cur.empty())
				flush();
			else if (i != 0 && !terms.empty())
				parse_error("dangling operator", input);
			negative = c == '-';
			continue;
		}
		cur.push_back(c);
	}
	if (depth != 0)
		parse_error("unbalanced brackets", input);
	flush();
	return terms;
}

long parse_long(std::string_view s)
{
	long v = 0;
	auto r = std::from_chars(s.data(), s.data() + s.size(), v);
	if (r.ec != std::errc() || r.ptr != s.data() + s.size())
		parse_error("expected an integer", s);
	return v;
}

} // namespace schurforge::text
