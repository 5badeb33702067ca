#include "schurforge/permutation.hpp"

#include "schurforge/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <numeric>

namespace schurforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
	std::vector<bool> seen(images_.size());
	for (int x : images_)
	{
		if (x < 0 || x >= degree() || seen[x])
			fail(ErrorKind::InvalidArgument, "image list is not a bijection");
		seen[x] = true;
	}
}

Permutation Permutation::identity(int n)
{
	std::vector<int> im(n);
	std::iota(im.begin(), im.end(), 0);
	return Permutation(std::move(im));
}

Permutation Permutation::parse(std::string_view input, int n)
{
	std::vector<int> im(n);
	std::iota(im.begin(), im.end(), 0);
	std::vector<bool> used(n);
	std::string s = text::strip(input);
	std::size_t i = 0;
	if (s.empty())
		text::parse_error("empty permutation", input);
	while (i < s.size())
	{
		if (std::isspace(static_cast<unsigned char>(s[i])))
		{
			++i;
			continue;
		}
		if (s[i] != '(')
			text::parse_error("expected '('", input);
		auto close = s.find(')', i);
		if (close == std::string::npos)
			text::parse_error("unclosed cycle", input);
		std::vector<int> cycle;
		std::string cur;
		auto flush = [&] {
			if (cur.empty())
				return;
			long p = text::parse_long(cur);
			if (p < 1 || p > n)
				text::parse_error("point out of range", input);
			if (used[p - 1])
				text::parse_error("point repeated", input);
			used[p - 1] = true;
			cycle.push_back(static_cast<int>(p - 1));
			cur.clear();
		};
		for (std::size_t k = i + 1; k < close; ++k)
		{
			char c = s[k];
			if (std::isdigit(static_cast<unsigned char>(c)))
				cur.push_back(c);
			else if (c == ' ' || c == ',')
				flush();
			else
				text::parse_error("unexpected character in cycle", input);
		}
		flush();
		for (std::size_t k = 0; k < cycle.size(); ++k)
			im[cycle[k]] = cycle[(k + 1) % cycle.size()];
		i = close + 1;
	}
	return Permutation(std::move(im));
}

Permutation Permutation::of_cycle_type(Partition const &mu)
{
	std::vector<int> im(mu.size());
	int start = 0;
	for (int len : mu.parts())
	{
		for (int k = 0; k < len; ++k)
			im[start + k] = start + (k + 1) % len;
		start += len;
	}
	return Permutation(std::move(im));
}

Permutation Permutation::inverse() const
{
	std::vector<int> inv(images_.size());
	for (int i = 0; i < degree(); ++i)
		inv[images_[i]] = i;
	return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const
{
	std::vector<bool> seen(images_.size());
	std::vector<int> lens;
	for (int i = 0; i < degree(); ++i)
	{
		if (seen[i])
			continue;
		int len = 0;
		for (int j = i; !seen[j]; j = images_[j])
		{
			seen[j] = true;
			++len;
		}
		lens.push_back(len);
	}
	std::sort(lens.rbegin(), lens.rend());
	return Partition(std::move(lens));
}

int Permutation::sign() const
{
	auto ct = cycle_type();
	return (ct.size() - ct.length()) % 2 ? -1 : 1;
}

bool Permutation::is_identity() const
{
	for (int i = 0; i < degree(); ++i)
		if (images_[i] != i)
			return false;
	return true;
}

std::string Permutation::str() const
{
	std::string out;
	std::vector<bool> seen(images_.size());
	for (int i = 0; i < degree(); ++i)
	{
		if (seen[i] || images_[i] == i)
			continue;
		out += '(';
		for (int j = i; !seen[j]; j = images_[j])
		{
			seen[j] = true;
			out += (j == i ? "" : " ") + std::to_string(j + 1);
		}
		out += ')';
	}
	return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
	if (a.degree() != b.degree())
		fail(ErrorKind::SizeMismatch, "product of permutations of different degree");
	std::vector<int> im(a.images_.size());
	for (int i = 0; i < a.degree(); ++i)
		im[i] = a.images_[b.images_[i]];
	return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(int n)
{
	std::vector<Permutation> out;
	std::vector<int> im(n);
	std::iota(im.begin(), im.end(), 0);
	do
		out.emplace_back(im);
	while (std::next_permutation(im.begin(), im.end()));
	return out;
}

} // namespace schurforge
