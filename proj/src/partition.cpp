#include "schurforge/partition.hpp"

#include "schurforge/error.hpp"
#include "text.hpp"

#include <algorithm>
#include <map>

namespace schurforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
	for (std::size_t i = 0; i < parts_.size(); ++i)
	{
		if (parts_[i] <= 0)
			fail(ErrorKind::InvalidArgument, "partition parts must be positive");
		if (i > 0 && parts_[i] > parts_[i - 1])
			fail(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
		size_ += parts_[i];
	}
}

Partition Partition::parse(std::string_view input)
{
	std::string s = text::strip(input);
	if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
		s = text::strip(s.substr(1, s.size() - 2));
	else if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
		s = text::strip(s.substr(1, s.size() - 2));
	std::vector<int> parts;
	std::string cur;
	auto flush = [&] {
		if (!cur.empty())
			parts.push_back(static_cast<int>(text::parse_long(cur)));
		cur.clear();
	};
	for (char c : s)
	{
		if (c == ',' || c == ' ' || c == '\t')
		{
			if (c == ',' && cur.empty())
				text::parse_error("empty part", input);
			flush();
		}
		else if (std::isdigit(static_cast<unsigned char>(c)))
			cur.push_back(c);
		else
			text::parse_error("unexpected character in partition", input);
	}
	flush();
	try
	{
		return Partition(parts);
	}
	catch (Error const &e)
	{
		text::parse_error(e.what(), input);
	}
}

std::strong_ordering operator<=>(Partition const &a, Partition const &b)
{
	if (auto c = a.size_ <=> b.size_; c != 0)
		return c;
	// reverse-lexicographic: the larger first part sorts first
	return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
	                                              a.parts_.end());
}

Partition Partition::conjugate() const
{
	std::vector<int> c;
	for (int j = 0; j < (parts_.empty() ? 0 : parts_[0]); ++j)
	{
		int len = 0;
		while (len < length() && parts_[len] > j)
			++len;
		c.push_back(len);
	}
	return Partition(std::move(c));
}

int Partition::hook(int i, int j) const
{
	if (i < 0 || i >= length() || j < 0 || j >= parts_[i])
		fail(ErrorKind::InvalidArgument, "cell outside the diagram");
	int leg = 0;
	while (i + leg + 1 < length() && parts_[i + leg + 1] > j)
		++leg;
	return parts_[i] - j - 1 + leg + 1;
}

BigInt Partition::dimension() const
{
	BigInt h = 1;
	for (int i = 0; i < length(); ++i)
		for (int j = 0; j < parts_[i]; ++j)
			h *= hook(i, j);
	return factorial(size_) / h;
}

BigInt Partition::centralizer_order() const
{
	std::map<int, int> mult;
	for (int p : parts_)
		++mult[p];
	BigInt z = 1;
	for (auto const &[k, m] : mult)
	{
		BigInt km;
		mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
		z *= km * factorial(m);
	}
	return z;
}

std::string Partition::str() const
{
	if (parts_.empty())
		return "[]";
	std::string s;
	for (std::size_t i = 0; i < parts_.size(); ++i)
		s += (i ? "," : "") + std::to_string(parts_[i]);
	return s;
}

namespace {

void extend(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out)
{
	if (remaining == 0)
	{
		out.emplace_back(cur);
		return;
	}
	for (int p = std::min(remaining, max_part); p >= 1; --p)
	{
		cur.push_back(p);
		extend(remaining - p, p, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "partitions of a negative number");
	std::vector<Partition> out;
	std::vector<int> cur;
	extend(n, n, cur, out);
	return out;
}

BigInt dim_poly_eval(Partition const &pi, long m)
{
	mpq_class v = 1;
	for (int i = 0; i < pi.length(); ++i)
		for (int j = 0; j < pi[i]; ++j)
			v *= mpq_class(m + j - i, pi.hook(i, j));
	v.canonicalize();
	return v.get_num();
}

Partition row_partition(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition column_partition(int n) { return Partition(std::vector<int>(n, 1)); }

} // namespace schurforge
