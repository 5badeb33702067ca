#include "schurforge/group.hpp"

#include "schurforge/error.hpp"

#include <map>

namespace schurforge {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> table,
                         bool check_associativity)
	: name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table))
{
	int n = size();
	if (n == 0)
		fail(ErrorKind::InvalidArgument, "a group has at least one element");
	if (static_cast<int>(table_.size()) != n)
		fail(ErrorKind::SizeMismatch, "multiplication table has the wrong number of rows");
	for (auto const &row : table_)
	{
		if (static_cast<int>(row.size()) != n)
			fail(ErrorKind::SizeMismatch, "multiplication table has a row of the wrong length");
		for (int x : row)
			if (x < 0 || x >= n)
				fail(ErrorKind::InvalidArgument, "multiplication table entry out of range");
	}
	identity_ = -1;
	for (int e = 0; e < n && identity_ < 0; ++e)
	{
		bool ok = true;
		for (int g = 0; g < n && ok; ++g)
			ok = table_[e][g] == g && table_[g][e] == g;
		if (ok)
			identity_ = e;
	}
	if (identity_ < 0)
		fail(ErrorKind::InvalidArgument, "multiplication table has no identity");
	inverse_.assign(n, -1);
	for (int g = 0; g < n; ++g)
		for (int h = 0; h < n; ++h)
			if (table_[g][h] == identity_ && table_[h][g] == identity_)
				inverse_[g] = h;
	for (int g = 0; g < n; ++g)
		if (inverse_[g] < 0)
			fail(ErrorKind::InvalidArgument, "element " + labels_[g] + " has no inverse");
	if (check_associativity)
		for (int a = 0; a < n; ++a)
			for (int b = 0; b < n; ++b)
				for (int c = 0; c < n; ++c)
					if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
						fail(ErrorKind::InvalidArgument, "multiplication table is not associative");
}

std::shared_ptr<FiniteGroup const> FiniteGroup::from_permutations(std::string name, std::vector<Permutation> elements)
{
	if (elements.empty())
		fail(ErrorKind::InvalidArgument, "a group has at least one element");
	int degree = elements.front().degree();
	std::map<Permutation, int> index;
	for (std::size_t i = 0; i < elements.size(); ++i)
	{
		if (elements[i].degree() != degree)
			fail(ErrorKind::SizeMismatch, "permutations of different degrees");
		if (!index.emplace(elements[i], static_cast<int>(i)).second)
			fail(ErrorKind::InvalidArgument, "repeated permutation");
	}
	int n = static_cast<int>(elements.size());
	std::vector<std::vector<int>> table(n, std::vector<int>(n));
	std::vector<std::string> labels;
	for (int g = 0; g < n; ++g)
	{
		labels.push_back(elements[g].str());
		for (int h = 0; h < n; ++h)
		{
			auto it = index.find(elements[g] * elements[h]);
			if (it == index.end())
				fail(ErrorKind::InvalidArgument, "permutations are not closed under composition");
			table[g][h] = it->second;
		}
	}
	auto grp = std::make_shared<FiniteGroup>(std::move(name), std::move(labels), std::move(table), false);
	grp->perms_ = std::move(elements);
	if (factorial(degree) == n)
		grp->symmetric_degree_ = degree;
	return grp;
}

std::shared_ptr<FiniteGroup const> FiniteGroup::symmetric(int n)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "negative degree");
	return from_permutations("S" + std::to_string(n), all_permutations(n));
}

std::shared_ptr<FiniteGroup const> FiniteGroup::cyclic(int n)
{
	if (n < 1)
		fail(ErrorKind::InvalidArgument, "cyclic group order must be positive");
	std::vector<int> gen(n);
	for (int i = 0; i < n; ++i)
		gen[i] = (i + 1) % n;
	Permutation c(gen), p = Permutation::identity(n);
	std::vector<Permutation> elems;
	for (int k = 0; k < n; ++k, p = c * p)
		elems.push_back(p);
	auto grp = std::const_pointer_cast<FiniteGroup>(from_permutations("C" + std::to_string(n), std::move(elems)));
	for (int k = 0; k < n; ++k)
		grp->labels_[k] = k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k));
	if (n > 2)
		grp->symmetric_degree_.reset();
	return grp;
}

int FiniteGroup::power(int g, int k) const
{
	int base = k < 0 ? inverse(g) : g, r = identity_;
	for (int i = 0; i < (k < 0 ? -k : k); ++i)
		r = mul(r, base);
	return r;
}

Permutation const &FiniteGroup::permutation(int g) const
{
	if (perms_.empty())
		fail(ErrorKind::InvalidArgument, "group " + name_ + " is not given by permutations");
	return perms_.at(g);
}

int FiniteGroup::find(std::string_view text) const
{
	for (int g = 0; g < size(); ++g)
		if (labels_[g] == text)
			return g;
	if (!perms_.empty() && !text.empty() && text.front() == '(')
	{
		Permutation p = Permutation::parse(text, perms_.front().degree());
		if (auto g = find(p))
			return *g;
	}
	fail(ErrorKind::InvalidArgument, "no element " + std::string(text) + " in " + name_);
}

std::optional<int> FiniteGroup::find(Permutation const &p) const
{
	for (int g = 0; g < static_cast<int>(perms_.size()); ++g)
		if (perms_[g] == p)
			return g;
	return std::nullopt;
}

} // namespace schurforge
