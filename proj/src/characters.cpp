#include "schurforge/characters.hpp"

#include "schurforge/error.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace schurforge {

namespace {

using BetaSet = std::vector<int>; // ascending

BetaSet beta_set(std::vector<int> const &lambda)
{
	int l = static_cast<int>(lambda.size());
	BetaSet b(l);
	for (int i = 0; i < l; ++i)
		b[l - 1 - i] = lambda[i] + l - 1 - i;
	return b;
}

std::vector<int> from_beta(BetaSet const &b)
{
	int l = static_cast<int>(b.size());
	std::vector<int> lambda;
	for (int i = 0; i < l; ++i)
	{
		int part = b[l - 1 - i] - (l - 1 - i);
		if (part > 0)
			lambda.push_back(part);
	}
	return lambda;
}

std::mutex memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;

// mu is consumed from the front (largest part first).
long mn(std::vector<int> const &lambda, std::vector<int> const &mu)
{
	if (mu.empty())
		return lambda.empty() ? 1 : 0;
	auto key = std::make_pair(lambda, mu);
	{
		std::lock_guard lock(memo_mutex);
		if (auto it = memo.find(key); it != memo.end())
			return it->second;
	}
	int r = mu.front();
	std::vector<int> rest(mu.begin() + 1, mu.end());
	BetaSet b = beta_set(lambda);
	long total = 0;
	for (std::size_t k = 0; k < b.size(); ++k)
	{
		int to = b[k] - r;
		if (to < 0 || std::binary_search(b.begin(), b.end(), to))
			continue;
		// elements strictly between `to` and b[k] give the leg length
		auto between = std::lower_bound(b.begin(), b.end(), b[k]) - std::upper_bound(b.begin(), b.end(), to);
		BetaSet nb = b;
		nb[k] = to;
		std::sort(nb.begin(), nb.end());
		long v = mn(from_beta(nb), rest);
		total += between % 2 ? -v : v;
	}
	std::lock_guard lock(memo_mutex);
	memo.emplace(std::move(key), total);
	return total;
}

} // namespace

long character(Partition const &pi, Partition const &mu)
{
	if (pi.size() != mu.size())
		fail(ErrorKind::SizeMismatch,
		     "character of a partition of " + std::to_string(pi.size()) + " on a class of " +
		         std::to_string(mu.size()));
	return mn(pi.parts(), mu.parts());
}

std::size_t CharacterTable::index_of(Partition const &p) const
{
	auto it = std::lower_bound(labels.begin(), labels.end(), p);
	if (it == labels.end() || !(*it == p))
		fail(ErrorKind::SizeMismatch, "partition " + p.str() + " is not a label of this table");
	return static_cast<std::size_t>(it - labels.begin());
}

std::shared_ptr<CharacterTable const> character_table(int n, int bound)
{
	if (n < 0)
		fail(ErrorKind::InvalidArgument, "negative degree");
	if (n > bound)
		fail(ErrorKind::BoundExceeded,
		     "character table of degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
	static std::mutex m;
	static std::map<int, std::shared_ptr<CharacterTable const>> cache;
	{
		std::lock_guard lock(m);
		if (auto it = cache.find(n); it != cache.end())
			return it->second;
	}
	auto t = std::make_shared<CharacterTable>();
	t->n = n;
	t->labels = partitions_of(n);
	BigInt nf = factorial(n);
	for (auto const &mu : t->labels)
		t->class_sizes.push_back(nf / mu.centralizer_order());
	for (auto const &pi : t->labels)
	{
		std::vector<long> row;
		for (auto const &mu : t->labels)
			row.push_back(character(pi, mu));
		t->values.push_back(std::move(row));
	}
	std::lock_guard lock(m);
	return cache.emplace(n, std::move(t)).first->second;
}

Rational GroupAlgebraElement::coeff(Permutation const &s) const
{
	auto it = terms_.find(s);
	return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(Permutation const &s, Rational const &c)
{
	if (s.degree() != n_)
		fail(ErrorKind::SizeMismatch, "permutation degree differs from the group algebra");
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(s, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

GroupAlgebraElement operator*(GroupAlgebraElement const &a, GroupAlgebraElement const &b)
{
	if (a.n_ != b.n_)
		fail(ErrorKind::SizeMismatch, "product in group algebras of different degree");
	GroupAlgebraElement r(a.n_);
	for (auto const &[s, x] : a.terms_)
		for (auto const &[t, y] : b.terms_)
			r.add(s * t, x * y);
	return r;
}

GroupAlgebraElement operator+(GroupAlgebraElement const &a, GroupAlgebraElement const &b)
{
	if (a.n_ != b.n_)
		fail(ErrorKind::SizeMismatch, "sum in group algebras of different degree");
	GroupAlgebraElement r(a);
	for (auto const &[t, y] : b.terms_)
		r.add(t, y);
	return r;
}

GroupAlgebraElement isotypic_projector(Partition const &pi)
{
	int n = pi.size();
	GroupAlgebraElement e(n);
	Rational scale(pi.dimension(), factorial(n));
	for (auto const &s : all_permutations(n))
		e.add(s, scale * Rational(character(pi, s.inverse().cycle_type())));
	return e;
}

} // namespace schurforge
