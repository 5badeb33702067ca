#pragma once

#include "schurforge/partition.hpp"
#include "schurforge/permutation.hpp"
#include "schurforge/rational.hpp"

#include <map>
#include <memory>
#include <vector>

namespace schurforge {

inline constexpr int kDefaultCharacterBound = 8;

/// chi_pi(mu) by the Murnaghan-Nakayama rule (rim hooks removed on the
/// beta-set of pi). Throws SizeMismatch when |pi| != |mu|.
long character(Partition const &pi, Partition const &mu);

/// Rows are irreducible labels, columns cycle types, both in partitions_of(n)
/// order.
struct CharacterTable
{
	int n = 0;
	std::vector<Partition> labels;
	std::vector<BigInt> class_sizes; ///< n! / z_mu, indexed like labels
	std::vector<std::vector<long>> values;

	std::size_t index_of(Partition const &p) const;
	long operator()(Partition const &pi, Partition const &mu) const
	{
		return values[index_of(pi)][index_of(mu)];
	}
};

/// Memoized; the returned table is shared and immutable. Throws
/// BoundExceeded when n > bound.
std::shared_ptr<CharacterTable const> character_table(int n, int bound = kDefaultCharacterBound);

/// Finitely supported element of Q[S_n].
class GroupAlgebraElement
{
  public:
	explicit GroupAlgebraElement(int n) : n_(n) {}

	int degree() const { return n_; }
	std::map<Permutation, Rational> const &terms() const { return terms_; }
	Rational coeff(Permutation const &s) const;
	void add(Permutation const &s, Rational const &c);

	friend GroupAlgebraElement operator*(GroupAlgebraElement const &a, GroupAlgebraElement const &b);
	friend GroupAlgebraElement operator+(GroupAlgebraElement const &a, GroupAlgebraElement const &b);
	friend bool operator==(GroupAlgebraElement const &, GroupAlgebraElement const &) = default;

  private:
	int n_;
	std::map<Permutation, Rational> terms_;
};

/// Central idempotent (chi(1)/n!) sum chi(s^-1) s cutting out the
/// V_pi-isotypic component.
GroupAlgebraElement isotypic_projector(Partition const &pi);

} // namespace schurforge
