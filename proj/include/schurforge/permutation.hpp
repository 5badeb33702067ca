#pragma once

#include "schurforge/partition.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

/// Bijection of {0, ..., n-1}; printed 1-based in cycle notation.
class Permutation
{
  public:
	Permutation() = default;
	explicit Permutation(std::vector<int> images);

	static Permutation identity(int n);
	/// Cycle notation such as "(1 2 3)(4 5)"; "()" is the identity. Points
	/// beyond those mentioned are fixed up to degree n.
	static Permutation parse(std::string_view text, int n);
	/// Canonical element of the class: consecutive points per cycle.
	static Permutation of_cycle_type(Partition const &mu);

	int degree() const { return static_cast<int>(images_.size()); }
	int operator()(int i) const { return images_[i]; }
	std::vector<int> const &images() const { return images_; }

	Permutation inverse() const;
	Partition cycle_type() const;
	int sign() const;
	bool is_identity() const;
	std::string str() const;

	/// (a * b)(i) = a(b(i)).
	friend Permutation operator*(Permutation const &a, Permutation const &b);
	friend bool operator==(Permutation const &, Permutation const &) = default;
	friend auto operator<=>(Permutation const &, Permutation const &) = default;

  private:
	std::vector<int> images_;
};

/// Every element of the symmetric group of degree n, in lexicographic order
/// of image lists.
std::vector<Permutation> all_permutations(int n);

} // namespace schurforge
