#pragma once

#include "schurforge/permutation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

/// Finite group given by its element labels and multiplication table.
/// Groups built from permutations also remember each element's permutation.
class FiniteGroup
{
  public:
	/// Validates closure, identity, inverses and (unless told otherwise)
	/// associativity, which costs |G|^3.
	FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> table,
	            bool check_associativity = true);

	static std::shared_ptr<FiniteGroup const> symmetric(int n);
	static std::shared_ptr<FiniteGroup const> cyclic(int n);
	/// Closed set of permutations of a common degree.
	static std::shared_ptr<FiniteGroup const> from_permutations(std::string name, std::vector<Permutation> elements);

	std::string const &name() const { return name_; }
	int size() const { return static_cast<int>(labels_.size()); }
	std::string const &label(int g) const { return labels_.at(g); }
	int mul(int g, int h) const { return table_[g][h]; }
	int identity() const { return identity_; }
	int inverse(int g) const { return inverse_[g]; }
	int power(int g, int k) const;

	bool has_permutations() const { return !perms_.empty(); }
	Permutation const &permutation(int g) const;
	/// n if this is the full symmetric group of degree n.
	std::optional<int> symmetric_degree() const { return symmetric_degree_; }
	/// Index of an element given by label or, for permutation groups, by
	/// cycle notation. Throws InvalidArgument if absent.
	int find(std::string_view text) const;
	std::optional<int> find(Permutation const &p) const;

  private:
	std::string name_;
	std::vector<std::string> labels_;
	std::vector<std::vector<int>> table_;
	int identity_ = 0;
	std::vector<int> inverse_;
	std::vector<Permutation> perms_;
	std::optional<int> symmetric_degree_;
};

using GroupPtr = std::shared_ptr<FiniteGroup const>;

} // namespace schurforge
