#pragma once

#include "schurforge/graded.hpp"
#include "schurforge/group.hpp"
#include "schurforge/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

inline constexpr std::size_t kDefaultTensorBound = 1024;

/// A graded object with an action of a finite group by degree-preserving
/// automorphisms.
class GObject
{
  public:
	enum class Check { yes, no };

	/// With Check::yes verifies action(e) = id and action(gh) = action(g) action(h).
	GObject(GradedObject object, GroupPtr group, std::vector<GradedMap> action, Check check = Check::yes);

	static GObject trivial(GradedObject const &object, GroupPtr group);

	GradedObject const &object() const { return object_; }
	GroupPtr const &group() const { return group_; }
	GradedMap const &action(int g) const { return action_.at(g); }
	std::vector<GradedMap> const &actions() const { return action_; }

  private:
	GradedObject object_;
	GroupPtr group_;
	std::vector<GradedMap> action_;
};

GObject tensor(GObject const &x, GObject const &y);
GObject direct_sum(GObject const &x, GObject const &y);

bool is_equivariant(GObject const &x, GObject const &y, GradedMap const &f);
/// Kernel of an equivariant map with the induced action. Throws NotEquivariant.
GObject equivariant_kernel(GObject const &x, GObject const &y, GradedMap const &f);

/// X^{(x)n} with S_n permuting factors, a transposition of adjacent factors of
/// degrees p, q contributing (-1)^{pq}. Basis: multi-indices in lexicographic
/// order, stably sorted by total degree. Throws BoundExceeded when
/// (dim X)^n > bound.
GObject sym_action(GradedObject const &x, int n, std::size_t bound = kDefaultTensorBound);

/// The irreducible Q[S_n]-module V_pi, realized as the left ideal generated by
/// a Young symmetrizer.
GObject irreducible_representation(Partition const &pi);

/// Named presets: "perm:symN", "sign:symN", "twisted:symN" (permutation rep
/// tensored with sign), "trivial:symN", "reg:cycN", "reg:symN".
GObject preset(std::string_view name);

/// JSON form:
///   {"group": {"symmetric": 3} | {"cyclic": 4} |
///             {"elements": ["e","a"], "table": [[0,1],[1,0]]},
///    "dims": {"0": 2},
///    "action": [ {"0": [["1","0"],["0","1"]]}, ... ]}   one entry per element
/// Matrix entries are integers or "p/q" strings. Omitted "action" means trivial.
GObject parse_gobject_json(std::string const &text);

} // namespace schurforge
