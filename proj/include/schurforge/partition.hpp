#pragma once

#include "schurforge/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schurforge {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
///
/// Partitions order first by size, then reverse-lexicographically, so that
/// (3) < (2,1) < (1,1,1). Maps keyed by Partition therefore iterate in the
/// same order as partitions_of().
class Partition
{
  public:
	Partition() = default;
	/// Throws InvalidArgument unless parts are positive and weakly decreasing.
	explicit Partition(std::vector<int> parts);
	Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

	/// "3,1,1" or "[]" (also accepts "[3,1,1]" and "3 1 1").
	static Partition parse(std::string_view text);

	std::vector<int> const &parts() const { return parts_; }
	int size() const { return size_; }
	int length() const { return static_cast<int>(parts_.size()); }
	bool empty() const { return parts_.empty(); }
	int operator[](int i) const { return i < length() ? parts_[i] : 0; }

	Partition conjugate() const;
	/// Hook length of cell (i, j), 0-based.
	int hook(int i, int j) const;
	/// Number of standard Young tableaux, i.e. the dimension of the
	/// irreducible representation V_pi.
	BigInt dimension() const;
	/// z_mu = prod_k k^{m_k} m_k!, the centralizer order of cycle type mu.
	BigInt centralizer_order() const;

	/// "3,1,1"; the empty partition prints as "[]".
	std::string str() const;

	friend bool operator==(Partition const &a, Partition const &b) { return a.parts_ == b.parts_; }
	friend std::strong_ordering operator<=>(Partition const &a, Partition const &b);

  private:
	std::vector<int> parts_;
	int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Value at m of the polynomial d_pi with d_pi(dim W) = dim S_pi(W), computed
/// by the hook-content formula prod (m + j - i) / hook(i, j).
BigInt dim_poly_eval(Partition const &pi, long m);

/// (n) and (1^n).
Partition row_partition(int n);
Partition column_partition(int n);

} // namespace schurforge
