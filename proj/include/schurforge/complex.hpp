#pragma once

#include "schurforge/gobject.hpp"
#include "schurforge/graded.hpp"
#include "schurforge/kernels.hpp"
#include "schurforge/partition.hpp"

#include <map>
#include <vector>

namespace schurforge {

/// Bounded complex of graded objects, X^n in homological degree n with
/// d^n : X^n -> X^{n+1}. Koszul signs use the total degree.
class ComplexObject
{
  public:
	ComplexObject() = default;
	/// Throws SizeMismatch for maps between the wrong terms and NotAComplex
	/// when d^{n+1} d^n != 0.
	ComplexObject(std::map<int, GradedObject> terms, std::map<int, GradedMap> differentials);

	static ComplexObject concentrated(GradedObject const &x, int degree = 0);

	std::map<int, GradedObject> const &terms() const { return terms_; }
	GradedObject term(int n) const;
	GradedMap differential(int n) const;
	std::map<int, GradedMap> const &differentials() const { return d_; }

	/// Labels of the basis: terms by homological degree, each in its own order.
	std::vector<Bidegree> basis() const;
	/// Differential as one dense matrix on basis().
	MatrixQ total_differential() const;
	/// Z[k]: (Z[k])^n = Z^{n+k}, differential multiplied by (-1)^k.
	ComplexObject shifted(int k) const;

  private:
	std::map<int, GradedObject> terms_;
	std::map<int, GradedMap> d_;
};

/// H^n = ker d^n / im d^{n-1}, as graded objects (zero ones omitted).
std::map<int, GradedObject> cohomology(ComplexObject const &z);
/// Same terms, zero differentials.
ComplexObject gr_S(ComplexObject const &z);
/// H^n(Z) in homological degree n, zero differentials.
ComplexObject gr_tau(ComplexObject const &z);

ComplexObject direct_sum(ComplexObject const &a, ComplexObject const &b);

/// Dimensions per bidegree of the cohomology of the subcomplex S_pi(Z) of
/// Z^{(x)n}, computed from the materialized differential and projector.
/// Throws BoundExceeded when (dim Z)^n > bound.
kernels::BidegreeDims schur_complex_cohomology(ComplexObject const &z, Partition const &pi,
                                               std::size_t bound = kDefaultTensorBound);

/// Complex of G-objects with equivariant differentials.
class EquivariantComplex
{
  public:
	/// Throws GroupMismatch, NotEquivariant or NotAComplex.
	EquivariantComplex(std::map<int, GObject> terms, std::map<int, GradedMap> differentials);

	std::map<int, GObject> const &terms() const { return terms_; }
	ComplexObject underlying() const;
	GroupPtr const &group() const { return group_; }

  private:
	std::map<int, GObject> terms_;
	std::map<int, GradedMap> d_;
	GroupPtr group_;
};

/// Cohomology with the induced group actions.
std::map<int, GObject> cohomology(EquivariantComplex const &z);

} // namespace schurforge
