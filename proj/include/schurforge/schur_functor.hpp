#pragma once

#include "schurforge/gobject.hpp"
#include "schurforge/graded.hpp"
#include "schurforge/kernels.hpp"
#include "schurforge/lambda.hpp"
#include "schurforge/partition.hpp"

namespace schurforge {

/// Cap on (dim X)^n for traces evaluated without materializing X^{(x)n}.
inline constexpr std::size_t kDefaultTraceBound = std::size_t(1) << 20;

/// Graded dimensions of S_pi(X): the rank of the isotypic projector on
/// X^{(x)n} in each degree, divided by chi_pi(1). Throws BoundExceeded when
/// (dim X)^|pi| > bound.
GradedObject schur_object(GradedObject const &x, Partition const &pi, std::size_t bound = kDefaultTensorBound);

/// Same as schur_object for an arbitrary labelled basis (used for complexes).
kernels::BidegreeDims schur_bidegree_dims(std::vector<Bidegree> const &basis, Partition const &pi,
                                          std::size_t bound = kDefaultTensorBound);

/// (chi(1)/n!) sum chi(s) s acting on a representation of the full symmetric
/// group S_n. Throws InvalidArgument for other groups.
GradedMap isotypic_projector_map(GObject const &x, Partition const &pi);

/// tr(sigma g^{(x)n}; X^{(x)n}) for an element g of the group of x.
Rational permuted_tensor_trace(GObject const &x, int g, Permutation const &sigma,
                               std::size_t bound = kDefaultTraceBound);

/// tr(g; S_V(X)) = (1/n!) sum_s chi_V(s^-1) tr(s g^{(x)n}; X^{(x)n}).
Rational trace_schur(GObject const &x, int g, Partition const &v, std::size_t bound = kDefaultTraceBound);

/// sum_n tr(g; Alt^n X) t^n up to t^order.
WittSeries<Rational> char_series(GObject const &x, int g, std::size_t order,
                                 std::size_t bound = kDefaultTraceBound);

} // namespace schurforge
