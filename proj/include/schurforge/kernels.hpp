#pragma once

#include "schurforge/graded.hpp"
#include "schurforge/matrix.hpp"
#include "schurforge/partition.hpp"
#include "schurforge/permutation.hpp"

#include <map>
#include <vector>

namespace schurforge::kernels {

using BidegreeDims = std::map<Bidegree, long>;

// Every kernel exists in a serial reference form and an OpenMP form. The two
// must agree exactly; tests/kernels_test.cpp and bench/ compare them.

namespace serial {

std::size_t bareiss_rank(MatrixQ const &m);

/// Per-bidegree dimensions of S_pi applied to the span of `basis`, from the
/// ranks of the isotypic projector on each S_n-orbit of multi-indices.
BidegreeDims schur_dims(std::vector<Bidegree> const &basis, Partition const &pi);

/// Supertrace of sigma o f^{(x)n} on X^{(x)n}, where f is the dense matrix of
/// a degree-preserving endomorphism and `parity` gives each basis vector's
/// Koszul parity. Evaluated from diagonal entries without forming X^{(x)n}.
Rational permuted_trace(MatrixQ const &f, std::vector<int> const &parity, Permutation const &sigma);

} // namespace serial

namespace parallel {

std::size_t bareiss_rank(MatrixQ const &m);
BidegreeDims schur_dims(std::vector<Bidegree> const &basis, Partition const &pi);
Rational permuted_trace(MatrixQ const &f, std::vector<int> const &parity, Permutation const &sigma);

} // namespace parallel

/// Koszul sign of moving the factors at positions m to sigma(m), given the
/// parity of the factor at each position.
int koszul_sign(Permutation const &sigma, std::vector<int> const &parities);

} // namespace schurforge::kernels
