#pragma once

#include "qhesim/complex_matrix.hpp"
#include "qhesim/rng.hpp"

namespace qhesim {

/// Haar-distributed unit column vector of dimension `dim`.
ComplexMatrix random_unit_vector(std::size_t dim, Rng &rng);

/// Random density matrix GG^dagger / Tr from a square Ginibre sample.
ComplexMatrix random_density_matrix(std::size_t dim, Rng &rng);

/// Random Hermitian matrix (G + G^dagger)/2, entries O(1).
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);

/// Haar-ish random unitary via Gram-Schmidt of a Ginibre sample.
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);

/// Random effect 0 <= E <= I (eigenvalues of a random Hermitian clamped into
/// [0, 1]); used to sample two-outcome POVMs {E, I - E}.
ComplexMatrix random_effect(std::size_t dim, Rng &rng);

} // namespace qhesim
