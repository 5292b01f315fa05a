#pragma once

#include "qhesim/complex_matrix.hpp"

#include <vector>

namespace qhesim {

/// Eigendecomposition of a Hermitian matrix: m = V diag(values) V^dagger,
/// eigenvalues sorted descending, V unitary, column k paired with values[k].
struct EigResult {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Singular value decomposition m = u * diag(singular) * vdag with square
/// unitary u (rows x rows) and vdag (cols x cols); singular values descending,
/// length min(rows, cols).
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> singular;
    ComplexMatrix vdag;
};

/// Cyclic Jacobi for Hermitian matrices. Throws std::invalid_argument when
/// ||m - m^dagger||_max exceeds the Hermiticity tolerance.
EigResult eig_hermitian(const ComplexMatrix &m);

SvdResult svd(const ComplexMatrix &m);

/// Sum of singular values (Schatten 1-norm). Hermitian inputs take the
/// eigenvalue fast path.
double trace_norm(const ComplexMatrix &m);

/// Principal square root of a PSD matrix. Eigenvalues below -psd tolerance
/// are a precondition error; small negatives are clamped to zero.
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

/// Inverse square root on the support only: eigenvalues below `cutoff` are
/// treated as exact zeros (pseudo-inverse convention).
ComplexMatrix inv_sqrt_psd(const ComplexMatrix &m, double cutoff);
ComplexMatrix inv_sqrt_psd(const ComplexMatrix &m);

/// V diag(f(lambda)) V^dagger for a Hermitian m.
ComplexMatrix hermitian_function(const ComplexMatrix &m, double (*f)(double));

} // namespace qhesim
