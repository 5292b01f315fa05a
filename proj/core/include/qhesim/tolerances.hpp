#pragma once

namespace qhesim::tol {

/// ||m - m^dagger||_max allowed before a matrix is rejected as non-Hermitian.
inline constexpr double hermitian = 1e-10;
/// Most negative eigenvalue allowed for PSD inputs / density matrices.
inline constexpr double psd = 1e-10;
/// |Tr(rho) - 1| allowed for density matrices; also unit-norm slack.
inline constexpr double trace_one = 1e-10;
/// Kraus / POVM completeness slack (sum-to-identity, max entry).
inline constexpr double completeness = 1e-9;
/// Reconstruction accuracy of eigen/SVD factorizations.
inline constexpr double reconstruction = 1e-9;
/// Eigenvalues below this are treated as zero on support-restricted inverses.
inline constexpr double support_cutoff = 1e-12;
/// Jacobi sweep convergence: off-diagonal Frobenius mass below this.
inline constexpr double jacobi_off = 1e-14;
/// Slack for theorem-level assertions accumulated over multi-round runs.
inline constexpr double theorem = 1e-6;
/// Metric values below this are reported as exact zeros; keeps quantities
/// that are zero in exact arithmetic independent of the candidate seed.
inline constexpr double metric_noise_floor = 1e-12;

} // namespace qhesim::tol
