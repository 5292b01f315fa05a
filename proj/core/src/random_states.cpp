#include "qhesim/random_states.hpp"

#include "qhesim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) g(i, j) = cplx{rng.next_gauss(), rng.next_gauss()};
    return g;
}

} // namespace

ComplexMatrix random_unit_vector(std::size_t dim, Rng &rng) {
    ComplexMatrix v = ginibre(dim, 1, rng);
    double nrm = v.frobenius_norm();
    while (nrm < 1e-12) { // astronomically unlikely; regenerate
        v = ginibre(dim, 1, rng);
        nrm = v.frobenius_norm();
    }
    v *= cplx{1.0 / nrm, 0.0};
    return v;
}

ComplexMatrix random_density_matrix(std::size_t dim, Rng &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= cplx{1.0 / rho.trace().real(), 0.0};
    return rho;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix h = g + g.adjoint();
    h *= cplx{0.5, 0.0};
    return h;
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    // Gram-Schmidt the columns, two passes for orthogonality.
    ComplexMatrix u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<cplx> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = g(i, col);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < col; ++prev) {
                cplx overlap = 0.0;
                for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(u(i, prev)) * v[i];
                for (std::size_t i = 0; i < dim; ++i) v[i] -= overlap * u(i, prev);
            }
        }
        double nrm = 0.0;
        for (const auto &x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-9) throw std::domain_error("random_unitary: degenerate Ginibre sample");
        for (std::size_t i = 0; i < dim; ++i) u(i, col) = v[i] / nrm;
    }
    return u;
}

ComplexMatrix random_effect(std::size_t dim, Rng &rng) {
    const auto eig = eig_hermitian(random_hermitian(dim, rng));
    ComplexMatrix e(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double lam = std::min(1.0, std::max(0.0, 0.5 + 0.25 * eig.values[k]));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                e(i, j) += lam * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return e;
}

} // namespace qhesim
