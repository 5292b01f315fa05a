#include "qhesim/distance.hpp"

#include "qhesim/linalg.hpp"
#include "qhesim/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    return 0.5 * trace_norm(a - b);
}

double trace_distance(const DensityState &a, const DensityState &b) {
    return trace_distance(a.mat(), b.mat());
}

double fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("fidelity: dimension mismatch");
    const double f = trace_norm(sqrt_psd(a) * sqrt_psd(b));
    return std::min(1.0, std::max(0.0, f));
}

double fidelity(const DensityState &a, const DensityState &b) {
    return fidelity(a.mat(), b.mat());
}

PureState purify(const DensityState &rho) {
    const auto eig = eig_hermitian(rho.mat());
    std::size_t rank = 0;
    for (double v : eig.values)
        if (v > tol::support_cutoff) ++rank;
    if (rank == 0) throw std::domain_error("purify: state has empty support");

    const std::size_t d = rho.dim();
    ComplexMatrix vec(d * rank, 1);
    for (std::size_t k = 0; k < rank; ++k) {
        const double amp = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < d; ++i) vec(i * rank + k, 0) = amp * eig.vectors(i, k);
    }
    // Renormalize: discarded sub-cutoff weight is at most rank * cutoff.
    vec *= cplx{1.0 / vec.frobenius_norm(), 0.0};
    RegisterShape shape = rho.shape().extended_with(RegisterShape{rank});
    return PureState(std::move(vec), std::move(shape));
}

namespace {

// Regroup |phi> on (local, rest): matrix A with A(l, r) = amplitude at the
// full index assembling local multi-index l and complement multi-index r.
ComplexMatrix group_local_rest(const PureState &phi, const std::vector<std::size_t> &local) {
    const auto &dims = phi.shape().dims;
    std::vector<std::size_t> rest;
    {
        std::size_t k = 0;
        for (std::size_t r = 0; r < dims.size(); ++r) {
            if (k < local.size() && local[k] == r)
                ++k;
            else
                rest.push_back(r);
        }
    }
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];

    std::size_t local_dim = 1, rest_dim = 1;
    for (std::size_t p : local) local_dim *= dims[p];
    for (std::size_t p : rest) rest_dim *= dims[p];

    auto offsets = [&](const std::vector<std::size_t> &regs, std::size_t count) {
        std::vector<std::size_t> out(count, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rem = idx, off = 0;
            for (std::size_t p = regs.size(); p-- > 0;) {
                off += (rem % dims[regs[p]]) * strides[regs[p]];
                rem /= dims[regs[p]];
            }
            out[idx] = off;
        }
        return out;
    };
    const auto local_off = offsets(local, local_dim);
    const auto rest_off = offsets(rest, rest_dim);

    ComplexMatrix a(local_dim, rest_dim);
    for (std::size_t l = 0; l < local_dim; ++l)
        for (std::size_t r = 0; r < rest_dim; ++r) a(l, r) = phi.vec()(local_off[l] + rest_off[r], 0);
    return a;
}

} // namespace

UhlmannResult uhlmann_unitary(const PureState &phi1, const PureState &phi2,
                              const std::vector<std::size_t> &local) {
    if (!(phi1.shape() == phi2.shape()))
        throw std::invalid_argument("uhlmann_unitary: purifications must share a shape");
    const ComplexMatrix a = group_local_rest(phi1, local);
    const ComplexMatrix b = group_local_rest(phi2, local);

    // <phi2|(U on local)|phi1> = Tr(U C) with C(l, l') = sum_r a(l,r) conj(b(l',r)).
    const ComplexMatrix c = a * b.adjoint();
    const auto decomp = svd(c);

    UhlmannResult out;
    out.unitary = decomp.vdag.adjoint() * decomp.u.adjoint();
    out.achieved_overlap = 0.0;
    for (double s : decomp.singular) out.achieved_overlap += s;
    out.achieved_overlap = std::min(1.0, out.achieved_overlap);
    return out;
}

HelstromResult helstrom(const DensityState &a, const DensityState &b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("helstrom: dimension mismatch");
    const ComplexMatrix diff = a.mat() - b.mat();
    const auto eig = eig_hermitian(diff);

    const std::size_t d = a.dim();
    ComplexMatrix positive(d, d);
    double half_norm = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        half_norm += std::abs(eig.values[k]);
        if (eig.values[k] <= tol::support_cutoff) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                positive(i, j) += eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    half_norm *= 0.5;

    std::vector<PovmElement> elems;
    elems.push_back({"0", positive});
    elems.push_back({"1", ComplexMatrix::identity(d) - positive});
    HelstromResult out{Povm(std::move(elems)), 0.5 * (1.0 + half_norm)};
    return out;
}

PgmResult pgm(const std::vector<WeightedState> &ensemble) {
    if (ensemble.empty()) throw std::invalid_argument("pgm: empty ensemble");
    const std::size_t d = ensemble.front().state.dim();
    double prior_sum = 0.0;
    ComplexMatrix s(d, d);
    for (const auto &w : ensemble) {
        if (w.state.dim() != d) throw std::invalid_argument("pgm: states must share a dimension");
        if (w.prior < 0.0) throw std::invalid_argument("pgm: negative prior");
        prior_sum += w.prior;
        s += cplx{w.prior, 0.0} * w.state.mat();
    }
    if (std::abs(prior_sum - 1.0) > tol::completeness)
        throw std::invalid_argument("pgm: priors must sum to 1");

    const ComplexMatrix s_inv_sqrt = inv_sqrt_psd(s, tol::support_cutoff);
    const ComplexMatrix support = s_inv_sqrt * s * s_inv_sqrt;

    std::vector<PovmElement> elems;
    double success = 0.0;
    for (const auto &w : ensemble) {
        ComplexMatrix n = s_inv_sqrt * (cplx{w.prior, 0.0} * w.state.mat()) * s_inv_sqrt;
        success += w.prior * (n * w.state.mat()).trace().real();
        elems.push_back({w.key, std::move(n)});
    }
    elems.push_back({"null", ComplexMatrix::identity(d) - support});
    return PgmResult{Povm(std::move(elems)), success};
}

PgmResult pgm_uniform(const std::vector<DensityState> &states) {
    std::vector<WeightedState> ensemble;
    const double p = 1.0 / static_cast<double>(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        ensemble.push_back({std::to_string(i), p, states[i]});
    return pgm(ensemble);
}

} // namespace qhesim
