#include "qhesim/linalg.hpp"

#include "qhesim/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qhesim {

namespace {

double off_diagonal_mass(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing the (p,q) pivot of the Hermitian
// working matrix `a`, accumulated into `v`.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const cplx beta = a(p, q);
    const double r = std::abs(beta);
    if (r == 0.0) return;
    const cplx phase = beta / r; // e^{i phi}
    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();

    const double tau = (gamma - alpha) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cplx jpq = s;                      // J(p,q)
    const cplx jqp = -s * std::conj(phase);  // J(q,p)
    const cplx jqq = c * std::conj(phase);   // J(q,q)

    const std::size_t n = a.rows();
    // a <- a * J
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + jqp * akq;
        a(k, q) = jpq * akp + jqq * akq;
    }
    // a <- J^dagger * a
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    // v <- v * J
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + jqp * vkq;
        v(k, q) = jpq * vkp + jqq * vkq;
    }
    // Clean the pivot pair explicitly.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

} // namespace

EigResult eig_hermitian(const ComplexMatrix &m) {
    if (!m.is_square()) throw std::invalid_argument("eig_hermitian: matrix not square");
    if (hermiticity_defect(m) > tol::hermitian)
        throw std::invalid_argument("eig_hermitian: matrix not Hermitian within tolerance");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    // Symmetrize to kill roundoff-level asymmetry before iterating.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cplx{a(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_mass(a) < tol::jacobi_off * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    EigResult out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    out.vectors.ensure_finite("eig_hermitian");
    return out;
}

namespace {

// Orthonormal completion of the columns already present in `cols`.
void complete_basis(std::vector<std::vector<cplx>> &cols, std::size_t dim) {
    for (std::size_t e = 0; e < dim && cols.size() < dim; ++e) {
        std::vector<cplx> v(dim, cplx{0.0, 0.0});
        v[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &u : cols) {
                cplx overlap = 0.0;
                for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(u[i]) * v[i];
                for (std::size_t i = 0; i < dim; ++i) v[i] -= overlap * u[i];
            }
        }
        double nrm = 0.0;
        for (const auto &x : v) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm > 1e-6) {
            for (auto &x : v) x /= nrm;
            cols.push_back(std::move(v));
        }
    }
    if (cols.size() != dim) throw std::domain_error("svd: basis completion failed");
}

} // namespace

SvdResult svd(const ComplexMatrix &m) {
    const std::size_t r = m.rows(), c = m.cols();
    const auto gram = eig_hermitian(m.adjoint() * m); // c x c, eigenvalues descending

    const std::size_t k = std::min(r, c);
    SvdResult out;
    out.singular.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.singular[i] = std::sqrt(std::max(0.0, gram.values[i]));

    const double sigma_cut = 1e-13 * std::max(1.0, out.singular.empty() ? 0.0 : out.singular[0]);
    std::vector<std::vector<cplx>> u_cols;
    for (std::size_t i = 0; i < k; ++i) {
        if (out.singular[i] <= sigma_cut) break;
        std::vector<cplx> col(r, cplx{0.0, 0.0});
        for (std::size_t row = 0; row < r; ++row) {
            cplx acc = 0.0;
            for (std::size_t cc = 0; cc < c; ++cc) acc += m(row, cc) * gram.vectors(cc, i);
            col[row] = acc / out.singular[i];
        }
        u_cols.push_back(std::move(col));
    }
    complete_basis(u_cols, r);

    out.u = ComplexMatrix(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) out.u(i, j) = u_cols[j][i];
    out.vdag = gram.vectors.adjoint();
    out.u.ensure_finite("svd");
    return out;
}

double trace_norm(const ComplexMatrix &m) {
    if (m.is_square() && hermiticity_defect(m) <= tol::hermitian) {
        const auto eig = eig_hermitian(m);
        double s = 0.0;
        for (double v : eig.values) s += std::abs(v);
        return s;
    }
    const auto decomp = svd(m);
    double s = 0.0;
    for (double v : decomp.singular) s += v;
    return s;
}

namespace {

ComplexMatrix rebuild(const EigResult &eig, const std::vector<double> &f_values) {
    const std::size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (f_values[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += f_values[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    out.ensure_finite("hermitian rebuild");
    return out;
}

void check_psd(const EigResult &eig, const char *context) {
    if (!eig.values.empty() && eig.values.back() < -tol::psd)
        throw std::domain_error(std::string(context) + ": matrix has a negative eigenvalue beyond tolerance");
}

} // namespace

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    const auto eig = eig_hermitian(m);
    check_psd(eig, "sqrt_psd");
    std::vector<double> roots(eig.values.size());
    for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = std::sqrt(std::max(0.0, eig.values[i]));
    return rebuild(eig, roots);
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix &m, double cutoff) {
    const auto eig = eig_hermitian(m);
    check_psd(eig, "inv_sqrt_psd");
    std::vector<double> f(eig.values.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (eig.values[i] >= cutoff) f[i] = 1.0 / std::sqrt(eig.values[i]);
    return rebuild(eig, f);
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix &m) { return inv_sqrt_psd(m, tol::support_cutoff); }

ComplexMatrix hermitian_function(const ComplexMatrix &m, double (*f)(double)) {
    const auto eig = eig_hermitian(m);
    std::vector<double> vals(eig.values.size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = f(eig.values[i]);
    return rebuild(eig, vals);
}

} // namespace qhesim
