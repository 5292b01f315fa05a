#include "qhesim/states.hpp"

#include "qhesim/linalg.hpp"
#include "qhesim/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

DensityState::DensityState(ComplexMatrix mat, RegisterShape shape)
    : mat_(std::move(mat)), shape_(std::move(shape)) {
    if (!mat_.is_square()) throw std::invalid_argument("DensityState: matrix not square");
    shape_.ensure_matches(mat_.rows(), "DensityState");
    mat_.ensure_finite("DensityState");
    if (hermiticity_defect(mat_) > tol::hermitian)
        throw std::invalid_argument("DensityState: matrix not Hermitian within tolerance");
    if (std::abs(mat_.trace().real() - 1.0) > tol::trace_one ||
        std::abs(mat_.trace().imag()) > tol::trace_one)
        throw std::invalid_argument("DensityState: trace != 1 within tolerance");
    const auto eig = eig_hermitian(mat_);
    if (eig.values.back() < -tol::psd)
        throw std::invalid_argument("DensityState: negative eigenvalue beyond tolerance");
}

DensityState DensityState::marginal(const std::vector<std::size_t> &keep) const {
    return DensityState(partial_trace(mat_, shape_, keep), kept_shape(shape_, keep));
}

PureState::PureState(ComplexMatrix vec, RegisterShape shape)
    : vec_(std::move(vec)), shape_(std::move(shape)) {
    if (vec_.cols() != 1) throw std::invalid_argument("PureState: vector must be a column");
    shape_.ensure_matches(vec_.rows(), "PureState");
    vec_.ensure_finite("PureState");
    if (std::abs(vec_.frobenius_norm() - 1.0) > tol::trace_one)
        throw std::invalid_argument("PureState: norm != 1 within tolerance");
}

ComplexMatrix PureState::projector() const { return vec_ * vec_.adjoint(); }

DensityState PureState::to_density() const { return DensityState(projector(), shape_); }

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, RegisterShape in_shape,
                           RegisterShape out_shape)
    : kraus_ops_(std::move(kraus_ops)), in_shape_(std::move(in_shape)),
      out_shape_(std::move(out_shape)) {
    if (kraus_ops_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
    const std::size_t in = in_shape_.total_dim();
    const std::size_t out = out_shape_.total_dim();
    ComplexMatrix completeness(in, in);
    for (const auto &k : kraus_ops_) {
        if (k.rows() != out || k.cols() != in)
            throw std::invalid_argument("KrausChannel: Kraus operator dimension mismatch");
        completeness += k.adjoint() * k;
    }
    if (max_abs_diff(completeness, ComplexMatrix::identity(in)) > tol::completeness)
        throw std::invalid_argument("KrausChannel: completeness sum K^dagger K != I");
}

ComplexMatrix KrausChannel::apply_to_operator(const ComplexMatrix &m) const {
    if (m.rows() != in_dim() || m.cols() != in_dim())
        throw std::invalid_argument("KrausChannel: operator dimension mismatch");
    ComplexMatrix out(out_dim(), out_dim());
    for (const auto &k : kraus_ops_) out += k * m * k.adjoint();
    return out;
}

KrausChannel KrausChannel::then(const KrausChannel &other) const {
    if (other.in_dim() != out_dim())
        throw std::invalid_argument("KrausChannel::then: shapes do not chain");
    std::vector<ComplexMatrix> composed;
    composed.reserve(kraus_ops_.size() * other.kraus_ops_.size());
    for (const auto &b : other.kraus_ops_)
        for (const auto &a : kraus_ops_) composed.push_back(b * a);
    return KrausChannel(std::move(composed), in_shape_, other.out_shape_);
}

ComplexMatrix CpMap::apply_to_operator(const ComplexMatrix &m) const {
    ComplexMatrix out(out_shape.total_dim(), out_shape.total_dim());
    for (const auto &k : kraus_ops) out += k * m * k.adjoint();
    return out;
}

double CpMap::unitality_defect() const {
    const ComplexMatrix id = ComplexMatrix::identity(in_shape.total_dim());
    return max_abs_diff(apply_to_operator(id), ComplexMatrix::identity(out_shape.total_dim()));
}

CpMap adjoint_channel(const KrausChannel &ch) {
    CpMap adj;
    adj.in_shape = ch.out_shape();
    adj.out_shape = ch.in_shape();
    for (const auto &k : ch.kraus_ops()) adj.kraus_ops.push_back(k.adjoint());
    return adj;
}

Povm::Povm(std::vector<PovmElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
    const std::size_t d = elements_.front().op.rows();
    ComplexMatrix sum(d, d);
    for (const auto &e : elements_) {
        if (e.op.rows() != d || e.op.cols() != d)
            throw std::invalid_argument("Povm: element dimension mismatch");
        if (hermiticity_defect(e.op) > tol::hermitian)
            throw std::invalid_argument("Povm: element not Hermitian");
        const auto eig = eig_hermitian(e.op);
        if (eig.values.back() < -tol::psd)
            throw std::invalid_argument("Povm: element not PSD within tolerance");
        sum += e.op;
    }
    if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol::completeness)
        throw std::invalid_argument("Povm: elements do not sum to identity");
}

const ComplexMatrix &Povm::element(const std::string &key) const {
    for (const auto &e : elements_)
        if (e.key == key) return e.op;
    throw std::invalid_argument("Povm: unknown key " + key);
}

DensityState apply_channel(const KrausChannel &ch, const DensityState &state,
                           const std::vector<std::size_t> &on) {
    if (on.size() != ch.in_shape().num_registers() ||
        on.size() != ch.out_shape().num_registers())
        throw std::invalid_argument("apply_channel: register count mismatch");
    for (std::size_t i = 0; i < on.size(); ++i) {
        if (on[i] >= state.shape().num_registers() ||
            state.shape().dims[on[i]] != ch.in_shape().dims[i])
            throw std::invalid_argument("apply_channel: register dimensions do not match channel");
    }

    RegisterShape out_shape = state.shape();
    for (std::size_t i = 0; i < on.size(); ++i) out_shape.dims[on[i]] = ch.out_shape().dims[i];

    const std::size_t out_total = out_shape.total_dim();
    ComplexMatrix acc(out_total, out_total);
    for (const auto &k : ch.kraus_ops()) {
        const ComplexMatrix lifted = lift_operator(k, on, state.shape(), ch.out_shape().dims);
        acc += lifted * state.mat() * lifted.adjoint();
    }
    acc.ensure_finite("apply_channel");
    return DensityState(acc, out_shape);
}

DensityState apply_channel(const KrausChannel &ch, const DensityState &state) {
    std::vector<std::size_t> all(state.shape().num_registers());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return apply_channel(ch, state, all);
}

std::map<std::string, double> measure(const Povm &povm, const DensityState &state) {
    if (povm.dim() != state.dim())
        throw std::invalid_argument("measure: POVM and state dimensions differ");
    std::map<std::string, double> probs;
    double total = 0.0;
    for (const auto &e : povm.elements()) {
        const double p = (e.op * state.mat()).trace().real();
        if (p < -tol::completeness || p > 1.0 + tol::completeness)
            throw std::domain_error("measure: probability outside [0,1] beyond tolerance");
        const double clipped = std::min(1.0, std::max(0.0, p));
        probs[e.key] = clipped;
        total += clipped;
    }
    if (std::abs(total - 1.0) > tol::completeness)
        throw std::domain_error("measure: probabilities do not sum to 1");
    return probs;
}

} // namespace qhesim
