#include "qhesim/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

namespace {

void require(bool cond, const char *what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, "ComplexMatrix: entries length != rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    std::size_t r = rows.size();
    require(r > 0, "from_rows: empty matrix");
    std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto &row : rows) {
        require(row.size() == c, "from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto &v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
}

cplx ComplexMatrix::trace() const {
    require(is_square(), "trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &v : entries_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto &v : entries_) m = std::max(m, std::abs(v));
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "operator+=: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "operator-=: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scalar) {
    for (auto &v : entries_) v *= scalar;
    return *this;
}

void ComplexMatrix::ensure_finite(const char *context) const {
    for (const auto &v : entries_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error(std::string("non-finite entry in ") + context);
    }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.cols() == b.rows(), "operator*: inner dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, cplx scalar) { return m *= scalar; }

ComplexMatrix mat_vec(const ComplexMatrix &m, const ComplexMatrix &v) {
    require(v.cols() == 1, "mat_vec: v must be a column");
    return m * v;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

double hermiticity_defect(const ComplexMatrix &m) {
    require(m.is_square(), "hermiticity_defect: matrix not square");
    double d = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

std::size_t RegisterShape::total_dim() const {
    std::size_t d = 1;
    for (std::size_t x : dims) {
        if (x == 0) throw std::invalid_argument("RegisterShape: zero-dimensional register");
        d *= x;
    }
    return d;
}

RegisterShape RegisterShape::extended_with(const RegisterShape &tail) const {
    RegisterShape out = *this;
    out.dims.insert(out.dims.end(), tail.dims.begin(), tail.dims.end());
    return out;
}

void RegisterShape::ensure_matches(std::size_t dim, const char *context) const {
    if (total_dim() != dim)
        throw std::invalid_argument(std::string("register shape does not match dimension in ") +
                                    context);
}

namespace {

// Row-major strides: stride of the last register is 1.
std::vector<std::size_t> strides_of(const std::vector<std::size_t> &dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
    return s;
}

void check_subset(const std::vector<std::size_t> &subset, std::size_t n, const char *context) {
    require(!subset.empty(), context);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        require(subset[i] < n, context);
        if (i > 0) require(subset[i] > subset[i - 1], context);
    }
}

} // namespace

RegisterShape kept_shape(const RegisterShape &shape, const std::vector<std::size_t> &keep) {
    check_subset(keep, shape.num_registers(), "kept_shape: bad keep set");
    RegisterShape out;
    for (std::size_t r : keep) out.dims.push_back(shape.dims[r]);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, const RegisterShape &shape,
                            const std::vector<std::size_t> &keep) {
    require(m.is_square(), "partial_trace: matrix not square");
    shape.ensure_matches(m.rows(), "partial_trace");
    check_subset(keep, shape.num_registers(), "partial_trace: bad keep set");

    std::vector<std::size_t> traced;
    {
        std::size_t k = 0;
        for (std::size_t r = 0; r < shape.num_registers(); ++r) {
            if (k < keep.size() && keep[k] == r)
                ++k;
            else
                traced.push_back(r);
        }
    }

    const auto strides = strides_of(shape.dims);
    std::size_t keep_dim = 1, traced_dim = 1;
    for (std::size_t r : keep) keep_dim *= shape.dims[r];
    for (std::size_t r : traced) traced_dim *= shape.dims[r];

    // Base offsets of every kept and traced multi-index.
    std::vector<std::size_t> keep_offsets(keep_dim, 0);
    for (std::size_t idx = 0; idx < keep_dim; ++idx) {
        std::size_t rem = idx, off = 0;
        for (std::size_t p = keep.size(); p-- > 0;) {
            const std::size_t d = shape.dims[keep[p]];
            off += (rem % d) * strides[keep[p]];
            rem /= d;
        }
        keep_offsets[idx] = off;
    }
    std::vector<std::size_t> traced_offsets(traced_dim, 0);
    for (std::size_t idx = 0; idx < traced_dim; ++idx) {
        std::size_t rem = idx, off = 0;
        for (std::size_t p = traced.size(); p-- > 0;) {
            const std::size_t d = shape.dims[traced[p]];
            off += (rem % d) * strides[traced[p]];
            rem /= d;
        }
        traced_offsets[idx] = off;
    }

    ComplexMatrix out(keep_dim, keep_dim);
    for (std::size_t r = 0; r < keep_dim; ++r)
        for (std::size_t c = 0; c < keep_dim; ++c) {
            cplx sum = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t)
                sum += m(keep_offsets[r] + traced_offsets[t], keep_offsets[c] + traced_offsets[t]);
            out(r, c) = sum;
        }
    return out;
}

ComplexMatrix lift_operator(const ComplexMatrix &op, const std::vector<std::size_t> &positions,
                            const RegisterShape &full_in, const std::vector<std::size_t> &out_dims) {
    check_subset(positions, full_in.num_registers(), "lift_operator: bad positions");
    require(out_dims.size() == positions.size(), "lift_operator: out_dims/positions mismatch");

    std::size_t op_in_dim = 1, op_out_dim = 1;
    for (std::size_t p : positions) op_in_dim *= full_in.dims[p];
    for (std::size_t d : out_dims) op_out_dim *= d;
    require(op.cols() == op_in_dim && op.rows() == op_out_dim,
            "lift_operator: operator does not match positions");

    RegisterShape full_out = full_in;
    for (std::size_t i = 0; i < positions.size(); ++i) full_out.dims[positions[i]] = out_dims[i];

    std::vector<std::size_t> rest;
    {
        std::size_t k = 0;
        for (std::size_t r = 0; r < full_in.num_registers(); ++r) {
            if (k < positions.size() && positions[k] == r)
                ++k;
            else
                rest.push_back(r);
        }
    }

    const auto in_strides = strides_of(full_in.dims);
    const auto out_strides = strides_of(full_out.dims);

    std::size_t rest_dim = 1;
    for (std::size_t r : rest) rest_dim *= full_in.dims[r];

    // Rest offsets are identical on the in and out side register-for-register,
    // but strides differ when op changes register dimensions.
    std::vector<std::size_t> rest_in_offsets(rest_dim, 0), rest_out_offsets(rest_dim, 0);
    for (std::size_t idx = 0; idx < rest_dim; ++idx) {
        std::size_t rem = idx, in_off = 0, out_off = 0;
        for (std::size_t p = rest.size(); p-- > 0;) {
            const std::size_t d = full_in.dims[rest[p]];
            in_off += (rem % d) * in_strides[rest[p]];
            out_off += (rem % d) * out_strides[rest[p]];
            rem /= d;
        }
        rest_in_offsets[idx] = in_off;
        rest_out_offsets[idx] = out_off;
    }

    std::vector<std::size_t> sub_in_offsets(op_in_dim, 0);
    for (std::size_t idx = 0; idx < op_in_dim; ++idx) {
        std::size_t rem = idx, off = 0;
        for (std::size_t p = positions.size(); p-- > 0;) {
            const std::size_t d = full_in.dims[positions[p]];
            off += (rem % d) * in_strides[positions[p]];
            rem /= d;
        }
        sub_in_offsets[idx] = off;
    }
    std::vector<std::size_t> sub_out_offsets(op_out_dim, 0);
    for (std::size_t idx = 0; idx < op_out_dim; ++idx) {
        std::size_t rem = idx, off = 0;
        for (std::size_t p = positions.size(); p-- > 0;) {
            const std::size_t d = out_dims[p];
            off += (rem % d) * out_strides[positions[p]];
            rem /= d;
        }
        sub_out_offsets[idx] = off;
    }

    ComplexMatrix lifted(full_out.total_dim(), full_in.total_dim());
    for (std::size_t rest_idx = 0; rest_idx < rest_dim; ++rest_idx)
        for (std::size_t o = 0; o < op_out_dim; ++o)
            for (std::size_t j = 0; j < op_in_dim; ++j) {
                const cplx v = op(o, j);
                if (v == cplx{0.0, 0.0}) continue;
                lifted(rest_out_offsets[rest_idx] + sub_out_offsets[o],
                       rest_in_offsets[rest_idx] + sub_in_offsets[j]) = v;
            }
    return lifted;
}

ComplexMatrix lift_operator(const ComplexMatrix &op, const std::vector<std::size_t> &positions,
                            const RegisterShape &full_in) {
    std::vector<std::size_t> out_dims;
    for (std::size_t p : positions) out_dims.push_back(full_in.dims[p]);
    return lift_operator(op, positions, full_in, out_dims);
}

} // namespace qhesim
