#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qhesim {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The numeric substrate for states,
/// channels and measurements; dimensions stay small (<= 64).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    /// Build from nested initializer rows; every row must have equal length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<cplx> &entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scalar);

    /// Throws std::domain_error if any entry is NaN or infinite.
    void ensure_finite(const char *context) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scalar);

/// Matrix-vector product; v given as a column (n x 1) matrix.
ComplexMatrix mat_vec(const ComplexMatrix &m, const ComplexMatrix &v);

/// Largest entrywise |a - b|; matrices must have equal dimensions.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

/// Hermiticity deviation ||m - m^dagger||_max; requires a square matrix.
double hermiticity_defect(const ComplexMatrix &m);

/// Kronecker product; the left factor is the leading (first) register.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Ordered register dimensions annotating a tensor-product space.
/// Register 0 is the leftmost tensor factor ("first qubit").
struct RegisterShape {
    std::vector<std::size_t> dims;

    RegisterShape() = default;
    RegisterShape(std::initializer_list<std::size_t> d) : dims(d) {}
    explicit RegisterShape(std::vector<std::size_t> d) : dims(std::move(d)) {}

    std::size_t total_dim() const;
    std::size_t num_registers() const { return dims.size(); }
    bool operator==(const RegisterShape &other) const { return dims == other.dims; }

    /// Concatenate two shapes (this registers first).
    RegisterShape extended_with(const RegisterShape &tail) const;
    /// Throws std::invalid_argument unless total_dim() == dim.
    void ensure_matches(std::size_t dim, const char *context) const;
};

/// Trace over the registers not listed in `keep`. `keep` must be a nonempty,
/// strictly ascending subset of register indices. Kept registers retain their
/// original order.
ComplexMatrix partial_trace(const ComplexMatrix &m, const RegisterShape &shape,
                            const std::vector<std::size_t> &keep);

/// Shape of the partial-trace result.
RegisterShape kept_shape(const RegisterShape &shape, const std::vector<std::size_t> &keep);

/// Embed an operator acting on the registers at `positions` (strictly
/// ascending) into the full space, acting as identity elsewhere. The
/// operator's row space is `out_dims` and column space `in_dims`, one entry
/// per position; the full-space result replaces each register's dimension
/// accordingly.
ComplexMatrix lift_operator(const ComplexMatrix &op, const std::vector<std::size_t> &positions,
                            const RegisterShape &full_in, const std::vector<std::size_t> &out_dims);

/// lift_operator for the common dimension-preserving case.
ComplexMatrix lift_operator(const ComplexMatrix &op, const std::vector<std::size_t> &positions,
                            const RegisterShape &full_in);

} // namespace qhesim
