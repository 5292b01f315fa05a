#pragma once

#include "qhesim/complex_matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace qhesim {

/// Density matrix over labeled registers. Construction validates
/// Hermiticity, positivity and unit trace.
class DensityState {
  public:
    DensityState(ComplexMatrix mat, RegisterShape shape);

    const ComplexMatrix &mat() const { return mat_; }
    const RegisterShape &shape() const { return shape_; }
    std::size_t dim() const { return mat_.rows(); }

    /// Marginal on the given registers.
    DensityState marginal(const std::vector<std::size_t> &keep) const;

  private:
    ComplexMatrix mat_;
    RegisterShape shape_;
};

/// Unit-norm state vector over labeled registers.
class PureState {
  public:
    PureState(ComplexMatrix vec, RegisterShape shape);

    const ComplexMatrix &vec() const { return vec_; }
    const RegisterShape &shape() const { return shape_; }
    std::size_t dim() const { return vec_.rows(); }

    /// |psi><psi| as a density state.
    DensityState to_density() const;
    ComplexMatrix projector() const;

  private:
    ComplexMatrix vec_; // dim x 1 column
    RegisterShape shape_;
};

/// CPTP map in Kraus form; construction validates sum K^dagger K = I.
class KrausChannel {
  public:
    KrausChannel(std::vector<ComplexMatrix> kraus_ops, RegisterShape in_shape,
                 RegisterShape out_shape);

    const std::vector<ComplexMatrix> &kraus_ops() const { return kraus_ops_; }
    const RegisterShape &in_shape() const { return in_shape_; }
    const RegisterShape &out_shape() const { return out_shape_; }
    std::size_t in_dim() const { return in_shape_.total_dim(); }
    std::size_t out_dim() const { return out_shape_.total_dim(); }

    /// Sum_k K m K^dagger on a raw operator of the channel's input dimension.
    ComplexMatrix apply_to_operator(const ComplexMatrix &m) const;

    /// Composition other(this(rho)); shapes must chain.
    KrausChannel then(const KrausChannel &other) const;

  private:
    std::vector<ComplexMatrix> kraus_ops_;
    RegisterShape in_shape_;
    RegisterShape out_shape_;
};

/// Completely positive map without the trace-preservation requirement;
/// carries adjoint channels, which are unital instead.
struct CpMap {
    std::vector<ComplexMatrix> kraus_ops;
    RegisterShape in_shape;
    RegisterShape out_shape;

    ComplexMatrix apply_to_operator(const ComplexMatrix &m) const;
    /// Max-entry deviation of sum K m K^dagger from identity at m = I.
    double unitality_defect() const;
};

/// Adjoint (Heisenberg-picture) map {K^dagger}; completely positive and
/// unital whenever the input channel is trace preserving.
CpMap adjoint_channel(const KrausChannel &ch);

/// Keyed POVM; construction validates element positivity and completeness.
struct PovmElement {
    std::string key;
    ComplexMatrix op;
};

class Povm {
  public:
    explicit Povm(std::vector<PovmElement> elements);

    const std::vector<PovmElement> &elements() const { return elements_; }
    std::size_t dim() const { return elements_.empty() ? 0 : elements_.front().op.rows(); }
    const ComplexMatrix &element(const std::string &key) const;

  private:
    std::vector<PovmElement> elements_;
};

/// Apply `ch` on the registers listed in `on` (strictly ascending), identity
/// elsewhere. The channel's output registers replace the input registers in
/// place; `ch.in_shape` must match the selected registers element-wise.
DensityState apply_channel(const KrausChannel &ch, const DensityState &state,
                           const std::vector<std::size_t> &on);

/// Convenience overload: channel spans the full state.
DensityState apply_channel(const KrausChannel &ch, const DensityState &state);

/// Outcome probabilities Tr(E rho), clipped into [0, 1]; probabilities must
/// sum to one within tolerance. Clip violations beyond 1e-9 are hard errors.
std::map<std::string, double> measure(const Povm &povm, const DensityState &state);

} // namespace qhesim
