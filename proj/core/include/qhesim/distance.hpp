#pragma once

#include "qhesim/states.hpp"

#include <vector>

namespace qhesim {

/// Trace distance (1/2)||a - b||_1.
double trace_distance(const DensityState &a, const DensityState &b);
double trace_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Fidelity ||sqrt(a) sqrt(b)||_1, clamped into [0, 1].
double fidelity(const DensityState &a, const DensityState &b);
double fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

/// Canonical purification sum_i sqrt(lambda_i) |v_i>|i>: eigenvalues taken
/// descending, reference register of dimension rank appended last.
PureState purify(const DensityState &rho);

/// Unitary on the `local` registers maximizing |<phi2|(U on local)|phi1>|.
/// The achieved overlap equals the fidelity of the marginals on the
/// complementary registers.
struct UhlmannResult {
    ComplexMatrix unitary; // acts on the local registers only
    double achieved_overlap;
};
UhlmannResult uhlmann_unitary(const PureState &phi1, const PureState &phi2,
                              const std::vector<std::size_t> &local);

/// Optimal two-state discrimination at equal priors: outcome "0" guesses `a`,
/// "1" guesses `b`; success = (1 + trace_distance)/2.
struct HelstromResult {
    Povm povm;
    double success;
};
HelstromResult helstrom(const DensityState &a, const DensityState &b);

/// Pretty good measurement over an ensemble. The POVM lives on the joint
/// support; the remainder I - (support projector) is assigned to an explicit
/// "null" outcome so the elements sum to identity.
struct WeightedState {
    std::string key;
    double prior;
    DensityState state;
};
struct PgmResult {
    Povm povm;
    double success; // sum_i p_i Tr(N_i rho_i)
};
PgmResult pgm(const std::vector<WeightedState> &ensemble);

/// Uniform-prior convenience wrapper; keys default to "0", "1", ...
PgmResult pgm_uniform(const std::vector<DensityState> &states);

} // namespace qhesim
