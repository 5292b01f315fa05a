#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhesim/distance.hpp"
#include "qhesim/gates.hpp"
#include "qhesim/linalg.hpp"
#include "qhesim/random_states.hpp"
#include "qhesim/rng.hpp"
#include "qhesim/sot_channels.hpp"

#include <cmath>

using namespace qhesim;

namespace {

// Hand enumeration of the strong OT index map, written independently of the
// production formula: the data bit x_{i xor i'}, complemented when i' = 1.
int index_map_oracle(int i, int ip, int x0, int x1) {
    int selected;
    if ((i + ip) % 2 == 0)
        selected = x0;
    else
        selected = x1;
    return ip == 1 ? 1 - selected : selected;
}

DensityState basis_input(int i, int ip) {
    const ComplexMatrix ket = kron(basis_ket(2, i), basis_ket(2, ip));
    return DensityState(ket * ket.adjoint(), RegisterShape{2, 2});
}

ComplexMatrix mixed_times_bit(int bit) {
    return kron(cplx{0.5, 0.0} * ComplexMatrix::identity(2), basis_projector(2, bit));
}

} // namespace

TEST_CASE("index map matches exhaustive truth table") {
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip)
            for (int x0 = 0; x0 < 2; ++x0)
                for (int x1 = 0; x1 < 2; ++x1)
                    CHECK(sot_output_bit(i, ip, x0, x1) == index_map_oracle(i, ip, x0, x1));
}

TEST_CASE("compact channel action on basis inputs") {
    // F_(0,1)(|1,0><1,0|) = (I/2) (x) |1><1|.
    const DensityState out = apply_channel(sot_channel_compact(0, 1), basis_input(1, 0));
    CHECK(max_abs_diff(out.mat(), mixed_times_bit(1)) <= 1e-12);

    // F_(1,0)(|0,1><0,1|) = (I/2) (x) |1><1|.
    const DensityState out2 = apply_channel(sot_channel_compact(1, 0), basis_input(0, 1));
    CHECK(max_abs_diff(out2.mat(), mixed_times_bit(1)) <= 1e-12);

    // The |i,0> action law over all eight parameter choices.
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            for (int i = 0; i < 2; ++i) {
                const int xi = i == 0 ? x0 : x1;
                const DensityState got =
                    apply_channel(sot_channel_compact(x0, x1), basis_input(i, 0));
                CHECK(max_abs_diff(got.mat(), mixed_times_bit(xi)) <= 1e-12);
            }

    // Full truth table against the enumeration oracle.
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1)
            for (int i = 0; i < 2; ++i)
                for (int ip = 0; ip < 2; ++ip) {
                    const DensityState got =
                        apply_channel(sot_channel_compact(x0, x1), basis_input(i, ip));
                    CHECK(max_abs_diff(got.mat(),
                                       mixed_times_bit(index_map_oracle(i, ip, x0, x1))) <= 1e-12);
                }
}

TEST_CASE("compact channels are CPTP and discard the first output qubit") {
    Rng rng(5);
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const KrausChannel ch = sot_channel_compact(x0, x1); // constructor checks CPTP
            for (int trial = 0; trial < 5; ++trial) {
                const DensityState rho(random_density_matrix(4, rng), RegisterShape{2, 2});
                const DensityState out = apply_channel(ch, rho);
                CHECK(std::abs(out.mat().trace().real() - 1.0) <= 1e-10);
                CHECK(max_abs_diff(out.marginal({0}).mat(),
                                   cplx{0.5, 0.0} * ComplexMatrix::identity(2)) <= 1e-9);
            }
        }
}

TEST_CASE("compact channels are entanglement breaking") {
    // The Choi state must be block diagonal in the input computational basis.
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const DensityState j = choi(sot_channel_compact(x0, x1));
            // Shape [2, 2, 4]: output qubits then the input reference.
            for (std::size_t o = 0; o < 4; ++o)
                for (std::size_t o2 = 0; o2 < 4; ++o2)
                    for (std::size_t r = 0; r < 4; ++r)
                        for (std::size_t r2 = 0; r2 < 4; ++r2)
                            if (r != r2)
                                CHECK(std::abs(j.mat()(o * 4 + r, o2 * 4 + r2)) <= 1e-12);
        }
}

TEST_CASE("clifford randomizations are unitary") {
    Rng rng(43);
    for (int draw = 0; draw < 20; ++draw) {
        const SotParams p{static_cast<int>(rng.next_bit()), static_cast<int>(rng.next_bit()),
                          static_cast<int>(rng.next_bit()), static_cast<int>(rng.next_bit()),
                          static_cast<int>(rng.next_bit()), static_cast<int>(rng.next_bit())};
        const ComplexMatrix u = sot_clifford_unitary(p);
        CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)) <= 1e-12);
    }

    // All-zero randomization is the bare conditional circuit.
    const ComplexMatrix bare = sot_clifford_unitary({0, 1, 0, 0, 0, 0});
    CHECK(max_abs_diff(bare, cnot(0, 1) * cnot(1, 0)) <= 1e-12);

    // The channel wrapper is the single-Kraus conjugation by that unitary.
    const SotParams p{1, 0, 1, 0, 1, 1};
    const KrausChannel ch = sot_clifford(p);
    CHECK(ch.kraus_ops().size() == 1);
    Rng rng2(59);
    const ComplexMatrix rho = random_density_matrix(4, rng2);
    const ComplexMatrix u = sot_clifford_unitary(p);
    CHECK(max_abs_diff(ch.apply_to_operator(rho), u * rho * u.adjoint()) <= 1e-12);
}

TEST_CASE("sixteen-average of cliffords equals the compact channel") {
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const double dev =
                choi_distance(sot_clifford_average(x0, x1), sot_channel_compact(x0, x1));
            CHECK(dev <= 1e-9);
        }
}

TEST_CASE("choi states of reference channels") {
    // Identity channel: the maximally entangled state.
    const KrausChannel id = unitary_channel(pauli_i(), RegisterShape{2});
    const ComplexMatrix bell = max_entangled_ket(2);
    CHECK(max_abs_diff(choi(id).mat(), bell * bell.adjoint()) <= 1e-12);

    // Depolarising channel: the maximally mixed state.
    CHECK(max_abs_diff(choi(depolarising_channel()).mat(),
                       cplx{0.25, 0.0} * ComplexMatrix::identity(4)) <= 1e-12);
}

TEST_CASE("pauli pads") {
    // All-zero pads: identity.
    Rng probe_rng(47);
    const DensityState probe(random_density_matrix(4, probe_rng), RegisterShape{2, 2});
    CHECK(trace_distance(apply_channel(pauli_pad(0, 0, 0, 0), probe), probe) <= 1e-12);

    // pad(1,0,0,0) maps |00> to |10>.
    const ComplexMatrix ket00 = kron(basis_ket(2, 0), basis_ket(2, 0));
    const ComplexMatrix ket10 = kron(basis_ket(2, 1), basis_ket(2, 0));
    const DensityState in(ket00 * ket00.adjoint(), RegisterShape{2, 2});
    CHECK(max_abs_diff(apply_channel(pauli_pad(1, 0, 0, 0), in).mat(), ket10 * ket10.adjoint()) <=
          1e-12);

    // Uniform average over all 16 pads fully depolarises.
    Rng rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix rho = random_density_matrix(4, rng);
        ComplexMatrix avg(4, 4);
        for (int a1 = 0; a1 < 2; ++a1)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        avg += pauli_pad(a1, b1, a2, b2).apply_to_operator(rho);
        avg *= cplx{1.0 / 16.0, 0.0};
        CHECK(max_abs_diff(avg, cplx{0.25, 0.0} * ComplexMatrix::identity(4)) <= 1e-9);
    }
}

TEST_CASE("bit arguments are validated") {
    CHECK_THROWS(sot_channel_compact(2, 0));
    CHECK_THROWS(sot_clifford_unitary({0, 0, 3, 0, 0, 0}));
}
