#include "qhesim/sot_channels.hpp"

#include "qhesim/distance.hpp"
#include "qhesim/gates.hpp"

#include <stdexcept>

namespace qhesim {

namespace {

void check_bit(int b, const char *what) {
    if (b != 0 && b != 1) throw std::invalid_argument(std::string(what) + ": bit out of range");
}

} // namespace

int sot_output_bit(int i, int i_prime, int x0, int x1) {
    const int data[2] = {x0, x1};
    return data[i ^ i_prime] ^ i_prime;
}

KrausChannel sot_channel_compact(int x0, int x1) {
    check_bit(x0, "sot_channel_compact");
    check_bit(x1, "sot_channel_compact");
    const RegisterShape two_qubits{2, 2};
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(16);
    // I_2/2 on the first output qubit as (1/4) sum_P P|0><0|P^dagger over the
    // Pauli alphabet; one isometry per (input projector, replacement Pauli).
    const ComplexMatrix pads[4] = {pauli_power(0, 0), pauli_power(0, 1), pauli_power(1, 0),
                                   pauli_power(1, 1)};
    for (int i = 0; i < 2; ++i)
        for (int ip = 0; ip < 2; ++ip) {
            const int out_bit = sot_output_bit(i, ip, x0, x1);
            const ComplexMatrix bra = kron(basis_ket(2, i), basis_ket(2, ip)).adjoint();
            for (const auto &pad : pads) {
                const ComplexMatrix ket = kron(pad * basis_ket(2, 0), basis_ket(2, out_bit));
                kraus.push_back(cplx{0.5, 0.0} * (ket * bra));
            }
        }
    return KrausChannel(std::move(kraus), two_qubits, two_qubits);
}

ComplexMatrix sot_clifford_unitary(const SotParams &p) {
    check_bit(p.x0, "sot_clifford");
    check_bit(p.x1, "sot_clifford");
    check_bit(p.r0, "sot_clifford");
    check_bit(p.r1, "sot_clifford");
    check_bit(p.r2, "sot_clifford");
    check_bit(p.r3, "sot_clifford");

    ComplexMatrix u = ComplexMatrix::identity(4);
    if (p.x0 != p.x1) u = cnot(0, 1) * cnot(1, 0) * u; // moves wire 1's value onto wire 2
    if (p.x0 == 1) u = kron(pauli_i(), pauli_x()) * u;
    const ComplexMatrix discard_pad = pauli_power(p.r1, p.r2);
    const ComplexMatrix output_pad = pauli_power(0, p.r0) * pauli_power(0, p.r3);
    return kron(discard_pad, output_pad) * u;
}

KrausChannel sot_clifford(const SotParams &p) {
    return unitary_channel(sot_clifford_unitary(p), RegisterShape{2, 2});
}

KrausChannel sot_clifford_average(int x0, int x1) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(16);
    const cplx w{0.25, 0.0}; // 1/sqrt(16)
    for (int r0 = 0; r0 < 2; ++r0)
        for (int r1 = 0; r1 < 2; ++r1)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int r3 = 0; r3 < 2; ++r3)
                    kraus.push_back(w * sot_clifford_unitary({x0, x1, r0, r1, r2, r3}));
    return KrausChannel(std::move(kraus), RegisterShape{2, 2}, RegisterShape{2, 2});
}

DensityState choi(const KrausChannel &ch) {
    const std::size_t d = ch.in_dim();
    ComplexMatrix j(ch.out_dim() * d, ch.out_dim() * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const ComplexMatrix block = ch.apply_to_operator(basis_ket(d, i) * basis_ket(d, k).adjoint());
            const ComplexMatrix ref = basis_ket(d, i) * basis_ket(d, k).adjoint();
            j += kron(block, ref);
        }
    j *= cplx{1.0 / static_cast<double>(d), 0.0};
    RegisterShape shape = ch.out_shape().extended_with(RegisterShape{d});
    return DensityState(std::move(j), std::move(shape));
}

double choi_distance(const KrausChannel &a, const KrausChannel &b) {
    return trace_distance(choi(a), choi(b));
}

} // namespace qhesim
