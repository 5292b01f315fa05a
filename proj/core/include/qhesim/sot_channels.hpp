#pragma once

#include "qhesim/states.hpp"

namespace qhesim {

/// Parameters of a strong oblivious transfer Clifford: Bob's data bits and
/// the four Pauli randomization bits.
struct SotParams {
    int x0 = 0;
    int x1 = 0;
    int r0 = 0;
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;
};

/// Classical index map of the strong OT channels: a computational input
/// (i, i') produces output bit x_{i xor i'} xor i' on the second qubit.
int sot_output_bit(int i, int i_prime, int x0, int x1);

/// Strong OT channel in compact (measure-and-prepare) form: measure both
/// input qubits, emit a maximally mixed first qubit and the classical bit
/// sot_output_bit on the second. 16 Kraus operators, 4 basis projectors x 4
/// replacement isometries; equality testing goes through Choi states.
KrausChannel sot_channel_compact(int x0, int x1);

/// One strong OT Clifford: the CNOT pair iff x0 != x1, X on the output wire
/// iff x0 = 1, then the Pauli randomizers. The discarded wire carries
/// X^{r1}Z^{r2}; the output wire carries Z^{r0} and Z^{r3}, so averaging over
/// (r1, r2) depolarises the discarded wire and averaging over (r0, r3)
/// dephases the output wire. Averaging all 16 tuples reproduces the compact
/// channel exactly.
KrausChannel sot_clifford(const SotParams &p);

/// The bare unitary of sot_clifford.
ComplexMatrix sot_clifford_unitary(const SotParams &p);

/// Uniform average of the 16 Clifford randomizations at fixed (x0, x1).
KrausChannel sot_clifford_average(int x0, int x1);

/// Normalized Choi state (ch (x) id) |Omega><Omega|; output registers first,
/// reference register (dimension in_dim) last.
DensityState choi(const KrausChannel &ch);

/// Trace distance between Choi states; zero iff the channels are equal.
double choi_distance(const KrausChannel &a, const KrausChannel &b);

} // namespace qhesim
