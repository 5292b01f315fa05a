#pragma once

#include "qhesim/states.hpp"

namespace qhesim {

// Single-qubit constants.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// diag(1, e^{i phi}).
ComplexMatrix phase_gate(double phi);
/// X^a Z^b (a, b in {0, 1}).
ComplexMatrix pauli_power(int a, int b);

/// Computational basis column |i> in dimension dim.
ComplexMatrix basis_ket(std::size_t dim, std::size_t i);
/// |i><i| in dimension dim.
ComplexMatrix basis_projector(std::size_t dim, std::size_t i);

/// CNOT on two qubits; control and target are register indices 0 or 1.
ComplexMatrix cnot(std::size_t control, std::size_t target);

/// Maximally entangled column (1/sqrt(d)) sum_i |i>|i>.
ComplexMatrix max_entangled_ket(std::size_t d);

/// Wrap a unitary as a single-Kraus channel over the given shape.
KrausChannel unitary_channel(const ComplexMatrix &u, const RegisterShape &shape);

/// Completely dephasing qubit channel (uniform I, Z conjugation).
KrausChannel dephasing_channel();
/// Completely depolarising qubit channel (uniform I, Z, X, XZ conjugation).
KrausChannel depolarising_channel();

/// Two-qubit Pauli pad X^{a1}Z^{b1} (x) X^{a2}Z^{b2} as a unitary channel.
KrausChannel pauli_pad(int a1, int b1, int a2, int b2);

} // namespace qhesim
