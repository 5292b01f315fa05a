#include "qhesim/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qhesim {

ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix::from_rows({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

ComplexMatrix phase_gate(double phi) {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::polar(1.0, phi)}});
}

ComplexMatrix pauli_power(int a, int b) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    if (b) m = pauli_z() * m;
    if (a) m = pauli_x() * m;
    return m;
}

ComplexMatrix basis_ket(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::invalid_argument("basis_ket: index out of range");
    ComplexMatrix v(dim, 1);
    v(i, 0) = 1.0;
    return v;
}

ComplexMatrix basis_projector(std::size_t dim, std::size_t i) {
    ComplexMatrix p(dim, dim);
    if (i >= dim) throw std::invalid_argument("basis_projector: index out of range");
    p(i, i) = 1.0;
    return p;
}

ComplexMatrix cnot(std::size_t control, std::size_t target) {
    if (control > 1 || target > 1 || control == target)
        throw std::invalid_argument("cnot: control/target must be distinct qubits 0 and 1");
    ComplexMatrix u(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::size_t bits[2] = {i, j};
            std::size_t out[2] = {i, j};
            out[target] = bits[target] ^ bits[control];
            u(out[0] * 2 + out[1], i * 2 + j) = 1.0;
        }
    return u;
}

ComplexMatrix max_entangled_ket(std::size_t d) {
    ComplexMatrix v(d * d, 1);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) v(i * d + i, 0) = amp;
    return v;
}

KrausChannel unitary_channel(const ComplexMatrix &u, const RegisterShape &shape) {
    return KrausChannel({u}, shape, shape);
}

KrausChannel dephasing_channel() {
    const cplx w{1.0 / std::sqrt(2.0), 0.0};
    return KrausChannel({w * pauli_i(), w * pauli_z()}, RegisterShape{2}, RegisterShape{2});
}

KrausChannel depolarising_channel() {
    const cplx w{0.5, 0.0};
    return KrausChannel({w * pauli_i(), w * pauli_z(), w * pauli_x(), w * (pauli_x() * pauli_z())},
                        RegisterShape{2}, RegisterShape{2});
}

KrausChannel pauli_pad(int a1, int b1, int a2, int b2) {
    return unitary_channel(kron(pauli_power(a1, b1), pauli_power(a2, b2)), RegisterShape{2, 2});
}

} // namespace qhesim
