#include "qfex/statevec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfex {

namespace {

using mat2 = std::array<complex_t, 4>;  // row-major [u00 u01; u10 u11]

mat2 rz_matrix(double phi) {
    return {std::polar(1.0, -phi / 2), complex_t{0, 0},
            complex_t{0, 0}, std::polar(1.0, phi / 2)};
}

mat2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {complex_t{c, 0}, complex_t{-s, 0}, complex_t{s, 0}, complex_t{c, 0}};
}

mat2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {complex_t{c, 0}, complex_t{0, -s}, complex_t{0, -s}, complex_t{c, 0}};
}

mat2 matmul(const mat2& a, const mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

mat2 single_qubit_matrix(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::RZ: return rz_matrix(gate.angles[0]);
        case GateKind::RY: return ry_matrix(gate.angles[0]);
        case GateKind::RX: return rx_matrix(gate.angles[0]);
        case GateKind::Rot:
            return matmul(rz_matrix(gate.angles[2]),
                          matmul(ry_matrix(gate.angles[1]), rz_matrix(gate.angles[0])));
        case GateKind::CNOT: break;
    }
    throw std::logic_error("single_qubit_matrix: not a single-qubit gate");
}

void check_qubit(int qubit, int n_qubits, const char* what) {
    if (qubit < 0 || qubit >= n_qubits) {
        throw std::invalid_argument(std::string(what) + " qubit index " +
                                    std::to_string(qubit) + " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
    }
}

void apply_single_qubit(StateVector& state, int target, const mat2& u) {
    const std::size_t mask = std::size_t{1} << target;
    auto& amps = state.amplitudes;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == 0) {
            const complex_t a = amps[i];
            const complex_t b = amps[i | mask];
            amps[i] = u[0] * a + u[1] * b;
            amps[i | mask] = u[2] * a + u[3] * b;
        }
    }
}

void apply_cnot(StateVector& state, int control, int target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    auto& amps = state.amplitudes;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // visit each swapped pair once, from its target-0 side
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

}  // namespace

Gate Gate::rz(int target, double angle) { return {GateKind::RZ, target, -1, {angle, 0, 0}}; }
Gate Gate::ry(int target, double angle) { return {GateKind::RY, target, -1, {angle, 0, 0}}; }
Gate Gate::rx(int target, double angle) { return {GateKind::RX, target, -1, {angle, 0, 0}}; }

Gate Gate::rot(int target, double alpha, double beta, double gamma) {
    return {GateKind::Rot, target, -1, {alpha, beta, gamma}};
}

Gate Gate::cnot(int control, int target) {
    return {GateKind::CNOT, target, control, {0, 0, 0}};
}

Gate Gate::inverse() const {
    Gate inv = *this;
    if (kind == GateKind::Rot) {
        // (RZ(g) RY(b) RZ(a))^-1 = RZ(-a) RY(-b) RZ(-g)
        inv.angles = {-angles[2], -angles[1], -angles[0]};
    } else {
        inv.angles = {-angles[0], -angles[1], -angles[2]};
    }
    return inv;
}

StateVector new_zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) {
        throw std::invalid_argument("new_zero_state: n_qubits must be in [1, 24], got " +
                                    std::to_string(n_qubits));
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amplitudes.assign(std::size_t{1} << n_qubits, complex_t{0, 0});
    state.amplitudes[0] = complex_t{1, 0};
    return state;
}

void apply_gate_in_place(StateVector& state, const Gate& gate) {
    if (gate.kind == GateKind::CNOT) {
        check_qubit(gate.control, state.n_qubits, "control");
        check_qubit(gate.target, state.n_qubits, "target");
        if (gate.control == gate.target) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
        apply_cnot(state, gate.control, gate.target);
        return;
    }
    check_qubit(gate.target, state.n_qubits, "target");
    apply_single_qubit(state, gate.target, single_qubit_matrix(gate));
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_in_place(state, gate);
    return state;
}

double expectation_z(const StateVector& state, int qubit) {
    check_qubit(qubit, state.n_qubits, "measured");
    const std::size_t mask = std::size_t{1} << qubit;
    double value = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        value += (i & mask) ? -p : p;
    }
    return value;
}

}  // namespace qfex
