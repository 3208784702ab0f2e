#pragma once

#include <array>
#include <complex>
#include <vector>

namespace qfex {

using complex_t = std::complex<double>;

/// Dense statevector over 2^n_qubits computational basis states.
///
/// Bit-order convention: qubit q is bit q of the basis-state index, so
/// qubit 0 is the least significant bit. amplitudes[0b10] is the amplitude
/// of |q1=1, q0=0>.
struct StateVector {
    int n_qubits = 0;
    std::vector<complex_t> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
};

enum class GateKind { RZ, RY, RX, Rot, CNOT };

/// A single gate application. Rotation angles are radians; RZ(phi) is
/// diag(e^{-i phi/2}, e^{+i phi/2}) and Rot(a, b, g) = RZ(g) RY(b) RZ(a)
/// (RZ(a) acts first).
struct Gate {
    GateKind kind = GateKind::RZ;
    int target = 0;
    int control = -1;  // CNOT only
    std::array<double, 3> angles{};

    static Gate rz(int target, double angle);
    static Gate ry(int target, double angle);
    static Gate rx(int target, double angle);
    static Gate rot(int target, double alpha, double beta, double gamma);
    static Gate cnot(int control, int target);

    /// Same gate with negated angles (CNOT is self-inverse).
    Gate inverse() const;
};

/// |0...0> on n_qubits in [1, 24]. Throws std::invalid_argument outside that
/// range (24 qubits is already a 256 MiB state; anything larger is a caller
/// bug in this library's regime).
StateVector new_zero_state(int n_qubits);

/// Value-in/value-out gate application; norm is preserved to ~1e-15 per gate.
/// Throws std::invalid_argument for out-of-range qubit indices or
/// control == target.
StateVector apply_gate(StateVector state, const Gate& gate);

/// In-place variant used on owned states in inner loops.
void apply_gate_in_place(StateVector& state, const Gate& gate);

/// <Z_qubit> = sum_b (+-1) |amplitudes[b]|^2, sign + when bit `qubit` of b
/// is 0. Result lies in [-1, 1].
double expectation_z(const StateVector& state, int qubit);

}  // namespace qfex
