#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qfex/statevec.hpp"

namespace qfex {

/// The four encoding circuit families: repetitions of a single-qubit
/// encoding in time (sequential) or across qubits (parallel), with the
/// encoding angle either unscaled (linear) or scaled per repetition/qubit
/// to remove eigenvalue degeneracy (exponential).
enum class ArchitectureFamily {
    SequentialLinear,
    SequentialExponential,
    ParallelLinear,
    ParallelExponential,
};

std::string_view to_string(ArchitectureFamily family);
ArchitectureFamily family_from_string(std::string_view name);

bool is_parallel(ArchitectureFamily family);
bool is_exponential(ArchitectureFamily family);

/// Layers per variational block when not specified: parallel circuits carry
/// heavier blocks (3) than sequential ones (1) since the exponential
/// families need enough real parameters to steer every Fourier coefficient.
int default_var_depth(ArchitectureFamily family);

/// Structural description of a circuit: family, n (encoding repetitions for
/// sequential families, qubit count for parallel ones) and the number of
/// layers per variational block.
struct ArchitectureSpec {
    ArchitectureFamily family = ArchitectureFamily::SequentialLinear;
    int n = 1;
    int var_depth = 1;
};

/// Validated constructor; var_depth 0 picks the family default.
ArchitectureSpec make_spec(ArchitectureFamily family, int n, int var_depth = 0);

/// Width of the simulated register: 1 for sequential families, n for
/// parallel ones.
int circuit_qubits(const ArchitectureSpec& spec);

/// Integer factors multiplying the encoded feature, one per repetition/qubit.
/// Linear families: all ones. Exponential families: {1, 2, 4, ..., 2^(n-2),
/// 2^(n-1)+1}, which sums to 2^n so the wavenumbers tile -2^n..2^n; for n = 1
/// the list degenerates to {1}.
std::vector<int> scaling_factors(const ArchitectureSpec& spec);

/// Flat parameter count: sequential circuits have n+1 blocks of
/// var_depth*3 angles on one qubit; parallel circuits have 2 blocks of
/// var_depth*n*3 angles.
std::size_t parameter_count(const ArchitectureSpec& spec);

/// One variational block: per layer, Rot(3 angles) on every qubit followed
/// by a CNOT ring (control q -> target (q+1) mod n, applied for q = n-1
/// down to 0) when n >= 2. The layer count is
/// angles.size() / (3 * n_qubits); throws std::invalid_argument when
/// angles.size() is not a multiple of that.
StateVector apply_variational_block(StateVector state, std::span<const double> angles);

/// Model function f(x) = <Z_0> of the circuit built from spec and params.
///
/// Sequential: W0, RZ(a_1 x), W1, ..., RZ(a_n x), Wn on one qubit.
/// Parallel: W0, then RZ(factors[q] * x) on each qubit q, W1, then a CNOT
/// chain cascading into qubit 0 (control q -> target q-1 for q = n-1..1)
/// so every qubit feeds the measured one.
double evaluate(const ArchitectureSpec& spec, std::span<const double> params, double x);

}  // namespace qfex
