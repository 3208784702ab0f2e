#include "qfex/arch.hpp"

#include <stdexcept>
#include <string>

namespace qfex {

std::string_view to_string(ArchitectureFamily family) {
    switch (family) {
        case ArchitectureFamily::SequentialLinear: return "sequential_linear";
        case ArchitectureFamily::SequentialExponential: return "sequential_exponential";
        case ArchitectureFamily::ParallelLinear: return "parallel_linear";
        case ArchitectureFamily::ParallelExponential: return "parallel_exponential";
    }
    throw std::logic_error("to_string: bad ArchitectureFamily");
}

ArchitectureFamily family_from_string(std::string_view name) {
    if (name == "sequential_linear") return ArchitectureFamily::SequentialLinear;
    if (name == "sequential_exponential") return ArchitectureFamily::SequentialExponential;
    if (name == "parallel_linear") return ArchitectureFamily::ParallelLinear;
    if (name == "parallel_exponential") return ArchitectureFamily::ParallelExponential;
    throw std::invalid_argument("unknown architecture family: " + std::string(name));
}

bool is_parallel(ArchitectureFamily family) {
    return family == ArchitectureFamily::ParallelLinear ||
           family == ArchitectureFamily::ParallelExponential;
}

bool is_exponential(ArchitectureFamily family) {
    return family == ArchitectureFamily::SequentialExponential ||
           family == ArchitectureFamily::ParallelExponential;
}

int default_var_depth(ArchitectureFamily family) {
    return is_parallel(family) ? 3 : 1;
}

ArchitectureSpec make_spec(ArchitectureFamily family, int n, int var_depth) {
    if (n < 1) {
        throw std::invalid_argument("architecture n must be >= 1, got " + std::to_string(n));
    }
    if (var_depth == 0) {
        var_depth = default_var_depth(family);
    }
    if (var_depth < 1) {
        throw std::invalid_argument("var_depth must be >= 1, got " + std::to_string(var_depth));
    }
    if (is_parallel(family) && n > 24) {
        throw std::invalid_argument("parallel architectures support at most 24 qubits");
    }
    return {family, n, var_depth};
}

int circuit_qubits(const ArchitectureSpec& spec) {
    return is_parallel(spec.family) ? spec.n : 1;
}

std::vector<int> scaling_factors(const ArchitectureSpec& spec) {
    std::vector<int> factors(static_cast<std::size_t>(spec.n), 1);
    if (is_exponential(spec.family) && spec.n >= 2) {
        for (int i = 0; i + 1 < spec.n; ++i) {
            factors[static_cast<std::size_t>(i)] = 1 << i;
        }
        factors[static_cast<std::size_t>(spec.n - 1)] = (1 << (spec.n - 1)) + 1;
    }
    return factors;
}

std::size_t parameter_count(const ArchitectureSpec& spec) {
    const std::size_t per_block =
        static_cast<std::size_t>(spec.var_depth) * static_cast<std::size_t>(circuit_qubits(spec)) * 3;
    const std::size_t blocks = is_parallel(spec.family) ? 2 : static_cast<std::size_t>(spec.n) + 1;
    return blocks * per_block;
}

namespace {

void block_in_place(StateVector& state, std::span<const double> angles) {
    const int n = state.n_qubits;
    const std::size_t per_layer = static_cast<std::size_t>(n) * 3;
    if (per_layer == 0 || angles.size() % per_layer != 0) {
        throw std::invalid_argument("variational block angle count " +
                                    std::to_string(angles.size()) +
                                    " is not a multiple of 3 * n_qubits");
    }
    const std::size_t layers = angles.size() / per_layer;
    std::size_t idx = 0;
    for (std::size_t layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            apply_gate_in_place(state,
                                Gate::rot(q, angles[idx], angles[idx + 1], angles[idx + 2]));
            idx += 3;
        }
        if (n >= 2) {
            // top wire down: the ascending order at n=2 would end the block
            // with CNOT(1->0), which the measurement chain cancels, leaving
            // a single-qubit dressed observable
            for (int q = n - 1; q >= 0; --q) {
                apply_gate_in_place(state, Gate::cnot(q, (q + 1) % n));
            }
        }
    }
}

}  // namespace

StateVector apply_variational_block(StateVector state, std::span<const double> angles) {
    block_in_place(state, angles);
    return state;
}

double evaluate(const ArchitectureSpec& spec, std::span<const double> params, double x) {
    const std::size_t expected = parameter_count(spec);
    if (params.size() != expected) {
        throw std::invalid_argument("parameter vector has length " +
                                    std::to_string(params.size()) + ", spec needs " +
                                    std::to_string(expected));
    }
    const std::vector<int> factors = scaling_factors(spec);
    const int n = spec.n;

    if (is_parallel(spec.family)) {
        const std::size_t per_block = expected / 2;
        StateVector state = new_zero_state(n);
        block_in_place(state, params.subspan(0, per_block));
        for (int q = 0; q < n; ++q) {
            apply_gate_in_place(state, Gate::rz(q, factors[static_cast<std::size_t>(q)] * x));
        }
        block_in_place(state, params.subspan(per_block, per_block));
        for (int q = n - 1; q >= 1; --q) {
            apply_gate_in_place(state, Gate::cnot(q, q - 1));
        }
        return expectation_z(state, 0);
    }

    const std::size_t per_block = expected / (static_cast<std::size_t>(n) + 1);
    StateVector state = new_zero_state(1);
    block_in_place(state, params.subspan(0, per_block));
    for (int l = 0; l < n; ++l) {
        apply_gate_in_place(state, Gate::rz(0, factors[static_cast<std::size_t>(l)] * x));
        block_in_place(state, params.subspan(static_cast<std::size_t>(l + 1) * per_block, per_block));
    }
    return expectation_z(state, 0);
}

}  // namespace qfex
