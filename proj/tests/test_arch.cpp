#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qfex/arch.hpp"
#include "qfex/rng.hpp"
#include "qfex/spectrum.hpp"

using namespace qfex;

namespace {

constexpr double pi = std::numbers::pi;

const ArchitectureFamily all_families[] = {
    ArchitectureFamily::SequentialLinear,
    ArchitectureFamily::SequentialExponential,
    ArchitectureFamily::ParallelLinear,
    ArchitectureFamily::ParallelExponential,
};

}  // namespace

TEST_CASE("family names round-trip") {
    for (const auto family : all_families) {
        CHECK(family_from_string(to_string(family)) == family);
    }
    CHECK_THROWS_AS(family_from_string("diagonal_cubic"), std::invalid_argument);
}

TEST_CASE("scaling factors") {
    CHECK(scaling_factors(make_spec(ArchitectureFamily::ParallelLinear, 2)) ==
          std::vector<int>{1, 1});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::SequentialLinear, 3)) ==
          std::vector<int>{1, 1, 1});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::ParallelExponential, 2)) ==
          std::vector<int>{1, 3});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::ParallelExponential, 3)) ==
          std::vector<int>{1, 2, 5});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::ParallelExponential, 4)) ==
          std::vector<int>{1, 2, 4, 9});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::SequentialExponential, 1)) ==
          std::vector<int>{1});
    CHECK(scaling_factors(make_spec(ArchitectureFamily::ParallelExponential, 1)) ==
          std::vector<int>{1});
}

TEST_CASE("scaling list for n=3 tiles wavenumbers -8..8") {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential, 3);
    const WavenumberProfile profile = wavenumber_profile(generator_eigenvalues(spec));
    for (int k = -8; k <= 8; ++k) {
        CHECK(profile.degeneracy(k) > 0);
    }
    CHECK(profile.k_max() == 8);
}

TEST_CASE("parameter counts") {
    CHECK(parameter_count(make_spec(ArchitectureFamily::SequentialLinear, 2, 1)) == 9);
    CHECK(parameter_count(make_spec(ArchitectureFamily::ParallelExponential, 2, 2)) == 24);
    CHECK(parameter_count(make_spec(ArchitectureFamily::SequentialExponential, 1, 1)) == 6);
    CHECK(parameter_count(make_spec(ArchitectureFamily::ParallelLinear, 3, 3)) == 54);
}

TEST_CASE("make_spec validation and defaults") {
    CHECK(make_spec(ArchitectureFamily::ParallelExponential, 2).var_depth == 3);
    CHECK(make_spec(ArchitectureFamily::SequentialExponential, 2).var_depth == 1);
    CHECK_THROWS_AS(make_spec(ArchitectureFamily::ParallelLinear, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(ArchitectureFamily::ParallelLinear, 2, -1), std::invalid_argument);
}

TEST_CASE("evaluate at x=0 equals the encoding-free circuit") {
    std::mt19937_64 rng = seeded_rng(21);
    for (const auto family : all_families) {
        const auto spec = make_spec(family, 2);
        const std::vector<double> params = uniform_angles(parameter_count(spec), rng());

        // encoding-free circuit built gate by gate
        StateVector state = new_zero_state(circuit_qubits(spec));
        const std::size_t blocks = is_parallel(family) ? 2 : static_cast<std::size_t>(spec.n) + 1;
        const std::size_t per_block = params.size() / blocks;
        for (std::size_t b = 0; b < blocks; ++b) {
            state = apply_variational_block(
                std::move(state),
                std::span<const double>(params).subspan(b * per_block, per_block));
        }
        if (is_parallel(family)) {
            for (int q = spec.n - 1; q >= 1; --q) {
                apply_gate_in_place(state, Gate::cnot(q, q - 1));
            }
        }
        CHECK(evaluate(spec, params, 0.0) ==
              doctest::Approx(expectation_z(state, 0)).epsilon(1e-12));
    }
}

TEST_CASE("identity blocks give the constant function 1") {
    const auto spec = make_spec(ArchitectureFamily::SequentialLinear, 1, 1);
    const std::vector<double> zeros(parameter_count(spec), 0.0);
    for (const double x : {0.0, 0.4, 1.9, pi, 5.5}) {
        CHECK(evaluate(spec, zeros, x) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("parallel exponential n=2 is band-limited to |k| <= 4") {
    const auto spec = make_spec(ArchitectureFamily::ParallelExponential, 2);
    const std::vector<double> params = uniform_angles(parameter_count(spec), 77);

    const int samples = 16;
    std::vector<double> values(samples);
    for (int j = 0; j < samples; ++j) {
        values[static_cast<std::size_t>(j)] = evaluate(spec, params, 2 * pi * j / samples);
    }
    const auto coeffs = oracles::naive_dft(values, 7);  // bins -7..7 of the 16-point grid
    for (int k = -7; k <= 7; ++k) {
        if (std::abs(k) > 4) {
            CHECK(std::abs(coeffs[static_cast<std::size_t>(k + 7)]) < 1e-10);
        }
    }
}

TEST_CASE("variational block") {
    SUBCASE("all-zero angles on one qubit act as identity") {
        StateVector state = apply_gate(new_zero_state(1), Gate::ry(0, 1.1));
        const StateVector before = state;
        const std::vector<double> zeros(3, 0.0);
        state = apply_variational_block(std::move(state), zeros);
        for (std::size_t i = 0; i < before.amplitudes.size(); ++i) {
            CHECK(std::abs(state.amplitudes[i] - before.amplitudes[i]) < 1e-15);
        }
    }
    SUBCASE("all-zero angles on two qubits equal the bare CNOT ring") {
        StateVector state = apply_gate(new_zero_state(2), Gate::ry(0, 0.7));
        apply_gate_in_place(state, Gate::ry(1, -1.3));
        StateVector expected = state;
        apply_gate_in_place(expected, Gate::cnot(1, 0));
        apply_gate_in_place(expected, Gate::cnot(0, 1));
        const std::vector<double> zeros(6, 0.0);
        state = apply_variational_block(std::move(state), zeros);
        for (std::size_t i = 0; i < expected.amplitudes.size(); ++i) {
            CHECK(std::abs(state.amplitudes[i] - expected.amplitudes[i]) < 1e-15);
        }
    }
    SUBCASE("random angles preserve the norm") {
        const std::vector<double> angles = uniform_angles(12, 5);
        StateVector state = apply_variational_block(new_zero_state(2), angles);
        double norm2 = 0.0;
        for (const auto& amp : state.amplitudes) {
            norm2 += std::norm(amp);
        }
        CHECK(std::sqrt(norm2) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("angle count mismatch throws") {
        const std::vector<double> angles(5, 0.0);
        CHECK_THROWS_AS(apply_variational_block(new_zero_state(2), angles),
                        std::invalid_argument);
    }
}

TEST_CASE("evaluate rejects wrong parameter length") {
    const auto spec = make_spec(ArchitectureFamily::ParallelLinear, 2);
    const std::vector<double> wrong(parameter_count(spec) - 1, 0.0);
    CHECK_THROWS_AS(evaluate(spec, wrong, 0.3), std::invalid_argument);
}

TEST_CASE("models are 2*pi periodic") {
    std::mt19937_64 rng = seeded_rng(23);
    for (const auto family : all_families) {
        for (const int n : {1, 2, 3}) {
            const auto spec = make_spec(family, n);
            const std::vector<double> params = uniform_angles(parameter_count(spec), rng());
            for (const double x : {0.17, 2.4, -1.0}) {
                CHECK(evaluate(spec, params, x + 2 * pi) ==
                      doctest::Approx(evaluate(spec, params, x)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("empirical spectrum stays inside the predicted support") {
    std::mt19937_64 rng = seeded_rng(24);
    for (const auto family : all_families) {
        for (const int n : {1, 2, 3}) {
            const auto spec = make_spec(family, n);
            const auto predicted = predicted_frequencies(spec);
            const int k_pred = predicted.back();
            const std::vector<double> params = uniform_angles(parameter_count(spec), rng());
            const FourierSpectrum spectrum = model_spectrum(spec, params, k_pred + 3);
            for (const auto& [k, c] : spectrum.coefficients) {
                if (std::abs(k) > k_pred) {
                    CHECK(std::abs(c) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("linear and exponential families coincide at n=1") {
    const auto lin = make_spec(ArchitectureFamily::SequentialLinear, 1);
    const auto expo = make_spec(ArchitectureFamily::SequentialExponential, 1);
    const std::vector<double> params = uniform_angles(parameter_count(lin), 3);
    for (const double x : {0.0, 0.9, 2.2, 4.4, 6.0}) {
        CHECK(evaluate(lin, params, x) == evaluate(expo, params, x));
    }

    const auto plin = make_spec(ArchitectureFamily::ParallelLinear, 1);
    const auto pexp = make_spec(ArchitectureFamily::ParallelExponential, 1);
    const std::vector<double> pparams = uniform_angles(parameter_count(plin), 4);
    for (const double x : {0.0, 0.9, 2.2, 4.4, 6.0}) {
        CHECK(evaluate(plin, pparams, x) == evaluate(pexp, pparams, x));
    }
}

TEST_CASE("model output never leaves [-1, 1]") {
    std::mt19937_64 rng = seeded_rng(25);
    for (const auto family : all_families) {
        const auto spec = make_spec(family, 2);
        for (int draw = 0; draw < 10; ++draw) {
            const std::vector<double> params = uniform_angles(parameter_count(spec), rng());
            for (const double x : {0.3, 1.7, 3.3, 5.1}) {
                CHECK(std::abs(evaluate(spec, params, x)) <= 1.0 + 1e-12);
            }
        }
    }
}
