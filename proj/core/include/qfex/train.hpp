#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfex/arch.hpp"

namespace qfex {

/// Regression data on [0, 2*pi): strictly increasing xs, targets in [-1, 1].
struct Dataset {
    std::vector<double> xs;
    std::vector<double> ys;

    std::size_t size() const { return xs.size(); }
};

/// num_points equally spaced samples of the unit top-hat pulse: y = 1 for
/// x in [pi/2, 3*pi/2), else 0. The half-open pulse puts exactly half the
/// samples inside whenever num_points is divisible by 4.
Dataset top_hat_dataset(int num_points);

struct TrainConfig {
    int epochs = 200;
    double learning_rate = 0.1;
    std::uint64_t seed = 0;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
};

struct TrainResult {
    std::vector<double> loss_history;  // MSE after each epoch's update
    std::vector<double> final_params;
    double final_loss = 0.0;
};

double mse_loss(const ArchitectureSpec& spec, std::span<const double> params,
                const Dataset& data);

/// Exact gradient of the MSE via the parameter-shift rule:
/// df/dtheta_j = [f(theta_j + pi/2) - f(theta_j - pi/2)] / 2, valid because
/// every trainable angle enters through a Pauli rotation. Components are
/// computed concurrently; each component's data-point sum is sequential so
/// results do not depend on the worker count.
std::vector<double> parameter_shift_gradient(const ArchitectureSpec& spec,
                                             std::span<const double> params,
                                             const Dataset& data);

struct AdamState {
    std::vector<double> first_moment;
    std::vector<double> second_moment;
    long step = 0;

    explicit AdamState(std::size_t size)
        : first_moment(size, 0.0), second_moment(size, 0.0) {}
};

/// One bias-corrected Adam update, in place.
void adam_step(AdamState& state, std::vector<double>& params,
               std::span<const double> gradient, const TrainConfig& config);

/// Uniform [0, 2*pi) initialization, reproducible for a given seed.
std::vector<double> initial_params(const ArchitectureSpec& spec, std::uint64_t seed);

/// Full-batch Adam fit of the model to data. loss_history[e] is the loss
/// after epoch e's update; with epochs = 0 the history is empty, the params
/// are the initialization and final_loss is the loss at initialization.
TrainResult train(const ArchitectureSpec& spec, const TrainConfig& config,
                  const Dataset& data);

}  // namespace qfex
