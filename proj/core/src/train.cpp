#include "qfex/train.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfex/parallel.hpp"
#include "qfex/rng.hpp"

namespace qfex {

namespace {

// loss and gradient are order-insensitive sums, so they only need matching
// shapes; train() additionally insists on the strictly-increasing grid
void check_shape(const Dataset& data) {
    if (data.xs.size() != data.ys.size()) {
        throw std::invalid_argument("dataset xs/ys length mismatch");
    }
    for (const double y : data.ys) {
        if (std::abs(y) > 1.0) {
            throw std::invalid_argument("dataset targets must lie in [-1, 1]");
        }
    }
}

void check_dataset(const Dataset& data) {
    check_shape(data);
    for (std::size_t i = 0; i + 1 < data.xs.size(); ++i) {
        if (!(data.xs[i] < data.xs[i + 1])) {
            throw std::invalid_argument("dataset xs must be strictly increasing");
        }
    }
}

}  // namespace

Dataset top_hat_dataset(int num_points) {
    if (num_points < 2) {
        throw std::invalid_argument("top_hat_dataset: need at least 2 points");
    }
    Dataset data;
    data.xs.reserve(static_cast<std::size_t>(num_points));
    data.ys.reserve(static_cast<std::size_t>(num_points));
    for (int j = 0; j < num_points; ++j) {
        const double x = 2.0 * std::numbers::pi * j / num_points;
        data.xs.push_back(x);
        data.ys.push_back(x >= std::numbers::pi / 2 && x < 3 * std::numbers::pi / 2 ? 1.0 : 0.0);
    }
    return data;
}

double mse_loss(const ArchitectureSpec& spec, std::span<const double> params,
                const Dataset& data) {
    check_shape(data);
    if (data.size() == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = evaluate(spec, params, data.xs[i]) - data.ys[i];
        sum += r * r;
    }
    return sum / static_cast<double>(data.size());
}

std::vector<double> parameter_shift_gradient(const ArchitectureSpec& spec,
                                             std::span<const double> params,
                                             const Dataset& data) {
    check_shape(data);
    const std::size_t count = data.size();
    std::vector<double> residuals(count);
    for (std::size_t i = 0; i < count; ++i) {
        residuals[i] = evaluate(spec, params, data.xs[i]) - data.ys[i];
    }

    std::vector<double> gradient(params.size(), 0.0);
    if (count == 0) {
        return gradient;
    }
    parallel_for(0, params.size(), [&](std::size_t j) {
        std::vector<double> shifted(params.begin(), params.end());
        double acc = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            shifted[j] = params[j] + std::numbers::pi / 2;
            const double plus = evaluate(spec, shifted, data.xs[i]);
            shifted[j] = params[j] - std::numbers::pi / 2;
            const double minus = evaluate(spec, shifted, data.xs[i]);
            acc += residuals[i] * (plus - minus) / 2.0;
        }
        gradient[j] = 2.0 * acc / static_cast<double>(count);
    });
    return gradient;
}

void adam_step(AdamState& state, std::vector<double>& params,
               std::span<const double> gradient, const TrainConfig& config) {
    if (params.size() != gradient.size() || params.size() != state.first_moment.size()) {
        throw std::invalid_argument("adam_step: shape mismatch");
    }
    state.step += 1;
    const double correction1 = 1.0 - std::pow(config.adam_beta1, state.step);
    const double correction2 = 1.0 - std::pow(config.adam_beta2, state.step);
    for (std::size_t j = 0; j < params.size(); ++j) {
        const double g = gradient[j];
        state.first_moment[j] = config.adam_beta1 * state.first_moment[j] +
                                (1.0 - config.adam_beta1) * g;
        state.second_moment[j] = config.adam_beta2 * state.second_moment[j] +
                                 (1.0 - config.adam_beta2) * g * g;
        const double m_hat = state.first_moment[j] / correction1;
        const double v_hat = state.second_moment[j] / correction2;
        params[j] -= config.learning_rate * m_hat / (std::sqrt(v_hat) + config.adam_epsilon);
    }
}

std::vector<double> initial_params(const ArchitectureSpec& spec, std::uint64_t seed) {
    return uniform_angles(parameter_count(spec), seed);
}

TrainResult train(const ArchitectureSpec& spec, const TrainConfig& config,
                  const Dataset& data) {
    if (config.epochs < 0) {
        throw std::invalid_argument("train: epochs must be >= 0");
    }
    if (!(config.learning_rate > 0.0)) {
        throw std::invalid_argument("train: learning_rate must be > 0");
    }
    if (!(config.adam_beta1 > 0.0 && config.adam_beta1 < 1.0) ||
        !(config.adam_beta2 > 0.0 && config.adam_beta2 < 1.0)) {
        throw std::invalid_argument("train: Adam betas must lie in (0, 1)");
    }
    check_dataset(data);

    TrainResult result;
    result.final_params = initial_params(spec, config.seed);
    AdamState state(result.final_params.size());
    result.loss_history.reserve(static_cast<std::size_t>(config.epochs));
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        const std::vector<double> gradient =
            parameter_shift_gradient(spec, result.final_params, data);
        adam_step(state, result.final_params, gradient, config);
        result.loss_history.push_back(mse_loss(spec, result.final_params, data));
    }
    result.final_loss = result.loss_history.empty()
                            ? mse_loss(spec, result.final_params, data)
                            : result.loss_history.back();
    return result;
}

}  // namespace qfex
