#include "qfex/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfex/parallel.hpp"
#include "qfex/rng.hpp"
#include "qfex/train.hpp"

namespace qfex {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

int WavenumberProfile::k_max() const {
    return entries.empty() ? 0 : entries.rbegin()->first;
}

int WavenumberProfile::degeneracy(int k) const {
    const auto it = entries.find(k);
    return it == entries.end() ? 0 : it->second;
}

long long WavenumberProfile::total() const {
    long long sum = 0;
    for (const auto& [k, count] : entries) {
        sum += count;
    }
    return sum;
}

std::vector<double> generator_eigenvalues(const ArchitectureSpec& spec) {
    const std::vector<int> factors = scaling_factors(spec);
    const int n = spec.n;
    if (n > 24) {
        throw std::invalid_argument("generator_eigenvalues: n too large to enumerate");
    }
    std::vector<double> eigs;
    eigs.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        long long doubled = 0;
        for (int q = 0; q < n; ++q) {
            doubled += (mask >> q) & 1 ? -factors[static_cast<std::size_t>(q)]
                                       : factors[static_cast<std::size_t>(q)];
        }
        eigs.push_back(static_cast<double>(doubled) / 2.0);
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

WavenumberProfile wavenumber_profile(std::span<const double> eigenvalues) {
    if (eigenvalues.empty()) {
        throw std::invalid_argument("wavenumber_profile: empty eigenvalue multiset");
    }
    // multiplicity per unique eigenvalue keeps the pair loop quadratic in the
    // number of distinct values rather than the full 2^n multiset
    std::map<double, long long> mult;
    for (const double v : eigenvalues) {
        ++mult[v];
    }
    WavenumberProfile profile;
    for (const auto& [a, ca] : mult) {
        for (const auto& [b, cb] : mult) {
            const double diff = a - b;
            const double rounded = std::round(diff);
            if (std::abs(diff - rounded) > 1e-9) {
                throw std::logic_error("wavenumber_profile: non-integer difference " +
                                       std::to_string(diff) +
                                       " (inconsistent scaling list)");
            }
            profile.entries[static_cast<int>(rounded)] += static_cast<int>(ca * cb);
        }
    }
    return profile;
}

std::vector<int> predicted_frequencies(const ArchitectureSpec& spec) {
    const WavenumberProfile profile = wavenumber_profile(generator_eigenvalues(spec));
    std::vector<int> freqs;
    for (const auto& [k, count] : profile.entries) {
        if (k > 0) {
            freqs.push_back(k);
        }
    }
    return freqs;
}

double frequency_upper_bound(int hilbert_dim, int repetitions) {
    if (hilbert_dim < 2) {
        throw std::invalid_argument("frequency_upper_bound: dimension must be >= 2");
    }
    if (repetitions < 1) {
        throw std::invalid_argument("frequency_upper_bound: repetitions must be >= 1");
    }
    return std::pow(static_cast<double>(hilbert_dim), 2.0 * repetitions) / 2.0 - 1.0;
}

int FourierSpectrum::k_max() const {
    return coefficients.empty() ? 0 : coefficients.rbegin()->first;
}

complex_t FourierSpectrum::coefficient(int k) const {
    const auto it = coefficients.find(k);
    return it == coefficients.end() ? complex_t{0, 0} : it->second;
}

double FourierSpectrum::amplitude(int k) const { return std::abs(coefficient(k)); }

double FourierSpectrum::phase(int k) const {
    const complex_t c = coefficient(k);
    if (std::abs(c) < phase_amplitude_floor) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double p = std::arg(c);
    if (p <= -std::numbers::pi) {
        p = std::numbers::pi;
    }
    return p;
}

double FourierSpectrum::reconstruct(double x) const {
    complex_t sum{0, 0};
    for (const auto& [k, c] : coefficients) {
        sum += c * std::polar(1.0, k * x);
    }
    return sum.real();
}

FourierSpectrum extract_fourier(const std::function<double(double)>& model,
                                int k_max, int num_samples) {
    if (k_max < 0) {
        throw std::invalid_argument("extract_fourier: k_max must be >= 0");
    }
    const int min_samples = 2 * k_max + 1;
    const int n = num_samples == 0 ? min_samples : num_samples;
    if (n < min_samples) {
        throw std::invalid_argument("extract_fourier: need at least 2*k_max+1 samples");
    }

    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        samples[static_cast<std::size_t>(j)] = model(two_pi * j / n);
    }

    FourierSpectrum spectrum;
    spectrum.sample_count = n;
    for (int k = -k_max; k <= k_max; ++k) {
        const complex_t w = std::polar(1.0, -two_pi * k / n);
        complex_t phase{1, 0};
        complex_t acc{0, 0};
        for (int j = 0; j < n; ++j) {
            acc += samples[static_cast<std::size_t>(j)] * phase;
            phase *= w;
        }
        spectrum.coefficients[k] = acc / static_cast<double>(n);
    }

    // content outside the kept band cannot be reproduced from it, so a
    // sample-point mismatch on an oversampled grid flags aliasing
    for (int j = 0; j < n; ++j) {
        const double err =
            std::abs(spectrum.reconstruct(two_pi * j / n) - samples[static_cast<std::size_t>(j)]);
        if (err > 1e-9) {
            throw std::runtime_error(
                "extract_fourier: samples not reproduced by the |k| <= " +
                std::to_string(k_max) + " band (max seen error " + std::to_string(err) +
                "); the model has higher-frequency content");
        }
    }
    return spectrum;
}

FourierSpectrum model_spectrum(const ArchitectureSpec& spec,
                               std::span<const double> params,
                               int k_max, int num_samples) {
    if (k_max == 0) {
        const std::vector<int> freqs = predicted_frequencies(spec);
        k_max = freqs.empty() ? 0 : freqs.back();
    }
    std::vector<double> owned(params.begin(), params.end());
    return extract_fourier(
        [&spec, owned = std::move(owned)](double x) {
            return evaluate(spec, owned, x);
        },
        k_max, num_samples);
}

std::vector<AccessibilityRow> accessibility_sample(const ArchitectureSpec& spec,
                                                   int num_realizations,
                                                   std::uint64_t seed) {
    if (num_realizations < 1) {
        throw std::invalid_argument("accessibility_sample: need >= 1 realization");
    }
    const std::vector<int> freqs = predicted_frequencies(spec);
    const int k_max = freqs.empty() ? 0 : freqs.back();
    const std::size_t param_len = parameter_count(spec);

    std::vector<AccessibilityRow> rows(
        static_cast<std::size_t>(num_realizations) * static_cast<std::size_t>(k_max));
    parallel_for(0, static_cast<std::size_t>(num_realizations), [&](std::size_t r) {
        const std::vector<double> params = uniform_angles(param_len, seed, r);
        const FourierSpectrum spectrum = model_spectrum(spec, params, k_max);
        for (int k = 1; k <= k_max; ++k) {
            rows[r * static_cast<std::size_t>(k_max) + static_cast<std::size_t>(k - 1)] = {
                static_cast<int>(r), k, spectrum.amplitude(k), spectrum.phase(k)};
        }
    });
    return rows;
}

namespace {

int phase_bin(double phase, int grid_size) {
    const int bin = static_cast<int>((phase + std::numbers::pi) / two_pi * grid_size);
    return std::clamp(bin, 0, grid_size - 1);
}

// phases[r][k-1], NaN where undefined
std::vector<std::vector<double>> phases_by_realization(
    std::span<const AccessibilityRow> rows, int& k_max_out) {
    int k_max = 0;
    int max_realization = -1;
    for (const auto& row : rows) {
        k_max = std::max(k_max, row.k);
        max_realization = std::max(max_realization, row.realization);
    }
    k_max_out = k_max;
    std::vector<std::vector<double>> phases(
        static_cast<std::size_t>(max_realization + 1),
        std::vector<double>(static_cast<std::size_t>(k_max),
                            std::numeric_limits<double>::quiet_NaN()));
    for (const auto& row : rows) {
        if (row.k >= 1) {
            phases[static_cast<std::size_t>(row.realization)]
                  [static_cast<std::size_t>(row.k - 1)] = row.phase;
        }
    }
    return phases;
}

}  // namespace

std::vector<PhasePairOccupancy> phase_grid_occupancy(
    std::span<const AccessibilityRow> rows, int grid_size) {
    if (grid_size < 1) {
        throw std::invalid_argument("phase_grid_occupancy: grid_size must be >= 1");
    }
    int k_max = 0;
    const auto phases = phases_by_realization(rows, k_max);
    std::vector<PhasePairOccupancy> result;
    for (int ki = 1; ki <= k_max; ++ki) {
        for (int kj = ki + 1; kj <= k_max; ++kj) {
            std::vector<char> cells(static_cast<std::size_t>(grid_size) * grid_size, 0);
            for (const auto& row : phases) {
                const double a = row[static_cast<std::size_t>(ki - 1)];
                const double b = row[static_cast<std::size_t>(kj - 1)];
                if (std::isnan(a) || std::isnan(b)) {
                    continue;
                }
                cells[static_cast<std::size_t>(phase_bin(a, grid_size)) * grid_size +
                      static_cast<std::size_t>(phase_bin(b, grid_size))] = 1;
            }
            const long long filled = std::count(cells.begin(), cells.end(), 1);
            result.push_back({ki, kj,
                              static_cast<double>(filled) / static_cast<double>(cells.size())});
        }
    }
    return result;
}

std::vector<PhaseTripleOccupancy> phase_grid_occupancy3(
    std::span<const AccessibilityRow> rows, int grid_size) {
    if (grid_size < 1) {
        throw std::invalid_argument("phase_grid_occupancy3: grid_size must be >= 1");
    }
    int k_max = 0;
    const auto phases = phases_by_realization(rows, k_max);
    std::vector<PhaseTripleOccupancy> result;
    const std::size_t g = static_cast<std::size_t>(grid_size);
    for (int k1 = 1; k1 <= k_max; ++k1) {
        for (int k2 = k1 + 1; k2 <= k_max; ++k2) {
            for (int k3 = k2 + 1; k3 <= k_max; ++k3) {
                std::vector<char> cells(g * g * g, 0);
                for (const auto& row : phases) {
                    const double a = row[static_cast<std::size_t>(k1 - 1)];
                    const double b = row[static_cast<std::size_t>(k2 - 1)];
                    const double c = row[static_cast<std::size_t>(k3 - 1)];
                    if (std::isnan(a) || std::isnan(b) || std::isnan(c)) {
                        continue;
                    }
                    cells[(static_cast<std::size_t>(phase_bin(a, grid_size)) * g +
                           static_cast<std::size_t>(phase_bin(b, grid_size))) * g +
                          static_cast<std::size_t>(phase_bin(c, grid_size))] = 1;
                }
                const long long filled = std::count(cells.begin(), cells.end(), 1);
                result.push_back({k1, k2, k3,
                                  static_cast<double>(filled) / static_cast<double>(cells.size())});
            }
        }
    }
    return result;
}

}  // namespace qfex
