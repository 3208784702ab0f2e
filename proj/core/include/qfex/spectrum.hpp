#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qfex/arch.hpp"

namespace qfex {

/// Map wavenumber k -> degeneracy (number of ordered generator-eigenvalue
/// pairs with difference k). Symmetric in k by construction.
struct WavenumberProfile {
    std::map<int, int> entries;

    int k_max() const;
    int degeneracy(int k) const;
    long long total() const;
};

/// All 2^n values (1/2) * sum_q (+- factor_q) of the encoding generator.
/// The same multiset applies to sequential families, whose per-repetition
/// eigenvalues +-a_l/2 add across repetitions. Sorted ascending.
std::vector<double> generator_eigenvalues(const ArchitectureSpec& spec);

/// Profile of all ordered eigenvalue differences. Throws std::logic_error
/// if a difference is not an integer (which would mean a broken scaling
/// list, since valid lists give half-integer eigenvalues of equal parity).
WavenumberProfile wavenumber_profile(std::span<const double> eigenvalues);

/// Positive wavenumbers the family can express, sorted ascending.
std::vector<int> predicted_frequencies(const ArchitectureSpec& spec);

/// Upper bound d^(2L)/2 - 1 on the number of distinct positive frequencies
/// reachable with L repetitions of an encoding acting on a d-dimensional
/// space. Throws std::invalid_argument for d < 2 or L < 1.
double frequency_upper_bound(int hilbert_dim, int repetitions);

/// Fourier coefficients c_k of a sampled 2*pi-periodic model, with the
/// convention f(x) = sum_k c_k e^{+ikx}, i.e.
/// c_k = (1/N) sum_j f(2*pi*j/N) e^{-ik 2*pi*j/N}.
struct FourierSpectrum {
    std::map<int, complex_t> coefficients;
    int sample_count = 0;

    /// Coefficients smaller than this in magnitude get an undefined (NaN)
    /// phase: the argument of numerical noise carries no information.
    static constexpr double phase_amplitude_floor = 1e-9;

    int k_max() const;
    complex_t coefficient(int k) const;
    double amplitude(int k) const;
    double phase(int k) const;  // in (-pi, pi], NaN below the floor
    double reconstruct(double x) const;
};

/// Extracts c_k for |k| <= k_max from num_samples equally spaced samples
/// (default and minimum 2*k_max+1). After extraction the samples are
/// reconstructed from the kept band; a mismatch > 1e-9 means the model has
/// content outside |k| <= k_max (aliasing) and raises std::runtime_error.
/// With the minimal grid the check is exact by construction, so callers who
/// want aliasing detected must oversample.
FourierSpectrum extract_fourier(const std::function<double(double)>& model,
                                int k_max, int num_samples = 0);

/// Spectrum of evaluate(spec, params, .) with k_max defaulting to the
/// largest predicted frequency.
FourierSpectrum model_spectrum(const ArchitectureSpec& spec,
                               std::span<const double> params,
                               int k_max = 0, int num_samples = 0);

/// One (realization, wavenumber) record of the accessibility study.
/// phase is NaN when the coefficient sits below the amplitude floor.
struct AccessibilityRow {
    int realization = 0;
    int k = 0;
    double amplitude = 0.0;
    double phase = 0.0;
};

/// Draws num_realizations parameter vectors uniformly from [0, 2*pi),
/// extracts each model's spectrum and records amplitude and phase for every
/// positive k up to the predicted maximum. Realization r uses the RNG
/// stream (seed, r), so the table is deterministic and rows may be computed
/// concurrently. Rows are ordered by (realization, k).
std::vector<AccessibilityRow> accessibility_sample(const ArchitectureSpec& spec,
                                                   int num_realizations,
                                                   std::uint64_t seed);

/// Fraction of nonempty cells when the (arg c_klow, arg c_khigh) plane is
/// binned into grid_size x grid_size cells over (-pi, pi]^2. Rows with an
/// undefined phase on either axis are skipped.
struct PhasePairOccupancy {
    int k_low = 0;
    int k_high = 0;
    double occupancy = 0.0;
};

/// Occupancy for every pair k_low < k_high of positive wavenumbers present
/// in the rows, sorted by (k_low, k_high).
std::vector<PhasePairOccupancy> phase_grid_occupancy(
    std::span<const AccessibilityRow> rows, int grid_size = 20);

/// Same statistic on phase triples (k1 < k2 < k3), binned into a
/// grid_size^3 lattice. The pair projections of a constrained architecture
/// can saturate while the joint occupancy stays low, so this is the more
/// discriminating diagnostic.
struct PhaseTripleOccupancy {
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;
    double occupancy = 0.0;
};

std::vector<PhaseTripleOccupancy> phase_grid_occupancy3(
    std::span<const AccessibilityRow> rows, int grid_size = 20);

}  // namespace qfex
