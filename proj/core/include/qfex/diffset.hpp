#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfex/spectrum.hpp"

namespace qfex::diffset {

/// Profile of all ordered pairwise differences {x - y | x, y in values}.
/// values must be strictly increasing and nonempty. entries[0] == |values|.
WavenumberProfile difference_multiset(std::span<const int> values);

/// True iff the nonzero differences of values are exactly
/// {+-1, ..., +-m(m-1)/2}, each with multiplicity 1. Lists of size 1 are
/// vacuously perfect.
bool is_perfect(std::span<const int> values);

/// Translates the list to min 0 and reflects it when the reflection is
/// lexicographically smaller, so every translation/reflection class has one
/// representative.
std::vector<int> canonicalize(std::span<const int> values);

struct SearchResult {
    std::vector<std::vector<int>> solutions;  // canonical, sorted
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive search for perfect difference lists of size m with elements
/// in [0, max_element], canonical form only. Depth-first extension with a
/// used-difference table; a branch dies as soon as a difference repeats or
/// exceeds m(m-1)/2. Throws std::invalid_argument when
/// max_element < m(m-1)/2, since the largest required difference is then
/// unreachable.
SearchResult search_perfect(int m, int max_element);

/// Verification aid for candidate generator diagonals: returns nonnegative
/// integer weights w (sorted ascending) such that the multiset
/// {(1/2) sum_q (+-w_q)} over all sign patterns equals `eigenvalues`
/// exactly, or nullopt when no such weights exist. eigenvalues.size() must
/// be 2^n_qubits. The multiset of any such diagonal is symmetric around 0;
/// shifted lists should be centered by the caller (a uniform shift never
/// changes the wavenumbers).
std::optional<std::vector<int>> rz_realization_weights(
    std::span<const int> eigenvalues, int n_qubits);

}  // namespace qfex::diffset
