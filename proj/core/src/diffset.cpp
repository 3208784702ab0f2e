#include "qfex/diffset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfex::diffset {

namespace {

void check_candidate(std::span<const int> values) {
    if (values.empty()) {
        throw std::invalid_argument("candidate list must be nonempty");
    }
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (!(values[i] < values[i + 1])) {
            throw std::invalid_argument("candidate list must be strictly increasing");
        }
    }
}

}  // namespace

WavenumberProfile difference_multiset(std::span<const int> values) {
    check_candidate(values);
    WavenumberProfile profile;
    for (const int a : values) {
        for (const int b : values) {
            profile.entries[a - b] += 1;
        }
    }
    return profile;
}

bool is_perfect(std::span<const int> values) {
    check_candidate(values);
    const int m = static_cast<int>(values.size());
    const int span_required = m * (m - 1) / 2;
    std::vector<char> seen(static_cast<std::size_t>(span_required) + 1, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int diff = values[static_cast<std::size_t>(j)] -
                             values[static_cast<std::size_t>(i)];
            if (diff > span_required || seen[static_cast<std::size_t>(diff)]) {
                return false;
            }
            seen[static_cast<std::size_t>(diff)] = 1;
        }
    }
    // m(m-1)/2 distinct positive differences within [1, m(m-1)/2] tile it
    return true;
}

std::vector<int> canonicalize(std::span<const int> values) {
    check_candidate(values);
    const std::size_t m = values.size();
    std::vector<int> shifted(m);
    for (std::size_t i = 0; i < m; ++i) {
        shifted[i] = values[i] - values[0];
    }
    std::vector<int> reflected(m);
    for (std::size_t i = 0; i < m; ++i) {
        reflected[i] = shifted[m - 1] - shifted[m - 1 - i];
    }
    return std::min(shifted, reflected);
}

namespace {

struct SearchState {
    int m = 0;
    int span_required = 0;
    int hi = 0;
    std::vector<int> values;
    std::vector<char> used;
    std::vector<std::vector<int>> solutions;
    std::uint64_t nodes = 0;
};

void extend(SearchState& state) {
    state.nodes += 1;
    if (static_cast<int>(state.values.size()) == state.m) {
        std::vector<int> canonical = canonicalize(state.values);
        if (canonical == state.values) {
            state.solutions.push_back(canonical);
        }
        return;
    }
    for (int next = state.values.back() + 1; next <= state.hi; ++next) {
        bool feasible = true;
        for (const int v : state.values) {
            const int diff = next - v;
            if (diff > state.span_required || state.used[static_cast<std::size_t>(diff)]) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            continue;
        }
        for (const int v : state.values) {
            state.used[static_cast<std::size_t>(next - v)] = 1;
        }
        state.values.push_back(next);
        extend(state);
        state.values.pop_back();
        for (const int v : state.values) {
            state.used[static_cast<std::size_t>(next - v)] = 0;
        }
    }
}

}  // namespace

SearchResult search_perfect(int m, int max_element) {
    if (m < 1) {
        throw std::invalid_argument("search_perfect: m must be >= 1");
    }
    const int span_required = m * (m - 1) / 2;
    if (max_element < span_required) {
        throw std::invalid_argument(
            "search_perfect: max_element " + std::to_string(max_element) +
            " cannot reach the largest required difference " + std::to_string(span_required));
    }
    SearchState state;
    state.m = m;
    state.span_required = span_required;
    state.hi = std::min(max_element, span_required);
    state.values = {0};
    state.used.assign(static_cast<std::size_t>(span_required) + 1, 0);
    extend(state);
    return {std::move(state.solutions), state.nodes};
}

namespace {

bool weights_match(const std::vector<int>& weights, const std::vector<long long>& doubled_sorted) {
    const std::size_t n = weights.size();
    std::vector<long long> sums;
    sums.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        long long sum = 0;
        for (std::size_t q = 0; q < n; ++q) {
            sum += (mask >> q) & 1 ? -weights[q] : weights[q];
        }
        sums.push_back(sum);
    }
    std::sort(sums.begin(), sums.end());
    return sums == doubled_sorted;
}

bool find_weights(std::vector<int>& weights, std::size_t index, int minimum, long long remaining,
                  const std::vector<long long>& doubled_sorted) {
    const std::size_t n = weights.size();
    if (index == n) {
        return remaining == 0 && weights_match(weights, doubled_sorted);
    }
    const std::size_t slots = n - index;
    for (long long w = minimum; w * static_cast<long long>(slots) <= remaining; ++w) {
        weights[index] = static_cast<int>(w);
        if (find_weights(weights, index + 1, static_cast<int>(w), remaining - w,
                         doubled_sorted)) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> rz_realization_weights(
    std::span<const int> eigenvalues, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 16) {
        throw std::invalid_argument("rz_realization_weights: n_qubits must be in [1, 16]");
    }
    if (eigenvalues.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("rz_realization_weights: eigenvalue list must have 2^n entries");
    }

    std::vector<long long> doubled(eigenvalues.size());
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        doubled[i] = 2LL * eigenvalues[i];
    }
    std::sort(doubled.begin(), doubled.end());
    // the sum multiset is symmetric around zero; reject asymmetric inputs early
    for (std::size_t i = 0; i < doubled.size(); ++i) {
        if (doubled[i] != -doubled[doubled.size() - 1 - i]) {
            return std::nullopt;
        }
    }

    const long long weight_sum = doubled.back();  // all-plus pattern reaches the maximum
    std::vector<int> weights(static_cast<std::size_t>(n_qubits), 0);
    if (find_weights(weights, 0, 0, weight_sum, doubled)) {
        return weights;
    }
    return std::nullopt;
}

}  // namespace qfex::diffset
