#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qfex/diffset.hpp"

using namespace qfex;
using namespace qfex::diffset;

namespace {

// no-pruning oracle: every m-subset of [0, max_element], canonicalized
std::vector<std::vector<int>> brute_force_perfect(int m, int max_element) {
    std::set<std::vector<int>> found;
    std::vector<int> subset;
    const auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(subset.size()) == m) {
            if (is_perfect(subset)) {
                found.insert(canonicalize(subset));
            }
            return;
        }
        for (int v = next; v <= max_element; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    return {found.begin(), found.end()};
}

}  // namespace

TEST_CASE("difference multiset") {
    const std::vector<int> single{0};
    const WavenumberProfile p1 = difference_multiset(single);
    CHECK(p1.entries.size() == 1);
    CHECK(p1.degeneracy(0) == 1);

    const std::vector<int> pair{0, 1};
    const WavenumberProfile p2 = difference_multiset(pair);
    CHECK(p2.degeneracy(-1) == 1);
    CHECK(p2.degeneracy(0) == 2);
    CHECK(p2.degeneracy(1) == 1);

    const std::vector<int> triple{0, 1, 3};
    const WavenumberProfile p3 = difference_multiset(triple);
    CHECK(p3.degeneracy(0) == 3);
    for (const int k : {1, 2, 3}) {
        CHECK(p3.degeneracy(k) == 1);
        CHECK(p3.degeneracy(-k) == 1);
    }
    CHECK(p3.total() == 9);

    const std::vector<int> unsorted{1, 0};
    CHECK_THROWS_AS(difference_multiset(unsorted), std::invalid_argument);
    CHECK_THROWS_AS(difference_multiset(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("is_perfect") {
    CHECK(is_perfect(std::vector<int>{0, 1, 3}));
    CHECK_FALSE(is_perfect(std::vector<int>{0, 1, 2}));
    CHECK(is_perfect(std::vector<int>{0}));
    CHECK(is_perfect(std::vector<int>{0, 1}));
    CHECK(is_perfect(std::vector<int>{0, 1, 4, 6}));
    CHECK_FALSE(is_perfect(std::vector<int>{0, 1, 4, 7}));
}

TEST_CASE("perfection is translation and reflection invariant") {
    const std::vector<std::vector<int>> lists{
        {0, 1, 3}, {0, 1, 2}, {0, 1, 4, 6}, {0, 2, 3}, {0, 1, 4, 9}};
    for (const auto& list : lists) {
        const bool base = is_perfect(list);
        for (const int shift : {-7, 3, 100}) {
            std::vector<int> translated;
            for (const int v : list) {
                translated.push_back(v + shift);
            }
            CHECK(is_perfect(translated) == base);
        }
        std::vector<int> reflected;
        for (auto it = list.rbegin(); it != list.rend(); ++it) {
            reflected.push_back(-*it);
        }
        CHECK(is_perfect(reflected) == base);
    }
}

TEST_CASE("canonicalize picks the smaller of list and reflection") {
    CHECK(canonicalize(std::vector<int>{0, 1, 3}) == std::vector<int>{0, 1, 3});
    CHECK(canonicalize(std::vector<int>{0, 2, 3}) == std::vector<int>{0, 1, 3});
    CHECK(canonicalize(std::vector<int>{5, 6, 8}) == std::vector<int>{0, 1, 3});
    CHECK(canonicalize(std::vector<int>{0, 2, 5, 6}) == std::vector<int>{0, 1, 4, 6});
}

TEST_CASE("search_perfect reproduces the known lists") {
    const SearchResult m3 = search_perfect(3, 3);
    REQUIRE(m3.solutions.size() == 1);
    CHECK(m3.solutions[0] == std::vector<int>{0, 1, 3});
    CHECK(m3.nodes_explored > 0);

    const SearchResult m4 = search_perfect(4, 6);
    REQUIRE(m4.solutions.size() == 1);
    CHECK(m4.solutions[0] == std::vector<int>{0, 1, 4, 6});

    const SearchResult m5 = search_perfect(5, 10);
    CHECK(m5.solutions.empty());

    const SearchResult m1 = search_perfect(1, 0);
    REQUIRE(m1.solutions.size() == 1);
    CHECK(m1.solutions[0] == std::vector<int>{0});

    const SearchResult m2 = search_perfect(2, 1);
    REQUIRE(m2.solutions.size() == 1);
    CHECK(m2.solutions[0] == std::vector<int>{0, 1});
}

TEST_CASE("search_perfect rejects infeasible bounds") {
    CHECK_THROWS_AS(search_perfect(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(search_perfect(0, 5), std::invalid_argument);
}

TEST_CASE("every found list is perfect, canonical, and spans m(m-1)/2") {
    for (int m = 1; m <= 6; ++m) {
        const int span = m * (m - 1) / 2;
        const SearchResult result = search_perfect(m, span + 4);
        std::set<std::vector<int>> unique(result.solutions.begin(), result.solutions.end());
        CHECK(unique.size() == result.solutions.size());
        CHECK(std::is_sorted(result.solutions.begin(), result.solutions.end()));
        for (const auto& list : result.solutions) {
            CHECK(is_perfect(list));
            CHECK(canonicalize(list) == list);
            CHECK(list.back() - list.front() == span);
        }
    }
}

TEST_CASE("pruned search agrees with the no-pruning subset oracle") {
    for (int m = 1; m <= 4; ++m) {
        for (int max_element = m * (m - 1) / 2; max_element <= 8; ++max_element) {
            const SearchResult pruned = search_perfect(m, max_element);
            const auto reference = brute_force_perfect(m, max_element);
            CHECK(pruned.solutions == reference);
        }
    }
}

TEST_CASE("rz realization weights") {
    // the n=2 degeneracy-free generator diagonal {2, -1, 1, -2} comes from
    // weights {1, 3}
    const std::vector<int> exponential{-2, -1, 1, 2};
    const auto w1 = rz_realization_weights(exponential, 2);
    REQUIRE(w1.has_value());
    CHECK(*w1 == std::vector<int>{1, 3});

    const std::vector<int> linear{-1, 0, 0, 1};
    const auto w2 = rz_realization_weights(linear, 2);
    REQUIRE(w2.has_value());
    CHECK(*w2 == std::vector<int>{1, 1});

    // the perfect m=4 list is not symmetric around any center, so no
    // rotation weights exist even after translation
    const std::vector<int> perfect{0, 1, 4, 6};
    CHECK_FALSE(rz_realization_weights(perfect, 2).has_value());

    const std::vector<int> shifted{-3, -2, 1, 3};  // {0,1,4,6} centered-ish
    CHECK_FALSE(rz_realization_weights(shifted, 2).has_value());

    const std::vector<int> single{-1, 1};
    const auto w3 = rz_realization_weights(single, 1);
    REQUIRE(w3.has_value());
    CHECK(*w3 == std::vector<int>{2});

    CHECK_THROWS_AS(rz_realization_weights(std::vector<int>{0, 1, 2}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(rz_realization_weights(exponential, 0), std::invalid_argument);
}
