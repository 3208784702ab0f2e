#include "qfex/rng.hpp"

#include <numbers>

namespace qfex {

std::vector<double> uniform_angles(std::size_t count, std::uint64_t seed,
                                   std::uint64_t stream) {
    std::mt19937_64 rng = seeded_rng(seed, stream);
    std::vector<double> angles(count);
    for (double& angle : angles) {
        angle = 2.0 * std::numbers::pi * uniform_unit(rng);
    }
    return angles;
}

}  // namespace qfex
