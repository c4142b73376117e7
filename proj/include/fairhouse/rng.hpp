#ifndef FAIRHOUSE_RNG_HPP
#define FAIRHOUSE_RNG_HPP

#include <cstdint>
#include <random>

#include "fairhouse/errors.hpp"

namespace fairhouse {

// Seedable generator with bit-portable output: the raw mt19937_64 stream is
// fixed by the standard, and bounded draws use rejection sampling instead of
// std::uniform_int_distribution (whose mapping is implementation-defined).
// Fixtures generated from a seed are therefore identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        require(bound > 0, ErrorCode::InvalidArgument, "bound must be positive");
        std::uint64_t draw;
        std::uint64_t value;
        do {
            draw = engine_();
            value = draw % bound;
        } while (draw - value > std::uint64_t(0) - bound);  // reject the incomplete block
        return value;
    }

    // True with probability `millionths` / 1e6.
    bool chance(std::uint64_t millionths) { return below(1'000'000) < millionths; }

private:
    std::mt19937_64 engine_;
};

}  // namespace fairhouse

#endif
