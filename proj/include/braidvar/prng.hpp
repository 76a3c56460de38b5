#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace braidvar {

// Deterministic sampling of small rationals. mt19937_64 output is fully
// specified by the standard, and ranges are taken by plain modulo, so reports
// are byte-stable across platforms for a fixed seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Numerators in [-9, 9], denominators in [1, 9].
    Rational small_rational() {
        Rational r(uniform_int(-9, 9), uniform_int(1, 9));
        r.canonicalize();
        return r;
    }

    Rational nonzero_small_rational() {
        while (true) {
            Rational r = small_rational();
            if (!is_zero(r)) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace braidvar
