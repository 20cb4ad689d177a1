// rng.hpp — seeded random values with a fully pinned-down output sequence.
//
// The mt19937_64 engine sequence is fixed by the standard; the uniform and
// gaussian mappings below are written out explicitly because the standard
// library distributions are implementation-defined and would break the
// byte-identical determinism contract across toolchains.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bellpair/matrix.hpp"

namespace bellpair {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bellpair
