#pragma once

// Deterministic random number generation. std::mt19937_64 is fully specified
// by the standard; the uniform and Gaussian transforms below avoid
// std::*_distribution, whose algorithms are implementation-defined, so the
// same seed yields bit-identical streams on every platform.

#include <complex>
#include <cstdint>
#include <random>

namespace mmes {

struct RngSeed {
    std::uint64_t value = 0;
};

// splitmix64 finalizer; used to derive independent substream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}
    Rng(RngSeed seed, std::uint64_t stream) : engine_(mix_seed(seed.value, stream)) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0,1) with 53 bits
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform in (0,1]; safe as a log argument
    double uniform_pos() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

    // standard complex Gaussian via Box-Muller: radius and phase from two
    // uniforms, Re and Im are independent N(0,1)
    std::complex<double> gaussian_complex() {
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double theta = 6.283185307179586476925286766559 * uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto z = gaussian_complex();
        spare_ = z.imag();
        have_spare_ = true;
        return z.real();
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace mmes
