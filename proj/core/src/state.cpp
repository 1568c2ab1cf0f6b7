#include "mmes/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "mmes/bipartition.hpp"

namespace mmes {

PureState::PureState(SystemSize size, std::vector<Complex> amplitudes)
    : size_(size), amp_(std::move(amplitudes)) {
    require_state_size(size_);
    if (amp_.size() != size_.dim) {
        throw std::invalid_argument("PureState: amplitude count does not match 2^n");
    }
    renormalize();
}

PureState PureState::basis_state(SystemSize size, std::uint64_t index) {
    if (index >= size.dim) throw std::out_of_range("basis_state: index out of range");
    std::vector<Complex> amp(size.dim, Complex{0.0, 0.0});
    amp[index] = Complex{1.0, 0.0};
    return PureState(size, std::move(amp));
}

double PureState::norm() const {
    double sum = 0.0, comp = 0.0;
    for (const Complex& z : amp_) {
        const double term = std::norm(z) - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return std::sqrt(sum);
}

void PureState::renormalize() {
    const double n = norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("PureState: cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / n;
    for (Complex& z : amp_) z *= inv;
}

PureState sample_haar(SystemSize size, RngSeed seed) {
    require_state_size(size);
    Rng rng(seed, 0);
    std::vector<Complex> amp(size.dim);
    for (Complex& z : amp) z = rng.gaussian_complex();
    return PureState(size, std::move(amp));
}

void sample_haar_inplace(PureState& state, Rng& rng) {
    for (Complex& z : state.amplitudes()) z = rng.gaussian_complex();
    state.renormalize();
}

Rational haar_moment(SystemSize size,
                     const std::vector<std::pair<std::uint64_t, int>>& exponents) {
    const BigInt dim = pow2(static_cast<unsigned>(size.n));
    long long total = 0;
    BigInt numerator = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const auto& [index, mult] = exponents[i];
        if (index >= size.dim && size.n <= 62) {
            throw std::out_of_range("haar_moment: basis index out of range");
        }
        if (mult < 1) throw std::invalid_argument("haar_moment: multiplicity must be >= 1");
        for (std::size_t j = 0; j < i; ++j) {
            if (exponents[j].first == index) {
                throw std::invalid_argument("haar_moment: duplicate basis index");
            }
        }
        total += mult;
        for (int m = 2; m <= mult; ++m) numerator *= m;  // prod m_j!
    }
    // (N-1)! / (N-1+total)! = 1 / (N (N+1) ... (N-1+total))
    BigInt denominator = 1;
    for (long long i = 0; i < total; ++i) denominator *= (dim + i);
    return Rational(numerator, denominator);
}

PureState max_bipartite_state(SystemSize size, const Bipartition& part) {
    if (part.subset_count() != size.n_a) {
        throw std::invalid_argument("max_bipartite_state: subset must have n_a qubits");
    }
    // bit positions of A and of the complement, in increasing order
    std::vector<int> a_bits, b_bits;
    for (int i = 0; i < size.n; ++i) {
        if ((part.mask() >> i) & 1) a_bits.push_back(i);
        else b_bits.push_back(i);
    }
    std::vector<Complex> amp(size.dim, Complex{0.0, 0.0});
    const double value = 1.0 / std::sqrt(static_cast<double>(size.dim_a));
    for (std::uint64_t r = 0; r < size.dim_a; ++r) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < a_bits.size(); ++j) {
            const std::uint64_t bit = (r >> j) & 1;
            k |= bit << a_bits[j];
            k |= bit << b_bits[j];  // first n_a complement positions mirror A
        }
        amp[k] = Complex{value, 0.0};
    }
    return PureState(size, std::move(amp));
}

PureState ghz_state(SystemSize size) {
    if (size.n < 2) throw std::invalid_argument("ghz_state: need n >= 2");
    std::vector<Complex> amp(size.dim, Complex{0.0, 0.0});
    const double value = 1.0 / std::sqrt(2.0);
    amp.front() = Complex{value, 0.0};
    amp.back() = Complex{value, 0.0};
    return PureState(size, std::move(amp));
}

}  // namespace mmes
