#pragma once

// Pure n-qubit states, Haar-measure sampling and reference constructors.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "mmes/exact.hpp"
#include "mmes/rng.hpp"
#include "mmes/system.hpp"

namespace mmes {

class Bipartition;

using Complex = std::complex<double>;

// Normalized amplitude vector over n-bit basis indices. Construction
// renormalizes, so the unit-norm invariant holds to ~1e-16 afterwards.
class PureState {
public:
    PureState(SystemSize size, std::vector<Complex> amplitudes);

    static PureState basis_state(SystemSize size, std::uint64_t index);

    SystemSize size() const { return size_; }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    std::vector<Complex>& amplitudes() { return amp_; }
    Complex amplitude(std::uint64_t index) const { return amp_[index]; }

    double norm() const;
    void renormalize();

private:
    SystemSize size_;
    std::vector<Complex> amp_;
};

// State distributed per the unitarily invariant measure: independent
// standard complex Gaussians, then normalization.
PureState sample_haar(SystemSize size, RngSeed seed);

// In-place variant for sampling loops; overwrites and renormalizes.
void sample_haar_inplace(PureState& state, Rng& rng);

// Haar-measure moment < prod_j |z_{q_j}|^{2 m_j} > as an exact rational:
// (N-1)! * prod m_j! / (N-1+sum m_j)!. Basis indices must be distinct.
Rational haar_moment(SystemSize size,
                     const std::vector<std::pair<std::uint64_t, int>>& exponents);

// Maximally bipartite entangled state for the split selected by `part`:
// uniform amplitudes 1/sqrt(dim_a) on the basis strings whose A-substring
// equals the first n_a bits of the complement substring (remaining
// complement bits zero). Purity of that bipartition is exactly 1/dim_a.
PureState max_bipartite_state(SystemSize size, const Bipartition& part);

// (|0...0> + |1...1>)/sqrt(2); needs n >= 2.
PureState ghz_state(SystemSize size);

}  // namespace mmes
