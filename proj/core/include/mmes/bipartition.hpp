#pragma once

// Balanced bipartitions, purity by partial trace, and the entanglement
// potential (mean purity over all balanced bipartitions).

#include <cstdint>
#include <vector>

#include "mmes/state.hpp"
#include "mmes/system.hpp"

namespace mmes {

// Subset A of the qubit register: bit i of mask set <=> qubit i in A.
// A proper bipartition needs at least one qubit on each side, so the empty
// and full masks are rejected at construction.
class Bipartition {
public:
    Bipartition(SystemSize size, std::uint64_t mask);

    SystemSize size() const { return size_; }
    std::uint64_t mask() const { return mask_; }
    int subset_count() const;  // |A|
    bool is_balanced() const;  // |A| == n_a
    Bipartition complement() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    SystemSize size_;
    std::uint64_t mask_;
};

// All C(n, n_a) balanced masks in strictly increasing mask order.
std::vector<Bipartition> enumerate_balanced(SystemSize size);

// d(A,B) = |A \ B|; both bipartitions must be balanced and of equal size.
int distance(const Bipartition& a, const Bipartition& b);

// tr_A rho_A^2, computed by reshaping the amplitudes into a dim_A x dim_Abar
// matrix M (gather by mask bits) and taking the squared Frobenius norm of
// M M^dagger. Any subset size in [1, n-1] is accepted.
double purity(const PureState& state, const Bipartition& part);

// Mean purity over all balanced bipartitions; needs n >= 2.
double potential(const PureState& state);

// Reusable evaluator: precomputes the gather tables of every balanced
// bipartition once, then evaluates states repeatedly. Thread-safe for
// concurrent calls on distinct states.
class PotentialEvaluator {
public:
    explicit PotentialEvaluator(SystemSize size);

    SystemSize size() const { return size_; }
    const std::vector<Bipartition>& bipartitions() const { return parts_; }

    double potential(const PureState& state) const;
    std::vector<double> purities(const PureState& state) const;

    // Potential and its Wirtinger gradient d H / d conj(z); `grad` is
    // resized to the state dimension. Used by the local-descent polish.
    double potential_gradient(const PureState& state, std::vector<Complex>& grad) const;

private:
    SystemSize size_;
    std::vector<Bipartition> parts_;
    std::vector<std::vector<std::uint32_t>> gather_;  // per mask: src index of M[row][col]

    double purity_one(const std::vector<Complex>& amp, std::size_t which,
                      std::vector<Complex>& m_buf, std::vector<Complex>& g_buf) const;
};

}  // namespace mmes
