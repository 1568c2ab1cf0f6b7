#pragma once

// The quartic coupling kernel of the entanglement potential:
//   delta(k,k';l,l') = g((k^l)|(k'^l'), (k^l')|(k'^l))
//   g(a,b)           = [a & b == 0] * ghat(|a|,|b|)
//   ghat(s,t)        = (C(n-s-t, n_a-s) + C(n-s-t, n_a-t)) / (2 C(n, n_a))
// with binomials defined to vanish outside their range. All values are
// exact rationals; the table build is single-shot and reads are immutable.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmes/exact.hpp"
#include "mmes/rng.hpp"
#include "mmes/system.hpp"

namespace mmes {

class CouplingTable {
public:
    explicit CouplingTable(SystemSize size);

    SystemSize size() const { return size_; }

    const Rational& ghat(int s, int t) const;
    Rational g(std::uint64_t a, std::uint64_t b) const;
    Rational delta(std::uint64_t k, std::uint64_t k2,
                   std::uint64_t l, std::uint64_t l2) const;

    // Test hook: perturbs one table entry so that consistency checks fail.
    void corrupt_for_testing();

private:
    SystemSize size_;
    std::vector<Rational> table_;  // (n+1) x (n+1)
};

// Definition-level evaluation: the symmetrized sum of delta-products over
// all balanced bipartitions. Reference for the closed bitwise form above;
// O(C(n, n_a)) per call.
Rational delta_definitional(SystemSize size, std::uint64_t k, std::uint64_t k2,
                            std::uint64_t l, std::uint64_t l2);

struct SymmetryReport {
    bool all_passed = true;
    std::uint64_t trials = 0;
    std::string failed_relation;                           // empty when passed
    std::optional<std::array<std::uint64_t, 4>> counterexample;
};

// Verifies on random quadruples that delta is invariant under swapping the
// holomorphic pair, swapping the two pairs, and swapping both slots at once.
SymmetryReport check_symmetries(SystemSize size, std::uint64_t trials, RngSeed seed);

}  // namespace mmes
