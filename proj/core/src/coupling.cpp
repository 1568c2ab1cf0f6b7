#include "mmes/coupling.hpp"

#include <bit>
#include <stdexcept>

#include "mmes/bipartition.hpp"

namespace mmes {

CouplingTable::CouplingTable(SystemSize size) : size_(size) {
    const int n = size.n;
    const BigInt denom = 2 * binomial(n, size.n_a);
    table_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int s = 0; s <= n; ++s) {
        for (int t = 0; t <= n; ++t) {
            const BigInt num =
                binomial(n - s - t, size.n_a - s) + binomial(n - s - t, size.n_a - t);
            table_[static_cast<std::size_t>(s) * (n + 1) + t] = Rational(num, denom);
        }
    }
}

const Rational& CouplingTable::ghat(int s, int t) const {
    if (s < 0 || t < 0 || s > size_.n || t > size_.n) {
        throw std::out_of_range("ghat: arguments must lie in [0, n]");
    }
    return table_[static_cast<std::size_t>(s) * (size_.n + 1) + t];
}

Rational CouplingTable::g(std::uint64_t a, std::uint64_t b) const {
    if ((a & b) != 0) return Rational(0);
    return ghat(std::popcount(a), std::popcount(b));
}

Rational CouplingTable::delta(std::uint64_t k, std::uint64_t k2,
                              std::uint64_t l, std::uint64_t l2) const {
    const std::uint64_t a = (k ^ l) | (k2 ^ l2);
    const std::uint64_t b = (k ^ l2) | (k2 ^ l);
    return g(a, b);
}

void CouplingTable::corrupt_for_testing() {
    table_[0] += Rational(1, 7);  // ghat(0,0) is pinned to 1 by every check
}

Rational delta_definitional(SystemSize size, std::uint64_t k, std::uint64_t k2,
                            std::uint64_t l, std::uint64_t l2) {
    const auto parts = enumerate_balanced(size);
    const std::uint64_t full = size.full_mask();
    const auto match = [](std::uint64_t x, std::uint64_t y, std::uint64_t m) {
        return ((x ^ y) & m) == 0;
    };
    BigInt hits = 0;
    for (const Bipartition& p : parts) {
        const std::uint64_t a = p.mask(), abar = full ^ p.mask();
        if (match(k, l2, a) && match(k2, l, a) && match(k, l, abar) && match(k2, l2, abar)) {
            ++hits;
        }
        if (match(k2, l2, a) && match(k, l, a) && match(k2, l, abar) && match(k, l2, abar)) {
            ++hits;
        }
    }
    return Rational(hits, 2 * BigInt(parts.size()));
}

SymmetryReport check_symmetries(SystemSize size, std::uint64_t trials, RngSeed seed) {
    const CouplingTable table(size);
    Rng rng(seed, 0);
    const std::uint64_t full = size.full_mask();
    SymmetryReport report;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t k = rng.next_u64() & full;
        const std::uint64_t k2 = rng.next_u64() & full;
        const std::uint64_t l = rng.next_u64() & full;
        const std::uint64_t l2 = rng.next_u64() & full;
        const Rational base = table.delta(k, k2, l, l2);
        const char* failed = nullptr;
        if (base != table.delta(k2, k, l, l2)) failed = "delta(k,k';l,l') == delta(k',k;l,l')";
        else if (base != table.delta(l, l2, k, k2)) failed = "delta(k,k';l,l') == delta(l,l';k,k')";
        else if (base != table.delta(k2, k, l2, l)) failed = "delta(k,k';l,l') == delta(k',k;l',l)";
        if (failed) {
            report.all_passed = false;
            report.failed_relation = failed;
            report.counterexample = {{k, k2, l, l2}};
            return report;
        }
    }
    return report;
}

}  // namespace mmes
