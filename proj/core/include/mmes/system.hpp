#pragma once

#include <cstdint>
#include <stdexcept>

namespace mmes {

// Thrown when a requested qubit count exceeds a supported or configured cap.
class DimensionLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Single source of dimensional truth for an n-qubit register.
//
// Convention: qubit i occupies bit i of a basis index (bit 0 = first qubit).
// The balanced split puts n_a = floor(n/2) qubits into subset A, so
// n_abar - n_a is 0 for even n and 1 for odd n, and dim == dim_a * dim_abar.
struct SystemSize {
    int n = 0;
    int n_a = 0;
    int n_abar = 0;
    std::uint64_t dim = 0;
    std::uint64_t dim_a = 0;
    std::uint64_t dim_abar = 0;

    // Valid for 1 <= n <= 62 (dimensions must fit an unsigned 64-bit value).
    static SystemSize of(int n);

    std::uint64_t full_mask() const { return dim - 1; }

    friend bool operator==(const SystemSize&, const SystemSize&) = default;
};

// Cap on qubit counts for operations that materialize a 2^n amplitude
// vector. Defaults to 14; the MMES_MAX_QUBITS environment variable
// overrides it (read once per process).
int max_state_qubits();

// Throws DimensionLimitError if size.n exceeds max_state_qubits().
void require_state_size(const SystemSize& size);

}  // namespace mmes
