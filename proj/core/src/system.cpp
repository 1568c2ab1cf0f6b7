#include "mmes/system.hpp"

#include <cstdlib>
#include <string>

namespace mmes {

SystemSize SystemSize::of(int n) {
    if (n < 1) throw std::invalid_argument("SystemSize: need at least one qubit");
    if (n > 62) throw DimensionLimitError("SystemSize: n > 62 does not fit 64-bit dimensions");
    SystemSize s;
    s.n = n;
    s.n_a = n / 2;
    s.n_abar = n - s.n_a;
    s.dim = std::uint64_t{1} << n;
    s.dim_a = std::uint64_t{1} << s.n_a;
    s.dim_abar = std::uint64_t{1} << s.n_abar;
    return s;
}

int max_state_qubits() {
    static const int cap = [] {
        if (const char* env = std::getenv("MMES_MAX_QUBITS")) {
            try {
                const int value = std::stoi(env);
                if (value >= 1 && value <= 30) return value;
            } catch (const std::exception&) {
                // fall through to the default on malformed input
            }
        }
        return 14;
    }();
    return cap;
}

void require_state_size(const SystemSize& size) {
    if (size.n > max_state_qubits()) {
        throw DimensionLimitError("state of " + std::to_string(size.n) +
                                  " qubits exceeds the cap of " +
                                  std::to_string(max_state_qubits()) +
                                  " (set MMES_MAX_QUBITS to raise it)");
    }
}

}  // namespace mmes
