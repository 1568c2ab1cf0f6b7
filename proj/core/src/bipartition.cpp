#include "mmes/bipartition.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mmes {

namespace {

// Kahan-compensated accumulator; the balanced average at n=14 sums ~3432
// purities and each purity sums up to 2^14 squared magnitudes.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double value) {
        const double term = value - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
};

std::vector<std::uint32_t> build_gather(SystemSize size, std::uint64_t mask) {
    std::vector<int> a_bits, b_bits;
    for (int i = 0; i < size.n; ++i) {
        if ((mask >> i) & 1) a_bits.push_back(i);
        else b_bits.push_back(i);
    }
    const std::uint64_t rows = std::uint64_t{1} << a_bits.size();
    const std::uint64_t cols = std::uint64_t{1} << b_bits.size();
    std::vector<std::uint32_t> gather(rows * cols);
    for (std::uint64_t k = 0; k < size.dim; ++k) {
        std::uint64_t row = 0, col = 0;
        for (std::size_t j = 0; j < a_bits.size(); ++j) row |= ((k >> a_bits[j]) & 1) << j;
        for (std::size_t j = 0; j < b_bits.size(); ++j) col |= ((k >> b_bits[j]) & 1) << j;
        gather[row * cols + col] = static_cast<std::uint32_t>(k);
    }
    return gather;
}

double purity_from_gather(const std::vector<Complex>& amp,
                          const std::vector<std::uint32_t>& gather,
                          std::uint64_t rows, std::uint64_t cols,
                          std::vector<Complex>& m_buf, std::vector<Complex>& g_buf) {
    m_buf.resize(rows * cols);
    for (std::size_t i = 0; i < m_buf.size(); ++i) m_buf[i] = amp[gather[i]];
    // G = M M^dagger (Hermitian rows x rows), then sum |G|^2
    g_buf.assign(rows * rows, Complex{0.0, 0.0});
    for (std::uint64_t r = 0; r < rows; ++r) {
        const Complex* mr = m_buf.data() + r * cols;
        for (std::uint64_t s = r; s < rows; ++s) {
            const Complex* ms = m_buf.data() + s * cols;
            Complex acc{0.0, 0.0};
            for (std::uint64_t c = 0; c < cols; ++c) acc += mr[c] * std::conj(ms[c]);
            g_buf[r * rows + s] = acc;
        }
    }
    Kahan sum;
    for (std::uint64_t r = 0; r < rows; ++r) {
        sum.add(std::norm(g_buf[r * rows + r]));
        for (std::uint64_t s = r + 1; s < rows; ++s) {
            sum.add(2.0 * std::norm(g_buf[r * rows + s]));
        }
    }
    return sum.sum;
}

}  // namespace

Bipartition::Bipartition(SystemSize size, std::uint64_t mask) : size_(size), mask_(mask) {
    if (mask == 0 || mask >= size.full_mask()) {
        throw std::invalid_argument("Bipartition: mask must select a proper nonempty subset");
    }
}

int Bipartition::subset_count() const { return std::popcount(mask_); }

bool Bipartition::is_balanced() const { return subset_count() == size_.n_a; }

Bipartition Bipartition::complement() const {
    return Bipartition(size_, mask_ ^ size_.full_mask());
}

std::vector<Bipartition> enumerate_balanced(SystemSize size) {
    if (size.n < 2) throw std::invalid_argument("enumerate_balanced: need n >= 2");
    std::vector<Bipartition> out;
    const std::uint64_t limit = size.full_mask();
    // Gosper's hack: next mask with the same popcount, increasing order
    std::uint64_t mask = (std::uint64_t{1} << size.n_a) - 1;
    while (mask <= limit) {
        out.emplace_back(size, mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
        if (c == 0) break;
    }
    return out;
}

int distance(const Bipartition& a, const Bipartition& b) {
    if (!(a.size() == b.size())) throw std::invalid_argument("distance: size mismatch");
    if (!a.is_balanced() || !b.is_balanced()) {
        throw std::invalid_argument("distance: both bipartitions must be balanced");
    }
    return std::popcount(a.mask() & ~b.mask());
}

double purity(const PureState& state, const Bipartition& part) {
    if (!(state.size() == part.size())) throw std::invalid_argument("purity: size mismatch");
    const SystemSize size = state.size();
    const int na = part.subset_count();
    const std::uint64_t rows = std::uint64_t{1} << na;
    const std::uint64_t cols = size.dim >> na;
    const auto gather = build_gather(size, part.mask());
    std::vector<Complex> m_buf, g_buf;
    const double value =
        purity_from_gather(state.amplitudes(), gather, rows, cols, m_buf, g_buf);
    const double lower = 1.0 / static_cast<double>(rows);
    if (value < lower - 1e-9 || value > 1.0 + 1e-9) {
        throw std::logic_error("purity: result escaped [1/dim_A, 1]");
    }
    return value;
}

double potential(const PureState& state) {
    return PotentialEvaluator(state.size()).potential(state);
}

PotentialEvaluator::PotentialEvaluator(SystemSize size)
    : size_(size), parts_(enumerate_balanced(size)) {
    gather_.reserve(parts_.size());
    for (const Bipartition& p : parts_) gather_.push_back(build_gather(size, p.mask()));
}

double PotentialEvaluator::purity_one(const std::vector<Complex>& amp, std::size_t which,
                                      std::vector<Complex>& m_buf,
                                      std::vector<Complex>& g_buf) const {
    return purity_from_gather(amp, gather_[which], size_.dim_a, size_.dim_abar, m_buf, g_buf);
}

double PotentialEvaluator::potential(const PureState& state) const {
    std::vector<Complex> m_buf, g_buf;
    Kahan mean;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        mean.add(purity_one(state.amplitudes(), i, m_buf, g_buf));
    }
    return mean.sum / static_cast<double>(parts_.size());
}

std::vector<double> PotentialEvaluator::purities(const PureState& state) const {
    std::vector<Complex> m_buf, g_buf;
    std::vector<double> out;
    out.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out.push_back(purity_one(state.amplitudes(), i, m_buf, g_buf));
    }
    return out;
}

double PotentialEvaluator::potential_gradient(const PureState& state,
                                              std::vector<Complex>& grad) const {
    const auto& amp = state.amplitudes();
    const std::uint64_t rows = size_.dim_a, cols = size_.dim_abar;
    grad.assign(amp.size(), Complex{0.0, 0.0});
    std::vector<Complex> m_buf(rows * cols), g_full(rows * rows), gm(rows * cols);
    Kahan mean;
    for (std::size_t which = 0; which < parts_.size(); ++which) {
        const auto& gather = gather_[which];
        for (std::size_t i = 0; i < m_buf.size(); ++i) m_buf[i] = amp[gather[i]];
        for (std::uint64_t r = 0; r < rows; ++r) {
            for (std::uint64_t s = 0; s < rows; ++s) {
                Complex acc{0.0, 0.0};
                const Complex* mr = m_buf.data() + r * cols;
                const Complex* ms = m_buf.data() + s * cols;
                for (std::uint64_t c = 0; c < cols; ++c) acc += mr[c] * std::conj(ms[c]);
                g_full[r * rows + s] = acc;
            }
        }
        double pur = 0.0;
        for (const Complex& g : g_full) pur += std::norm(g);
        mean.add(pur);
        // d tr((M M^+)^2) / d conj(M) = 2 (M M^+) M
        for (std::uint64_t r = 0; r < rows; ++r) {
            for (std::uint64_t c = 0; c < cols; ++c) {
                Complex acc{0.0, 0.0};
                for (std::uint64_t s = 0; s < rows; ++s) {
                    acc += g_full[r * rows + s] * m_buf[s * cols + c];
                }
                gm[r * cols + c] = 2.0 * acc;
            }
        }
        for (std::size_t i = 0; i < gm.size(); ++i) grad[gather[i]] += gm[i];
    }
    const double inv = 1.0 / static_cast<double>(parts_.size());
    for (Complex& g : grad) g *= inv;
    return mean.sum * inv;
}

}  // namespace mmes
