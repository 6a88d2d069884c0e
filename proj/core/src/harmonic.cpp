#include "harmsum/harmonic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace harmsum {

HarmonicTable::HarmonicTable(int n_max, int r_max) : n_max_(n_max), r_max_(r_max) {
    if (n_max < 0) throw std::invalid_argument("HarmonicTable: n_max must be >= 0");
    if (r_max < 1) throw std::invalid_argument("HarmonicTable: r_max must be >= 1");
    values_.resize(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(r_max));
    for (int k = 1; k <= n_max; ++k) {
        Integer power = k;
        const std::size_t row = static_cast<std::size_t>(k) * r_max;
        const std::size_t prev = static_cast<std::size_t>(k - 1) * r_max;
        for (int r = 1; r <= r_max; ++r) {
            values_[row + r - 1] = values_[prev + r - 1] + Rational(Integer(1), power);
            power *= k;
        }
    }
}

const Rational& HarmonicTable::value(int k, int r) const {
    if (k < 0 || k > n_max_ || r < 1 || r > r_max_) {
        throw std::out_of_range("HarmonicTable: (" + std::to_string(k) + ", " + std::to_string(r) +
                                ") outside table");
    }
    return values_[static_cast<std::size_t>(k) * r_max_ + r - 1];
}

std::shared_ptr<const HarmonicTable> build_harmonic_table(int n_max, int r_max) {
    return std::make_shared<const HarmonicTable>(n_max, r_max);
}

Rational harmonic(int n, int r) {
    if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
    if (r < 1) throw std::invalid_argument("harmonic: r must be >= 1");
    static std::mutex mutex;
    static std::shared_ptr<const HarmonicTable> cache;
    std::shared_ptr<const HarmonicTable> table;
    {
        std::lock_guard lock(mutex);
        if (!cache || cache->n_max() < n || cache->r_max() < r) {
            const int n_new = std::max(n, cache ? std::min(2 * cache->n_max(), n + 256) : 64);
            const int r_new = std::max(r, cache ? cache->r_max() : 8);
            cache = build_harmonic_table(n_new, r_new);
        }
        table = cache;
    }
    return table->value(n, r);
}

}  // namespace harmsum
