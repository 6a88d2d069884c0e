#pragma once

#include <memory>
#include <vector>

#include "harmsum/exact.hpp"

namespace harmsum {

/// Exact generalized harmonic numbers H_k^(r) for 0 <= k <= n_max,
/// 1 <= r <= r_max. Immutable after construction.
class HarmonicTable {
public:
    /// Throws std::invalid_argument when n_max < 0 or r_max < 1.
    HarmonicTable(int n_max, int r_max);

    int n_max() const { return n_max_; }
    int r_max() const { return r_max_; }

    /// H_k^(r); throws std::out_of_range outside the table.
    const Rational& value(int k, int r) const;

private:
    int n_max_;
    int r_max_;
    std::vector<Rational> values_;  // row-major in k, r - 1
};

std::shared_ptr<const HarmonicTable> build_harmonic_table(int n_max, int r_max);

/// H_n^(r) from a process-wide table that grows on demand. Thread-safe.
Rational harmonic(int n, int r);

}  // namespace harmsum
