#pragma once

/*
 * Deterministic reductions.
 *
 * Every reduction in this project goes through one of the helpers below.
 * The scheme is: Neumaier-compensated summation inside fixed-size blocks,
 * then a fixed binary combination tree across the block partials.  The
 * block layout depends only on the index range, never on the thread count,
 * so parallel and serial runs produce bit-identical results.
 *
 * sorted_sum additionally sorts the addends by value first; two sums over
 * the same multiset of addends then agree bit-for-bit even if the terms
 * were produced in different orders (used where the contracts promise
 * exact equality under rearrangement, e.g. permutation-invariant inner
 * products and partition block means).
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ergolab/core.hpp"

namespace ergolab {

constexpr std::int64_t kSumBlock = 1024;

struct Neumaier {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double result() const { return s + c; }
};

// In-place fixed binary tree combine; returns the root.
double pairwise_combine(std::vector<double>& v);
cx pairwise_combine(std::vector<cx>& v);

// Sum of term(i) for i in [0, n), deterministic, serial.
template <class F>
double det_sum(std::int64_t n, F&& term) {
    std::vector<double> partial;
    partial.reserve(static_cast<std::size_t>((n + kSumBlock - 1) / kSumBlock));
    for (std::int64_t b = 0; b < n; b += kSumBlock) {
        Neumaier acc;
        const std::int64_t hi = std::min(n, b + kSumBlock);
        for (std::int64_t i = b; i < hi; ++i) acc.add(term(i));
        partial.push_back(acc.result());
    }
    return pairwise_combine(partial);
}

template <class F>
cx det_sum_cx(std::int64_t n, F&& term) {
    std::vector<cx> partial;
    partial.reserve(static_cast<std::size_t>((n + kSumBlock - 1) / kSumBlock));
    for (std::int64_t b = 0; b < n; b += kSumBlock) {
        Neumaier re, im;
        const std::int64_t hi = std::min(n, b + kSumBlock);
        for (std::int64_t i = b; i < hi; ++i) {
            cx t = term(i);
            re.add(t.real());
            im.add(t.imag());
        }
        partial.emplace_back(re.result(), im.result());
    }
    return pairwise_combine(partial);
}

// Parallel variant: blocks are computed concurrently, combined in the same
// fixed order as det_sum.  Identical result for any thread count.
double det_sum_par(std::int64_t n, const std::function<double(std::int64_t)>& term);

// Permutation-invariant sums (value-sorted before pairwise combination).
double sorted_sum(std::vector<double> v);
cx sorted_sum(std::vector<cx> v);

}  // namespace ergolab
