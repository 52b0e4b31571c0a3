#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace kcascade {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/*
 * Rank over Q by fraction-free (Bareiss) elimination.
 *
 * After each pivot step every entry of the trailing block is a minor of the
 * input restricted to the pivot columns chosen so far, so the division by the
 * previous pivot is always exact. Zero columns are skipped, which keeps the
 * minor interpretation intact.
 */
std::size_t exact_rank(IntMatrix m);

/// Convenience overload for small integer row sets.
std::size_t exact_rank(const std::vector<std::vector<int>>& rows);

}  // namespace kcascade
