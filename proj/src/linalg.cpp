#include "kcascade/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace kcascade {

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::size_t exact_rank(IntMatrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    mpz_class prev = 1;
    std::size_t rank = 0;

    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, rank);

        const mpz_class& p = m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const mpz_class lead = m(i, col);
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class v = p * m(i, j) - lead * m(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, col) = 0;
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

std::size_t exact_rank(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("exact_rank: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return exact_rank(std::move(m));
}

}  // namespace kcascade
