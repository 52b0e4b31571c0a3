#pragma once

// Independent reference computations used by the unit tests.

#include "kcascade/rootsys.hpp"

#include <gmpxx.h>

#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Coeffs = std::vector<int>;

// Orbit of the simple roots under the simple reflections
// s_i(b) = b - <b, alpha_i^vee> alpha_i.
inline std::set<Coeffs> reflection_closure(const kcascade::RootSystem& rs)
{
    const int l = rs.rank();
    std::set<Coeffs> seen;
    std::vector<Coeffs> todo;
    for (int i = 0; i < l; ++i) {
        Coeffs c(l, 0);
        c[i] = 1;
        todo.push_back(c);
    }
    while (!todo.empty()) {
        Coeffs b = todo.back();
        todo.pop_back();
        if (!seen.insert(b).second) continue;
        for (int i = 0; i < l; ++i) {
            int pairing = 0;
            for (int j = 0; j < l; ++j) pairing += b[j] * rs.cartan(j, i);
            Coeffs r = b;
            r[i] -= pairing;
            if (!seen.count(r)) todo.push_back(r);
        }
    }
    return seen;
}

// Plain Gaussian elimination over Q.
inline int rational_rank(std::vector<std::vector<mpq_class>> m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int rational_rank(const std::vector<std::vector<int>>& rows)
{
    std::vector<std::vector<mpq_class>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return rational_rank(std::move(m));
}

inline Coeffs simple(int rank, std::initializer_list<std::pair<int, int>> one_based_terms)
{
    Coeffs c(rank, 0);
    for (auto [i, m] : one_based_terms) c[i - 1] = m;
    return c;
}

// alpha_a + ... + alpha_b, 1-based inclusive.
inline Coeffs interval(int rank, int a, int b)
{
    Coeffs c(rank, 0);
    for (int i = a; i <= b; ++i) c[i - 1] = 1;
    return c;
}

}  // namespace oracle
