#ifndef FOLJET_LINALG_HPP
#define FOLJET_LINALG_HPP

#include <vector>

#include "rational.hpp"

namespace foljet {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place row reduction; returns the pivot columns.
inline std::vector<int> rref(RationalMatrix& A) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        Rational inv = A[r][c];
        for (std::size_t k = c; k < cols; ++k) A[r][k] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int matrix_rank(RationalMatrix A) { return static_cast<int>(rref(A).size()); }

/// Basis of the right nullspace of A (each vector has length cols).
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix A) {
    if (A.empty()) return {};
    std::size_t cols = A[0].size();
    auto pivots = rref(A);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[freec] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            std::size_t pc = static_cast<std::size_t>(pivots[pi]);
            v[pc] = -A[pi][freec];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace foljet

#endif
