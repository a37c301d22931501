#pragma once

#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

// Dense exact matrices.  IntMat is the workhorse (the relation coefficients
// are integers); RatMat carries solutions and inverses.
using IntMat = std::vector<std::vector<Int>>;

struct RatMat {
    size_t nrows = 0, ncols = 0;
    std::vector<Rat> e;

    RatMat() = default;
    RatMat(size_t r, size_t c) : nrows(r), ncols(c), e(r * c) {}

    Rat& at(size_t i, size_t j) { return e[i * ncols + j]; }
    const Rat& at(size_t i, size_t j) const { return e[i * ncols + j]; }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.nrows == b.nrows && a.ncols == b.ncols && a.e == b.e;
    }

    RatMat operator*(const RatMat& o) const;
    RatMat operator-() const;
};

IntMat make_int_mat(size_t r, size_t c);

// Fraction-free Gaussian elimination (Bareiss) with full pivoting.
// Solves A X = B exactly and reports det(A).  Throws on a singular A.
struct SolveResult {
    Int det;
    RatMat x;
};
SolveResult bareiss_solve(const IntMat& a, const IntMat& b);

Int bareiss_det(const IntMat& a);
RatMat int_inverse(const IntMat& a);  // A^{-1} as rationals

// Rational right-hand sides, same elimination after clearing denominators.
RatMat rat_solve(const IntMat& a, const RatMat& b);

}  // namespace eulersum
