#include "eulersum/ratmat.hpp"

#include <stdexcept>

namespace eulersum {

RatMat RatMat::operator*(const RatMat& o) const {
    if (ncols != o.nrows) throw std::invalid_argument("matmul shape");
    RatMat r(nrows, o.ncols);
    for (size_t i = 0; i < nrows; ++i)
        for (size_t k = 0; k < ncols; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.ncols; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

RatMat RatMat::operator-() const {
    RatMat r = *this;
    for (auto& v : r.e) v = -v;
    return r;
}

IntMat make_int_mat(size_t r, size_t c) {
    return IntMat(r, std::vector<Int>(c));
}

namespace {

// Eliminates [A | B] in place.  Returns det(A) and leaves an upper
// triangular A-part; colperm records the column permutation from full
// pivoting.  Pivots are chosen nonzero with minimal bit size to curb
// coefficient growth.
struct Elimination {
    IntMat m;          // n x (n + w) augmented
    size_t n, w;
    std::vector<size_t> colperm;
    Int det;
};

Elimination eliminate(const IntMat& a, const IntMat& b) {
    const size_t n = a.size();
    const size_t w = b.empty() ? 0 : b[0].size();
    if (b.size() != n && w != 0) throw std::invalid_argument("solve shape");
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("square matrix required");

    Elimination el;
    el.n = n;
    el.w = w;
    el.m = make_int_mat(n, n + w);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) el.m[i][j] = a[i][j];
        for (size_t j = 0; j < w; ++j) el.m[i][n + j] = b[i][j];
    }
    el.colperm.resize(n);
    for (size_t j = 0; j < n; ++j) el.colperm[j] = j;

    int sign = 1;
    Int prev = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pr = n, pc = n;
        size_t best_bits = ~size_t{0};
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < n; ++j) {
                if (el.m[i][j] == 0) continue;
                size_t bits = mpz_sizeinbase(el.m[i][j].get_mpz_t(), 2);
                if (bits < best_bits) {
                    best_bits = bits;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == n) throw std::runtime_error("singular matrix in exact solve");
        if (pr != k) {
            std::swap(el.m[pr], el.m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (size_t i = 0; i < n; ++i) std::swap(el.m[i][pc], el.m[i][k]);
            std::swap(el.colperm[pc], el.colperm[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n + w; ++j) {
                Int t = el.m[k][k] * el.m[i][j] - el.m[i][k] * el.m[k][j];
                mpz_divexact(el.m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            el.m[i][k] = 0;
        }
        prev = el.m[k][k];
    }
    el.det = sign > 0 ? prev : -prev;
    return el;
}

}  // namespace

SolveResult bareiss_solve(const IntMat& a, const IntMat& b) {
    Elimination el = eliminate(a, b);
    const size_t n = el.n, w = el.w;
    // Back substitution in rationals on the permuted triangular system.
    RatMat xp(n, w);
    for (size_t col = 0; col < w; ++col) {
        for (size_t i = n; i-- > 0;) {
            Rat s(el.m[i][n + col]);
            for (size_t j = i + 1; j < n; ++j) s -= Rat(el.m[i][j]) * xp.at(j, col);
            s /= Rat(el.m[i][i]);
            s.canonicalize();
            xp.at(i, col) = s;
        }
    }
    SolveResult res;
    res.det = el.det;
    res.x = RatMat(n, w);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < w; ++j) {
            res.x.at(el.colperm[i], j) = xp.at(i, j);
            res.x.at(el.colperm[i], j).canonicalize();
        }
    return res;
}

Int bareiss_det(const IntMat& a) {
    if (a.empty()) return 1;
    return eliminate(a, IntMat(a.size())).det;
}

RatMat int_inverse(const IntMat& a) {
    const size_t n = a.size();
    IntMat id = make_int_mat(n, n);
    for (size_t i = 0; i < n; ++i) id[i][i] = 1;
    return bareiss_solve(a, id).x;
}

RatMat rat_solve(const IntMat& a, const RatMat& b) {
    const size_t n = a.size();
    if (n == 0) return RatMat(0, b.ncols);
    // Clear denominators column-wise on the right-hand side.
    IntMat bi = make_int_mat(n, b.ncols);
    std::vector<Int> scale(b.ncols, 1);
    for (size_t j = 0; j < b.ncols; ++j) {
        Int l = 1;
        for (size_t i = 0; i < n; ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.at(i, j).get_den().get_mpz_t());
        scale[j] = l;
        for (size_t i = 0; i < n; ++i) {
            Rat v = b.at(i, j) * Rat(l);
            v.canonicalize();
            bi[i][j] = v.get_num();
        }
    }
    RatMat x = bareiss_solve(a, bi).x;
    for (size_t j = 0; j < b.ncols; ++j)
        for (size_t i = 0; i < n; ++i) {
            x.at(i, j) /= Rat(scale[j]);
            x.at(i, j).canonicalize();
        }
    return x;
}

}  // namespace eulersum
