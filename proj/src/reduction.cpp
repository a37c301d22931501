#include "eulersum/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace eulersum {

const std::map<Index, Int>& RelationTable::row(const Index& idx) {
    auto it = rows_.find(idx);
    if (it == rows_.end()) {
        if (idx.weight() != k_) throw std::invalid_argument("relation row: weight mismatch");
        it = rows_.emplace(idx, cf_.relation_coefficients(idx)).first;
    }
    return it->second;
}

void RelationTable::ensure_rows(const std::vector<Index>& idxs, int threads) {
    std::vector<Index> todo;
    for (auto& idx : idxs)
        if (!rows_.count(idx)) todo.push_back(idx);
    if (todo.empty()) return;
    if (threads <= 1 || todo.size() < 4) {
        for (auto& idx : todo) row(idx);
        return;
    }
    const int nt = std::min<int>(threads, static_cast<int>(todo.size()));
    std::vector<std::map<Index, std::map<Index, Int>>> partial(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            Confluence local;  // per-thread caches
            for (size_t i = t; i < todo.size(); i += nt)
                partial[t].emplace(todo[i], local.relation_coefficients(todo[i]));
        });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial)
        for (auto& [idx, r] : p) rows_.emplace(idx, std::move(r));
}

Assembled assemble(int k, int d, RelationTable& table, int threads) {
    if (table.weight() != k) throw std::invalid_argument("assemble: table weight mismatch");
    Assembled out;
    out.k = k;
    out.d = d;
    out.nonbasis = enumerate_indices(k, d, IndexClass::NonD);
    out.basis = enumerate_indices(k, d, IndexClass::D);
    table.ensure_rows(out.nonbasis, threads);

    std::map<Index, size_t> col_sq, col_b;
    for (size_t j = 0; j < out.nonbasis.size(); ++j) col_sq.emplace(out.nonbasis[j], j);
    for (size_t j = 0; j < out.basis.size(); ++j) col_b.emplace(out.basis[j], j);

    const size_t n = out.nonbasis.size();
    out.square = make_int_mat(n, n);
    out.basis_block = make_int_mat(n, out.basis.size());
    for (size_t i = 0; i < n; ++i) {
        for (auto& [col, c] : table.row(out.nonbasis[i])) {
            if (auto it = col_sq.find(col); it != col_sq.end())
                out.square[i][it->second] = c;
            else if (auto jt = col_b.find(col); jt != col_b.end())
                out.basis_block[i][jt->second] = c;
            else
                throw std::logic_error("relation hits an index outside the ambient set: " +
                                       col.to_string());
        }
    }
    // mod-2 structure: odd diagonal, even above the diagonal.
    for (size_t i = 0; i < n; ++i) {
        if (mpz_even_p(out.square[i][i].get_mpz_t())) {
            std::ostringstream os;
            os << "diagonal entry even at " << out.nonbasis[i].to_string();
            out.triangularity_violations.push_back(os.str());
        }
        for (size_t j = i + 1; j < n; ++j)
            if (mpz_odd_p(out.square[i][j].get_mpz_t())) {
                std::ostringstream os;
                os << "odd entry above diagonal at (" << out.nonbasis[i].to_string() << ", "
                   << out.nonbasis[j].to_string() << ")";
                out.triangularity_violations.push_back(os.str());
            }
    }
    return out;
}

const Rat& AlphaMatrix::entry(const Index& row, const Index& col) const {
    auto ri = std::find(nonbasis.begin(), nonbasis.end(), row);
    auto ci = std::find(basis.begin(), basis.end(), col);
    if (ri == nonbasis.end() || ci == basis.end())
        throw std::invalid_argument("alpha entry out of range");
    return alpha.at(ri - nonbasis.begin(), ci - basis.begin());
}

AlphaMatrix solve_alpha(const Assembled& a) {
    AlphaMatrix out;
    out.k = a.k;
    out.d = a.d;
    out.nonbasis = a.nonbasis;
    out.basis = a.basis;
    const size_t n = a.nonbasis.size();
    if (n == 0) {
        out.alpha = RatMat(0, a.basis.size());
        out.det_square = 1;
        out.denominator_lcm = 1;
        return out;
    }
    IntMat rhs = make_int_mat(n, a.basis.size());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < a.basis.size(); ++j) rhs[i][j] = -a.basis_block[i][j];
    SolveResult sol = bareiss_solve(a.square, rhs);
    out.alpha = std::move(sol.x);
    out.det_square = sol.det;
    auto rep = denominator_report(out.alpha);
    out.denominator_lcm = rep.first;
    out.lcm_factorization = std::move(rep.second);
    for (const Rat& v : out.alpha.e)
        if (!has_odd_denominator(v)) out.all_denominators_odd = false;
    return out;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> f;
    if (n < 0) {
        f.emplace_back(Int(-1), 1);
        n = -n;
    }
    if (n <= 1) return f;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) f.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= n && p < 2000000; p += 2) strip(p);
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::pair<Int, std::vector<std::pair<Int, int>>> denominator_report(const RatMat& alpha) {
    Int l = 1;
    for (const Rat& v : alpha.e)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    return {l, factorize(l)};
}

Rat project_c_xi(const std::map<Index, Rat>& coeffs, int weight, const AlphaMatrix& alpha) {
    if (weight <= 0) {
        if (!coeffs.empty()) throw std::invalid_argument("project_c_xi: weight must be positive");
        return 0;
    }
    const Index target(std::vector<int>{-weight});
    Rat c = 0;
    const Rat factor = pow2_rat(1 - weight) - 1;  // 2^{1-k} - 1
    for (auto& [idx, q] : coeffs) {
        if (q == 0) continue;
        if (idx.weight() != weight)
            throw std::invalid_argument("project_c_xi: index of wrong weight: " + idx.to_string());
        Rat a;
        if (idx.in_D())
            a = (idx == target) ? 1 : 0;
        else
            a = alpha.entry(idx, target);
        if (a == 0) continue;
        // (-2)^{1-depth}
        Rat sgn = (1 - idx.depth()) % 2 == 0 ? 1 : -1;
        c += sgn * pow2_rat(1 - idx.depth()) * factor * q * a;
    }
    c.canonicalize();
    return c;
}

}  // namespace eulersum
