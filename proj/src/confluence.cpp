#include "eulersum/confluence.hpp"

#include <array>

namespace eulersum {

namespace {

// Letter value as a polynomial p0 + p1 z + p2 z^2.
std::array<int, 3> letter_poly(Letter l) {
    switch (l) {
        case Letter::Zero: return {0, 0, 0};
        case Letter::One: return {1, 0, 0};
        case Letter::MOne: return {-1, 0, 0};
        case Letter::Zvar: return {0, 1, 0};
        case Letter::MZsq: return {0, 0, -1};
    }
    throw std::logic_error("bad letter");
}

void check_c(int c) {
    if (c != 0 && c != 1 && c != -1)
        throw std::invalid_argument("derivative point must be 0, 1 or -1");
}

}  // namespace

int ord_at(Letter a, Letter b, int c) {
    auto pa = letter_poly(a), pb = letter_poly(b);
    int p0 = pa[0] - pb[0], p1 = pa[1] - pb[1], p2 = pa[2] - pb[2];
    if (p0 == 0 && p1 == 0 && p2 == 0) return 0;  // ord(0) := 0
    if (p0 + p1 * c + p2 * c * c != 0) return 0;
    if (p1 + 2 * p2 * c != 0) return 1;
    return 2;  // degree <= 2 and double root
}

LinComb del_c(const LinComb& u, int c) {
    check_c(c);
    LinComb r;
    for (auto& [w, coeff] : u.t) {
        if (!is_admissible_B(w))
            throw std::invalid_argument("del_c: non-admissible word " + w.to_string());
        auto rs = w.runs();
        const int nr = static_cast<int>(rs.size());
        for (int i = 0; i < nr; ++i) {
            Letter prev = i > 0 ? rs[i - 1].first : Letter::Zero;
            Letter next = i + 1 < nr ? rs[i + 1].first : Letter::Zvar;
            int o = ord_at(rs[i].first, next, c) - ord_at(rs[i].first, prev, c);
            if (o == 0) continue;
            auto rs2 = rs;
            --rs2[i].second;
            r.add_term(Word::from_runs(rs2), coeff * o);
        }
    }
    return r;
}

namespace {

// Letter-wise form shared by the diagnostic variants.  mode 0: plain
// (equals del_c), 1: zero-deletions restricted to zero letters, 2: same
// with orders reduced mod 2.
LinComb del_letterwise(const LinComb& u, int c, int mode) {
    check_c(c);
    LinComb r;
    for (auto& [w, coeff] : u.t) {
        const int k = w.weight();
        for (int i = 0; i < k; ++i) {
            if (mode >= 1 && c == 0 && w.a[i] != Letter::Zero) continue;
            Letter cur = w.a[i];
            Letter before = i > 0 ? w.a[i - 1] : Letter::Zero;
            Letter after = i + 1 < k ? w.a[i + 1] : Letter::Zvar;
            int o = 0;
            {  // p = +1 and p = -1 neighbor terms
                Letter cl = (c == 0) ? Letter::Zero : (c == 1 ? Letter::One : Letter::MOne);
                int op = ord_at(after, cur, (c));
                int om = ord_at(before, cur, (c));
                (void)cl;
                if (mode == 2) {
                    op %= 2;
                    om %= 2;
                }
                o = op - om;
            }
            if (o == 0) continue;
            Word nw;
            nw.a.reserve(k - 1);
            for (int j = 0; j < k; ++j)
                if (j != i) nw.a.push_back(w.a[j]);
            r.add_term(nw, coeff * o);
        }
    }
    return r;
}

}  // namespace

LinComb del_bar_c(const LinComb& u, int c) { return del_letterwise(u, c, 1); }
LinComb del_barbar_c(const LinComb& u, int c) { return del_letterwise(u, c, 2); }

LinComb subst_z1(const LinComb& u) {
    return u.map_letters([](Letter l) {
        switch (l) {
            case Letter::Zvar: return Letter::One;
            case Letter::MZsq: return Letter::MOne;
            default: return l;
        }
    });
}

LinComb subst_1z(const LinComb& u) {
    if ((u.letter_mask() & ~kMaskS3) != 0)
        throw std::invalid_argument("subst_1z: input not over {0,1,-1}");
    if (!admissible(u, Admissibility::A0()))
        throw std::invalid_argument("subst_1z: non-admissible input");
    return u.map_letters([](Letter l) { return l == Letter::One ? Letter::Zvar : l; });
}

const LinComb& Confluence::reg_shuffle_cached(const Word& w) {
    auto it = regsh_memo_.find(w);
    if (it == regsh_memo_.end())
        it = regsh_memo_.emplace(w, reg_shuffle(LinComb::monomial(w))).first;
    return it->second;
}

// Full chain sum for a single word: sum over derivative chains
// (c_1,...,c_l) of reg_z0(d_{c_1}...d_{c_l} w) (x) e_{c_1}...e_{c_l}.
// Distinct chains reconverge to the same intermediate words, so the
// recursion is keyed by the word: the innermost derivative letter is
// appended at the right end of the chain factor.
const TensorComb& Confluence::chain_expand(const Word& w) {
    auto it = chain_memo_.find(w);
    if (it != chain_memo_.end()) return it->second;

    TensorComb r;
    for (auto& [x, c] : em_.reg_z0_word(w).t) r.add_term(x, Word{}, c);
    for (int c : {0, 1, -1}) {
        LinComb dw = del_c(LinComb::monomial(w), c);
        if (dw.is_zero()) continue;
        Letter cl = c == 0 ? Letter::Zero : (c == 1 ? Letter::One : Letter::MOne);
        for (auto& [v, dc] : dw.t) {
            const TensorComb& sub = chain_expand(v);
            for (auto& [lr, sc] : sub.t) {
                Word chain = lr.second;
                chain.a.push_back(cl);
                r.add_term(lr.first, chain, dc * sc);
            }
        }
    }
    auto [pos, ok] = chain_memo_.emplace(w, std::move(r));
    (void)ok;
    return pos->second;
}

TensorComb Confluence::phi_tensor(const LinComb& u) {
    TensorComb r;
    for (auto& [w, c] : u.t) {
        const TensorComb& t = chain_expand(w);
        for (auto& [lr, sc] : t.t) r.add_term(lr.first, lr.second, c * sc);
    }
    return r;
}

std::vector<ChainTerm> Confluence::phi_tensor_terms(const LinComb& u) {
    TensorComb t = phi_tensor(u);
    // Group by chain word.
    std::map<Word, LinComb> by_chain;
    for (auto& [lr, c] : t.t) by_chain[lr.second].add_term(lr.first, c);
    std::vector<ChainTerm> out;
    out.reserve(by_chain.size());
    for (auto& [chain, left] : by_chain) out.push_back(ChainTerm{std::move(left), chain});
    return out;
}

LinComb Confluence::phi(const LinComb& u) {
    TensorComb t = phi_tensor(u);
    std::map<Word, LinComb> by_chain;
    for (auto& [lr, c] : t.t) by_chain[lr.second].add_term(lr.first, c);
    LinComb r;
    for (auto& [chain, left] : by_chain) {
        const LinComb& reg = reg_shuffle_cached(chain);
        if (reg.is_zero()) continue;
        r += shuffle(left, reg);
    }
    return r;
}

LinComb Confluence::relation(const LinComb& u) { return subst_z1(u) - phi(u); }

LinComb Confluence::f_index(const Index& idx) {
    if (idx.in_D()) throw std::invalid_argument("f_index: index lies in the basis class");
    const int d = idx.depth();
    if (!idx.in_Y()) {
        return subst_1z(index_to_word(idx, /*modified=*/true));
    }
    std::vector<int> l(d);
    for (int i = 0; i < d; ++i) l[i] = idx.k[i] < 0 ? -idx.k[i] : idx.k[i];
    // j_max: largest 2 <= j <= d with l_j even; i: least i < j_max such that
    // l_{i+1} = ... = l_{j_max - 1} = 1.
    int jmax = -1;
    for (int j = 2; j <= d; ++j)
        if (l[j - 1] % 2 == 0) jmax = j;
    if (jmax < 0) throw std::logic_error("f_index: Y-index without even entry is in D");
    int isplit = jmax - 1;
    for (int i = 0; i < jmax; ++i) {
        bool ones = true;
        for (int t = i + 1; t <= jmax - 1; ++t)
            if (l[t - 1] != 1) { ones = false; break; }
        if (ones) { isplit = i; break; }
    }
    Word w;
    for (int j = 1; j <= d; ++j) {
        w.a.push_back(j <= isplit ? Letter::MOne : Letter::MZsq);
        w.a.insert(w.a.end(), static_cast<size_t>(l[j - 1] - 1), Letter::Zero);
    }
    return LinComb::monomial(w, pow2_rat(d - 1));
}

const LinComb& Confluence::relation_for(const Index& idx) {
    auto it = relation_memo_.find(idx);
    if (it == relation_memo_.end())
        it = relation_memo_.emplace(idx, relation(f_index(idx))).first;
    return it->second;
}

std::map<Index, Int> Confluence::relation_coefficients(const Index& idx) {
    const LinComb& rel = relation_for(idx);
    std::map<Index, Int> out;
    for (auto& [w, c] : rel.t) {
        Index col = word_to_index(w);
        Rat v = c / pow2_rat(col.depth());
        v.canonicalize();
        if (!is_integer(v))
            throw std::logic_error("relation coefficient not an integer at " + col.to_string());
        if (v != 0) out.emplace(std::move(col), v.get_num());
    }
    return out;
}

void Confluence::clear_caches() {
    chain_memo_.clear();
    regsh_memo_.clear();
    relation_memo_.clear();
}

}  // namespace eulersum
