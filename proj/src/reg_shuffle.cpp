#include "eulersum/reg_shuffle.hpp"

namespace eulersum {

namespace {

int leading_count(const Word& w, Letter l) {
    int n = 0;
    for (Letter x : w.a) {
        if (x != l) break;
        ++n;
    }
    return n;
}

int trailing_count(const Word& w, Letter l) {
    int n = 0;
    for (auto it = w.a.rbegin(); it != w.a.rend() && *it == l; ++it) ++n;
    return n;
}

// One-sided decomposition u = sum_n e_0^n (sh) v_n, v_n with no leading e_0
// (side = left), or the mirror image with trailing e_1 (side = right).
// Triangular recursion on the divergent-letter count: the word e_0^n v is
// the unique monomial of e_0^n (sh) v with n leading zeros, so peeling from
// the largest count down terminates.
std::map<int, LinComb> one_sided_decompose(const LinComb& u, bool left) {
    const Letter div = left ? Letter::Zero : Letter::One;
    std::map<int, LinComb> out;
    // Residual terms grouped by divergent-letter count.
    std::map<int, LinComb> residual;
    for (auto& [w, c] : u.t)
        residual[left ? leading_count(w, div) : trailing_count(w, div)].add_term(w, c);

    while (!residual.empty()) {
        auto it = std::prev(residual.end());
        int n = it->first;
        LinComb batch = std::move(it->second);
        residual.erase(it);
        if (batch.is_zero()) continue;
        if (n == 0) {
            out[0] += batch;
            continue;
        }
        for (auto& [w, c] : batch.t) {
            Word v(std::vector<Letter>(w.a.begin() + (left ? n : 0),
                                       w.a.end() - (left ? 0 : n)));
            out[n].add_term(v, c);
            // Subtract c * (e_div^n (sh) v - w); every remaining monomial has
            // strictly fewer divergent letters on the relevant side.
            LinComb sh = shuffle(word_pow(div, n), v);
            sh.add_term(w, -1);
            for (auto& [x, k] : sh.t) {
                int j = left ? leading_count(x, div) : trailing_count(x, div);
                residual[j].add_term(x, -c * k);
            }
        }
    }
    return out;
}

}  // namespace

LinComb reg_left(const LinComb& u) {
    auto d = one_sided_decompose(u, true);
    auto it = d.find(0);
    return it == d.end() ? LinComb::zero() : it->second;
}

LinComb reg_right(const LinComb& u) {
    auto d = one_sided_decompose(u, false);
    auto it = d.find(0);
    return it == d.end() ? LinComb::zero() : it->second;
}

LinComb reg_shuffle(const LinComb& u) { return reg_right(reg_left(u)); }

const LinComb& ShuffleDecomposition::part(int n, int m) const {
    static const LinComb kZero;
    auto it = parts.find({n, m});
    return it == parts.end() ? kZero : it->second;
}

LinComb ShuffleDecomposition::reexpand() const {
    LinComb r;
    for (auto& [nm, u] : parts) {
        LinComb s = shuffle(LinComb::monomial(word_pow(Letter::Zero, nm.first)),
                            shuffle(LinComb::monomial(word_pow(Letter::One, nm.second)), u));
        r += s;
    }
    return r;
}

ShuffleDecomposition shuffle_decompose(const LinComb& u) {
    if ((u.letter_mask() & ~kMaskS3) != 0)
        throw std::invalid_argument("shuffle_decompose: word not over {0,1,-1}");
    ShuffleDecomposition d;
    for (auto& [n, v] : one_sided_decompose(u, true))
        for (auto& [m, w] : one_sided_decompose(v, false))
            if (!w.is_zero()) d.parts[{n, m}] += w;
    return d;
}

}  // namespace eulersum
