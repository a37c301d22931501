#include "eulersum/euler_maps.hpp"

#include <algorithm>
#include <functional>

namespace eulersum {

namespace {

void require_letters(const LinComb& u, unsigned mask, const char* what) {
    if ((u.letter_mask() & ~mask) != 0)
        throw std::invalid_argument(std::string(what) + ": unexpected letter in input");
}

}  // namespace

LinComb dist(const LinComb& u) {
    require_letters(u, kMaskS01, "dist");
    LinComb r;
    for (auto& [w, c] : u.t) {
        // e_0 -> 2 e_0 contributes a factor 2 per zero; e_1 branches.
        int zeros = w.weight() - w.depth();
        std::vector<size_t> ones;
        for (size_t i = 0; i < w.a.size(); ++i)
            if (w.a[i] == Letter::One) ones.push_back(i);
        Rat base = c * pow2_rat(zeros);
        // Expand (e_1 + e_{-1}) over all subsets of the e_1 positions.
        const size_t n = ones.size();
        for (size_t bits = 0; bits < (size_t{1} << n); ++bits) {
            Word nw = w;
            for (size_t j = 0; j < n; ++j)
                if (bits & (size_t{1} << j)) nw.a[ones[j]] = Letter::MOne;
            r.add_term(nw, base);
        }
    }
    return r;
}

LinComb varrho(const LinComb& u) {
    require_letters(u, kMaskS01, "varrho");
    static const LinComb r0 = LinComb::monomial(word_of({Letter::Zero})) -
                              LinComb::monomial(word_of({Letter::One}));
    static const LinComb r1 = -LinComb::monomial(word_of({Letter::One}));
    LinComb r;
    for (auto& [w, c] : u.t) {
        LinComb acc = LinComb::one() * c;
        for (Letter l : w.a) acc = concat(acc, l == Letter::Zero ? r0 : r1);
        r += acc;
    }
    return r;
}

LinComb varsigma(const LinComb& u) {
    require_letters(u, kMaskS01, "varsigma");
    LinComb r;
    for (auto& [w, c] : u.t) {
        Word nw;
        nw.a.reserve(w.a.size());
        for (auto it = w.a.rbegin(); it != w.a.rend(); ++it)
            nw.a.push_back(*it == Letter::Zero ? Letter::One : Letter::Zero);
        Rat sgn = (w.a.size() % 2 == 0) ? 1 : -1;
        r.add_term(nw, c * sgn);
    }
    return r;
}

namespace {

Word one_zero_block(int k) {  // e_1 e_0^{k-1}
    Word w;
    w.a.push_back(Letter::One);
    w.a.insert(w.a.end(), static_cast<size_t>(k - 1), Letter::Zero);
    return w;
}

void require_positive(const std::vector<int>& kk, const char* what) {
    for (int k : kk)
        if (k < 1) throw std::invalid_argument(std::string(what) + ": entries must be >= 1");
}

}  // namespace

LinComb theta(const std::vector<int>& kk) {
    require_positive(kk, "theta");
    // Cache on the tuple; the recursion hits suffixes repeatedly.
    static thread_local std::map<std::vector<int>, LinComb> cache;
    auto it = cache.find(kk);
    if (it != cache.end()) return it->second;
    LinComb r;
    if (kk.empty()) {
        r = LinComb::one();
    } else {
        const int d = static_cast<int>(kk.size());
        for (int j = 1; j <= d; ++j) {
            // e_1 e_0^{k_j-1} e_1 e_0^{k_{j-1}-1} ... e_1 e_0^{k_1-1}
            Word head;
            for (int i = j; i >= 1; --i) {
                Word blk = one_zero_block(kk[i - 1]);
                head.a.insert(head.a.end(), blk.a.begin(), blk.a.end());
            }
            std::vector<int> tail(kk.begin() + j, kk.end());
            r -= shuffle(LinComb::monomial(head), theta(tail));
        }
    }
    cache.emplace(kk, r);
    return r;
}

LinComb theta_prime(const std::vector<int>& kk) {
    return dist(reg_shuffle(varsigma(theta(kk))));
}

LinComb theta1(const std::vector<int>& kk) {
    require_positive(kk, "theta1");
    static thread_local std::map<std::vector<int>, LinComb> cache;
    auto it = cache.find(kk);
    if (it != cache.end()) return it->second;
    LinComb r = theta_prime(kk);
    // Every split kk = (kk', {1}^{2m}) with m >= 1 contributes; the prefix
    // may itself end in 1.
    int trailing = 0;
    for (auto rit = kk.rbegin(); rit != kk.rend() && *rit == 1; ++rit) ++trailing;
    for (int m = 1; 2 * m <= trailing; ++m) {
        std::vector<int> prefix(kk.begin(), kk.end() - 2 * m);
        Word blk;  // e_{-1} e_0^{2m-1}
        blk.a.push_back(Letter::MOne);
        blk.a.insert(blk.a.end(), static_cast<size_t>(2 * m - 1), Letter::Zero);
        r += Rat(2) * shuffle(LinComb::monomial(blk), theta_prime(prefix));
    }
    cache.emplace(kk, r);
    return r;
}

LinComb word_star(const std::vector<int>& kk) {
    require_positive(kk, "word_star");
    if (kk.empty()) return LinComb::one();
    static const LinComb e0_minus_e1 = LinComb::monomial(word_of({Letter::Zero})) -
                                       LinComb::monomial(word_of({Letter::One}));
    LinComb r = LinComb::monomial(one_zero_block(kk[0]), -1);
    for (size_t i = 1; i < kk.size(); ++i) {
        r = concat(r, e0_minus_e1);
        r = concat(r, LinComb::monomial(word_pow(Letter::Zero, kk[i] - 1)));
    }
    return r;
}

LinComb wp(const LinComb& u) {
    for (auto& [w, c] : u.t)
        if (!in_C(w))
            throw std::invalid_argument("wp: input not in C: " + w.to_string());
    // varrho(w*(l_1..l_r)) = e_1(e_0-e_1)^{l_1-1} e_0 (e_0-e_1)^{l_2-1} ... ;
    // its unique monomial with the fewest zeros is e_1^{l_1} e_0 e_1^{l_2-1}
    // e_0 ... with sign (-1)^{k-r}, which identifies l.  Eliminate from the
    // fewest-zeros end upward.
    LinComb residual = u;
    LinComb out;
    while (!residual.is_zero()) {
        int minz = -1;
        for (auto& [w, c] : residual.t) {
            int z = w.weight() - w.depth();
            if (minz < 0 || z < minz) minz = z;
        }
        std::vector<std::pair<Word, Rat>> batch;
        for (auto& [w, c] : residual.t)
            if (w.weight() - w.depth() == minz) batch.emplace_back(w, c);
        for (auto& [w, c] : batch) {
            if (w.empty()) {
                out += LinComb::one() * c;
                residual.add_term(w, -c);
                continue;
            }
            // Parse e_1^{a_1} e_0 e_1^{a_2} e_0 ... e_0 e_1^{a_r}; a_1 >= 1.
            std::vector<int> runs_of_ones{0};
            for (Letter l : w.a) {
                if (l == Letter::One)
                    ++runs_of_ones.back();
                else
                    runs_of_ones.push_back(0);
            }
            std::vector<int> ll(runs_of_ones.size());
            ll[0] = runs_of_ones[0];
            for (size_t i = 1; i < runs_of_ones.size(); ++i) ll[i] = runs_of_ones[i] + 1;
            const int k = w.weight(), r = static_cast<int>(ll.size());
            Rat lead = ((k - r) % 2 == 0) ? 1 : -1;
            Rat coeff = c / lead;
            residual -= coeff * varrho(word_star(ll));
            out += coeff * theta1(ll);
        }
    }
    return out;
}

const EulerMaps::SplitData& EulerMaps::split_data(int nz, int nzsq, int nzero) {
    auto key = std::make_tuple(nz, nzsq, nzero);
    auto it = split_cache_.find(key);
    if (it != split_cache_.end()) return it->second;

    SplitData sd;
    // All admissible B' words with the given letter multiplicities.
    {
        std::vector<Letter> cur;
        std::function<void(int, int, int)> rec = [&](int a, int b, int c) {
            if (a == 0 && b == 0 && c == 0) {
                Word w{cur};
                if (is_admissible_B(w)) sd.words.push_back(w);
                return;
            }
            if (a > 0) { cur.push_back(Letter::Zvar); rec(a - 1, b, c); cur.pop_back(); }
            if (b > 0) { cur.push_back(Letter::MZsq); rec(a, b - 1, c); cur.pop_back(); }
            if (c > 0) { cur.push_back(Letter::Zero); rec(a, b, c - 1); cur.pop_back(); }
        };
        rec(nz, nzsq, nzero);
        std::sort(sd.words.begin(), sd.words.end());
    }
    // Pairs (u1, u2): u1 empty or e_z-headed (all e_z letters live in u1),
    // u2 over {0, -z^2} and e_{-z^2}-headed or empty; both B-admissible.
    {
        std::vector<Word> lefts, rights_all;
        std::vector<Letter> cur;
        std::function<void(int, int, int)> recl = [&](int a, int b, int c) {
            if (a == 0 && b == 0 && c == 0) {
                Word w{cur};
                if (w.empty() || (w.a.front() == Letter::Zvar && w.a.back() != Letter::Zvar))
                    lefts.push_back(w);
                return;
            }
            if (a > 0) { cur.push_back(Letter::Zvar); recl(a - 1, b, c); cur.pop_back(); }
            if (b > 0) { cur.push_back(Letter::MZsq); recl(a, b - 1, c); cur.pop_back(); }
            if (c > 0) { cur.push_back(Letter::Zero); recl(a, b, c - 1); cur.pop_back(); }
        };
        for (int b1 = 0; b1 <= nzsq; ++b1)
            for (int c1 = 0; c1 <= nzero; ++c1) {
                lefts.clear();
                recl(nz, b1, c1);
                if (lefts.empty()) continue;
                // right factors with the complementary multidegree
                std::vector<Word> rights;
                std::vector<Letter> cr;
                std::function<void(int, int)> recr = [&](int b, int c) {
                    if (b == 0 && c == 0) {
                        Word w{cr};
                        if (w.empty() || w.a.front() == Letter::MZsq) rights.push_back(w);
                        return;
                    }
                    if (b > 0) { cr.push_back(Letter::MZsq); recr(b - 1, c); cr.pop_back(); }
                    if (c > 0) { cr.push_back(Letter::Zero); recr(b, c - 1); cr.pop_back(); }
                };
                recr(nzsq - b1, nzero - c1);
                for (auto& l : lefts)
                    for (auto& r : rights) sd.pairs.emplace_back(l, r);
            }
        std::sort(sd.pairs.begin(), sd.pairs.end());
    }
    if (sd.words.size() != sd.pairs.size())
        throw std::logic_error("split_B: basis size mismatch at multidegree");

    const size_t n = sd.words.size();
    if (n > 0) {
        std::map<Word, size_t> row_of;
        for (size_t i = 0; i < n; ++i) row_of.emplace(sd.words[i], i);
        IntMat m = make_int_mat(n, n);
        for (size_t j = 0; j < n; ++j) {
            LinComb s = shuffle(sd.pairs[j].first, sd.pairs[j].second);
            for (auto& [w, c] : s.t) {
                auto rit = row_of.find(w);
                if (rit == row_of.end())
                    throw std::logic_error("split_B: shuffle left the admissible span");
                m[rit->second][j] = c.get_num();
            }
        }
        sd.expansion = int_inverse(m);  // column w = expansion of that word
    }
    auto [pos, ok] = split_cache_.emplace(key, std::move(sd));
    (void)ok;
    return pos->second;
}

TensorComb EulerMaps::split_B(const LinComb& u) {
    require_letters(u, letter_bit(Letter::Zero) | letter_bit(Letter::Zvar) |
                           letter_bit(Letter::MZsq),
                    "split_B");
    TensorComb out;
    for (auto& [w, c] : u.t) {
        if (!is_admissible_B(w))
            throw std::invalid_argument("split_B: non-admissible word " + w.to_string());
        int nz = 0, nzsq = 0, nzero = 0;
        for (Letter l : w.a) {
            if (l == Letter::Zvar) ++nz;
            else if (l == Letter::MZsq) ++nzsq;
            else ++nzero;
        }
        const SplitData& sd = split_data(nz, nzsq, nzero);
        size_t row = std::lower_bound(sd.words.begin(), sd.words.end(), w) - sd.words.begin();
        for (size_t j = 0; j < sd.pairs.size(); ++j) {
            const Rat& c2 = sd.expansion.at(j, row);
            if (c2 != 0) out.add_term(sd.pairs[j].first, sd.pairs[j].second, c * c2);
        }
    }
    return out;
}

const LinComb& EulerMaps::reg_z0_word(const Word& w) {
    auto it = reg_z0_cache_.find(w);
    if (it != reg_z0_cache_.end()) return it->second;

    LinComb result;
    bool has_mone = std::find(w.a.begin(), w.a.end(), Letter::MOne) != w.a.end();
    if (!has_mone) {
        TensorComb split = split_B(LinComb::monomial(w));
        for (auto& [lr, c] : split.t) {
            // left: e_z -> e_1, e_0/e_{-z^2} -> e_0, then dist
            Word lw;
            lw.a.reserve(lr.first.a.size());
            for (Letter l : lr.first.a)
                lw.a.push_back(l == Letter::Zvar ? Letter::One : Letter::Zero);
            LinComb left = dist(LinComb::monomial(lw));
            // right: e_{-z^2} -> e_1, e_0 -> e_0, then wp (cached per word)
            Word rw;
            rw.a.reserve(lr.second.a.size());
            for (Letter l : lr.second.a)
                rw.a.push_back(l == Letter::MZsq ? Letter::One : Letter::Zero);
            auto wit = wp_cache_.find(rw);
            if (wit == wp_cache_.end())
                wit = wp_cache_.emplace(rw, wp(LinComb::monomial(rw))).first;
            result += c * shuffle(left, wit->second);
        }
    }
    auto [pos, ok] = reg_z0_cache_.emplace(w, std::move(result));
    (void)ok;
    return pos->second;
}

LinComb EulerMaps::reg_z0(const LinComb& u) {
    require_letters(u, kMaskSB, "reg_z0");
    LinComb r;
    for (auto& [w, c] : u.t) {
        if (!is_admissible_B(w))
            throw std::invalid_argument("reg_z0: non-admissible word " + w.to_string());
        const LinComb& v = reg_z0_word(w);
        for (auto& [x, k] : v.t) r.add_term(x, c * k);
    }
    return r;
}

}  // namespace eulersum
