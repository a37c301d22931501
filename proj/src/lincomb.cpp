#include "eulersum/lincomb.hpp"

#include <sstream>

namespace eulersum {

std::string LinComb::to_string() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c) << "*[" << w.to_string() << "]";
    }
    return os.str();
}

namespace {

void check_compatible(unsigned mask, const char* what) {
    if (!mask_fits_some_alphabet(mask))
        throw std::invalid_argument(std::string(what) + ": operands mix alphabets");
}

// Dynamic program over suffix pairs; coefficients count interleavings.
LinComb shuffle_words(const Word& u, const Word& v) {
    const size_t n = u.a.size(), m = v.a.size();
    // f[i][j] = shuffle of u[i:], v[j:]
    std::vector<std::vector<LinComb>> f(n + 1, std::vector<LinComb>(m + 1));
    f[n][m] = LinComb::one();
    for (size_t i = n + 1; i-- > 0;) {
        for (size_t j = m + 1; j-- > 0;) {
            if (i == n && j == m) continue;
            LinComb r;
            if (i < n) {
                for (auto& [w, c] : f[i + 1][j].t) {
                    Word nw;
                    nw.a.reserve(w.a.size() + 1);
                    nw.a.push_back(u.a[i]);
                    nw.a.insert(nw.a.end(), w.a.begin(), w.a.end());
                    r.add_term(nw, c);
                }
            }
            if (j < m) {
                for (auto& [w, c] : f[i][j + 1].t) {
                    Word nw;
                    nw.a.reserve(w.a.size() + 1);
                    nw.a.push_back(v.a[j]);
                    nw.a.insert(nw.a.end(), w.a.begin(), w.a.end());
                    r.add_term(nw, c);
                }
            }
            f[i][j] = std::move(r);
        }
    }
    return f[0][0];
}

}  // namespace

LinComb shuffle(const Word& u, const Word& v) {
    check_compatible(u.letter_mask() | v.letter_mask(), "shuffle");
    if (u.empty()) return LinComb::monomial(v);
    if (v.empty()) return LinComb::monomial(u);
    return shuffle_words(u, v);
}

LinComb shuffle(const LinComb& u, const LinComb& v) {
    check_compatible(u.letter_mask() | v.letter_mask(), "shuffle");
    LinComb r;
    for (auto& [wu, cu] : u.t)
        for (auto& [wv, cv] : v.t) {
            LinComb s = shuffle(wu, wv);
            Rat c = cu * cv;
            for (auto& [w, k] : s.t) r.add_term(w, k * c);
        }
    return r;
}

LinComb concat(const LinComb& u, const LinComb& v) {
    check_compatible(u.letter_mask() | v.letter_mask(), "concat");
    LinComb r;
    for (auto& [wu, cu] : u.t)
        for (auto& [wv, cv] : v.t) r.add_term(wu.concat(wv), cu * cv);
    return r;
}

LinComb shuffle_pow(const LinComb& u, int n) {
    LinComb r = LinComb::one();
    for (int i = 0; i < n; ++i) r = shuffle(r, u);
    return r;
}

bool filtration_check(const LinComb& u, int k, int d) {
    for (auto& [w, c] : u.t)
        if (w.weight() != k || w.depth() > d) return false;
    return true;
}

bool admissible(const LinComb& u, const Admissibility& adm) {
    for (auto& [w, c] : u.t)
        if (!adm.word_ok(w)) return false;
    return true;
}

}  // namespace eulersum
