#pragma once

#include <map>

#include "eulersum/rational.hpp"
#include "eulersum/word.hpp"

namespace eulersum {

// Finite formal sum of words with exact rational coefficients.  Zero
// coefficients are never stored; iteration order is the deterministic word
// order, so serialized output is reproducible bit for bit.
struct LinComb {
    std::map<Word, Rat> t;

    LinComb() = default;
    static LinComb zero() { return LinComb(); }
    static LinComb one() { return monomial(Word{}, 1); }
    static LinComb monomial(const Word& w, const Rat& c = 1) {
        LinComb u;
        if (c != 0) u.t.emplace(w, c);
        return u;
    }

    bool is_zero() const { return t.empty(); }
    size_t size() const { return t.size(); }

    Rat coeff(const Word& w) const {
        auto it = t.find(w);
        return it == t.end() ? Rat(0) : it->second;
    }

    void add_term(const Word& w, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = t.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (auto& [w, c] : o.t) add_term(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (auto& [w, c] : o.t) add_term(w, -c);
        return *this;
    }
    LinComb& operator*=(const Rat& s) {
        if (s == 0) { t.clear(); return *this; }
        for (auto& [w, c] : t) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(LinComb a, const Rat& s) { a *= s; return a; }
    friend LinComb operator*(const Rat& s, LinComb a) { a *= s; return a; }
    friend LinComb operator-(LinComb a) { a *= Rat(-1); return a; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.t == b.t; }

    unsigned letter_mask() const {
        unsigned m = 0;
        for (auto& [w, c] : t) m |= w.letter_mask();
        return m;
    }

    // Map each letter, monomial by monomial (f must be a plain letter map).
    template <typename F>
    LinComb map_letters(F&& f) const {
        LinComb r;
        for (auto& [w, c] : t) {
            Word nw;
            nw.a.reserve(w.a.size());
            for (Letter l : w.a) nw.a.push_back(f(l));
            r.add_term(nw, c);
        }
        return r;
    }

    std::string to_string() const;  // human-readable, for diagnostics
};

// Shuffle product of two single words (all order-preserving interleavings).
LinComb shuffle(const Word& u, const Word& v);
// Bilinear extensions.  Both reject operand pairs whose letters do not fit
// a common alphabet.
LinComb shuffle(const LinComb& u, const LinComb& v);
LinComb concat(const LinComb& u, const LinComb& v);

LinComb shuffle_pow(const LinComb& u, int n);

// True iff every monomial has weight exactly k and depth <= d.
bool filtration_check(const LinComb& u, int k, int d);

// True iff every monomial passes the admissibility constraint.
bool admissible(const LinComb& u, const Admissibility& adm);

}  // namespace eulersum
