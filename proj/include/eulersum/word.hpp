#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersum {

// A letter names the pole a of the 1-form dt/(t-a).  The two alphabets in
// use are {0, 1, -1} and {0, -1, z, -z^2}; 0 and -1 are shared.
enum class Letter : std::uint8_t {
    Zero = 0,   // a = 0
    One = 1,    // a = 1
    MOne = 2,   // a = -1
    Zvar = 3,   // a = z
    MZsq = 4,   // a = -z^2
};

constexpr int kNumLetters = 5;

std::string letter_token(Letter l);
Letter letter_from_token(const std::string& tok);

// Letter masks, used to reject words that mix the two alphabets.
inline unsigned letter_bit(Letter l) { return 1u << static_cast<unsigned>(l); }
constexpr unsigned kMaskS01 = 0b00011;  // {0, 1}
constexpr unsigned kMaskS3 = 0b00111;   // {0, 1, -1}
constexpr unsigned kMaskSB = 0b11101;   // {0, -1, z, -z^2}

inline bool mask_fits_some_alphabet(unsigned mask) {
    return (mask & ~kMaskS3) == 0 || (mask & ~kMaskSB) == 0;
}

struct Word {
    std::vector<Letter> a;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : a(std::move(ls)) {}

    int weight() const { return static_cast<int>(a.size()); }
    int depth() const {
        int d = 0;
        for (Letter l : a)
            if (l != Letter::Zero) ++d;
        return d;
    }
    bool empty() const { return a.empty(); }

    unsigned letter_mask() const {
        unsigned m = 0;
        for (Letter l : a) m |= letter_bit(l);
        return m;
    }

    // Run-length view: (letter, exponent) pairs, losslessly.
    std::vector<std::pair<Letter, int>> runs() const;
    static Word from_runs(const std::vector<std::pair<Letter, int>>& rs);

    Word concat(const Word& other) const {
        Word r = *this;
        r.a.insert(r.a.end(), other.a.begin(), other.a.end());
        return r;
    }

    // Deterministic total order: by length, then lexicographic on letters.
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        if (x.a.size() != y.a.size()) return x.a.size() <=> y.a.size();
        for (size_t i = 0; i < x.a.size(); ++i)
            if (x.a[i] != y.a[i]) return x.a[i] <=> y.a[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word& x, const Word& y) { return x.a == y.a; }

    // Comma-separated letter tokens, e.g. "-1,0,z"; empty word is "".
    std::string to_string() const;
    static Word parse(const std::string& s);
};

// Convenience constructors.
Word word_of(std::initializer_list<Letter> ls);
inline Word word_pow(Letter l, int n) { return Word(std::vector<Letter>(n, l)); }

// Membership constraint for the admissible subspaces: per-monomial forbidden
// first/last letters (first != 0, last != 1 for convergent words over
// {0,1,-1}; first != 0, last != z on the z-side).
struct Admissibility {
    std::set<Letter> forbidden_first;
    std::set<Letter> forbidden_last;

    bool word_ok(const Word& w) const {
        if (w.empty()) return true;
        if (forbidden_first.count(w.a.front())) return false;
        if (forbidden_last.count(w.a.back())) return false;
        return true;
    }

    static const Admissibility& A0();  // first != 0, last != 1
    static const Admissibility& B();   // first != 0, last != z
};

inline bool is_admissible_A0(const Word& w) { return Admissibility::A0().word_ok(w); }
inline bool is_admissible_B(const Word& w) { return Admissibility::B().word_ok(w); }

// C = Z + e_1 Z<e_0,e_1>: empty, or a {0,1}-word starting with e_1.
inline bool in_C(const Word& w) {
    if ((w.letter_mask() & ~kMaskS01) != 0) return false;
    return w.empty() || w.a.front() == Letter::One;
}

}  // namespace eulersum
