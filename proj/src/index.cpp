#include "eulersum/index.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eulersum {

Index::Index(std::vector<int> entries) : k(std::move(entries)) {
    for (int e : k)
        if (e == 0) throw std::invalid_argument("index entry 0");
    if (!k.empty() && k.back() == 1)
        throw std::invalid_argument("index not admissible (last entry 1)");
}

int Index::weight() const {
    int w = 0;
    for (int e : k) w += e < 0 ? -e : e;
    return w;
}

bool Index::in_Y() const {
    if (k.empty()) return true;  // vacuous conditions; weight 0 is spanned by 1
    for (size_t i = 0; i + 1 < k.size(); ++i)
        if (k[i] <= 0) return false;
    return k.back() < 0;
}

bool Index::in_D() const {
    if (!in_Y()) return false;
    for (size_t i = 1; i < k.size(); ++i)
        if (k[i] % 2 == 0) return false;
    return true;
}

std::string Index::to_string() const {
    std::string s;
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k[i]);
    }
    return s;
}

Index Index::parse(const std::string& s) {
    std::vector<int> es;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("bad index entry: " + tok);
            es.push_back(v);
        }
    }
    return Index(std::move(es));
}

bool index_less(const Index& a, const Index& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("index_less: weight mismatch");
    if (a == b) return false;
    const bool aD = a.in_D(), bD = b.in_D();
    if (aD != bD) return aD;  // rule (1)
    if (!aD) {
        if (a.depth() != b.depth()) return a.depth() < b.depth();  // rule (2)
        const bool aY = a.in_Y(), bY = b.in_Y();
        if (aY != bY) return aY;  // rule (3)
    }
    // rule (4): entrywise lexicographic, shorter tuple first on a tie.
    size_t n = std::min(a.k.size(), b.k.size());
    for (size_t i = 0; i < n; ++i)
        if (a.k[i] != b.k[i]) return a.k[i] < b.k[i];
    return a.k.size() < b.k.size();
}

namespace {

void enumerate_rec(int rest, int depth_left, std::vector<int>& cur,
                   std::vector<Index>& out) {
    if (rest == 0) {
        // admissibility: last entry != 1
        if (cur.empty() || cur.back() != 1) out.push_back(Index(cur));
        return;
    }
    if (depth_left == 0) return;
    for (int a = 1; a <= rest; ++a) {
        for (int s : {+1, -1}) {
            cur.push_back(s * a);
            enumerate_rec(rest - a, depth_left - 1, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Index> enumerate_indices(int k, int d, IndexClass cls) {
    if (k < 0) throw std::invalid_argument("negative weight");
    int dl = d < 0 ? k : std::min(d, k);
    std::vector<Index> all;
    std::vector<int> cur;
    enumerate_rec(k, dl, cur, all);
    std::vector<Index> out;
    for (auto& idx : all) {
        bool keep = true;
        switch (cls) {
            case IndexClass::All: keep = true; break;
            case IndexClass::D: keep = idx.in_D(); break;
            case IndexClass::Y: keep = idx.in_Y(); break;
            case IndexClass::NonD: keep = !idx.in_D(); break;
        }
        if (keep) out.push_back(std::move(idx));
    }
    std::sort(out.begin(), out.end(), index_less);
    return out;
}

Word index_word(const Index& idx) {
    const int d = idx.depth();
    std::vector<int> eps(d + 1);
    eps[d] = 1;  // eps_{d+1}
    for (int i = d - 1; i >= 0; --i)
        eps[i] = (idx.k[i] < 0 ? -1 : 1) * eps[i + 1];
    Word w;
    for (int i = 0; i < d; ++i) {
        w.a.push_back(eps[i] == 1 ? Letter::One : Letter::MOne);
        int e = idx.k[i] < 0 ? -idx.k[i] : idx.k[i];
        w.a.insert(w.a.end(), static_cast<size_t>(e - 1), Letter::Zero);
    }
    return w;
}

LinComb index_to_word(const Index& idx, bool modified) {
    Rat c = modified ? pow2_rat(idx.depth()) : Rat(1);
    return LinComb::monomial(index_word(idx), c);
}

Index word_to_index(const Word& w) {
    if ((w.letter_mask() & ~kMaskS3) != 0)
        throw std::invalid_argument("word_to_index: not over {0,1,-1}");
    if (!is_admissible_A0(w))
        throw std::invalid_argument("word_to_index: non-admissible word " + w.to_string());
    // Parse as e_{x_1} e_0^{n_1} ... e_{x_d} e_0^{n_d} with x_i in {1,-1}.
    std::vector<int> sign;   // x_i
    std::vector<int> absk;   // n_i + 1
    for (Letter l : w.a) {
        if (l == Letter::Zero) {
            ++absk.back();
        } else {
            sign.push_back(l == Letter::One ? 1 : -1);
            absk.push_back(1);
        }
    }
    const int d = static_cast<int>(sign.size());
    std::vector<int> entries(d);
    int eps_next = 1;  // eps_{i+1}, scanning right to left
    for (int i = d - 1; i >= 0; --i) {
        entries[i] = sign[i] * eps_next * absk[i];
        eps_next = sign[i];
    }
    return Index(std::move(entries));
}

long long fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative");
    long long a = 1, b = 1;  // F_0, F_1
    if (n == 0) return a;
    for (int i = 1; i < n; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace eulersum
