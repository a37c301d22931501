#pragma once

#include <map>
#include <tuple>

#include "eulersum/ratmat.hpp"
#include "eulersum/reg_shuffle.hpp"

namespace eulersum {

// Tensor combination: left factor over {0,1,-1}, right factor either a
// {0,1}-word (the C side) or a chain word, depending on context.
struct TensorComb {
    std::map<std::pair<Word, Word>, Rat> t;

    bool is_zero() const { return t.empty(); }
    void add_term(const Word& l, const Word& r, const Rat& c) {
        if (c == 0) return;
        auto [it, fresh] = t.emplace(std::make_pair(l, r), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    TensorComb& operator+=(const TensorComb& o) {
        for (auto& [k, c] : o.t) add_term(k.first, k.second, c);
        return *this;
    }
    friend bool operator==(const TensorComb& a, const TensorComb& b) { return a.t == b.t; }
};

// dist: ring homomorphism e_0 -> 2 e_0, e_1 -> e_1 + e_{-1} on {0,1}-words.
LinComb dist(const LinComb& u);

// varrho: automorphism e_0 -> e_0 - e_1, e_1 -> -e_1 of the {0,1}-algebra.
LinComb varrho(const LinComb& u);

// varsigma: anti-automorphism e_0 -> -e_1, e_1 -> -e_0 (reverses words).
LinComb varsigma(const LinComb& u);

// theta on tuples of positive integers (recursive shuffle expression).
LinComb theta(const std::vector<int>& kk);
// theta' = dist . reg_shuffle . varsigma . theta
LinComb theta_prime(const std::vector<int>& kk);
// theta_1 adds the trailing-{1}^{2m} correction terms.
LinComb theta1(const std::vector<int>& kk);

// w* basis words: w*() = 1, w*(k_1..k_d) = -e_1 e_0^{k_1-1}(e_0-e_1)...
LinComb word_star(const std::vector<int>& kk);

// wp: linear map on C determined by wp(varrho(w*(kk))) = theta1(kk),
// computed by triangular elimination against the varrho(w*) basis.
LinComb wp(const LinComb& u);

// Pipeline caches (split solves, per-word regularized limits).  All methods
// are pure; one engine per thread when parallelizing.
class EulerMaps {
  public:
    // Splitting of B' along the shuffle isomorphism B'' (x) B''' = B'.
    // Left factors are empty or begin with e_z; right factors lie over
    // {0, -z^2}.  Re-shuffling the output reproduces the input.
    TensorComb split_B(const LinComb& u);

    // Regularized z->0 limit: kill e_{-1}, split, apply the two letter maps,
    // then dist (x) wp and shuffle back together.
    LinComb reg_z0(const LinComb& u);
    const LinComb& reg_z0_word(const Word& w);

  private:
    struct SplitData {
        std::vector<Word> words;                 // admissible B' words, sorted
        std::vector<std::pair<Word, Word>> pairs;
        RatMat expansion;                        // pairs x words: column = expansion of word
    };
    const SplitData& split_data(int nz, int nzsq, int nzero);

    std::map<std::tuple<int, int, int>, SplitData> split_cache_;
    std::map<Word, LinComb> reg_z0_cache_;
    std::map<Word, LinComb> wp_cache_;
};

}  // namespace eulersum
