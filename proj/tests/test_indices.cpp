#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eulersum/index.hpp"

using namespace eulersum;

namespace {

std::vector<std::string> strings_of(const std::vector<Index>& v) {
    std::vector<std::string> out;
    for (auto& i : v) out.push_back(i.to_string());
    return out;
}

// admissible monomials over {0,1,-1} of weight k, any depth
std::vector<Word> admissible_words(int k) {
    std::vector<Word> out, cur{Word{}};
    for (int i = 0; i < k; ++i) {
        std::vector<Word> next;
        for (auto& w : cur)
            for (Letter l : {Letter::Zero, Letter::One, Letter::MOne}) {
                if (i == 0 && l == Letter::Zero) continue;
                Word nw = w;
                nw.a.push_back(l);
                next.push_back(nw);
            }
        cur = std::move(next);
    }
    for (auto& w : cur)
        if (k == 0 || w.a.back() != Letter::One) out.push_back(w);
    return out;
}

}  // namespace

TEST_CASE("index construction and classes") {
    CHECK_THROWS_AS(Index({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Index({2, 1}), std::invalid_argument);
    CHECK(Index(std::vector<int>{}).weight() == 0);
    CHECK(Index({2, -1}).weight() == 3);
    CHECK(Index({2, -1}).depth() == 2);

    CHECK(Index({-3}).in_D());
    CHECK(Index({-2}).in_D());  // conditions on later entries are vacuous
    CHECK(Index({1, 1, -1}).in_D());
    CHECK(Index({2, -1}).in_D());
    CHECK_FALSE(Index({1, -2}).in_D());
    CHECK(Index({1, -2}).in_Y());
    CHECK_FALSE(Index({-2, -1}).in_Y());
    CHECK_FALSE(Index({3}).in_Y());
    CHECK(Index({6, -1}).in_D());
    CHECK_FALSE(Index({1, 2}).in_Y());
}

TEST_CASE("printed weight-3 orders") {
    auto d33 = enumerate_indices(3, 3, IndexClass::D);
    CHECK(strings_of(d33) == std::vector<std::string>{"-3", "1,1,-1", "2,-1"});
    auto n33 = enumerate_indices(3, 3, IndexClass::NonD);
    CHECK(strings_of(n33) ==
          std::vector<std::string>{"3", "1,-2", "-2,-1", "-1,-2", "-1,2", "1,2", "-1,-1,-1",
                                   "-1,1,-1", "1,-1,-1"});
    // pairwise order spot checks from the same listing
    CHECK(index_less(Index({1, -2}), Index({-2, -1})));
    CHECK(index_less(Index({-3}), Index({2, -1})));
    CHECK(index_less(Index({-1, -1, -1}), Index({-1, 1, -1})));
    CHECK_THROWS_AS(index_less(Index({2}), Index({-3})), std::invalid_argument);
}

TEST_CASE("enumerate trivial cases") {
    auto e0 = enumerate_indices(0, 0, IndexClass::All);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == Index(std::vector<int>{}));
    // only (-1) has weight 1, and it lies in D
    auto e1 = enumerate_indices(1, 1, IndexClass::All);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == Index({-1}));
    CHECK(enumerate_indices(1, 1, IndexClass::NonD).empty());
}

TEST_CASE("Fibonacci dimension of the D class") {
    long long expect[13] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
    for (int k = 0; k <= 12; ++k) {
        CHECK(fibonacci(k) == expect[k]);
        CHECK(static_cast<long long>(enumerate_indices(k, -1, IndexClass::D).size()) ==
              expect[k]);
    }
}

TEST_CASE("strict total order on weights up to 6") {
    for (int k = 0; k <= 6; ++k) {
        auto all = enumerate_indices(k, -1, IndexClass::All);
        const size_t n = all.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                bool lt = index_less(all[i], all[j]);
                bool gt = index_less(all[j], all[i]);
                if (i == j) {
                    CHECK_FALSE(lt);
                } else {
                    CHECK(lt != gt);  // totality + antisymmetry
                }
            }
        // sortedness of the enumeration implies transitivity along it
        for (size_t i = 0; i + 1 < n; ++i) CHECK(index_less(all[i], all[i + 1]));
        // transitivity on sampled triples
        for (size_t a = 0; a < n; a += 3)
            for (size_t b = 0; b < n; b += 3)
                for (size_t c = 0; c < n; c += 3)
                    if (index_less(all[a], all[b]) && index_less(all[b], all[c]))
                        CHECK(index_less(all[a], all[c]));
    }
}

TEST_CASE("index words match the recursion examples") {
    CHECK(index_word(Index({2, -1})) == Word::parse("-1,0,-1"));
    CHECK(index_word(Index({-3})) == Word::parse("-1,0,0"));
    CHECK(index_word(Index({3})) == Word::parse("1,0,0"));
    CHECK(index_word(Index(std::vector<int>{})) == Word{});
    CHECK(index_word(Index({1, -2})) == Word::parse("-1,-1,0"));
    // modified version carries 2^depth
    LinComb w = index_to_word(Index({2, -1}), true);
    REQUIRE(w.size() == 1);
    CHECK(w.coeff(Word::parse("-1,0,-1")) == Rat(4));
}

TEST_CASE("word_to_index inverts index_word") {
    CHECK(word_to_index(Word::parse("-1,0,-1")) == Index({2, -1}));
    CHECK(word_to_index(Word::parse("1,0")) == Index({2}));
    CHECK(word_to_index(Word{}) == Index(std::vector<int>{}));
    CHECK_THROWS_AS(word_to_index(Word::parse("0,1,0")), std::invalid_argument);
    CHECK_THROWS_AS(word_to_index(Word::parse("1,0,1")), std::invalid_argument);
    for (int k = 0; k <= 8; ++k)
        for (auto& idx : enumerate_indices(k, -1, IndexClass::All))
            CHECK(word_to_index(index_word(idx)) == idx);
}

TEST_CASE("index words exhaust the admissible monomials") {
    for (int k = 0; k <= 7; ++k) {
        auto idxs = enumerate_indices(k, -1, IndexClass::All);
        std::set<Word> images;
        for (auto& idx : idxs) {
            Word w = index_word(idx);
            CHECK(is_admissible_A0(w));
            CHECK(w.weight() == k);
            CHECK(w.depth() == idx.depth());
            images.insert(w);
        }
        CHECK(images.size() == idxs.size());  // injective
        auto adm = admissible_words(k);
        CHECK(images.size() == adm.size());   // onto
    }
    // depth-bounded variant: images of the (5,d) sets are exactly the
    // admissible monomials of depth <= d
    for (int d = 0; d <= 3; ++d) {
        auto idxs = enumerate_indices(5, d, IndexClass::All);
        size_t count = 0;
        for (auto& w : admissible_words(5))
            if (w.depth() <= d) ++count;
        CHECK(idxs.size() == count);
    }
}

TEST_CASE("index parsing") {
    CHECK(Index::parse("1,-2") == Index({1, -2}));
    CHECK(Index::parse("") == Index(std::vector<int>{}));
    CHECK_THROWS_AS(Index::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(Index::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(Index::parse("3,1"), std::invalid_argument);
}
