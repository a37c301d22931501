#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulersum/reg_shuffle.hpp"

using namespace eulersum;

namespace {

const Word kE0 = word_of({Letter::Zero});
const Word kE1 = word_of({Letter::One});
const Word kEM = word_of({Letter::MOne});

LinComb mono(std::initializer_list<Letter> ls, const Rat& c = 1) {
    return LinComb::monomial(word_of(ls), c);
}

std::vector<Word> all_words_S3(int len) {
    std::vector<Word> out{Word{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> next;
        for (auto& w : out)
            for (Letter l : {Letter::Zero, Letter::One, Letter::MOne}) {
                Word nw = w;
                nw.a.push_back(l);
                next.push_back(nw);
            }
        out = std::move(next);
    }
    return out;
}

Word random_word_S3(std::mt19937& rng, int len) {
    static const Letter ls[3] = {Letter::Zero, Letter::One, Letter::MOne};
    Word w;
    for (int i = 0; i < len; ++i) w.a.push_back(ls[rng() % 3]);
    return w;
}

}  // namespace

TEST_CASE("word basics and run-length round-trip") {
    Word w = Word::parse("-1,0,0,z");
    CHECK(w.weight() == 4);
    CHECK(w.depth() == 2);
    CHECK(w.to_string() == "-1,0,0,z");
    CHECK(Word::from_runs(w.runs()) == w);
    CHECK(Word::parse("") == Word{});
    CHECK_THROWS_AS(Word::parse("1,z"), std::invalid_argument);  // mixed alphabets
    CHECK_THROWS_AS(Word::parse("q"), std::invalid_argument);

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Word r = random_word_S3(rng, static_cast<int>(rng() % 9));
        CHECK(Word::from_runs(r.runs()) == r);
        CHECK(Word::parse(r.to_string()) == r);
    }
}

TEST_CASE("shuffle on small examples") {
    CHECK(shuffle(LinComb::monomial(kE0), LinComb::monomial(kE1)) ==
          mono({Letter::Zero, Letter::One}) + mono({Letter::One, Letter::Zero}));
    LinComb u = mono({Letter::One, Letter::Zero}, Rat(3, 2)) + mono({Letter::MOne});
    CHECK(shuffle(LinComb::one(), u) == u);
    CHECK(shuffle(LinComb::monomial(kE0), LinComb::monomial(kE0)) ==
          mono({Letter::Zero, Letter::Zero}, 2));
    // weight and depth are additive on monomial shuffles
    LinComb s = shuffle(mono({Letter::One, Letter::Zero}), mono({Letter::MOne}));
    for (auto& [w, c] : s.t) {
        CHECK(w.weight() == 3);
        CHECK(w.depth() == 2);
    }
}

TEST_CASE("concat examples") {
    CHECK(concat(LinComb::monomial(kE1), LinComb::monomial(kE0)) ==
          mono({Letter::One, Letter::Zero}));
    LinComb u = mono({Letter::Zero, Letter::MOne}, Rat(-5));
    CHECK(concat(LinComb::one(), u) == u);
    CHECK(concat(mono({Letter::One}) + mono({Letter::MOne}), LinComb::monomial(kE0)) ==
          mono({Letter::One, Letter::Zero}) + mono({Letter::MOne, Letter::Zero}));
}

TEST_CASE("alphabet mixing is rejected") {
    CHECK_THROWS_AS(shuffle(mono({Letter::One}), mono({Letter::Zvar})), std::invalid_argument);
    CHECK_THROWS_AS(concat(mono({Letter::MZsq}), mono({Letter::One})), std::invalid_argument);
    // {0,-1} is shared, so either extension is fine
    CHECK_NOTHROW(shuffle(mono({Letter::MOne}), mono({Letter::Zvar})));
    CHECK_NOTHROW(shuffle(mono({Letter::MOne}), mono({Letter::One})));
}

TEST_CASE("filtration check") {
    CHECK(filtration_check(mono({Letter::One, Letter::Zero}), 2, 1));
    CHECK_FALSE(filtration_check(mono({Letter::One, Letter::MOne}), 2, 1));
    CHECK(filtration_check(mono({Letter::One, Letter::Zero}) + mono({Letter::MOne, Letter::Zero}),
                           2, 1));
    CHECK_FALSE(filtration_check(mono({Letter::One}), 2, 1));  // wrong weight
}

TEST_CASE("shuffle is commutative and associative (exhaustive to weight 5)") {
    for (int la = 0; la <= 3; ++la)
        for (auto& u : all_words_S3(la))
            for (int lb = 0; la + lb <= 5; ++lb)
                for (auto& v : all_words_S3(lb))
                    CHECK(shuffle(LinComb::monomial(u), LinComb::monomial(v)) ==
                          shuffle(LinComb::monomial(v), LinComb::monomial(u)));
    // associativity on all triples of total weight <= 4
    auto words = [](int n) { return all_words_S3(n); };
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (int c = 0; a + b + c <= 4; ++c)
                for (auto& u : words(a))
                    for (auto& v : words(b))
                        for (auto& w : words(c)) {
                            LinComb lu = LinComb::monomial(u), lv = LinComb::monomial(v),
                                    lw = LinComb::monomial(w);
                            CHECK(shuffle(shuffle(lu, lv), lw) == shuffle(lu, shuffle(lv, lw)));
                        }
}

TEST_CASE("shuffle laws on random heavier words") {
    std::mt19937 rng(40);
    for (int t = 0; t < 30; ++t) {
        Word u = random_word_S3(rng, 3 + static_cast<int>(rng() % 3));
        Word v = random_word_S3(rng, 3 + static_cast<int>(rng() % 3));
        Word w = random_word_S3(rng, 1 + static_cast<int>(rng() % 2));
        LinComb lu = LinComb::monomial(u), lv = LinComb::monomial(v), lw = LinComb::monomial(w);
        CHECK(shuffle(lu, lv) == shuffle(lv, lu));
        CHECK(shuffle(shuffle(lu, lv), lw) == shuffle(lu, shuffle(lv, lw)));
    }
}

TEST_CASE("reg_shuffle examples") {
    CHECK(reg_shuffle(mono({Letter::One, Letter::Zero})) == mono({Letter::One, Letter::Zero}));
    CHECK(reg_shuffle(LinComb::monomial(kE0)).is_zero());
    CHECK(reg_shuffle(LinComb::monomial(kE1)).is_zero());
    // solve e_0 sh e_1 = e_0 e_1 + e_1 e_0 with reg(e_0 sh e_1) = 0 by hand
    CHECK(reg_shuffle(mono({Letter::Zero, Letter::One})) ==
          mono({Letter::One, Letter::Zero}, -1));
    CHECK(reg_shuffle(LinComb::monomial(kEM)) == LinComb::monomial(kEM));
    CHECK(reg_shuffle(LinComb::one()) == LinComb::one());
}

TEST_CASE("reg_shuffle is an idempotent projection onto admissible elements") {
    auto words = all_words_S3(5);
    for (auto& w : words) {
        LinComb r = reg_shuffle(LinComb::monomial(w));
        CHECK(admissible(r, Admissibility::A0()));
        CHECK(reg_shuffle(r) == r);
        if (Admissibility::A0().word_ok(w)) CHECK(r == LinComb::monomial(w));
    }
}

TEST_CASE("one-sided regularizations commute") {
    std::mt19937 rng(11);
    for (int len = 0; len <= 5; ++len)
        for (auto& w : all_words_S3(len)) {
            LinComb u = LinComb::monomial(w);
            CHECK(reg_left(reg_right(u)) == reg_right(reg_left(u)));
            CHECK(reg_left(reg_right(u)) == reg_shuffle(u));
        }
    for (int t = 0; t < 20; ++t) {
        LinComb u = LinComb::monomial(random_word_S3(rng, 6 + static_cast<int>(rng() % 3)),
                                      Rat(1 + static_cast<int>(rng() % 5)));
        u += LinComb::monomial(random_word_S3(rng, 6), Rat(-3));
        CHECK(reg_left(reg_right(u)) == reg_right(reg_left(u)));
    }
}

TEST_CASE("shuffle decomposition round-trips") {
    std::mt19937 rng(23);
    for (int len = 0; len <= 5; ++len)
        for (auto& w : all_words_S3(len)) {
            LinComb u = LinComb::monomial(w);
            ShuffleDecomposition d = shuffle_decompose(u);
            for (auto& [nm, part] : d.parts) CHECK(admissible(part, Admissibility::A0()));
            CHECK(d.reexpand() == u);
            CHECK(d.part(0, 0) == reg_shuffle(u));
        }
    for (int t = 0; t < 15; ++t) {
        LinComb u = LinComb::monomial(random_word_S3(rng, 7 + static_cast<int>(rng() % 2)));
        CHECK(shuffle_decompose(u).reexpand() == u);
    }
}
