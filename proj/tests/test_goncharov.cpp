#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulersum/goncharov.hpp"

using namespace eulersum;
using namespace eulersum::hopf;

namespace {

const std::vector<int> kLabels{0, 1, 2};

std::vector<Elem> generators_of_degree(int deg) {
    std::vector<Elem> out;
    std::vector<std::vector<int>> interiors{{}};
    for (int i = 0; i < deg; ++i) {
        std::vector<std::vector<int>> next;
        for (auto& base : interiors)
            for (int l : kLabels) {
                auto e = base;
                e.push_back(l);
                next.push_back(e);
            }
        interiors = std::move(next);
    }
    for (auto& interior : interiors)
        for (int a : kLabels)
            for (int b : kLabels) {
                Elem x = generator(a, interior, b);
                if (!x.is_zero()) out.push_back(x);
            }
    return out;
}

Elem apply_counit_left(const Tensor2& t) {
    Elem out;
    for (auto& [lr, c] : t.t)
        if (monomial_degree(lr.first) == 0) out.add_term(lr.second, c);
    return out;
}

Elem apply_counit_right(const Tensor2& t) {
    Elem out;
    for (auto& [lr, c] : t.t)
        if (monomial_degree(lr.second) == 0) out.add_term(lr.first, c);
    return out;
}

int elem_degree(const Elem& x) {
    int d = -1;
    for (auto& [m, c] : x.t) {
        int md = monomial_degree(m);
        if (d < 0) d = md;
        if (d != md) throw std::logic_error("inhomogeneous element");
    }
    return d;
}

}  // namespace

TEST_CASE("normal-form relations") {
    CHECK(generator(0, {}, 1) == Elem::unit());      // I(a;b) = 1
    CHECK(generator(0, {1, 2}, 0).is_zero());        // equal endpoints vanish
    CHECK_FALSE(generator(0, {1}, 2).is_zero());
    CHECK(generator(0, {0}, 0).is_zero());
}

TEST_CASE("coproduct of a degree-1 generator is primitive") {
    Elem x = generator(0, {1}, 2);
    Tensor2 d = coproduct(x);
    Tensor2 expect;
    expect.add_term(Monomial{}, x.t.begin()->first, 1);
    expect.add_term(x.t.begin()->first, Monomial{}, 1);
    CHECK(d == expect);
}

TEST_CASE("coproduct of the unit") {
    Tensor2 d = coproduct(Elem::unit());
    REQUIRE(d.t.size() == 1);
    CHECK(d.t.begin()->first == std::make_pair(Monomial{}, Monomial{}));
    CHECK(d.t.begin()->second == Rat(1));
}

TEST_CASE("coproduct of I(a;b,b;c): the four subset terms") {
    // interior = (1,1), endpoints 0 and 2
    Elem x = generator(0, {1, 1}, 2);
    const Gen g = x.t.begin()->first.front();
    Tensor2 d = coproduct(x);
    Tensor2 expect;
    // empty subset: 1 (x) x
    expect.add_term(Monomial{}, Monomial{g}, 1);
    // subset {1}: I(0;1;2) (x) I(0;;1) I(1;1;2) = I(0;1;2) (x) I(1;1;2)
    Gen l1{{0, 1, 2}};
    expect.add_term(Monomial{l1}, Monomial{Gen{{1, 1, 2}}}, 1);
    // subset {2}: I(0;1;2) (x) I(0;1;1) I(1;;2); I(0;1;1) survives
    expect.add_term(Monomial{l1}, Monomial{Gen{{0, 1, 1}}}, 1);
    // full subset: x (x) 1
    expect.add_term(Monomial{g}, Monomial{}, 1);
    CHECK(d == expect);
}

TEST_CASE("grading is additive across the tensor legs") {
    for (int deg = 0; deg <= 4; ++deg)
        for (auto& x : generators_of_degree(deg))
            for (auto& [lr, c] : coproduct(x).t)
                CHECK(monomial_degree(lr.first) + monomial_degree(lr.second) == deg);
}

TEST_CASE("counit recovers the identity on both legs") {
    std::mt19937 rng(3);
    for (int deg = 1; deg <= 4; ++deg) {
        auto gens = generators_of_degree(deg);
        for (size_t i = 0; i < gens.size(); i += 7) {
            const Elem& x = gens[i];
            Tensor2 d = coproduct(x);
            CHECK(apply_counit_left(d) == x);
            CHECK(apply_counit_right(d) == x);
        }
    }
    // and on a random product element
    Elem p = generator(0, {1}, 2) * generator(1, {0, 2}, 0) + Rat(3) * generator(2, {1, 0}, 1);
    Tensor2 dp = coproduct(p);
    CHECK(apply_counit_left(dp) == p);
    CHECK(apply_counit_right(dp) == p);
}

TEST_CASE("coassociativity on all generators of degree <= 4") {
    for (int deg = 0; deg <= 4; ++deg)
        for (auto& x : generators_of_degree(deg)) CHECK(coassoc_left(x) == coassoc_right(x));
}

TEST_CASE("coassociativity on products") {
    Elem p = generator(0, {1, 2}, 1) * generator(1, {0}, 2);
    CHECK(coassoc_left(p) == coassoc_right(p));
}

TEST_CASE("infinitesimal coaction basics") {
    Elem x = generator(0, {1}, 2);
    DrResult d1 = infinitesimal(x, 1);
    REQUIRE(d1.t.size() == 1);
    CHECK(d1.t.begin()->first.first == x.t.begin()->first.front());
    CHECK(d1.t.begin()->first.second == Monomial{});
    CHECK(infinitesimal(Elem::unit(), 1).t.empty());
    CHECK_THROWS_AS(infinitesimal(x, 0), std::invalid_argument);
    // degree-2 generator: D_1 keeps the two one-point subsequences
    Elem y = generator(0, {1, 2}, 2);
    DrResult dy = infinitesimal(y, 1);
    DrResult expect;
    // subset {1}: left I(0;1;2), right I(0;;1) I(1;2;2) = I(1;2;2)
    expect.add_term(Gen{{0, 1, 2}}, Monomial{Gen{{1, 2, 2}}}, 1);
    // subset {2}: left I(0;2;2), right I(0;1;2) I(2;;2) = I(0;1;2)
    expect.add_term(Gen{{0, 2, 2}}, Monomial{Gen{{0, 1, 2}}}, 1);
    CHECK(dy == expect);
}

TEST_CASE("Leibniz rule for the infinitesimal coaction") {
    std::mt19937 rng(17);
    auto pick = [&](int deg) {
        auto gens = generators_of_degree(deg);
        return gens[rng() % gens.size()];
    };
    for (int trial = 0; trial < 60; ++trial) {
        int da = 1 + rng() % 3, db = 1 + rng() % 2;
        if (da + db > 4) continue;
        Elem x = pick(da), y = pick(db);
        for (int r = 1; r <= da + db; ++r) {
            DrResult lhs = infinitesimal(x * y, r);
            DrResult rhs = infinitesimal(x, r).times_right(y);
            rhs += infinitesimal(y, r).times_right(x);
            CHECK(lhs == rhs);
        }
    }
}
