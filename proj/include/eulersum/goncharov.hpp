#pragma once

#include <map>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {
namespace hopf {

// Formal iterated integral I(s_0; s_1..s_m; s_{m+1}) over a finite label
// set.  The normal form applies the unit relation (empty interior) and the
// equal-endpoint vanishing relation eagerly; shuffle and path composition
// are intentionally not imposed.
struct Gen {
    std::vector<int> s;  // size m + 2

    int degree() const { return static_cast<int>(s.size()) - 2; }
    friend auto operator<=>(const Gen& a, const Gen& b) = default;
};

// Commutative product of generators (sorted); empty = unit.
using Monomial = std::vector<Gen>;

int monomial_degree(const Monomial& m);

struct Elem {
    std::map<Monomial, Rat> t;

    static Elem zero() { return {}; }
    static Elem unit(const Rat& c = 1);

    bool is_zero() const { return t.empty(); }
    void add_term(const Monomial& m, const Rat& c);
    Elem& operator+=(const Elem& o);
    friend Elem operator+(Elem a, const Elem& b) { a += b; return a; }
    friend Elem operator*(const Elem& a, const Elem& b);
    friend Elem operator*(const Rat& c, Elem a);
    friend bool operator==(const Elem& a, const Elem& b) { return a.t == b.t; }

    // Coefficient of the unit monomial (the counit on degree 0).
    Rat counit() const;
};

// Generator with relations (unit, equal endpoints) applied.
Elem generator(const std::vector<int>& labels);
Elem generator(int s0, const std::vector<int>& interior, int s1);

struct Tensor2 {
    std::map<std::pair<Monomial, Monomial>, Rat> t;

    void add_term(const Monomial& l, const Monomial& r, const Rat& c);
    Tensor2& operator+=(const Tensor2& o);
    friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.t == b.t; }
};

struct Tensor3 {
    std::map<std::tuple<Monomial, Monomial, Monomial>, Rat> t;
    void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Rat& v);
    friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.t == b.t; }
};

// Subset-sum coproduct; multiplicative on products.
Tensor2 coproduct(const Elem& x);

// Infinitesimal coaction: degree-r projection of the left leg followed by
// linearization (products of positive-degree elements vanish).  Terms are
// keyed by (single generator of degree r, right monomial).
struct DrResult {
    std::map<std::pair<Gen, Monomial>, Rat> t;

    void add_term(const Gen& g, const Monomial& m, const Rat& c);
    // Right-multiply the second leg by y (the Leibniz-rule test needs it).
    DrResult times_right(const Elem& y) const;
    DrResult& operator+=(const DrResult& o);
    friend bool operator==(const DrResult& a, const DrResult& b) { return a.t == b.t; }
};

DrResult infinitesimal(const Elem& x, int r);

// Coassociativity legs for the structure tests.
Tensor3 coassoc_left(const Elem& x);   // (Delta (x) id) Delta
Tensor3 coassoc_right(const Elem& x);  // (id (x) Delta) Delta

// Shuffle and path-composition relations are deliberately not imposed in
// the normal form; these build their defining elements, and the membership
// checker decides by explicit expansion whether an element lies in the
// ideal they generate (homogeneous degrees, small label sets).
Elem shuffle_relation(int a, const std::vector<int>& left, const std::vector<int>& right, int b);
Elem path_composition_relation(int a, int b, int c, const std::vector<int>& interior);
bool in_structure_ideal(const Elem& x, const std::vector<int>& labels);

}  // namespace hopf
}  // namespace eulersum
