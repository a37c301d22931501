#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/lincomb.hpp"

namespace eulersum {

// Admissible Euler-sum index: a tuple of nonzero integers whose last entry
// is not 1 (the empty tuple is allowed).  Weight is the sum of absolute
// values, depth the number of entries.
struct Index {
    std::vector<int> k;

    Index() = default;
    explicit Index(std::vector<int> entries);

    int weight() const;
    int depth() const { return static_cast<int>(k.size()); }

    // k_1,...,k_{r-1} > 0 and k_r < 0.
    bool in_Y() const;
    // Additionally k_2,...,k_r all odd.
    bool in_D() const;

    friend bool operator==(const Index& a, const Index& b) { return a.k == b.k; }
    friend bool operator<(const Index& a, const Index& b) { return a.k < b.k; }

    std::string to_string() const;  // "1,-2"; empty tuple is ""
    static Index parse(const std::string& s);
};

enum class IndexClass { All, D, Y, NonD };

// Total order by (1) D-members first, (2) among non-D smaller depth first,
// (3) among non-D of equal depth Y-members first, (4) otherwise entrywise
// lexicographic.  Defined for indices of equal weight only.
bool index_less(const Index& a, const Index& b);

// All indices of weight k, depth <= d, in the requested class, sorted.
// d < 0 means unbounded depth.
std::vector<Index> enumerate_indices(int k, int d, IndexClass cls = IndexClass::All);

// Monomial word w(k) = e_{eps_1} e_0^{|k_1|-1} ... e_{eps_d} e_0^{|k_d|-1}
// with eps_i = sgn(k_i) eps_{i+1}, eps_{d+1} = 1; the modified version
// carries the extra factor 2^depth.
LinComb index_to_word(const Index& idx, bool modified = false);
Word index_word(const Index& idx);

// Inverse of index_word on admissible monomials over {0,1,-1}.
Index word_to_index(const Word& w);

// Fibonacci numbers with generating function 1/(1-t-t^2): 1,1,2,3,5,...
// #{ D-indices of weight k, unbounded depth } equals fibonacci(k).
long long fibonacci(int n);

}  // namespace eulersum
