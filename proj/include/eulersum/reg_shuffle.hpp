#pragma once

#include "eulersum/lincomb.hpp"

namespace eulersum {

// Shuffle regularization on words over {0,1,-1}: the unique linear map
// fixing admissible elements (first letter != 0, last != 1) and killing
// every e_0^n (sh) e_1^m (sh) u with n + m > 0.

// One-sided versions: strip only the leading-e_0 (resp. trailing-e_1)
// divergence.  They commute, and their composite is reg_shuffle.
LinComb reg_left(const LinComb& u);
LinComb reg_right(const LinComb& u);
LinComb reg_shuffle(const LinComb& u);
inline LinComb reg_shuffle(const Word& w) { return reg_shuffle(LinComb::monomial(w)); }

// Full two-sided decomposition u = sum_{n,m} e_0^n (sh) e_1^m (sh) part(n,m)
// with every part admissible.  Key is (n, m).
struct ShuffleDecomposition {
    std::map<std::pair<int, int>, LinComb> parts;

    const LinComb& part(int n, int m) const;
    LinComb reexpand() const;  // puts the shuffles back; must reproduce the input
};

ShuffleDecomposition shuffle_decompose(const LinComb& u);

}  // namespace eulersum
