#pragma once

#include <map>

#include "eulersum/bigreal.hpp"
#include "eulersum/index.hpp"
#include "eulersum/lincomb.hpp"

namespace eulersum {

// High-precision numeric oracle: convergent iterated integrals L_1 over
// {0,1,-1} by power series after splitting the path at 1/2, and Euler sums
// by nested summation (deliberately a different algorithm, used as a
// cross-check).  Caches are per-instance; use one instance per thread.
class Numerics {
  public:
    explicit Numerics(PrecisionContext ctx = PrecisionContext(40)) : ctx_(ctx) {}

    const PrecisionContext& ctx() const { return ctx_; }

    // Iterated integral over the straight path from 0 to 1; the word must be
    // admissible (first letter != 0, last != 1).
    BigReal eval_L1(const Word& w);
    BigReal eval_L1(const LinComb& u);

    // Euler sum by nested series summation.  Depth-1 values use rigorous
    // acceleration (alternating: Cohen-Rodriguez-Villegas-Zagier; plain:
    // Euler-Maclaurin).  Deeper sums use exact partial sums plus tail
    // estimates whose error bounds are carried in the result.
    BigReal eval_zeta(const Index& idx, bool modified = false);

    struct VerifyResult {
        BigReal residual;
        bool pass;
    };
    // PASS iff |L_1(u)| (plus its rigorous error) is below 10^{-(digits-10)}.
    VerifyResult verify(const LinComb& u);

  private:
    BigReal series_at_half(const std::vector<int>& letters);
    BigReal zeta_tail_em(int s, long n);  // sum_{m>n} m^{-s}, Euler-Maclaurin
    BigReal eta_crvz(int s);              // sum_{m>=1} (-1)^{m-1} m^{-s}
    BigReal zeta_nested(const Index& idx);

    PrecisionContext ctx_;
    std::map<Word, BigReal> l1_cache_;
    std::map<std::vector<int>, BigReal> half_cache_;
};

// Exact Bernoulli numbers B_0..B_n (even indices are the interesting ones).
const std::vector<Rat>& bernoulli_upto(int n);

}  // namespace eulersum
