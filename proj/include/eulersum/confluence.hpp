#pragma once

#include "eulersum/euler_maps.hpp"
#include "eulersum/index.hpp"

namespace eulersum {

// Order of vanishing at z = c of the difference of two letter points, each
// viewed as a polynomial in z (0, 1, -1, z, -z^2).  Convention: ord(0) = 0.
int ord_at(Letter a, Letter b, int c);

// Differential operator on B-admissible words (run-length form): deleting
// one letter of run i carries ord_{z=c}((a_i - a_{i+1})/(a_i - a_{i-1}))
// with virtual boundary letters a_0 = 0 and a_{r+1} = z.
LinComb del_c(const LinComb& u, int c);

// Diagnostic variants used only by congruence tests: the depth-cutoff and
// mod-2 versions of del_c (letter-wise form).
LinComb del_bar_c(const LinComb& u, int c);
LinComb del_barbar_c(const LinComb& u, int c);

// Letter substitutions z -> 1 and 1 -> z.
LinComb subst_z1(const LinComb& u);
LinComb subst_1z(const LinComb& u);  // input must be admissible over {0,1,-1}

struct ChainTerm {
    LinComb left;  // regularized limit of the iterated derivative
    Word chain;    // e_{c_1} ... e_{c_l}
};

// The expansion machinery.  Owns the memoized chain enumeration and the
// z->0 pipeline caches; use one instance per thread.
class Confluence {
  public:
    Confluence() = default;

    TensorComb phi_tensor(const LinComb& u);
    std::vector<ChainTerm> phi_tensor_terms(const LinComb& u);
    LinComb phi(const LinComb& u);

    // Confluence-ideal element u|_{z->1} - phi(u).
    LinComb relation(const LinComb& u);

    // Generator f(k) for a non-D index (2^d w(k)|_{1->z} outside Y, the
    // e_{-1}/e_{-z^2} block word with the i(k) split inside Y \ D).
    static LinComb f_index(const Index& idx);

    // relation(f(idx)), memoized per index.
    const LinComb& relation_for(const Index& idx);

    // Integer coefficients c_{k,k'}: coefficient of 2^{depth} w(k') in
    // relation(f(k)).  A non-integer value is an implementation fault.
    std::map<Index, Int> relation_coefficients(const Index& idx);

    EulerMaps& maps() { return em_; }
    void clear_caches();

  private:
    const TensorComb& chain_expand(const Word& w);
    const LinComb& reg_shuffle_cached(const Word& w);

    EulerMaps em_;
    std::map<Word, TensorComb> chain_memo_;
    std::map<Word, LinComb> regsh_memo_;
    std::map<Index, LinComb> relation_memo_;
};

}  // namespace eulersum
