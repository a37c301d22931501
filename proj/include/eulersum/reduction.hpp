#pragma once


#include "eulersum/confluence.hpp"
#include "eulersum/ratmat.hpp"

namespace eulersum {

// Precomputed relation rows c_{k,.} for generators of one weight, shared
// across depth bounds (a generator and its relation depend only on the
// index itself).  ensure_rows() can fan out over threads; results are
// deterministic regardless of schedule.
class RelationTable {
  public:
    explicit RelationTable(int weight) : k_(weight) {}

    int weight() const { return k_; }
    const std::map<Index, Int>& row(const Index& idx);
    void ensure_rows(const std::vector<Index>& idxs, int threads);

  private:
    int k_;
    Confluence cf_;
    std::map<Index, std::map<Index, Int>> rows_;
};

struct Assembled {
    int k = 0, d = 0;
    std::vector<Index> nonbasis;  // rows and square columns, sorted by the total order
    std::vector<Index> basis;     // D-class columns, sorted
    IntMat square;                // c_{k,k'} over nonbasis x nonbasis
    IntMat basis_block;           // c_{k,k'} over nonbasis x basis
    // Soft mod-2 structure report: expected odd diagonal and even entries
    // above the diagonal; violations are listed, not fatal.
    std::vector<std::string> triangularity_violations;
};

Assembled assemble(int k, int d, RelationTable& table, int threads = 1);

struct AlphaMatrix {
    int k = 0, d = 0;
    std::vector<Index> nonbasis;
    std::vector<Index> basis;
    RatMat alpha;  // nonbasis x basis, modified zeta expansion coefficients
    Int det_square;
    Int denominator_lcm;
    std::vector<std::pair<Int, int>> lcm_factorization;
    bool all_denominators_odd = true;

    const Rat& entry(const Index& row, const Index& col) const;
};

AlphaMatrix solve_alpha(const Assembled& asm_result);

// Trial-division factorization (complete for the sizes arising here; any
// unfactored remainder is appended as a final factor).
std::vector<std::pair<Int, int>> factorize(Int n);

// LCM of all denominators of the alpha entries plus its factorization.
std::pair<Int, std::vector<std::pair<Int, int>>> denominator_report(const RatMat& alpha);

// Single-zeta projection: given sum_k q_k zeta(k) known to be a rational
// multiple of zeta(weight), return that rational.  Uses the alpha column at
// (-weight); basis indices contribute delta rows.
Rat project_c_xi(const std::map<Index, Rat>& coeffs, int weight, const AlphaMatrix& alpha);

}  // namespace eulersum
