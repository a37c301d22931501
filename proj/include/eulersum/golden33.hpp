#pragma once

#include <string>

#include "eulersum/reduction.hpp"

namespace eulersum {
namespace golden33 {

// Embedded reference data for the weight-3, depth-3 reduction: the expected
// index orders, both coefficient blocks, the inverse of the square block,
// its determinant, and the final expansion matrix.
extern const char* kBasis[3];
extern const char* kNonbasis[9];
extern const int kBasisBlock[9][3];
extern const int kSquare[9][9];
extern const char* kSquareInverse[9][9];
extern const char* kAlpha[9][3];
extern const long kDetSquare;

struct CheckReport {
    bool ok = true;
    std::string report;  // unified human-readable diff
};

// Recomputes the whole example from scratch and diffs every piece against
// the embedded data.
CheckReport run_check();

}  // namespace golden33
}  // namespace eulersum
