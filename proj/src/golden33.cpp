#include "eulersum/golden33.hpp"

#include <sstream>

namespace eulersum {
namespace golden33 {

const char* kBasis[3] = {"-3", "1,1,-1", "2,-1"};
const char* kNonbasis[9] = {"3",  "1,-2",     "-2,-1",    "-1,-2",   "-1,2",
                            "1,2", "-1,-1,-1", "-1,1,-1", "1,-1,-1"};

const int kBasisBlock[9][3] = {
    {-4, 0, 0}, {5, 0, 0},  {-2, 0, -2}, {4, 0, 1},  {-2, 0, -1},
    {0, 0, 0},  {0, -1, 2}, {0, -1, 0},  {-4, -1, 2},
};

const int kSquare[9][9] = {
    {-3, 0, 0, 0, 0, 0, 0, 0, 0},
    {4, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, -3, -1, -2, -2, 0, 0, 0, 0},
    {0, 3, 2, 3, 2, 0, 0, 0, 0},
    {0, -4, -2, -2, -1, 0, 0, 0, 0},
    {0, -2, 0, -2, -2, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 2, 0, 0, 0, 0, 0, 1, 0},
    {0, 2, 0, 0, 0, 0, 0, 0, 1},
};

const char* kSquareInverse[9][9] = {
    {"-1/3", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"4/3", "1", "0", "0", "0", "0", "0", "0", "0"},
    {"-20/3", "-5", "-1", "-2", "-2", "0", "0", "0", "0"},
    {"20/3", "5", "2", "3", "2", "0", "0", "0", "0"},
    {"-16/3", "-4", "-2", "-2", "-1", "0", "0", "0", "0"},
    {"-16/3", "-4", "0", "-2", "-2", "-1", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "0", "1", "0", "0"},
    {"-8/3", "-2", "0", "0", "0", "0", "0", "1", "0"},
    {"-8/3", "-2", "0", "0", "0", "0", "0", "0", "1"},
};

const char* kAlpha[9][3] = {
    {"-4/3", "0", "0"}, {"1/3", "0", "0"}, {"1/3", "0", "-2"},
    {"-7/3", "0", "3"}, {"2/3", "0", "-3"}, {"8/3", "0", "0"},
    {"0", "1", "-2"},   {"-2/3", "1", "0"}, {"10/3", "1", "-2"},
};

const long kDetSquare = -3;

namespace {

struct Section {
    std::string name;
    int total = 0, matched = 0;
    std::ostringstream detail;

    void check(const std::string& what, const std::string& expected, const std::string& got) {
        ++total;
        if (expected == got) {
            ++matched;
        } else {
            detail << "    " << what << ": expected " << expected << ", got " << got << "\n";
        }
    }
    void flush(std::ostringstream& os, bool& ok) {
        os << "  " << name << ": " << matched << "/" << total << " entries match\n";
        std::string d = detail.str();
        if (!d.empty()) {
            os << d;
            ok = false;
        }
    }
};

}  // namespace

CheckReport run_check() {
    CheckReport rep;
    std::ostringstream os;
    RelationTable table(3);
    Assembled a = assemble(3, 3, table);
    AlphaMatrix al = solve_alpha(a);
    RatMat inv = int_inverse(a.square);

    Section orders{"index orders"};
    for (int i = 0; i < 9; ++i)
        orders.check("nonbasis[" + std::to_string(i) + "]", kNonbasis[i],
                     i < static_cast<int>(a.nonbasis.size()) ? a.nonbasis[i].to_string()
                                                             : "<missing>");
    for (int i = 0; i < 3; ++i)
        orders.check("basis[" + std::to_string(i) + "]", kBasis[i],
                     i < static_cast<int>(a.basis.size()) ? a.basis[i].to_string() : "<missing>");
    orders.flush(os, rep.ok);

    Section square{"square block (9x9)"};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            square.check("[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                         std::to_string(kSquare[i][j]), a.square[i][j].get_str());
    square.flush(os, rep.ok);

    Section bb{"basis block (9x3)"};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 3; ++j)
            bb.check("[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                     std::to_string(kBasisBlock[i][j]), a.basis_block[i][j].get_str());
    bb.flush(os, rep.ok);

    Section det{"determinant"};
    det.check("det(square)", std::to_string(kDetSquare), al.det_square.get_str());
    det.flush(os, rep.ok);

    Section invsec{"inverse of the square block (9x9)"};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            invsec.check("[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                         kSquareInverse[i][j], rat_to_string(inv.at(i, j)));
    invsec.flush(os, rep.ok);

    Section alpha{"expansion matrix (9x3)"};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 3; ++j)
            alpha.check("[" + std::to_string(i) + "][" + std::to_string(j) + "]", kAlpha[i][j],
                        rat_to_string(al.alpha.at(i, j)));
    alpha.flush(os, rep.ok);

    rep.report = os.str();
    return rep;
}

}  // namespace golden33
}  // namespace eulersum
