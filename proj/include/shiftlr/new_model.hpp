#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Cells of a skew shifted shape numbered 1..N top to bottom, right to left within each row.
struct ShiftedReverseFilling {
    ShiftedSkewShape shape;
    Tableau numbering;
    std::vector<Cell> cell_of;      // index k -> cell (index 0 unused)
    std::vector<bool> next_in_row;  // k and k+1 share a row
    std::vector<int> above;         // h -> k when h sits directly below k, else 0

    int size() const { return static_cast<int>(cell_of.size()) - 1; }
};

ShiftedReverseFilling shifted_reverse_filling(const ShiftedSkewShape& shape);

// A candidate is a straight Young tableau holding exactly one of k, k' for each k = 1..N.
bool is_candidate(const Tableau& t);

// When k, k+1 share a row of the filling: (k+1)* weakly above k, or strictly above k'.
bool check_C1(const Tableau& t, const ShiftedReverseFilling& filling);
// When h is directly below k in the filling: h* weakly below k', or strictly below k.
bool check_C2(const Tableau& t, const ShiftedReverseFilling& filling);
// Rightmost letter of each row unmarked.
bool check_C3(const Tableau& t);
// Conditions on rows reordered by 1 < 2 < ... < N < N' < ... < 1'.
bool check_C4(const Tableau& t);
bool in_Otilde(const Tableau& t, const ShiftedReverseFilling& filling);

struct OtildeNode {
    Tableau tableau;
    std::vector<OtildeNode> children;
};

// Search tree: each node adds (k+1)* subject to C1 and C2; only branches reaching a leaf
// that passes C3 and C4 are kept. With a filter, rows longer than the filter are cut early.
std::vector<OtildeNode> otilde_tree(const ShiftedSkewShape& shape, const std::optional<StrictPartition>& filter = std::nullopt);
// Sorted leaves of the tree.
std::vector<Tableau> enumerate_Otilde(const ShiftedSkewShape& shape,
                                      const std::optional<StrictPartition>& filter = std::nullopt);
// Indented, one node per line, rows separated by " / ".
std::string tree_text(const std::vector<OtildeNode>& roots);

long long f_via_new_model(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu);
long long g_via_new_model(const StrictPartition& lam, const Partition& mu);

// Stembridge tableau of shape nu/mu -> member of the new model; letter w_i = k* puts (N+1-i)* in row k.
Tableau phi(const Tableau& stembridge_tableau);
Tableau psi(const Tableau& candidate, const ShiftedSkewShape& shape);

}  // namespace shiftlr
