#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Columns of a two-rowed array, in lexicographic order.
struct TwoRowedArray {
    std::vector<int> top;
    std::vector<int> bottom;
    friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
};

struct Insertion {
    Tableau tableau;
    Cell new_cell;
};

// Bumps the leftmost entry strictly greater than x, row by row.
Insertion row_insert(const Tableau& t, int x);
// T.U: inserts word(U) into T.
Tableau product(const Tableau& t, const Tableau& u);
// U above and to the right of T.
Tableau star(const Tableau& t, const Tableau& u);

std::vector<Cell> inner_corners(const Tableau& t);
// One jeu de taquin slide into an inner corner; works for both geometries.
Tableau slide(const Tableau& t, Cell corner);
// Slides at inner corners taken in row-major order.
Tableau rect(const Tableau& t);
// Same, with the corner picked by `choose` among the current inner corners.
Tableau rect_with(const Tableau& t, const std::function<Cell(const std::vector<Cell>&)>& choose);

struct RskPair {
    Tableau q;  // recording tableau, from the top row
    Tableau p;  // insertion tableau, from the bottom row
};

bool is_lexicographic(const TwoRowedArray& a);
RskPair rsk_forward(const TwoRowedArray& a);
TwoRowedArray rsk_inverse(const Tableau& q, const Tableau& p);

// Value-level helpers for hot loops: rows of a straight tableau.
using Rows = std::vector<std::vector<int>>;
int insert_value(Rows& rows, int x);  // returns 0-based row of the new box

}  // namespace shiftlr
