#pragma once

#include <optional>
#include <vector>

#include "shiftlr/polynomial.hpp"
#include "shiftlr/switching.hpp"
#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Cells of nu/lambda numbered 1..N top to bottom, right to left within each row.
struct ReverseFilling {
    SkewShape shape;
    Tableau numbering;
    std::vector<Cell> cell_of;       // index k -> cell, k = 1..N (index 0 unused)
    std::vector<bool> next_in_row;   // k and k+1 share a row
    std::vector<int> above;          // h -> k when h sits directly below k, else 0

    int size() const { return static_cast<int>(cell_of.size()) - 1; }
};

ReverseFilling reverse_filling(const SkewShape& shape);

// Standard straight tableaux T with
//   k+1 weakly above and strictly right of k when k, k+1 share a row of the filling,
//   h strictly below and weakly left of k when h is directly below k in the filling.
std::vector<Tableau> enumerate_O(const SkewShape& shape, const std::optional<Partition>& filter = std::nullopt);
long long count_O(const SkewShape& shape, const Partition& filter);

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Skew tableau of the filling's shape whose cell numbered k holds the row of k in T.
Tableau word_tableau(const ReverseFilling& filling, const Tableau& t);

// Skew tableaux of the given shape rectifying to u0.
std::vector<Tableau> model_S(const SkewShape& shape, const Tableau& u0);

Tableau bijection_F(const Tableau& a, const Tableau& u, const Tableau& u0);
TableauPair bijection_F_inverse(const Tableau& s, const Tableau& v0, const Tableau& a_prime);

// Pairs (A, U) of shapes lambda, mu with A.U = v0.
std::vector<TableauPair> model_T(const Partition& lam, const Partition& mu, const Tableau& v0);

long long lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu);
long long lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu, int n, SchurExpander& expander);

}  // namespace shiftlr
