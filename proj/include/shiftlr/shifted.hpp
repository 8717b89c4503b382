#pragma once

#include <functional>
#include <map>
#include <vector>

#include "shiftlr/polynomial.hpp"
#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Shifted jeu de taquin; entries must be unmarked.
Tableau shifted_slide(const Tableau& t, Cell corner);
Tableau srect(const Tableau& t);
Tableau srect_with(const Tableau& t, const std::function<Cell(const std::vector<Cell>&)>& choose);

// m[j][i] for 0 <= j <= 2n and 0 <= i <= largest letter; column i = 0 is unused.
struct LatticeStatistics {
    int n = 0;
    std::vector<std::vector<int>> m;
    int at(int i, int j) const { return i < static_cast<int>(m[j].size()) ? m[j][i] : 0; }
};

LatticeStatistics lattice_statistics(const std::vector<Entry>& w);
// The comparison m_i(j) = m_{i-1}(j) is only made for i >= 2; there is no letter 0.
bool is_shifted_lattice_word(const std::vector<Entry>& w);

// Leftmost letter of each {i, i'} in the word is unmarked.
bool leftmost_letters_unmarked(const std::vector<Entry>& w);

// Skew shifted tableaux of shape nu/mu and content lam whose word is a shifted lattice word
// with unmarked leftmost letters.
std::vector<Tableau> stembridge_f_set(const StrictPartition& lam, const StrictPartition& mu,
                                      const StrictPartition& nu);
long long f_coefficient(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu);

// Same conditions on marked fillings of the ordinary diagram of mu.
std::vector<Tableau> stembridge_g_set(const StrictPartition& lam, const Partition& mu);
long long g_via_shape_mu(const StrictPartition& lam, const Partition& mu);

std::vector<Tableau> standard_shifted_tableaux(const ShiftedSkewShape& shape);
long long f_via_standard(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu);

// Sum of x^T over marked shifted tableaux of shape lam with letters up to n.
Polynomial schur_q_polynomial(const StrictPartition& lam, int n);
// Nonzero g_{lam,mu} over mu |- |lam|.
std::map<Partition, long long> p_expansion(const StrictPartition& lam);

}  // namespace shiftlr
