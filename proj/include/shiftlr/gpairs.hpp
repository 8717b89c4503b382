#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shiftlr/switching.hpp"
#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Doubling of an unmarked skew shifted tableau: the entry at shifted cell (i, j) is copied
// to (i, j+1) and to (j, i), so diagonal entries appear twice.
Tableau s_of(const Tableau& t);
// s(T_lam) for the row-standard shifted tableau T_lam.
Tableau doubled_target(const StrictPartition& lam);

struct PairWitness {
    Tableau u;
    bool paired = false;  // transpose(u) . u == s(T_lam)
};

struct GPairs {
    long long count = 0;
    std::vector<PairWitness> witnesses;  // every standard tableau of shape mu, when requested
};

GPairs g_via_pairs(const StrictPartition& lam, const Partition& mu, bool with_witnesses = false);
long long g_pairs_count(const StrictPartition& lam, const Partition& mu);

// Pairs (U^t, U) with U^t . U = s(T_lam), U standard of shape mu.
std::vector<TableauPair> overline_set(const StrictPartition& lam, const Partition& mu);
// The same set obtained by filtering model_T(mu^t, mu, s(T_lam)).
std::vector<TableauPair> overline_set_from_model_T(const StrictPartition& lam, const Partition& mu);

// c^{doubled lam}_{mu^t, mu}
long long c_coefficient(const StrictPartition& lam, const Partition& mu);

struct TableRow {
    int size = 0;
    StrictPartition lam;
    Partition mu;
    long long g = 0;
    long long c = 0;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

using RowSource = std::function<TableRow(const StrictPartition&, const Partition&)>;
TableRow compute_row(const StrictPartition& lam, const Partition& mu);

// Every (lam, mu) with min_size <= |lam| = |mu| <= max_size, in table order:
// size descending, lam descending, mu ascending (lexicographic).
std::vector<std::pair<StrictPartition, Partition>> sweep_pairs(int max_size, int min_size = 1);

struct SweepReport {
    std::vector<TableRow> rows;
    std::vector<TableRow> violations;
    bool ok() const { return violations.empty(); }
};

SweepReport check_g_le_c(int max_size, int jobs, const RowSource& source = compute_row, int min_size = 1);
SweepReport check_g2_le_c(int max_size, int jobs, const RowSource& source = compute_row, int min_size = 1);

std::vector<TableRow> generate_table(int max_size, bool only_g_gt_1, int jobs, const RowSource& source = compute_row);

// Image of a pair under the composite map with the fixed auxiliaries.
using CompositeMap = std::function<TableauPair(const TableauPair&)>;
CompositeMap default_composite(const StrictPartition& lam, const Partition& mu);

struct BijReport {
    StrictPartition lam;
    Partition mu;
    std::string auxiliaries;
    bool part1 = true;
    bool part2 = true;
    std::vector<std::string> problems;
    std::vector<TableauPair> witnesses;  // offending inputs
    bool ok() const { return part1 && part2; }
};

using CompositeFactory = std::function<CompositeMap(const StrictPartition&, const Partition&)>;

BijReport check_conjecture_bij(const StrictPartition& lam, const Partition& mu, const CompositeMap& map = {});

struct BijSweep {
    std::vector<BijReport> reports;
    std::vector<BijReport> failures;
    bool ok() const { return failures.empty(); }
};

BijSweep check_conjecture_bij_sweep(int max_size, int jobs, const CompositeFactory& factory = {}, int min_size = 1);

}  // namespace shiftlr
