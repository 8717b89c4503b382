#pragma once

#include <random>
#include <string>
#include <vector>

#include "shiftlr/shapes.hpp"
#include "shiftlr/tableau.hpp"

namespace shiftlr::testing {

inline Tableau Y(const std::vector<std::vector<int>>& rows) { return Tableau::from_rows(rows); }
inline Tableau skew(const Partition& inner, const std::vector<std::vector<int>>& rows) {
    return Tableau::skew_from_rows(inner, rows);
}

// Single-digit letters, each optionally followed by ': "22'3121'111".
std::vector<Entry> marked_word(const std::string& text);
// Space-separated letters per row, "1 2' 5"; multi-digit values allowed.
std::vector<Entry> marked_row(const std::string& text);
// Straight Young tableau over the marked alphabet.
Tableau MY(const std::vector<std::string>& rows);
// Skew shifted tableau with the given inner shape.
Tableau MS(const Partition& inner, const std::vector<std::string>& rows);

// Random partition of n with at most max_len parts.
Partition random_partition(std::mt19937& rng, int n, int max_len = 1 << 20);
StrictPartition random_strict_partition(std::mt19937& rng, int n);
// Random partition contained in p with `remove` fewer cells (clamped).
Partition random_subpartition(std::mt19937& rng, const Partition& p, int remove);
StrictPartition random_strict_subpartition(std::mt19937& rng, const StrictPartition& p, int remove);

// Semistandard filling with small random increments.
Tableau random_semistandard(std::mt19937& rng, const SkewShape& shape, int spread = 2);
// Unmarked shifted filling, rows weakly and columns strictly increasing.
Tableau random_unmarked_shifted(std::mt19937& rng, const ShiftedSkewShape& shape, int spread = 2);
// Standard fillings of a skew shape (either geometry), uniformly over random linear extensions.
Tableau random_standard(std::mt19937& rng, Geometry g, const Partition& outer, const Partition& inner);

// Every semistandard skew tableau of the given shape with the given content (index 0 unused).
std::vector<Tableau> all_semistandard(const SkewShape& shape, const std::vector<int>& content);
// Every standard filling of a skew shape.
std::vector<Tableau> all_standard(Geometry g, const Partition& outer, const Partition& inner);

}  // namespace shiftlr::testing
