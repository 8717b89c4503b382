#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "shiftlr/shapes.hpp"

namespace shiftlr {

// Letter of the marked alphabet; ordered 1' < 1 < 2' < 2 < ...
struct Entry {
    int value = 0;
    bool marked = false;

    constexpr int key() const { return 2 * value - (marked ? 1 : 0); }
    // Position in 1 < 2 < ... < n < n' < ... < 1'.
    constexpr int hat_key(int n) const { return marked ? 2 * n + 1 - value : value; }

    friend constexpr bool operator==(const Entry&, const Entry&) = default;
    friend constexpr auto operator<=>(const Entry& a, const Entry& b) { return a.key() <=> b.key(); }
};

constexpr Entry unmarked(int v) { return {v, false}; }
constexpr Entry marked(int v) { return {v, true}; }

enum class Geometry { young, shifted };

// Skew tableau; rows[i] lists the entries of row i+1 left to right.
class Tableau {
public:
    Tableau() = default;
    Tableau(Geometry g, Partition outer, Partition inner, std::vector<std::vector<Entry>> rows);

    static Tableau young(const SkewShape& shape, std::vector<std::vector<Entry>> rows);
    static Tableau shifted(const ShiftedSkewShape& shape, std::vector<std::vector<Entry>> rows);
    // Straight Young tableau from plain values.
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);
    static Tableau skew_from_rows(const Partition& inner, const std::vector<std::vector<int>>& rows);
    static Tableau shifted_from_rows(const Partition& inner, const std::vector<std::vector<Entry>>& rows);

    Geometry geometry() const { return geometry_; }
    bool is_shifted() const { return geometry_ == Geometry::shifted; }
    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    SkewShape young_shape() const { return {outer_, inner_}; }
    ShiftedSkewShape shifted_shape() const;
    bool is_straight() const { return inner_.empty(); }
    int size() const { return outer_.size() - inner_.size(); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Entry>>& rows() const { return rows_; }

    // Column of the first skew cell in a 1-based row.
    int first_col(int row) const;
    int last_col(int row) const;
    bool in_outer(Cell c) const;
    bool in_inner(Cell c) const;
    bool contains(Cell c) const { return in_outer(c) && !in_inner(c); }
    const Entry& at(Cell c) const;
    Entry& at(Cell c);
    std::optional<Entry> get(Cell c) const;
    std::vector<Cell> cells() const;  // row-major

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        return std::tie(a.geometry_, a.outer_, a.inner_, a.rows_) <=>
               std::tie(b.geometry_, b.outer_, b.inner_, b.rows_);
    }

private:
    Geometry geometry_ = Geometry::young;
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<Entry>> rows_;
};

// Rows left to right, bottom row first.
std::vector<Entry> word(const Tableau& t);
// Count of value k, marked and unmarked together, indexed by k (index 0 unused).
std::vector<int> content(const Tableau& t);
bool content_is_partition(const Tableau& t);

bool is_semistandard_young(const Tableau& t);
// Rows and columns weakly increasing, k' at most once per row, k at most once per column.
bool satisfies_marked_rules(const Tableau& t);
bool is_valid_shifted(const Tableau& t);
bool is_standard(const Tableau& t);

Tableau superstandard(const Partition& p);
// Shifted, filled 1..n row by row.
Tableau shifted_rowstandard(const StrictPartition& p);
Tableau transpose(const Tableau& t);
std::vector<Tableau> standard_young_tableaux(const Partition& p);

std::vector<std::vector<int>> values(const Tableau& t);

std::string entry_text(const Entry& e);
// One line per row; inner cells as dots, shifted rows indented.
std::string to_text(const Tableau& t);

}  // namespace shiftlr
