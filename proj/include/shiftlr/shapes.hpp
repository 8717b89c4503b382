#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shiftlr {

// 1-based (row, column).
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing positive parts, no trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based; 0 past the end.
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    bool contains(const Partition& other) const;
    bool is_strict() const;
    std::string str() const;  // "5,3,2"; "" for the empty partition

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Partition with strictly decreasing parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(const Partition& p);

    const Partition& as_partition() const { return p_; }
    const std::vector<int>& parts() const { return p_.parts(); }
    int size() const { return p_.size(); }
    int length() const { return p_.length(); }
    bool empty() const { return p_.empty(); }
    int row(int i) const { return p_.row(i); }
    bool contains(const StrictPartition& other) const { return p_.contains(other.p_); }
    std::string str() const { return p_.str(); }

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    Partition p_;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_ = {});
    int size() const { return outer.size() - inner.size(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Row i of a shifted diagram occupies columns i .. i + part_i - 1.
struct ShiftedSkewShape {
    StrictPartition outer;
    StrictPartition inner;

    ShiftedSkewShape() = default;
    ShiftedSkewShape(StrictPartition outer_, StrictPartition inner_ = {});
    int size() const { return outer.size() - inner.size(); }
    friend bool operator==(const ShiftedSkewShape&, const ShiftedSkewShape&) = default;
};

Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& p);
StrictPartition staircase(int n);
Partition add_staircase(const Partition& p);
// Shape of the doubled diagram: cells (i, j+1) and (j, i) for each shifted cell (i, j).
Partition doubled_shape(const StrictPartition& p);

// Lexicographically descending.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len = std::nullopt);
std::vector<StrictPartition> enumerate_strict_partitions(int n);

bool in_young_diagram(const Partition& p, Cell c);
bool in_shifted_diagram(const Partition& p, Cell c);

}  // namespace shiftlr
