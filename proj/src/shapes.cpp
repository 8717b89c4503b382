#include "shiftlr/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "shiftlr/errors.hpp"

namespace shiftlr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ShapeError("partition parts must be weakly decreasing: " + str());
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.row(i) > row(i)) return false;
    return true;
}

bool Partition::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end(), std::less_equal<>()) == parts_.end();
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

StrictPartition::StrictPartition(std::vector<int> parts) : StrictPartition(Partition(std::move(parts))) {}

StrictPartition::StrictPartition(const Partition& p) : p_(p) {
    if (!p_.is_strict()) throw ShapeError("partition is not strict: " + p_.str());
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw ShapeError("inner shape " + inner.str() + " not contained in " + outer.str());
}

ShiftedSkewShape::ShiftedSkewShape(StrictPartition outer_, StrictPartition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw ShapeError("inner shape " + inner.str() + " not contained in " + outer.str());
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "0" || text == "()") return Partition();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ShapeError("malformed partition: '" + text + "'");
        }
        if (used != item.size()) throw ShapeError("malformed partition: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(p.empty() ? 0 : p.row(1), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

StrictPartition staircase(int n) {
    if (n < 0) throw ShapeError("staircase length must be non-negative");
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    return StrictPartition(std::move(parts));
}

Partition add_staircase(const Partition& p) {
    std::vector<int> parts = p.parts();
    const int l = p.length();
    for (int i = 0; i < l; ++i) parts[i] += l - i;
    return Partition(std::move(parts));
}

Partition doubled_shape(const StrictPartition& p) {
    // Row i gets p_i + i cells to the right of the diagonal mirror, plus the
    // mirrored column i for rows past the length.
    const Partition& q = p.as_partition();
    const int l = q.length();
    std::vector<int> rows;
    const int max_row = l == 0 ? 0 : q.row(1);
    for (int i = 1; i <= std::max(l, max_row); ++i) {
        int len = 0;
        // Mirrored cells (i, j) for j <= i come from shifted cell (j, i).
        for (int j = 1; j <= i; ++j)
            if (in_shifted_diagram(q, {j, i})) len = j;
        // Shifted cell (i, j) lands at (i, j + 1).
        if (i <= l) len = q.row(i) + i;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

namespace {

void partitions_rec(int remaining, int max_part, std::optional<int> max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len && static_cast<int>(cur.size()) >= *max_len) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, max_len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len) {
    if (n < 0) throw ShapeError("partition size must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, max_len, cur, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict_partitions(int n) {
    std::vector<StrictPartition> out;
    for (const auto& p : enumerate_partitions(n))
        if (p.is_strict()) out.emplace_back(p);
    return out;
}

bool in_young_diagram(const Partition& p, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.col <= p.row(c.row);
}

bool in_shifted_diagram(const Partition& p, Cell c) {
    return c.row >= 1 && c.col >= c.row && c.col < c.row + p.row(c.row);
}

}  // namespace shiftlr
