#include "shiftlr/tableau.hpp"

#include <algorithm>
#include <functional>

#include "shiftlr/errors.hpp"

namespace shiftlr {

Tableau::Tableau(Geometry g, Partition outer, Partition inner, std::vector<std::vector<Entry>> rows)
    : geometry_(g), outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
    if (!outer_.contains(inner_)) throw ShapeError("inner shape not contained in outer shape");
    if (g == Geometry::shifted && (!outer_.is_strict() || !inner_.is_strict()))
        throw ShapeError("shifted tableau needs strict outer and inner shapes");
    while (static_cast<int>(rows_.size()) > outer_.length() && rows_.back().empty()) rows_.pop_back();
    if (static_cast<int>(rows_.size()) < outer_.length()) rows_.resize(outer_.length());
    if (static_cast<int>(rows_.size()) != outer_.length()) throw TableauError("row count does not match shape");
    for (int i = 1; i <= outer_.length(); ++i) {
        if (static_cast<int>(rows_[i - 1].size()) != outer_.row(i) - inner_.row(i))
            throw TableauError("row " + std::to_string(i) + " length does not match shape");
    }
}

Tableau Tableau::young(const SkewShape& shape, std::vector<std::vector<Entry>> rows) {
    return Tableau(Geometry::young, shape.outer, shape.inner, std::move(rows));
}

Tableau Tableau::shifted(const ShiftedSkewShape& shape, std::vector<std::vector<Entry>> rows) {
    return Tableau(Geometry::shifted, shape.outer.as_partition(), shape.inner.as_partition(), std::move(rows));
}

namespace {

std::vector<std::vector<Entry>> to_entries(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Entry>> out;
    for (const auto& r : rows) {
        std::vector<Entry> row;
        for (int v : r) row.push_back(unmarked(v));
        out.push_back(std::move(row));
    }
    return out;
}

Partition outer_from(const Partition& inner, const std::vector<std::vector<Entry>>& rows) {
    std::vector<int> parts;
    const int n = std::max<int>(inner.length(), static_cast<int>(rows.size()));
    for (int i = 1; i <= n; ++i) {
        int len = i <= static_cast<int>(rows.size()) ? static_cast<int>(rows[i - 1].size()) : 0;
        parts.push_back(inner.row(i) + len);
    }
    return Partition(std::move(parts));
}

}  // namespace

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) { return skew_from_rows({}, rows); }

Tableau Tableau::skew_from_rows(const Partition& inner, const std::vector<std::vector<int>>& rows) {
    auto entries = to_entries(rows);
    Partition outer = outer_from(inner, entries);
    return Tableau(Geometry::young, outer, inner, std::move(entries));
}

Tableau Tableau::shifted_from_rows(const Partition& inner, const std::vector<std::vector<Entry>>& rows) {
    Partition outer = outer_from(inner, rows);
    return Tableau(Geometry::shifted, outer, inner, rows);
}

ShiftedSkewShape Tableau::shifted_shape() const {
    return {StrictPartition(outer_), StrictPartition(inner_)};
}

int Tableau::first_col(int row) const {
    return geometry_ == Geometry::young ? inner_.row(row) + 1 : row + inner_.row(row);
}

int Tableau::last_col(int row) const {
    return geometry_ == Geometry::young ? outer_.row(row) : row + outer_.row(row) - 1;
}

bool Tableau::in_outer(Cell c) const {
    return geometry_ == Geometry::young ? in_young_diagram(outer_, c) : in_shifted_diagram(outer_, c);
}

bool Tableau::in_inner(Cell c) const {
    return geometry_ == Geometry::young ? in_young_diagram(inner_, c) : in_shifted_diagram(inner_, c);
}

const Entry& Tableau::at(Cell c) const {
    if (!contains(c)) throw TableauError("cell outside tableau");
    return rows_[c.row - 1][c.col - first_col(c.row)];
}

Entry& Tableau::at(Cell c) {
    if (!contains(c)) throw TableauError("cell outside tableau");
    return rows_[c.row - 1][c.col - first_col(c.row)];
}

std::optional<Entry> Tableau::get(Cell c) const {
    if (!contains(c)) return std::nullopt;
    return rows_[c.row - 1][c.col - first_col(c.row)];
}

std::vector<Cell> Tableau::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= num_rows(); ++r)
        for (int c = first_col(r); c <= last_col(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Entry> word(const Tableau& t) {
    std::vector<Entry> w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

std::vector<int> content(const Tableau& t) {
    std::vector<int> out(1, 0);
    for (const auto& row : t.rows())
        for (const Entry& e : row) {
            if (e.value >= static_cast<int>(out.size())) out.resize(e.value + 1, 0);
            ++out[e.value];
        }
    return out;
}

bool content_is_partition(const Tableau& t) {
    auto c = content(t);
    for (std::size_t k = 2; k < c.size(); ++k)
        if (c[k] > c[k - 1]) return false;
    return true;
}

bool is_semistandard_young(const Tableau& t) {
    if (t.is_shifted()) throw TableauError("Young-class check on a shifted tableau");
    for (const Cell& c : t.cells()) {
        const Entry& e = t.at(c);
        if (e.marked) throw TableauError("marked entry in a Young tableau");
        if (auto l = t.get({c.row, c.col - 1}); l && l->value > e.value) return false;
        if (auto a = t.get({c.row - 1, c.col}); a && a->value >= e.value) return false;
    }
    return true;
}

bool satisfies_marked_rules(const Tableau& t) {
    for (const Cell& c : t.cells()) {
        const Entry& e = t.at(c);
        if (auto l = t.get({c.row, c.col - 1}); l && (*l > e || (*l == e && e.marked))) return false;
        if (auto a = t.get({c.row - 1, c.col}); a && (*a > e || (*a == e && !e.marked))) return false;
    }
    return true;
}

bool is_valid_shifted(const Tableau& t) { return t.is_shifted() && satisfies_marked_rules(t); }

bool is_standard(const Tableau& t) {
    auto w = word(t);
    if (std::any_of(w.begin(), w.end(), [](const Entry& e) { return e.marked; })) return false;
    if (t.is_shifted() ? !satisfies_marked_rules(t) : !is_semistandard_young(t)) return false;
    std::vector<int> vals;
    for (const Entry& e : w) vals.push_back(e.value);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Tableau superstandard(const Partition& p) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= p.length(); ++i) rows.emplace_back(p.row(i), i);
    return Tableau::from_rows(rows);
}

Tableau shifted_rowstandard(const StrictPartition& p) {
    std::vector<std::vector<Entry>> rows;
    int next = 1;
    for (int part : p.parts()) {
        std::vector<Entry> row;
        for (int j = 0; j < part; ++j) row.push_back(unmarked(next++));
        rows.push_back(std::move(row));
    }
    return Tableau::shifted({p, {}}, std::move(rows));
}

Tableau transpose(const Tableau& t) {
    if (t.is_shifted()) throw TableauError("transpose needs a Young tableau");
    Partition outer = conjugate(t.outer());
    Partition inner = conjugate(t.inner());
    std::vector<std::vector<Entry>> rows(outer.length());
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) rows[r - 1].push_back(t.at({c, r}));
    return Tableau::young({outer, inner}, std::move(rows));
}

std::vector<Tableau> standard_young_tableaux(const Partition& p) {
    std::vector<Tableau> out;
    const int n = p.size();
    std::vector<std::vector<int>> rows(p.length());
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(Tableau::from_rows(rows));
            return;
        }
        for (int r = 0; r < p.length(); ++r) {
            const int len = static_cast<int>(rows[r].size());
            if (len < p.row(r + 1) && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
                rows[r].push_back(k);
                rec(k + 1);
                rows[r].pop_back();
            }
        }
    };
    rec(1);
    return out;
}

std::vector<std::vector<int>> values(const Tableau& t) {
    std::vector<std::vector<int>> out;
    for (const auto& row : t.rows()) {
        std::vector<int> r;
        for (const Entry& e : row) r.push_back(e.value);
        out.push_back(std::move(r));
    }
    return out;
}

std::string entry_text(const Entry& e) { return std::to_string(e.value) + (e.marked ? "′" : ""); }

std::string to_text(const Tableau& t) {
    std::size_t width = 1;
    for (const auto& row : t.rows())
        for (const Entry& e : row) width = std::max(width, std::to_string(e.value).size() + (e.marked ? 1 : 0));
    auto pad = [&](const std::string& s, std::size_t visible) { return std::string(width - visible, ' ') + s; };
    std::string out;
    for (int r = 1; r <= t.num_rows(); ++r) {
        std::string line;
        const int start = t.is_shifted() ? r : 1;
        for (int c = 1; c < start; ++c) line += std::string(width + 1, ' ');
        for (int c = start; c <= t.last_col(r); ++c) {
            if (c > start) line += ' ';
            if (t.in_inner({r, c})) {
                line += pad("·", 1);
            } else {
                const Entry& e = t.at({r, c});
                line += pad(entry_text(e), std::to_string(e.value).size() + (e.marked ? 1 : 0));
            }
        }
        out += line + '\n';
    }
    return out;
}

}  // namespace shiftlr
