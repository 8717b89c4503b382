#include "support.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace shiftlr::testing {

std::vector<Entry> marked_word(const std::string& text) {
    std::vector<Entry> w;
    for (char ch : text) {
        if (ch == '\'') w.back().marked = true;
        else w.push_back(unmarked(ch - '0'));
    }
    return w;
}

std::vector<Entry> marked_row(const std::string& text) {
    std::vector<Entry> row;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const bool m = tok.back() == '\'';
        if (m) tok.pop_back();
        row.push_back({std::stoi(tok), m});
    }
    return row;
}

Tableau MY(const std::vector<std::string>& rows) {
    std::vector<std::vector<Entry>> r;
    std::vector<int> shape;
    for (const auto& text : rows) {
        r.push_back(marked_row(text));
        shape.push_back(static_cast<int>(r.back().size()));
    }
    return Tableau::young({Partition(shape)}, std::move(r));
}

Tableau MS(const Partition& inner, const std::vector<std::string>& rows) {
    std::vector<std::vector<Entry>> r;
    for (const auto& text : rows) r.push_back(marked_row(text));
    return Tableau::shifted_from_rows(inner, r);
}

Partition random_partition(std::mt19937& rng, int n, int max_len) {
    for (;;) {
        std::vector<int> parts;
        int left = n;
        while (left > 0 && static_cast<int>(parts.size()) < max_len) {
            std::uniform_int_distribution<int> d(1, parts.empty() ? left : std::min(left, parts.back()));
            parts.push_back(d(rng));
            left -= parts.back();
        }
        if (left == 0) {
            std::sort(parts.rbegin(), parts.rend());
            return Partition(parts);
        }
    }
}

StrictPartition random_strict_partition(std::mt19937& rng, int n) {
    auto all = enumerate_strict_partitions(n);
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    return all[d(rng)];
}

Partition random_subpartition(std::mt19937& rng, const Partition& p, int remove) {
    std::vector<int> parts = p.parts();
    for (int k = 0; k < remove; ++k) {
        std::vector<int> corners;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] > 0 && (i + 1 == parts.size() || parts[i + 1] < parts[i])) corners.push_back(static_cast<int>(i));
        if (corners.empty()) break;
        std::uniform_int_distribution<std::size_t> d(0, corners.size() - 1);
        --parts[corners[d(rng)]];
    }
    return Partition(parts);
}

StrictPartition random_strict_subpartition(std::mt19937& rng, const StrictPartition& p, int remove) {
    std::vector<int> parts = p.parts();
    for (int k = 0; k < remove; ++k) {
        std::vector<int> corners;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const int next = i + 1 < parts.size() ? parts[i + 1] : 0;
            if (parts[i] > 0 && (parts[i] - 1 > next || parts[i] == 1)) corners.push_back(static_cast<int>(i));
        }
        if (corners.empty()) break;
        std::uniform_int_distribution<std::size_t> d(0, corners.size() - 1);
        --parts[corners[d(rng)]];
    }
    return StrictPartition(parts);
}

namespace {

Tableau random_fill(std::mt19937& rng, Geometry g, const Partition& outer, const Partition& inner, int spread) {
    std::vector<std::vector<Entry>> rows(outer.length());
    Tableau probe(g, outer, inner, [&] {
        std::vector<std::vector<Entry>> r(outer.length());
        for (int i = 1; i <= outer.length(); ++i) r[i - 1].assign(outer.row(i) - inner.row(i), unmarked(1));
        return r;
    }());
    std::uniform_int_distribution<int> d(0, spread);
    for (const Cell& c : probe.cells()) {
        int lo = 1;
        if (auto l = probe.get({c.row, c.col - 1})) lo = std::max(lo, l->value);
        if (auto a = probe.get({c.row - 1, c.col})) lo = std::max(lo, a->value + 1);
        probe.at(c) = unmarked(lo + d(rng));
    }
    return probe;
}

}  // namespace

Tableau random_semistandard(std::mt19937& rng, const SkewShape& shape, int spread) {
    return random_fill(rng, Geometry::young, shape.outer, shape.inner, spread);
}

Tableau random_unmarked_shifted(std::mt19937& rng, const ShiftedSkewShape& shape, int spread) {
    return random_fill(rng, Geometry::shifted, shape.outer.as_partition(), shape.inner.as_partition(), spread);
}

namespace {

// Cells are filled in increasing order; a cell is free once its left and upper neighbours are filled.
template <class Visit>
void standard_fillings(Geometry g, const Partition& outer, const Partition& inner, Visit&& visit, std::mt19937* rng) {
    std::vector<std::vector<Entry>> rows(outer.length());
    for (int i = 1; i <= outer.length(); ++i) rows[i - 1].assign(outer.row(i) - inner.row(i), Entry{});
    Tableau t(g, outer, inner, rows);
    const auto cells = t.cells();
    const int n = static_cast<int>(cells.size());
    auto is_free = [&](const Cell& c) {
        if (t.at(c).value != 0) return false;
        auto l = t.get({c.row, c.col - 1});
        auto a = t.get({c.row - 1, c.col});
        return (!l || l->value != 0) && (!a || a->value != 0);
    };
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k > n) return visit(t);
        std::vector<Cell> options;
        for (const Cell& c : cells)
            if (is_free(c)) options.push_back(c);
        if (rng) {
            std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
            options = {options[d(*rng)]};
        }
        for (const Cell& c : options) {
            t.at(c) = unmarked(k);
            if (!rec(k + 1)) return false;
            t.at(c) = Entry{};
        }
        return true;
    };
    rec(1);
}

}  // namespace

Tableau random_standard(std::mt19937& rng, Geometry g, const Partition& outer, const Partition& inner) {
    Tableau out;
    standard_fillings(g, outer, inner, [&](const Tableau& t) { out = t; return false; }, &rng);
    return out;
}

std::vector<Tableau> all_standard(Geometry g, const Partition& outer, const Partition& inner) {
    std::vector<Tableau> out;
    standard_fillings(g, outer, inner, [&](const Tableau& t) { out.push_back(t); return true; }, nullptr);
    return out;
}

std::vector<Tableau> all_semistandard(const SkewShape& shape, const std::vector<int>& target) {
    std::vector<Tableau> out;
    std::vector<std::vector<Entry>> rows(shape.outer.length());
    for (int i = 1; i <= shape.outer.length(); ++i) rows[i - 1].assign(shape.outer.row(i) - shape.inner.row(i), Entry{});
    Tableau t = Tableau::young(shape, rows);
    const auto cells = t.cells();
    std::vector<int> left = target;
    const int maxv = static_cast<int>(target.size()) - 1;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            out.push_back(t);
            return;
        }
        const Cell c = cells[i];
        int lo = 1;
        if (auto l = t.get({c.row, c.col - 1})) lo = std::max(lo, l->value);
        if (auto a = t.get({c.row - 1, c.col})) lo = std::max(lo, a->value + 1);
        for (int v = lo; v <= maxv; ++v) {
            if (left[v] == 0) continue;
            --left[v];
            t.at(c) = unmarked(v);
            rec(i + 1);
            t.at(c) = Entry{};
            ++left[v];
        }
    };
    rec(0);
    return out;
}

}  // namespace shiftlr::testing
