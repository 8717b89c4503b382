#include "shiftlr/switching.hpp"

#include <algorithm>

#include "shiftlr/errors.hpp"
#include "shiftlr/lr.hpp"

namespace shiftlr {

namespace {

bool in_skew(const SkewShape& s, Cell c) { return in_young_diagram(s.outer, c) && !in_young_diagram(s.inner, c); }

// Constraints between one placed entry and the rest of its side.
bool consistent_at(const std::map<Cell, Entry>& cells, Cell at, const Entry& e) {
    for (const auto& [c, f] : cells) {
        if (c == at) continue;
        if (c.row <= at.row && c.col <= at.col) {
            if (f > e || (c.col == at.col && f == e)) return false;
        } else if (c.row >= at.row && c.col >= at.col) {
            if (f < e || (c.col == at.col && f == e)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_perforated(const std::map<Cell, Entry>& cells) {
    for (const auto& [c, e] : cells)
        if (!consistent_at(cells, c, e)) return false;
    return true;
}

bool is_perforated_pair(const PerforatedPair& p) {
    for (const auto& [c, e] : p.s_cells)
        if (!in_skew(p.shape, c) || p.t_cells.count(c)) return false;
    for (const auto& [c, e] : p.t_cells)
        if (!in_skew(p.shape, c)) return false;
    return static_cast<int>(p.s_cells.size() + p.t_cells.size()) == p.shape.size() && is_perforated(p.s_cells) &&
           is_perforated(p.t_cells);
}

bool is_legal_step(const PerforatedPair& p, Cell s_cell, Cell t_cell) {
    const bool adjacent = (t_cell.row == s_cell.row && t_cell.col == s_cell.col + 1) ||
                          (t_cell.col == s_cell.col && t_cell.row == s_cell.row + 1);
    if (!adjacent) return false;
    auto si = p.s_cells.find(s_cell);
    auto ti = p.t_cells.find(t_cell);
    if (si == p.s_cells.end() || ti == p.t_cells.end()) return false;
    const Entry s = si->second, t = ti->second;
    // Only the two moved entries can break either side.
    auto s_side = p.s_cells;
    s_side.erase(s_cell);
    auto t_side = p.t_cells;
    t_side.erase(t_cell);
    return consistent_at(s_side, t_cell, s) && consistent_at(t_side, s_cell, t);
}

PerforatedPair switch_step(const PerforatedPair& p, Cell s_cell, Cell t_cell) {
    if (!is_legal_step(p, s_cell, t_cell)) throw PreconditionError("illegal switch");
    PerforatedPair out = p;
    const Entry s = out.s_cells.at(s_cell), t = out.t_cells.at(t_cell);
    out.s_cells.erase(s_cell);
    out.t_cells.erase(t_cell);
    out.s_cells[t_cell] = s;
    out.t_cells[s_cell] = t;
    return out;
}

std::vector<SwitchStep> legal_steps(const PerforatedPair& p) {
    std::vector<SwitchStep> out;
    for (const auto& [c, e] : p.s_cells) {
        const Cell right{c.row, c.col + 1}, below{c.row + 1, c.col};
        if (is_legal_step(p, c, right)) out.push_back({c, right});
        if (is_legal_step(p, c, below)) out.push_back({c, below});
    }
    return out;
}

PerforatedPair switch_all(PerforatedPair p, const StepChooser& choose) {
    if (!is_perforated_pair(p)) throw PreconditionError("not a perforated pair");
    for (;;) {
        if (!choose) {
            bool moved = false;
            for (const auto& [c, e] : p.s_cells) {
                const Cell right{c.row, c.col + 1}, below{c.row + 1, c.col};
                const Cell* target = is_legal_step(p, c, right) ? &right : is_legal_step(p, c, below) ? &below : nullptr;
                if (target) {
                    p = switch_step(p, c, *target);
                    moved = true;
                    break;
                }
            }
            if (!moved) return p;
        } else {
            auto steps = legal_steps(p);
            if (steps.empty()) return p;
            const SwitchStep st = choose(steps);
            p = switch_step(p, st.s_cell, st.t_cell);
        }
    }
}

namespace {

// Young skew tableau from a cell map whose cells form outer/inner with the given inner.
Tableau tableau_from_cells(const Partition& inner, const std::map<Cell, Entry>& cells, int nrows) {
    std::vector<std::vector<Entry>> rows(nrows);
    for (const auto& [c, e] : cells) {
        if (c.col != inner.row(c.row) + 1 + static_cast<int>(rows[c.row - 1].size()))
            throw TableauError("switched cells do not form a skew shape");
        rows[c.row - 1].push_back(e);
    }
    std::vector<int> outer(nrows);
    for (int r = 1; r <= nrows; ++r) outer[r - 1] = inner.row(r) + static_cast<int>(rows[r - 1].size());
    return Tableau::young({Partition(outer), inner}, std::move(rows));
}

}  // namespace

Switched switch_tableaux(const Tableau& s, const Tableau& t, const StepChooser& choose) {
    if (s.is_shifted() || t.is_shifted()) throw TableauError("switching needs Young tableaux");
    if (t.inner() != s.outer()) throw PreconditionError("T does not extend S");
    PerforatedPair p{{t.outer(), s.inner()}, {}, {}};
    for (const Cell& c : s.cells()) p.s_cells[c] = s.at(c);
    for (const Cell& c : t.cells()) p.t_cells[c] = t.at(c);
    const PerforatedPair done = switch_all(std::move(p), choose);
    const int nrows = t.outer().length();
    Tableau t_inner = tableau_from_cells(s.inner(), done.t_cells, nrows);
    Tableau s_outer = tableau_from_cells(t_inner.outer(), done.s_cells, nrows);
    return {std::move(t_inner), std::move(s_outer)};
}

Tableau bijection_B(const Tableau& s, const Tableau& a0) {
    if (a0.is_shifted() || !a0.is_straight()) throw PreconditionError("A0 must be a straight Young tableau");
    if (a0.outer() != s.inner()) throw PreconditionError("A0 must have the inner shape of S");
    return switch_tableaux(a0, s).s_outer;
}

TableauPair composite_S(const TableauPair& pair, const Tableau& u0, const Tableau& a0, const Tableau& w0) {
    const Tableau s = bijection_F(pair.a, pair.u, u0);
    const Tableau s2 = bijection_B(s, a0);
    return bijection_F_inverse(s2, w0, superstandard(s2.inner()));
}

}  // namespace shiftlr
