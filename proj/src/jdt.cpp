#include "shiftlr/jdt.hpp"

#include <algorithm>

#include "shiftlr/errors.hpp"

namespace shiftlr {

int insert_value(Rows& rows, int x) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
    }
    rows.push_back({x});
    return static_cast<int>(rows.size()) - 1;
}

namespace {

void require_straight_young(const Tableau& t, const char* what) {
    if (t.is_shifted() || !t.is_straight()) throw TableauError(std::string(what) + " needs a straight Young tableau");
}

}  // namespace

Insertion row_insert(const Tableau& t, int x) {
    require_straight_young(t, "row insertion");
    Rows rows = values(t);
    const int r = insert_value(rows, x);
    return {Tableau::from_rows(rows), {r + 1, static_cast<int>(rows[r].size())}};
}

Tableau product(const Tableau& t, const Tableau& u) {
    require_straight_young(t, "product");
    require_straight_young(u, "product");
    Rows rows = values(t);
    for (const Entry& e : word(u)) insert_value(rows, e.value);
    return Tableau::from_rows(rows);
}

Tableau star(const Tableau& t, const Tableau& u) {
    require_straight_young(t, "star");
    require_straight_young(u, "star");
    const int shift = t.outer().row(1);
    std::vector<int> outer, inner;
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= u.num_rows(); ++i) {
        outer.push_back(shift + u.outer().row(i));
        inner.push_back(shift);
        rows.push_back(u.rows()[i - 1]);
    }
    for (int i = 1; i <= t.num_rows(); ++i) {
        outer.push_back(t.outer().row(i));
        inner.push_back(0);
        rows.push_back(t.rows()[i - 1]);
    }
    return Tableau::young({Partition(outer), Partition(inner)}, std::move(rows));
}

std::vector<Cell> inner_corners(const Tableau& t) {
    std::vector<Cell> out;
    for (int r = 1; r <= t.inner().length(); ++r) {
        const Cell c{r, t.first_col(r) - 1};
        if (t.in_inner(c) && !t.in_inner({r, c.col + 1}) && !t.in_inner({r + 1, c.col})) out.push_back(c);
    }
    return out;
}

Tableau slide(const Tableau& t, Cell corner) {
    if (!t.in_inner(corner) || t.in_inner({corner.row, corner.col + 1}) || t.in_inner({corner.row + 1, corner.col}))
        throw TableauError("slide target is not an inner corner");
    if (t.is_shifted())
        for (const auto& row : t.rows())
            for (const Entry& e : row)
                if (e.marked) throw TableauError("shifted slide needs an unmarked tableau");

    // Absolute grid; value 0 means no entry.
    const int nrows = t.num_rows();
    std::vector<std::vector<Entry>> grid(nrows + 2);
    for (int r = 1; r <= nrows; ++r) {
        grid[r].assign(t.last_col(r) + 2, Entry{});
        for (int c = t.first_col(r); c <= t.last_col(r); ++c) grid[r][c] = t.at({r, c});
    }
    auto occupied = [&](int r, int c) {
        return r >= 1 && r <= nrows && c < static_cast<int>(grid[r].size()) && grid[r][c].value != 0;
    };
    Cell hole = corner;
    for (;;) {
        const bool has_right = occupied(hole.row, hole.col + 1);
        const bool has_below = occupied(hole.row + 1, hole.col);
        if (!has_right && !has_below) break;
        bool take_right = has_right;
        if (has_right && has_below) take_right = grid[hole.row][hole.col + 1] < grid[hole.row + 1][hole.col];
        const Cell from = take_right ? Cell{hole.row, hole.col + 1} : Cell{hole.row + 1, hole.col};
        grid[hole.row][hole.col] = grid[from.row][from.col];
        grid[from.row][from.col] = Entry{};
        hole = from;
    }

    std::vector<int> outer = t.outer().parts(), inner = t.inner().parts();
    --outer[hole.row - 1];
    --inner[corner.row - 1];
    Partition new_outer(outer), new_inner(inner);
    const bool shifted = t.is_shifted();
    std::vector<std::vector<Entry>> rows(new_outer.length());
    for (int r = 1; r <= new_outer.length(); ++r) {
        const int first = shifted ? r + new_inner.row(r) : new_inner.row(r) + 1;
        const int last = shifted ? r + new_outer.row(r) - 1 : new_outer.row(r);
        for (int c = first; c <= last; ++c) rows[r - 1].push_back(grid[r][c]);
    }
    return Tableau(t.geometry(), new_outer, new_inner, std::move(rows));
}

Tableau rect_with(const Tableau& t, const std::function<Cell(const std::vector<Cell>&)>& choose) {
    Tableau cur = t;
    while (!cur.inner().empty()) cur = slide(cur, choose(inner_corners(cur)));
    return cur;
}

Tableau rect(const Tableau& t) {
    return rect_with(t, [](const std::vector<Cell>& corners) { return corners.front(); });
}

bool is_lexicographic(const TwoRowedArray& a) {
    if (a.top.size() != a.bottom.size()) return false;
    for (std::size_t i = 1; i < a.top.size(); ++i) {
        if (a.top[i] < a.top[i - 1]) return false;
        if (a.top[i] == a.top[i - 1] && a.bottom[i] < a.bottom[i - 1]) return false;
    }
    return true;
}

RskPair rsk_forward(const TwoRowedArray& a) {
    if (!is_lexicographic(a)) throw PreconditionError("two-rowed array is not in lexicographic order");
    Rows p, q;
    for (std::size_t i = 0; i < a.top.size(); ++i) {
        const int r = insert_value(p, a.bottom[i]);
        if (r == static_cast<int>(q.size())) q.emplace_back();
        q[r].push_back(a.top[i]);
    }
    return {Tableau::from_rows(q), Tableau::from_rows(p)};
}

TwoRowedArray rsk_inverse(const Tableau& q, const Tableau& p) {
    require_straight_young(q, "inverse RSK");
    require_straight_young(p, "inverse RSK");
    if (q.outer() != p.outer()) throw PreconditionError("inverse RSK needs tableaux of the same shape");
    if (!is_semistandard_young(q) || !is_semistandard_young(p))
        throw PreconditionError("inverse RSK needs semistandard tableaux");
    Rows qr = values(q), pr = values(p);
    const std::size_t n = q.size();
    TwoRowedArray out{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t k = n; k-- > 0;) {
        // Rightmost box holding the largest entry of Q.
        int best_row = -1, best_val = 0, best_col = -1;
        for (std::size_t r = 0; r < qr.size(); ++r) {
            if (qr[r].empty()) continue;
            const int v = qr[r].back();
            const int c = static_cast<int>(qr[r].size()) - 1;
            if (v > best_val || (v == best_val && c > best_col)) best_val = v, best_row = static_cast<int>(r), best_col = c;
        }
        qr[best_row].pop_back();
        int y = pr[best_row].back();
        pr[best_row].pop_back();
        for (int r = best_row - 1; r >= 0; --r) {
            auto& row = pr[r];
            auto it = std::lower_bound(row.begin(), row.end(), y);  // first >= y
            --it;                                                   // rightmost < y
            std::swap(*it, y);
        }
        while (!qr.empty() && qr.back().empty()) qr.pop_back(), pr.pop_back();
        out.top[k] = best_val;
        out.bottom[k] = y;
    }
    return out;
}

}  // namespace shiftlr
