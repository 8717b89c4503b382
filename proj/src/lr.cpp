#include "shiftlr/lr.hpp"

#include <algorithm>
#include <functional>

#include "shiftlr/errors.hpp"
#include "shiftlr/jdt.hpp"

namespace shiftlr {

ReverseFilling reverse_filling(const SkewShape& shape) {
    ReverseFilling f;
    f.shape = shape;
    std::vector<std::vector<Entry>> rows(shape.outer.length());
    f.cell_of.push_back({0, 0});
    int k = 0;
    for (int r = 1; r <= shape.outer.length(); ++r) {
        rows[r - 1].resize(shape.outer.row(r) - shape.inner.row(r));
        for (int c = shape.outer.row(r); c > shape.inner.row(r); --c) {
            rows[r - 1][c - shape.inner.row(r) - 1] = unmarked(++k);
            f.cell_of.push_back({r, c});
        }
    }
    f.numbering = Tableau::young(shape, std::move(rows));
    f.next_in_row.assign(k + 2, false);
    f.above.assign(k + 1, 0);
    for (int j = 1; j <= k; ++j) {
        if (j < k && f.cell_of[j + 1].row == f.cell_of[j].row) f.next_in_row[j] = true;
        const Cell up{f.cell_of[j].row - 1, f.cell_of[j].col};
        if (auto e = f.numbering.get(up)) f.above[j] = e->value;
    }
    return f;
}

namespace {

// Depth-first placement of 1..N at addable corners; `leaf` sees the row of each letter.
template <class Leaf>
void search_O(const ReverseFilling& f, const std::optional<Partition>& filter, Leaf&& leaf) {
    const int n = f.size();
    std::vector<int> len;       // current row lengths
    std::vector<Cell> pos(n + 1);
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            leaf(pos, len);
            return;
        }
        for (int r = 0; r <= static_cast<int>(len.size()); ++r) {
            const int cur = r < static_cast<int>(len.size()) ? len[r] : 0;
            if (r > 0 && len[r - 1] <= cur) continue;
            if (filter && cur >= filter->row(r + 1)) continue;
            const Cell c{r + 1, cur + 1};
            if (k > 1 && f.next_in_row[k - 1]) {
                const Cell p = pos[k - 1];
                if (!(c.row <= p.row && c.col > p.col)) continue;
            }
            if (const int j = f.above[k]; j) {
                const Cell p = pos[j];
                if (!(c.row > p.row && c.col <= p.col)) continue;
            }
            if (r == static_cast<int>(len.size())) len.push_back(0);
            ++len[r];
            pos[k] = c;
            rec(k + 1);
            if (--len[r] == 0) len.pop_back();
        }
    };
    rec(1);
}

}  // namespace

std::vector<Tableau> enumerate_O(const SkewShape& shape, const std::optional<Partition>& filter) {
    const ReverseFilling f = reverse_filling(shape);
    if (filter && filter->size() != f.size()) return {};
    std::vector<Tableau> out;
    search_O(f, filter, [&](const std::vector<Cell>& pos, const std::vector<int>& len) {
        if (filter && Partition(len) != *filter) return;
        std::vector<std::vector<int>> rows(len.size());
        for (auto& row : rows) row.reserve(8);
        for (int k = 1; k < static_cast<int>(pos.size()); ++k) rows[pos[k].row - 1].push_back(k);
        out.push_back(Tableau::from_rows(rows));
    });
    return out;
}

long long count_O(const SkewShape& shape, const Partition& filter) {
    const ReverseFilling f = reverse_filling(shape);
    if (filter.size() != f.size()) return 0;
    long long count = 0;
    search_O(f, filter, [&](const std::vector<Cell>&, const std::vector<int>&) { ++count; });
    return count;
}

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() + mu.size() != nu.size() || !nu.contains(lam)) return 0;
    return count_O({nu, lam}, mu);
}

Tableau word_tableau(const ReverseFilling& f, const Tableau& t) {
    std::vector<int> row_of(f.size() + 1, 0);
    for (const Cell& c : t.cells()) row_of.at(t.at(c).value) = c.row;
    Tableau out = f.numbering;
    for (const Cell& c : out.cells()) out.at(c) = unmarked(row_of[f.numbering.at(c).value]);
    return out;
}

std::vector<Tableau> model_S(const SkewShape& shape, const Tableau& u0) {
    if (u0.is_shifted() || !u0.is_straight() || !is_semistandard_young(u0))
        throw PreconditionError("U0 must be a straight semistandard Young tableau");
    if (u0.size() != shape.size()) return {};
    std::vector<Tableau> out;
    if (u0 == superstandard(u0.outer())) {
        const ReverseFilling f = reverse_filling(shape);
        for (const Tableau& t : enumerate_O(shape, u0.outer())) out.push_back(word_tableau(f, t));
        return out;
    }
    // Switch u0 past S(nu/alpha, U_lambda), alpha = shape of u0.
    if (!shape.outer.contains(u0.outer())) return {};
    for (const Tableau& s : model_S({shape.outer, u0.outer()}, superstandard(shape.inner)))
        out.push_back(bijection_B(s, u0));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_straight_semistandard(const Tableau& t, const char* what) {
    if (t.is_shifted() || !t.is_straight() || !is_semistandard_young(t))
        throw PreconditionError(std::string(what) + " must be a straight semistandard Young tableau");
}

}  // namespace

Tableau bijection_F(const Tableau& a, const Tableau& u, const Tableau& u0) {
    require_straight_semistandard(a, "A");
    require_straight_semistandard(u, "U");
    require_straight_semistandard(u0, "U0");
    if (u.outer() != u0.outer()) throw PreconditionError("U and U0 must have the same shape");
    const TwoRowedArray arr = rsk_inverse(u0, u);
    Rows rows = values(a);
    std::map<Cell, int> placed;
    for (std::size_t k = 0; k < arr.top.size(); ++k) {
        const int r = insert_value(rows, arr.bottom[k]);
        placed[{r + 1, static_cast<int>(rows[r].size())}] = arr.top[k];
    }
    std::vector<int> outer;
    for (const auto& row : rows) outer.push_back(static_cast<int>(row.size()));
    std::vector<std::vector<Entry>> srows(rows.size());
    for (const auto& [c, v] : placed) srows[c.row - 1].push_back(unmarked(v));
    // Boxes added in one row are contiguous, so map order matches column order.
    return Tableau::young({Partition(outer), a.outer()}, std::move(srows));
}

TableauPair bijection_F_inverse(const Tableau& s, const Tableau& v0, const Tableau& a_prime) {
    require_straight_semistandard(v0, "V0");
    require_straight_semistandard(a_prime, "A'");
    if (s.is_shifted() || !is_semistandard_young(s)) throw PreconditionError("S must be a semistandard skew tableau");
    if (a_prime.outer() != s.inner()) throw PreconditionError("A' must fill the inner shape of S");
    if (v0.outer() != s.outer()) throw PreconditionError("V0 must have the outer shape of S");
    // Letters of A' come before letters of S.
    int offset = 0;
    for (const auto& row : a_prime.rows())
        for (const Entry& e : row) offset = std::max(offset, e.value);
    Rows q = values(a_prime);
    q.resize(s.outer().length());
    for (const Cell& c : s.cells()) q[c.row - 1].push_back(s.at(c).value + offset);
    const TwoRowedArray arr = rsk_inverse(Tableau::from_rows(q), v0);
    const std::size_t n = a_prime.size();
    Rows a, u;
    for (std::size_t k = 0; k < arr.bottom.size(); ++k) insert_value(k < n ? a : u, arr.bottom[k]);
    return {Tableau::from_rows(a), Tableau::from_rows(u)};
}

std::vector<TableauPair> model_T(const Partition& lam, const Partition& mu, const Tableau& v0) {
    require_straight_semistandard(v0, "V0");
    const Partition& nu = v0.outer();
    if (lam.size() + mu.size() != nu.size() || !nu.contains(lam)) return {};
    std::vector<TableauPair> out;
    const Tableau a_prime = superstandard(lam);
    for (const Tableau& s : model_S({nu, lam}, superstandard(mu))) out.push_back(bijection_F_inverse(s, v0, a_prime));
    return out;
}

long long lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu, int n, SchurExpander& expander) {
    if (n < nu.length()) throw DimensionError("need at least length(nu) variables");
    if (lam.size() + mu.size() != nu.size()) return 0;
    const Polynomial prod = expander.schur(lam, n) * expander.schur(mu, n);
    const auto expansion = expander.expand(prod);
    auto it = expansion.find(nu);
    return it == expansion.end() ? 0 : it->second;
}

long long lr_oracle(const Partition& lam, const Partition& mu, const Partition& nu) {
    SchurExpander expander;
    return lr_oracle(lam, mu, nu, nu.length(), expander);
}

}  // namespace shiftlr
