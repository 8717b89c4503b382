#include "shiftlr/new_model.hpp"

#include <algorithm>
#include <sstream>

#include "shiftlr/errors.hpp"
#include "shiftlr/shifted.hpp"

namespace shiftlr {

ShiftedReverseFilling shifted_reverse_filling(const ShiftedSkewShape& shape) {
    ShiftedReverseFilling f;
    f.shape = shape;
    const Partition outer = shape.outer.as_partition(), inner = shape.inner.as_partition();
    std::vector<std::vector<Entry>> rows(outer.length());
    f.cell_of.push_back({0, 0});
    int k = 0;
    for (int r = 1; r <= outer.length(); ++r) {
        const int first = r + inner.row(r), last = r + outer.row(r) - 1;
        rows[r - 1].resize(std::max(0, last - first + 1));
        for (int c = last; c >= first; --c) {
            rows[r - 1][c - first] = unmarked(++k);
            f.cell_of.push_back({r, c});
        }
    }
    f.numbering = Tableau::shifted(shape, std::move(rows));
    f.next_in_row.assign(k + 2, false);
    f.above.assign(k + 1, 0);
    for (int j = 1; j <= k; ++j) {
        if (j < k && f.cell_of[j + 1].row == f.cell_of[j].row) f.next_in_row[j] = true;
        if (auto e = f.numbering.get({f.cell_of[j].row - 1, f.cell_of[j].col})) f.above[j] = e->value;
    }
    return f;
}

namespace {

// 1-based row and mark of each letter; throws unless t is a candidate.
struct Positions {
    std::vector<int> row;
    std::vector<bool> marked;
};

Positions positions(const Tableau& t) {
    if (t.is_shifted() || !t.is_straight()) throw PreconditionError("candidate must be a straight Young tableau");
    const int n = t.size();
    Positions p{std::vector<int>(n + 1, 0), std::vector<bool>(n + 1, false)};
    for (int r = 1; r <= t.num_rows(); ++r)
        for (const Entry& e : t.rows()[r - 1]) {
            if (e.value < 1 || e.value > n || p.row[e.value] != 0)
                throw PreconditionError("candidate must hold exactly one of k, k' for each k");
            p.row[e.value] = r;
            p.marked[e.value] = e.marked;
        }
    return p;
}

bool c1_allows(bool k_marked, int row_k, int row_next) { return k_marked ? row_next < row_k : row_next <= row_k; }
bool c2_allows(bool k_marked, int row_k, int row_h) { return k_marked ? row_h >= row_k : row_h > row_k; }

}  // namespace

bool is_candidate(const Tableau& t) {
    try {
        positions(t);
    } catch (const PreconditionError&) {
        return false;
    }
    for (const auto& row : t.rows())
        if (!std::is_sorted(row.begin(), row.end(), [](Entry a, Entry b) { return a.value < b.value; })) return false;
    return true;
}

bool check_C1(const Tableau& t, const ShiftedReverseFilling& filling) {
    const Positions p = positions(t);
    for (int k = 1; k < filling.size(); ++k)
        if (filling.next_in_row[k] && !c1_allows(p.marked[k], p.row[k], p.row[k + 1])) return false;
    return true;
}

bool check_C2(const Tableau& t, const ShiftedReverseFilling& filling) {
    const Positions p = positions(t);
    for (int h = 1; h <= filling.size(); ++h)
        if (const int k = filling.above[h]; k != 0 && !c2_allows(p.marked[k], p.row[k], p.row[h])) return false;
    return true;
}

bool check_C3(const Tableau& t) {
    for (const auto& row : t.rows())
        if (!row.empty() && row.back().marked) return false;
    return true;
}

bool check_C4(const Tableau& t) {
    const int n = t.size();
    std::vector<std::vector<int>> hat;  // hat keys, each row sorted
    for (const auto& row : t.rows()) {
        std::vector<int> keys;
        for (const Entry& e : row) keys.push_back(e.hat_key(n));
        std::sort(keys.begin(), keys.end());
        hat.push_back(std::move(keys));
    }
    const int rows = static_cast<int>(hat.size());
    auto less_than = [&](int r, int key) {  // entries of 0-based row r below `key`
        if (r >= rows) return 0;
        return static_cast<int>(std::lower_bound(hat[r].begin(), hat[r].end(), key) - hat[r].begin());
    };
    for (int r = 1; r < rows; ++r)
        for (std::size_t c = 0; c < hat[r].size(); ++c)
            if (hat[r - 1][c] >= hat[r][c]) return false;
    for (int r = 0; r < rows; ++r)
        for (const Entry& e : t.rows()[r]) {
            // j' in row r+1 >= 2 compares rows r and r+1 below j.
            if (e.marked && r >= 1 && less_than(r - 1, e.value) <= less_than(r, e.value)) return false;
            // j in row r+1 compares rows r+1 and r+2 below j'.
            if (!e.marked) {
                const int key = marked(e.value).hat_key(n);
                if (less_than(r, key) <= less_than(r + 1, key)) return false;
            }
        }
    return true;
}

bool in_Otilde(const Tableau& t, const ShiftedReverseFilling& filling) {
    return is_candidate(t) && t.size() == filling.size() && check_C1(t, filling) && check_C2(t, filling) &&
           check_C3(t) && check_C4(t);
}

namespace {

class OtildeSearch {
public:
    OtildeSearch(const ShiftedSkewShape& shape, const std::optional<StrictPartition>& filter)
        : f_(shifted_reverse_filling(shape)), filter_(filter), n_(f_.size()), row_of_(n_ + 1), marked_(n_ + 1) {}

    std::vector<OtildeNode> run() {
        if (filter_ && filter_->size() != n_) return {};
        if (n_ == 0) return {OtildeNode{Tableau::young({Partition{}}, {}), {}}};
        return expand(0);
    }

private:
    Tableau current() const {
        std::vector<int> shape;
        for (const auto& r : rows_) shape.push_back(static_cast<int>(r.size()));
        return Tableau::young({Partition(shape)}, rows_);
    }

    int row_limit(int r) const {  // 0-based row
        if (!filter_) return r == 0 ? n_ : static_cast<int>(rows_[r - 1].size());
        const int cap = filter_->row(r + 1);
        return r == 0 ? cap : std::min(cap, static_cast<int>(rows_[r - 1].size()));
    }

    // Children of the node holding letters 1..k.
    std::vector<OtildeNode> expand(int k) {
        std::vector<OtildeNode> out;
        const int next = k + 1;
        const int nrows = static_cast<int>(rows_.size());
        for (int r = 0; r <= nrows; ++r) {
            if (r == nrows) rows_.emplace_back();
            const int len = static_cast<int>(rows_[r].size());
            const bool fits = len < row_limit(r);
            if (fits && placement_ok(next, r + 1)) {
                for (bool m : {false, true}) {
                    if (k > 0 && f_.next_in_row[k] && !c1_allows(marked_[k], row_of_[k], r + 1)) continue;
                    // With a target shape, a completed row must end unmarked.
                    if (m && filter_ && len + 1 == filter_->row(r + 1)) continue;
                    rows_[r].push_back({next, m});
                    row_of_[next] = r + 1;
                    marked_[next] = m;
                    if (next == n_) {
                        const Tableau t = current();
                        if (check_C3(t) && check_C4(t)) out.push_back({t, {}});
                    } else if (auto kids = expand(next); !kids.empty()) {
                        out.push_back({current(), std::move(kids)});
                    }
                    rows_[r].pop_back();
                }
            }
            if (r == nrows) rows_.pop_back();
        }
        return out;
    }

    bool placement_ok(int h, int row) const {
        const int k = f_.above[h];
        return k == 0 || c2_allows(marked_[k], row_of_[k], row);
    }

    ShiftedReverseFilling f_;
    std::optional<StrictPartition> filter_;
    int n_;
    std::vector<int> row_of_;
    std::vector<bool> marked_;
    std::vector<std::vector<Entry>> rows_;
};

void collect(const std::vector<OtildeNode>& nodes, std::vector<Tableau>& out) {
    for (const auto& node : nodes) {
        if (node.children.empty()) out.push_back(node.tableau);
        collect(node.children, out);
    }
}

std::string node_text(const Tableau& t) {
    std::string s;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) s += " / ";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c) s += ' ';
            s += entry_text(t.rows()[r][c]);
        }
    }
    return s;
}

void tree_lines(const std::vector<OtildeNode>& nodes, int depth, std::ostringstream& out) {
    for (const auto& node : nodes) {
        out << std::string(2 * depth, ' ') << node_text(node.tableau) << '\n';
        tree_lines(node.children, depth + 1, out);
    }
}

}  // namespace

std::vector<OtildeNode> otilde_tree(const ShiftedSkewShape& shape, const std::optional<StrictPartition>& filter) {
    return OtildeSearch(shape, filter).run();
}

std::vector<Tableau> enumerate_Otilde(const ShiftedSkewShape& shape, const std::optional<StrictPartition>& filter) {
    std::vector<Tableau> out;
    collect(otilde_tree(shape, filter), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string tree_text(const std::vector<OtildeNode>& roots) {
    std::ostringstream out;
    tree_lines(roots, 0, out);
    return out.str();
}

long long f_via_new_model(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu) {
    if (!nu.contains(mu)) return 0;
    return static_cast<long long>(enumerate_Otilde({nu, mu}, lam).size());
}

long long g_via_new_model(const StrictPartition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return 0;
    return f_via_new_model(lam, staircase(mu.length()), StrictPartition(add_staircase(mu)));
}

Tableau phi(const Tableau& s) {
    if (!s.is_shifted() || !satisfies_marked_rules(s)) throw PreconditionError("phi needs a skew shifted tableau");
    const auto w = word(s);
    if (!is_shifted_lattice_word(w) || !leftmost_letters_unmarked(w) || !content_is_partition(s))
        throw PreconditionError("phi needs a tableau from the Stembridge set");
    const int n = static_cast<int>(w.size());
    std::vector<std::vector<Entry>> rows;
    for (int i = n; i >= 1; --i) {
        const Entry& x = w[i - 1];
        if (static_cast<int>(rows.size()) < x.value) rows.resize(x.value);
        rows[x.value - 1].push_back({n + 1 - i, x.marked});
    }
    std::vector<int> shape;
    for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
    return Tableau::young({Partition(shape)}, std::move(rows));
}

Tableau psi(const Tableau& candidate, const ShiftedSkewShape& shape) {
    const ShiftedReverseFilling f = shifted_reverse_filling(shape);
    if (!in_Otilde(candidate, f)) throw PreconditionError("psi needs a member of the new model for this shape");
    const int n = f.size();
    const Positions p = positions(candidate);
    std::vector<Entry> w(n);
    for (int j = 1; j <= n; ++j) w[n - j] = {p.row[j], p.marked[j]};
    // Fill in reading order: bottom row first, left to right.
    const Partition outer = shape.outer.as_partition(), inner = shape.inner.as_partition();
    std::vector<std::vector<Entry>> rows(outer.length());
    std::size_t pos = 0;
    for (int r = outer.length(); r >= 1; --r)
        for (int c = 0; c < outer.row(r) - inner.row(r); ++c) rows[r - 1].push_back(w[pos++]);
    return Tableau::shifted(shape, std::move(rows));
}

}  // namespace shiftlr
