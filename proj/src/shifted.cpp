#include "shiftlr/shifted.hpp"

#include <algorithm>

#include "shiftlr/errors.hpp"
#include "shiftlr/jdt.hpp"

namespace shiftlr {

namespace {

void require_shifted(const Tableau& t) {
    if (!t.is_shifted()) throw TableauError("shifted jeu de taquin needs a shifted tableau");
}

// Zero-filled tableau of the given shape; zero marks an empty cell.
Tableau blank(Geometry g, const Partition& outer, const Partition& inner) {
    std::vector<std::vector<Entry>> rows;
    for (int r = 1; r <= outer.length(); ++r) rows.emplace_back(outer.row(r) - inner.row(r), Entry{});
    return Tableau(g, outer, inner, std::move(rows));
}

int max_value(const std::vector<Entry>& w) {
    int v = 0;
    for (const Entry& e : w) v = std::max(v, e.value);
    return v;
}

// Cells of a skew shape visited top row first, right to left: the reverse of the reading word.
struct FillingPlan {
    Geometry geometry;
    Partition outer, inner;
    std::vector<Cell> order;
    std::vector<int> right;  // index of the right neighbour in `order`, or -1
    std::vector<int> above;
};

FillingPlan make_plan(Geometry g, const Partition& outer, const Partition& inner) {
    const Tableau probe = blank(g, outer, inner);
    FillingPlan plan{g, outer, inner, {}, {}, {}};
    std::map<Cell, int> index;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = probe.last_col(r); c >= probe.first_col(r); --c) {
            index[{r, c}] = static_cast<int>(plan.order.size());
            plan.order.push_back({r, c});
        }
    for (const Cell& c : plan.order) {
        auto find = [&](Cell n) {
            auto it = index.find(n);
            return it == index.end() ? -1 : it->second;
        };
        plan.right.push_back(find({c.row, c.col + 1}));
        plan.above.push_back(find({c.row - 1, c.col}));
    }
    return plan;
}

Tableau build(const FillingPlan& plan, const std::vector<Entry>& entries) {
    std::vector<std::vector<Entry>> rows(plan.outer.length());
    for (std::size_t k = 0; k < plan.order.size(); ++k) rows[plan.order[k].row - 1].push_back(entries[k]);
    for (auto& row : rows) std::reverse(row.begin(), row.end());
    return Tableau(plan.geometry, plan.outer, plan.inner, std::move(rows));
}

// Marked fillings with content lam satisfying the row/column rules, an unmarked leftmost
// letter for each value, and the shifted lattice condition.
std::vector<Tableau> stembridge_fillings(const FillingPlan& plan, const Partition& lam) {
    std::vector<Tableau> out;
    const int n = static_cast<int>(plan.order.size());
    if (n != lam.size()) return out;
    const int L = lam.length();
    std::vector<Entry> entries(n);
    std::vector<int> count(L + 1, 0), unmarked_count(L + 1, 0);

    auto dfs = [&](auto&& self, int k) -> void {
        if (k == n) {
            Tableau t = build(plan, entries);
            const auto w = word(t);
            if (is_shifted_lattice_word(w) && leftmost_letters_unmarked(w)) out.push_back(std::move(t));
            return;
        }
        for (int v = 1; v <= L; ++v) {
            if (count[v] == lam.row(v)) continue;
            // First half of the lattice condition, read from the end of the word.
            if (v >= 2 && unmarked_count[v] == unmarked_count[v - 1]) continue;
            for (bool m : {true, false}) {
                const Entry x{v, m};
                if (m && count[v] + 1 == lam.row(v)) continue;  // leftmost letter of v must be unmarked
                if (plan.right[k] >= 0) {
                    const Entry r = entries[plan.right[k]];
                    if (r < x || (m && r == x)) continue;
                }
                if (plan.above[k] >= 0) {
                    const Entry a = entries[plan.above[k]];
                    if (x < a || (!m && a == x)) continue;
                }
                entries[k] = x;
                ++count[v];
                if (!m) ++unmarked_count[v];
                self(self, k + 1);
                --count[v];
                if (!m) --unmarked_count[v];
            }
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace

Tableau shifted_slide(const Tableau& t, Cell corner) {
    require_shifted(t);
    return slide(t, corner);
}

Tableau srect_with(const Tableau& t, const std::function<Cell(const std::vector<Cell>&)>& choose) {
    require_shifted(t);
    return rect_with(t, choose);
}

Tableau srect(const Tableau& t) {
    require_shifted(t);
    return rect(t);
}

LatticeStatistics lattice_statistics(const std::vector<Entry>& w) {
    const int n = static_cast<int>(w.size());
    const int top = max_value(w);
    LatticeStatistics s;
    s.n = n;
    s.m.assign(2 * n + 1, std::vector<int>(top + 1, 0));
    // w is 1-based in the definition; w[p - 1] is w_p.
    for (int j = 1; j <= n; ++j) {
        s.m[j] = s.m[j - 1];
        const Entry& e = w[n - j];  // w_{n-j+1}
        if (!e.marked) ++s.m[j][e.value];
    }
    for (int j = n + 1; j <= 2 * n; ++j) {
        s.m[j] = s.m[j - 1];
        const Entry& e = w[j - n - 1];  // w_{j-n}
        if (e.marked) ++s.m[j][e.value];
    }
    return s;
}

bool is_shifted_lattice_word(const std::vector<Entry>& w) {
    const int n = static_cast<int>(w.size());
    const LatticeStatistics s = lattice_statistics(w);
    const int top = max_value(w) + 1;
    for (int j = 0; j < 2 * n; ++j) {
        for (int i = 2; i <= top; ++i) {
            if (s.at(i, j) != s.at(i - 1, j)) continue;
            if (j < n) {
                const Entry& x = w[n - j - 1];  // w_{n-j}
                if (x.value == i) return false;
            } else {
                const Entry& x = w[j - n];  // w_{j-n+1}
                if (x == unmarked(i - 1) || x == marked(i)) return false;
            }
        }
    }
    return true;
}

bool leftmost_letters_unmarked(const std::vector<Entry>& w) {
    std::vector<bool> seen(max_value(w) + 1, false);
    for (const Entry& e : w) {
        if (seen[e.value]) continue;
        seen[e.value] = true;
        if (e.marked) return false;
    }
    return true;
}

std::vector<Tableau> stembridge_f_set(const StrictPartition& lam, const StrictPartition& mu,
                                      const StrictPartition& nu) {
    if (!nu.contains(mu)) return {};
    return stembridge_fillings(make_plan(Geometry::shifted, nu.as_partition(), mu.as_partition()),
                               lam.as_partition());
}

long long f_coefficient(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu) {
    return static_cast<long long>(stembridge_f_set(lam, mu, nu).size());
}

std::vector<Tableau> stembridge_g_set(const StrictPartition& lam, const Partition& mu) {
    return stembridge_fillings(make_plan(Geometry::young, mu, {}), lam.as_partition());
}

long long g_via_shape_mu(const StrictPartition& lam, const Partition& mu) {
    return static_cast<long long>(stembridge_g_set(lam, mu).size());
}

std::vector<Tableau> standard_shifted_tableaux(const ShiftedSkewShape& shape) {
    const Partition outer = shape.outer.as_partition(), inner = shape.inner.as_partition();
    Tableau probe = blank(Geometry::shifted, outer, inner);
    const int n = shape.size();
    auto at = [&](Cell c) -> Entry& { return probe.at(c); };
    auto filled_or_outside = [&](Cell c) { return !probe.contains(c) || at(c).value != 0; };

    std::vector<Tableau> out;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(probe);
            return;
        }
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = probe.first_col(r); c <= probe.last_col(r); ++c) {
                const Cell cell{r, c};
                if (at(cell).value != 0) continue;
                if (!filled_or_outside({r, c - 1}) || !filled_or_outside({r - 1, c})) continue;
                at(cell) = unmarked(v);
                self(self, v + 1);
                at(cell) = Entry{};
                break;  // cells to the right in this row need this one filled first
            }
    };
    dfs(dfs, 1);
    return out;
}

long long f_via_standard(const StrictPartition& lam, const StrictPartition& mu, const StrictPartition& nu) {
    if (!nu.contains(mu) || nu.size() - mu.size() != lam.size()) return 0;
    const Tableau target = shifted_rowstandard(lam);
    long long count = 0;
    for (const Tableau& s : standard_shifted_tableaux({nu, mu}))
        if (srect(s) == target) ++count;
    return count;
}

Polynomial schur_q_polynomial(const StrictPartition& lam, int n) {
    if (n < 1) throw PreconditionError("variable count must be positive");
    Polynomial q(n);
    const Partition outer = lam.as_partition();
    const Tableau probe = blank(Geometry::shifted, outer, {});
    std::vector<Cell> cells = probe.cells();
    std::map<Cell, Entry> fill;
    Polynomial::Exponent exponent(n, 0);

    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            q.add_term(exponent, 1);
            return;
        }
        const Cell c = cells[k];
        const auto left = fill.find({c.row, c.col - 1});
        const auto up = fill.find({c.row - 1, c.col});
        for (int v = 1; v <= n; ++v)
            for (bool m : {true, false}) {
                const Entry x{v, m};
                if (left != fill.end() && (x < left->second || (m && x == left->second))) continue;
                if (up != fill.end() && (x < up->second || (!m && x == up->second))) continue;
                fill[c] = x;
                ++exponent[v - 1];
                self(self, k + 1);
                --exponent[v - 1];
                fill.erase(c);
            }
    };
    dfs(dfs, 0);
    return q;
}

std::map<Partition, long long> p_expansion(const StrictPartition& lam) {
    std::map<Partition, long long> out;
    for (const Partition& mu : enumerate_partitions(lam.size()))
        if (const long long g = g_via_shape_mu(lam, mu); g != 0) out[mu] = g;
    return out;
}

}  // namespace shiftlr
