#include "shiftlr/gpairs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "shiftlr/errors.hpp"
#include "shiftlr/jdt.hpp"
#include "shiftlr/lr.hpp"
#include "shiftlr/parallel.hpp"

namespace shiftlr {

Tableau s_of(const Tableau& t) {
    if (!t.is_shifted()) throw TableauError("doubling needs a shifted tableau");
    std::map<Cell, Entry> cells;
    for (const Cell& c : t.cells()) {
        const Entry e = t.at(c);
        if (e.marked) throw TableauError("doubling needs an unmarked tableau");
        cells[{c.row, c.col + 1}] = e;
        cells[{c.col, c.row}] = e;
    }
    const Partition outer = doubled_shape(StrictPartition(t.outer()));
    const Partition inner = doubled_shape(StrictPartition(t.inner()));
    std::vector<std::vector<Entry>> rows(outer.length());
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) rows[r - 1].push_back(cells.at({r, c}));
    return Tableau::young({outer, inner}, std::move(rows));
}

Tableau doubled_target(const StrictPartition& lam) { return s_of(shifted_rowstandard(lam)); }

namespace {

bool pairs_to(const Tableau& u, const Rows& target) {
    Rows rows = values(transpose(u));
    for (const Entry& e : word(u)) insert_value(rows, e.value);
    return rows == target;
}

}  // namespace

GPairs g_via_pairs(const StrictPartition& lam, const Partition& mu, bool with_witnesses) {
    GPairs out;
    if (lam.size() != mu.size()) return out;
    const Rows target = values(doubled_target(lam));
    for (Tableau& u : standard_young_tableaux(mu)) {
        const bool paired = pairs_to(u, target);
        if (paired) ++out.count;
        if (with_witnesses) out.witnesses.push_back({std::move(u), paired});
    }
    return out;
}

long long g_pairs_count(const StrictPartition& lam, const Partition& mu) { return g_via_pairs(lam, mu).count; }

std::vector<TableauPair> overline_set(const StrictPartition& lam, const Partition& mu) {
    std::vector<TableauPair> out;
    for (const PairWitness& w : g_via_pairs(lam, mu, true).witnesses)
        if (w.paired) out.push_back({transpose(w.u), w.u});
    return out;
}

std::vector<TableauPair> overline_set_from_model_T(const StrictPartition& lam, const Partition& mu) {
    std::vector<TableauPair> out;
    if (lam.size() != mu.size()) return out;
    for (TableauPair& p : model_T(conjugate(mu), mu, doubled_target(lam)))
        if (p.a == transpose(p.u)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

long long c_coefficient(const StrictPartition& lam, const Partition& mu) {
    return lr_coefficient(conjugate(mu), mu, doubled_shape(lam));
}

TableRow compute_row(const StrictPartition& lam, const Partition& mu) {
    return {lam.size(), lam, mu, g_pairs_count(lam, mu), c_coefficient(lam, mu)};
}

std::vector<std::pair<StrictPartition, Partition>> sweep_pairs(int max_size, int min_size) {
    std::vector<std::pair<StrictPartition, Partition>> out;
    for (int n = max_size; n >= std::max(1, min_size); --n) {
        auto lams = enumerate_strict_partitions(n);
        std::sort(lams.rbegin(), lams.rend());
        auto mus = enumerate_partitions(n);
        std::sort(mus.begin(), mus.end());
        for (const auto& lam : lams)
            for (const auto& mu : mus) out.emplace_back(lam, mu);
    }
    return out;
}

namespace {

std::vector<TableRow> compute_rows(int max_size, int min_size, int jobs, const RowSource& source) {
    const auto pairs = sweep_pairs(max_size, min_size);
    return parallel_map<TableRow>(pairs.size(), jobs,
                                  [&](std::size_t i) { return source(pairs[i].first, pairs[i].second); });
}

SweepReport sweep(int max_size, int min_size, int jobs, const RowSource& source,
                  bool (*violates)(const TableRow&)) {
    SweepReport report;
    report.rows = compute_rows(max_size, min_size, jobs, source);
    for (const auto& row : report.rows)
        if (violates(row)) report.violations.push_back(row);
    return report;
}

}  // namespace

SweepReport check_g_le_c(int max_size, int jobs, const RowSource& source, int min_size) {
    return sweep(max_size, min_size, jobs, source, [](const TableRow& r) { return r.g > r.c; });
}

SweepReport check_g2_le_c(int max_size, int jobs, const RowSource& source, int min_size) {
    return sweep(max_size, min_size, jobs, source, [](const TableRow& r) { return r.g * r.g > r.c; });
}

std::vector<TableRow> generate_table(int max_size, bool only_g_gt_1, int jobs, const RowSource& source) {
    if (!only_g_gt_1) return compute_rows(max_size, 1, jobs, source);
    // g is cheap; c is only needed on the rows that survive the filter.
    const auto pairs = sweep_pairs(max_size);
    const auto g = parallel_map<long long>(pairs.size(), jobs, [&](std::size_t i) {
        return g_pairs_count(pairs[i].first, pairs[i].second);
    });
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (g[i] > 1) keep.push_back(i);
    auto rows = parallel_map<TableRow>(keep.size(), jobs, [&](std::size_t k) {
        return source(pairs[keep[k]].first, pairs[keep[k]].second);
    });
    std::erase_if(rows, [](const TableRow& r) { return r.g <= 1; });
    return rows;
}

CompositeMap default_composite(const StrictPartition& lam, const Partition& mu) {
    const Tableau u0 = superstandard(mu);
    const Tableau a0 = superstandard(conjugate(mu));
    const Tableau w0 = doubled_target(lam);
    return [=](const TableauPair& p) { return composite_S(p, u0, a0, w0); };
}

BijReport check_conjecture_bij(const StrictPartition& lam, const Partition& mu, const CompositeMap& given) {
    BijReport report;
    report.lam = lam;
    report.mu = mu;
    report.auxiliaries = "U0=superstandard(mu) A0=superstandard(mu^t) V0=W0=s(T_lam)";
    const CompositeMap map = given ? given : default_composite(lam, mu);
    const Partition mut = conjugate(mu);
    const auto source = overline_set(lam, mu);
    const auto target_list = overline_set(lam, mut);
    const std::set<TableauPair> target(target_list.begin(), target_list.end());
    const Rows goal = values(doubled_target(lam));

    std::vector<std::optional<TableauPair>> images;
    std::set<TableauPair> seen;
    for (const auto& p : source) {
        std::optional<TableauPair> img;
        try {
            img = map(p);
        } catch (const std::exception& e) {
            report.part1 = false;
            report.problems.push_back(std::string("map failed: ") + e.what());
            report.witnesses.push_back(p);
        }
        images.push_back(img);
        if (!img) continue;
        if (!target.count(*img)) {
            report.part1 = false;
            report.problems.push_back("image outside the target set");
            report.witnesses.push_back(p);
        } else if (!seen.insert(*img).second) {
            report.part1 = false;
            report.problems.push_back("two pairs share an image");
            report.witnesses.push_back(p);
        }
    }
    if (report.part1 && seen.size() != target.size()) {
        report.part1 = false;
        report.problems.push_back("map is not onto the target set");
    }

    auto product_is_goal = [&](const Tableau& a, const Tableau& b) {
        try {
            return values(product(a, b)) == goal;
        } catch (const std::exception&) {
            return false;
        }
    };
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = 0; b < source.size(); ++b) {
            if (a == b || product_is_goal(source[a].a, source[b].u)) continue;
            const bool ok = images[a] && images[b] && images[a]->a.outer() == mu &&
                            images[b]->a.outer() == mu && product_is_goal(images[a]->a, transpose(images[b]->a));
            if (!ok) {
                report.part2 = false;
                report.problems.push_back("mixed pair not carried into the target model");
                report.witnesses.push_back({source[a].a, source[b].u});
            }
        }
    return report;
}

BijSweep check_conjecture_bij_sweep(int max_size, int jobs, const CompositeFactory& factory, int min_size) {
    const auto pairs = sweep_pairs(max_size, min_size);
    BijSweep sweep;
    sweep.reports = parallel_map<BijReport>(pairs.size(), jobs, [&](std::size_t i) {
        const auto& [lam, mu] = pairs[i];
        return check_conjecture_bij(lam, mu, factory ? factory(lam, mu) : CompositeMap{});
    });
    for (const auto& r : sweep.reports)
        if (!r.ok()) sweep.failures.push_back(r);
    return sweep;
}

}  // namespace shiftlr
