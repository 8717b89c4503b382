#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "shiftlr/errors.hpp"
#include "shiftlr/json_io.hpp"
#include "shiftlr/lr.hpp"
#include "shiftlr/new_model.hpp"
#include "shiftlr/parallel.hpp"
#include "shiftlr/shifted.hpp"

namespace shiftlr::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string lam, mu, nu;
    std::string model;
    std::string format = "text";
    bool witnesses = false;
    int jobs = 0;
    int max_size = 0;
    bool filter = false;
    std::string conjecture;
    std::string out_file;
};

void print_tableaux(std::ostream& out, const std::vector<Tableau>& ts) {
    for (const auto& t : ts) out << '\n' << to_text(t);
}

// Prints a coefficient and, on request, its witness set.
void report_value(std::ostream& out, const Options& o, long long value, const std::vector<Tableau>& witnesses) {
    if (o.format == "json") {
        json j{{"model", o.model}, {"value", value}};
        if (o.witnesses) j["witnesses"] = witnesses;
        out << j.dump(2) << '\n';
        return;
    }
    out << value << '\n';
    if (o.witnesses) print_tableaux(out, witnesses);
}

void size_note(std::ostream& err, int a, int b, int c) {
    err << "note: sizes " << a << " + " << b << " != " << c << ", the coefficient is 0\n";
}

int cmd_lr(const Options& o, std::ostream& out, std::ostream& err) {
    const Partition lam = parse_partition(o.lam), mu = parse_partition(o.mu), nu = parse_partition(o.nu);
    if (lam.size() + mu.size() != nu.size()) size_note(err, lam.size(), mu.size(), nu.size());
    if (o.model == "oracle") {
        if (o.witnesses) err << "note: the oracle model has no witnesses\n";
        report_value(out, o, lr_oracle(lam, mu, nu), {});
        return ok;
    }
    std::vector<Tableau> set;
    if (lam.size() + mu.size() == nu.size() && nu.contains(lam)) set = enumerate_O({nu, lam}, mu);
    report_value(out, o, static_cast<long long>(set.size()), set);
    return ok;
}

int cmd_f(const Options& o, std::ostream& out, std::ostream& err) {
    const StrictPartition lam(parse_partition(o.lam)), mu(parse_partition(o.mu)), nu(parse_partition(o.nu));
    if (lam.size() + mu.size() != nu.size()) size_note(err, lam.size(), mu.size(), nu.size());
    std::vector<Tableau> set;
    if (o.model == "stembridge") {
        set = stembridge_f_set(lam, mu, nu);
    } else if (o.model == "standard") {
        if (nu.contains(mu) && lam.size() + mu.size() == nu.size()) {
            const Tableau target = shifted_rowstandard(lam);
            for (auto& s : standard_shifted_tableaux({nu, mu}))
                if (srect(s) == target) set.push_back(std::move(s));
        }
    } else {
        if (nu.contains(mu)) set = enumerate_Otilde({nu, mu}, lam);
    }
    report_value(out, o, static_cast<long long>(set.size()), set);
    return ok;
}

int cmd_g(const Options& o, std::ostream& out, std::ostream& err) {
    const StrictPartition lam(parse_partition(o.lam));
    const Partition mu = parse_partition(o.mu);
    if (lam.size() != mu.size())
        err << "note: sizes " << lam.size() << " != " << mu.size() << ", the coefficient is 0\n";
    std::vector<Tableau> set;
    if (o.model == "shape-mu") {
        set = stembridge_g_set(lam, mu);
    } else if (o.model == "new") {
        if (lam.size() == mu.size())
            set = enumerate_Otilde({StrictPartition(add_staircase(mu)), staircase(mu.length())}, lam);
    } else {
        for (const auto& p : overline_set(lam, mu)) set.push_back(p.u);
    }
    report_value(out, o, static_cast<long long>(set.size()), set);
    return ok;
}

int cmd_expand_p(const Options& o, std::ostream& out) {
    const auto expansion = p_expansion(StrictPartition(parse_partition(o.lam)));
    if (o.format == "json") {
        out << expansion_json(expansion).dump(2) << '\n';
        return ok;
    }
    bool first = true;
    for (const auto& [mu, g] : expansion) {
        if (!first) out << " + ";
        first = false;
        if (g != 1) out << g << '*';
        out << "s[" << mu.str() << ']';
    }
    out << (first ? "0" : "") << '\n';
    return ok;
}

void write_rows(std::ostream& out, const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        out << json(rows).dump(2) << '\n';
        return;
    }
    out << "size\tlambda\tmu\tg\tc\n";
    for (const auto& r : rows) out << r.size << '\t' << r.lam.str() << '\t' << r.mu.str() << '\t' << r.g << '\t' << r.c << '\n';
}

int cmd_table(const Options& o, std::ostream& out, const Hooks& hooks) {
    const RowSource source = hooks.rows ? hooks.rows : RowSource(compute_row);
    write_rows(out, generate_table(o.max_size, o.filter, o.jobs, source), o.format);
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    long long checked = 0;
    if (o.conjecture == "bij") {
        std::vector<BijReport> failures;
        for (int n = 1; n <= o.max_size; ++n) {
            const BijSweep s = check_conjecture_bij_sweep(n, o.jobs, hooks.bij, n);
            checked += static_cast<long long>(s.reports.size());
            failures.insert(failures.end(), s.failures.begin(), s.failures.end());
            err << "size " << n << ": " << s.reports.size() << " pairs, " << s.failures.size() << " counterexamples\n";
        }
        if (o.format == "json") {
            out << json{{"conjecture", "bij"},
                        {"max_size", o.max_size},
                        {"checked", checked},
                        {"auxiliaries", "U0=superstandard(mu) A0=superstandard(mu^t) V0=W0=s(T_lam)"},
                        {"status", failures.empty() ? "pass" : "fail"},
                        {"counterexamples", failures}}
                       .dump(2)
                << '\n';
        } else {
            for (const auto& f : failures) {
                out << "counterexample lambda=" << f.lam.str() << " mu=" << f.mu.str() << ":";
                for (const auto& p : f.problems) out << ' ' << p << ';';
                out << '\n';
            }
            out << "bij: " << checked << " pairs up to size " << o.max_size << ", " << failures.size()
                << " counterexamples\n";
        }
        return failures.empty() ? ok : counterexample;
    }

    const RowSource source = hooks.rows ? hooks.rows : RowSource(compute_row);
    std::vector<TableRow> violations;
    for (int n = 1; n <= o.max_size; ++n) {
        const SweepReport s = o.conjecture == "g-le-c" ? check_g_le_c(n, o.jobs, source, n)
                                                       : check_g2_le_c(n, o.jobs, source, n);
        checked += static_cast<long long>(s.rows.size());
        violations.insert(violations.end(), s.violations.begin(), s.violations.end());
        err << "size " << n << ": " << s.rows.size() << " pairs, " << s.violations.size() << " counterexamples\n";
    }
    if (o.format == "json") {
        out << json{{"conjecture", o.conjecture},
                    {"max_size", o.max_size},
                    {"checked", checked},
                    {"status", violations.empty() ? "pass" : "fail"},
                    {"counterexamples", violations}}
                   .dump(2)
            << '\n';
    } else {
        for (const auto& r : violations)
            out << "counterexample lambda=" << r.lam.str() << " mu=" << r.mu.str() << " g=" << r.g << " c=" << r.c
                << '\n';
        out << o.conjecture << ": " << checked << " pairs up to size " << o.max_size << ", " << violations.size()
            << " counterexamples\n";
    }
    return violations.empty() ? ok : counterexample;
}

json tree_json(const std::vector<OtildeNode>& nodes) {
    json arr = json::array();
    for (const auto& n : nodes) arr.push_back(json{{"tableau", n.tableau}, {"children", tree_json(n.children)}});
    return arr;
}

int cmd_tree(const Options& o, std::ostream& out) {
    const StrictPartition nu(parse_partition(o.nu)), mu(parse_partition(o.mu));
    std::optional<StrictPartition> filter;
    if (!o.lam.empty()) filter = StrictPartition(parse_partition(o.lam));
    const auto roots = otilde_tree({nu, mu}, filter);
    if (o.format == "json")
        out << tree_json(roots).dump(2) << '\n';
    else
        out << tree_text(roots);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    CLI::App app{"Littlewood-Richardson and shifted Littlewood-Richardson coefficients", "shiftlr"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    o.jobs = default_jobs();
    app.add_option("--out", o.out_file, "Write results to this file instead of standard output");

    auto formats = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };

    auto* lr = app.add_subcommand("lr", "c^nu_{lam,mu}");
    lr->add_option("lam", o.lam)->required();
    lr->add_option("mu", o.mu)->required();
    lr->add_option("nu", o.nu)->required();
    lr->add_option("--model", o.model)->check(CLI::IsMember({"remmel-whitney", "oracle"}))->default_str("remmel-whitney");
    lr->add_flag("--witnesses", o.witnesses);
    formats(lr, {"text", "json"});

    auto* f = app.add_subcommand("f", "shifted coefficient f^nu_{lam,mu}");
    f->add_option("lam", o.lam)->required();
    f->add_option("mu", o.mu)->required();
    f->add_option("nu", o.nu)->required();
    f->add_option("--model", o.model)->check(CLI::IsMember({"stembridge", "standard", "new"}));
    f->add_flag("--witnesses", o.witnesses);
    formats(f, {"text", "json"});

    auto* g = app.add_subcommand("g", "coefficient of s_mu in P_lam");
    g->add_option("lam", o.lam)->required();
    g->add_option("mu", o.mu)->required();
    g->add_option("--model", o.model)->check(CLI::IsMember({"shape-mu", "new", "pairs"}));
    g->add_flag("--witnesses", o.witnesses);
    formats(g, {"text", "json"});

    auto* ep = app.add_subcommand("expand-p", "P_lam in the Schur basis");
    ep->add_option("lam", o.lam)->required();
    formats(ep, {"text", "json"});

    auto* table = app.add_subcommand("table", "g and c for every (lam, mu) up to a size");
    table->add_option("--max-size", o.max_size)->check(CLI::Range(1, 16));
    table->add_flag("--filter-g-gt-1", o.filter);
    table->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    formats(table, {"tsv", "json"});

    auto* verify = app.add_subcommand("verify", "sweep an inequality or the bijection conjecture");
    verify->add_option("--conjecture", o.conjecture)->required()->check(CLI::IsMember({"g-le-c", "g2-le-c", "bij"}));
    verify->add_option("--max-size", o.max_size)->check(CLI::Range(1, 16));
    verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    formats(verify, {"text", "json"});

    auto* tree = app.add_subcommand("tree", "search tree of the new model on nu/mu");
    tree->add_option("nu", o.nu)->required();
    tree->add_option("mu", o.mu)->required();
    tree->add_option("--lam", o.lam, "Keep only members of this shape");
    formats(tree, {"text", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    if (o.model.empty()) {
        if (f->parsed()) o.model = "stembridge";
        if (g->parsed()) o.model = "pairs";
        if (lr->parsed()) o.model = "remmel-whitney";
    }
    if (o.max_size == 0) o.max_size = table->parsed() ? 9 : 8;
    if (table->parsed() && o.format == "text") o.format = "tsv";

    std::ostringstream buffer;
    int code = ok;
    try {
        if (lr->parsed()) code = cmd_lr(o, buffer, err);
        else if (f->parsed()) code = cmd_f(o, buffer, err);
        else if (g->parsed()) code = cmd_g(o, buffer, err);
        else if (ep->parsed()) code = cmd_expand_p(o, buffer);
        else if (table->parsed()) code = cmd_table(o, buffer, hooks);
        else if (verify->parsed()) code = cmd_verify(o, buffer, err, hooks);
        else if (tree->parsed()) code = cmd_tree(o, buffer);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    if (o.out_file.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            err << "error: cannot write " << o.out_file << '\n';
            return usage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace shiftlr::cli
