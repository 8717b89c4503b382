#include "shiftlr/json_io.hpp"

#include "shiftlr/errors.hpp"

namespace shiftlr {

using nlohmann::json;

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) {
    if (!j.is_array()) throw ShapeError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ShapeError("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    p = Partition(parts);
}

void to_json(json& j, const StrictPartition& p) { j = p.parts(); }

void from_json(const json& j, StrictPartition& p) { p = StrictPartition(j.get<Partition>()); }

void to_json(json& j, const Entry& e) { j = std::to_string(e.value) + (e.marked ? "'" : ""); }

void from_json(const json& j, Entry& e) {
    std::string s = j.is_number_integer() ? std::to_string(j.get<int>()) : j.get<std::string>();
    const bool m = !s.empty() && s.back() == '\'';
    if (m) s.pop_back();
    int v = 0;
    try {
        std::size_t used = 0;
        v = std::stoi(s, &used);
        if (used != s.size()) throw TableauError("bad entry");
    } catch (const std::exception&) {
        throw TableauError("malformed tableau entry \"" + j.dump() + "\"");
    }
    if (v < 1) throw TableauError("tableau entries must be positive");
    e = {v, m};
}

void to_json(json& j, const Tableau& t) {
    j = json{{"geometry", t.is_shifted() ? "shifted" : "young"},
             {"outer", t.outer()},
             {"inner", t.inner()},
             {"rows", t.rows()}};
}

void from_json(const json& j, Tableau& t) {
    const std::string g = j.value("geometry", "young");
    if (g != "young" && g != "shifted") throw TableauError("geometry must be young or shifted");
    const Partition outer = j.at("outer").get<Partition>();
    const Partition inner = j.contains("inner") ? j.at("inner").get<Partition>() : Partition{};
    t = Tableau(g == "shifted" ? Geometry::shifted : Geometry::young, outer, inner,
                j.at("rows").get<std::vector<std::vector<Entry>>>());
}

void to_json(json& j, const TableauPair& p) { j = json{{"first", p.a}, {"second", p.u}}; }

void to_json(json& j, const TableRow& r) {
    j = json{{"size", r.size}, {"lambda", r.lam}, {"mu", r.mu}, {"g", r.g}, {"c", r.c}};
}

void from_json(const json& j, TableRow& r) {
    r.size = j.at("size").get<int>();
    r.lam = j.at("lambda").get<StrictPartition>();
    r.mu = j.at("mu").get<Partition>();
    r.g = j.at("g").get<long long>();
    r.c = j.at("c").get<long long>();
}

void to_json(json& j, const BijReport& r) {
    j = json{{"lambda", r.lam},
             {"mu", r.mu},
             {"auxiliaries", r.auxiliaries},
             {"part1", r.part1},
             {"part2", r.part2},
             {"status", r.ok() ? "pass" : "fail"},
             {"problems", r.problems},
             {"witnesses", r.witnesses}};
}

json expansion_json(const std::map<Partition, long long>& expansion) {
    json j = json::object();
    for (const auto& [p, c] : expansion) j[p.str()] = c;
    return j;
}

}  // namespace shiftlr
