#include "doctest.h"
#include "shiftlr/json_io.hpp"
#include "shiftlr/lr.hpp"
#include "shiftlr/new_model.hpp"
#include "support.hpp"

using namespace shiftlr;
using namespace shiftlr::testing;
using nlohmann::json;

TEST_CASE("json round trips") {
    const Partition p{4, 2, 1};
    CHECK(json(p) == json{4, 2, 1});
    CHECK(json(p).get<Partition>() == p);
    CHECK(json(Partition{}).get<Partition>() == Partition{});
    CHECK(json(StrictPartition{5, 2}).get<StrictPartition>() == StrictPartition{5, 2});
    CHECK_THROWS(json{2, 2}.get<StrictPartition>());

    CHECK(json(Entry{2, true}) == "2'");
    CHECK(json("7").get<Entry>() == Entry{7, false});
    CHECK_THROWS(json("0").get<Entry>());
    CHECK_THROWS(json("x").get<Entry>());

    for (const Tableau& t : {MS(Partition{3, 2}, {"1 2'", "3'", "4 5"}), MY({"1 1 2'", "2 3"}), Y({{1, 3}, {2}})}) {
        CHECK(json(t).get<Tableau>() == t);
        CHECK(json::parse(json(t).dump()).get<Tableau>() == t);
    }
    for (const Tableau& t : enumerate_Otilde({{5, 3, 2}, {3, 2}}, std::nullopt)) CHECK(json(t).get<Tableau>() == t);

    const TableRow row{6, {4, 2}, {3, 2, 1}, 2, 4};
    CHECK(json(row)["lambda"] == json{4, 2});
    CHECK(json(row).get<TableRow>() == row);

    const json report = check_conjecture_bij({5, 2}, {4, 2, 1});
    CHECK(report["status"] == "pass");
}
