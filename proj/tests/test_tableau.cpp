#include "doctest.h"
#include "shiftlr/errors.hpp"
#include "shiftlr/tableau.hpp"
#include "support.hpp"

using namespace shiftlr;
using shiftlr::testing::Y;

TEST_CASE("marked alphabet order") {
    CHECK(marked(1) < unmarked(1));
    CHECK(unmarked(1) < marked(2));
    CHECK(marked(2) < unmarked(2));
    // 1 < 2 < 3 < 3' < 2' < 1' for n = 3
    CHECK(unmarked(3).hat_key(3) < marked(3).hat_key(3));
    CHECK(marked(3).hat_key(3) < marked(2).hat_key(3));
    CHECK(marked(2).hat_key(3) < marked(1).hat_key(3));
}

TEST_CASE("word and content") {
    const Tableau t = Y({{1, 1, 2}, {2, 3}});
    std::vector<int> w;
    for (auto e : word(t)) w.push_back(e.value);
    CHECK(w == std::vector<int>{2, 3, 1, 1, 2});
    CHECK(content(t) == std::vector<int>{0, 2, 2, 1});
}

TEST_CASE("semistandard and standard checks") {
    CHECK(is_semistandard_young(Y({{1, 1, 2}, {2, 3}})));
    CHECK_FALSE(is_semistandard_young(Y({{2, 1}})));
    CHECK_FALSE(is_semistandard_young(Y({{1, 2}, {1}})));
    CHECK(is_standard(Y({{1, 2, 3, 4}, {5, 6}, {7}})));
    CHECK_FALSE(is_standard(Y({{1, 1}, {2}})));
    const Tableau m = Tableau::young({Partition{1}, {}}, {{marked(1)}});
    CHECK_THROWS_AS(is_semistandard_young(m), TableauError);
}

TEST_CASE("shifted tableau rules") {
    // Rows [1,1],[2'],[1,2] on (5,3,2)/(3,2).
    const Tableau t = Tableau::shifted_from_rows(Partition{3, 2}, {{unmarked(1), unmarked(1)}, {marked(2)}, {unmarked(1), unmarked(2)}});
    CHECK(t.outer() == Partition{5, 3, 2});
    CHECK(is_valid_shifted(t));
    // k' twice in a row
    CHECK_FALSE(is_valid_shifted(Tableau::shifted_from_rows({}, {{unmarked(1), marked(2), marked(2)}})));
    // k twice in a column
    CHECK_FALSE(is_valid_shifted(Tableau::shifted_from_rows({}, {{unmarked(1), unmarked(2)}, {unmarked(2)}})));
    CHECK(is_valid_shifted(Tableau::shifted_from_rows({}, {{unmarked(1), marked(2)}, {marked(2)}})));
}

TEST_CASE("superstandard, transpose and standard tableaux") {
    CHECK(values(superstandard(Partition{3, 2, 1, 1})) == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}, {3}, {4}});
    CHECK(transpose(Y({{1, 3, 4, 5}, {2, 7}, {6}})) == Y({{1, 2, 6}, {3, 7}, {4}, {5}}));
    CHECK(standard_young_tableaux(Partition{3, 2}).size() == 5);
    CHECK(standard_young_tableaux(Partition{4, 2, 1}).size() == 35);
    for (const auto& u : standard_young_tableaux(Partition{3, 2, 1})) {
        CHECK(is_standard(u));
        CHECK(transpose(transpose(u)) == u);
        CHECK(is_standard(transpose(u)));
    }
}

TEST_CASE("skew cells and text rendering") {
    const Tableau s = shiftlr::testing::skew(Partition{3, 2, 1, 1}, {{1, 1, 1}, {2, 2}, {3}, {}, {1}});
    CHECK(s.outer() == Partition{6, 4, 2, 1, 1});
    CHECK(s.at({5, 1}).value == 1);
    CHECK(to_text(Y({{1, 2}, {3}})) == "1 2\n3\n");
    const Tableau sh = Tableau::shifted_from_rows(Partition{1}, {{marked(1)}, {unmarked(2)}});
    CHECK(to_text(sh) == " · 1′\n    2\n");
}
