#include <random>
#include <set>

#include "doctest.h"
#include "shiftlr/errors.hpp"
#include "shiftlr/jdt.hpp"
#include "shiftlr/shifted.hpp"
#include "support.hpp"

using namespace shiftlr;
using namespace shiftlr::testing;

namespace {

std::vector<StrictPartition> strict_up_to(int n) {
    std::vector<StrictPartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& p : enumerate_strict_partitions(k)) out.push_back(p);
    return out;
}

// Expansion of a product in the basis P_tau, peeling the lexicographically largest exponent.
// Exact for strict tau with at most n parts.
std::map<StrictPartition, long long> expand_in_p(Polynomial poly, int n) {
    std::map<StrictPartition, long long> out;
    std::map<StrictPartition, Polynomial> cache;
    while (!poly.is_zero()) {
        const auto& [exp, c] = *poly.terms().rbegin();
        const StrictPartition tau{Partition(exp)};
        auto it = cache.find(tau);
        if (it == cache.end())
            it = cache.emplace(tau, schur_q_polynomial(tau, n).divided(1LL << tau.length())).first;
        out[tau] += c;
        poly -= it->second.scaled(c);
    }
    return out;
}

}  // namespace

TEST_CASE("shifted lattice words") {
    CHECK(is_shifted_lattice_word(marked_word("22'3121'111")));
    CHECK(is_shifted_lattice_word(marked_word("32212'1'111")));
    CHECK_FALSE(is_shifted_lattice_word(marked_word("2")));
    CHECK(is_shifted_lattice_word(marked_word("1")));
    CHECK(is_shifted_lattice_word({}));
    CHECK_FALSE(is_shifted_lattice_word(marked_word("21")));
}

TEST_CASE("lattice statistics follow the two halves of the definition") {
    const auto w = marked_word("22'3121'111");
    const LatticeStatistics s = lattice_statistics(w);
    const int n = static_cast<int>(w.size());
    REQUIRE(s.m.size() == static_cast<std::size_t>(2 * n + 1));
    for (int i = 1; i <= 3; ++i) {
        CHECK(s.at(i, 0) == 0);
        for (int j = 1; j <= 2 * n; ++j) CHECK(s.at(i, j) >= s.at(i, j - 1));
    }
    // Unmarked letters of the whole word: 1 four times, 2 twice, 3 once.
    CHECK(s.at(1, n) == 4);
    CHECK(s.at(2, n) == 2);
    CHECK(s.at(3, n) == 1);
    // The second pass adds the marked letters.
    CHECK(s.at(1, 2 * n) == 5);
    CHECK(s.at(2, 2 * n) == 3);
}

TEST_CASE("shifted rectification example") {
    const Tableau t = MS(Partition{3, 1}, {"1", "2 3", "4 5"});
    CHECK(t.outer() == Partition{4, 3, 2});
    CHECK(srect(t) == MS({}, {"1 2 3 5", "4"}));
    const Tableau straight = MS({}, {"1 2 4", "3 5"});
    CHECK(srect(straight) == straight);
    CHECK_THROWS_AS(srect(MS(Partition{1}, {"1' 2"})), TableauError);
    CHECK_THROWS_AS(srect(Y({{1}})), TableauError);
}

TEST_CASE("shifted rectification is independent of corner order") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const StrictPartition outer = random_strict_partition(rng, 3 + trial % 10);
        const StrictPartition inner = random_strict_subpartition(rng, outer, 1 + trial % 6);
        if (outer.size() - inner.size() > 9) continue;
        const Tableau t = random_unmarked_shifted(rng, {outer, inner});
        const Tableau base = srect(t);
        CHECK(base.is_straight());
        CHECK(base.is_shifted());
        CHECK(is_valid_shifted(base));
        auto random_corner = [&](const std::vector<Cell>& cs) {
            std::uniform_int_distribution<std::size_t> d(0, cs.size() - 1);
            return cs[d(rng)];
        };
        for (int k = 0; k < 10; ++k) CHECK(srect_with(t, random_corner) == base);
    }
}

TEST_CASE("Stembridge set for f on the worked instance") {
    const auto set = stembridge_f_set({3, 2}, {3, 2}, {5, 3, 2});
    const std::set<Tableau> got(set.begin(), set.end());
    const std::set<Tableau> want{MS(Partition{3, 2}, {"1 1", "2'", "1 2"}), MS(Partition{3, 2}, {"1' 1", "2'", "1 2"})};
    CHECK(got == want);
    CHECK(f_coefficient({3, 2}, {3, 2}, {5, 3, 2}) == 2);
    CHECK(f_via_standard({3, 2}, {3, 2}, {5, 3, 2}) == 2);
    for (const auto& t : set) {
        CHECK(satisfies_marked_rules(t));
        CHECK(is_shifted_lattice_word(word(t)));
    }
}

TEST_CASE("trivial f values") {
    const auto empty = stembridge_f_set({}, {3, 1}, {3, 1});
    REQUIRE(empty.size() == 1);
    CHECK(empty.front().size() == 0);
    for (const auto& lam : strict_up_to(8)) {
        CHECK(f_coefficient(lam, {}, lam) == 1);
        CHECK(f_via_standard(lam, {}, lam) == 1);
    }
    CHECK(f_coefficient({5, 2}, staircase(3), {7, 4, 2}) == 2);
    CHECK(f_coefficient({2}, {1}, {2}) == 0);  // sizes disagree
}

TEST_CASE("f by Stembridge tableaux and by standard tableaux agree") {
    const auto strict = strict_up_to(8);
    int nonzero = 0;
    for (const auto& nu : strict)
        for (const auto& mu : strict) {
            if (!nu.contains(mu)) continue;
            const int n = nu.size() - mu.size();
            for (const auto& lam : enumerate_strict_partitions(n)) {
                const long long f = f_coefficient(lam, mu, nu);
                CHECK(f == f_via_standard(lam, mu, nu));
                if (f) ++nonzero;
            }
        }
    CHECK(nonzero > 100);
}

TEST_CASE("f agrees with the product of P polynomials in three variables") {
    // Every strict partition of size <= 8 has at most 3 parts, so 3 variables separate them.
    const auto strict = strict_up_to(7);
    std::map<StrictPartition, Polynomial> P;
    for (const auto& s : strict_up_to(8)) P.emplace(s, schur_q_polynomial(s, 3).divided(1LL << s.length()));
    for (const auto& lam : strict)
        for (const auto& mu : strict) {
            if (lam.empty() || mu.empty() || lam.size() + mu.size() > 8 || lam < mu) continue;
            const auto expansion = expand_in_p(P.at(lam) * P.at(mu), 3);
            for (const auto& nu : enumerate_strict_partitions(lam.size() + mu.size())) {
                const auto it = expansion.find(nu);
                const long long want = it == expansion.end() ? 0 : it->second;
                CHECK(f_coefficient(lam, mu, nu) == want);
                CHECK(f_coefficient(mu, lam, nu) == want);
            }
        }
}

TEST_CASE("g by Stembridge fillings of the ordinary diagram") {
    CHECK(g_via_shape_mu({5, 2}, {4, 2, 1}) == 2);
    CHECK(g_via_shape_mu({4, 2}, {3, 2, 1}) == 2);
    for (int n = 1; n <= 8; ++n) CHECK(g_via_shape_mu(StrictPartition{n}, Partition{n}) == 1);
    CHECK(g_via_shape_mu({3}, {2}) == 0);
    for (const auto& t : stembridge_g_set({5, 2}, {4, 2, 1})) {
        CHECK(!t.is_shifted());
        CHECK(satisfies_marked_rules(t));
    }
}

TEST_CASE("g equals f with the staircase and is invariant under conjugation") {
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : enumerate_strict_partitions(n))
            for (const auto& mu : enumerate_partitions(n)) {
                const long long g = g_via_shape_mu(lam, mu);
                const StrictPartition delta = staircase(mu.length());
                CHECK(g == f_coefficient(lam, delta, StrictPartition(add_staircase(mu))));
                CHECK(g == g_via_shape_mu(lam, conjugate(mu)));
            }
}

TEST_CASE("P expansion") {
    const std::map<Partition, long long> want{{{2, 2, 1, 1}, 1}, {{2, 2, 2}, 1}, {{3, 1, 1, 1}, 1}, {{3, 2, 1}, 2},
                                              {{3, 3}, 1},       {{4, 1, 1}, 1}, {{4, 2}, 1}};
    CHECK(p_expansion({4, 2}) == want);
    CHECK(p_expansion({1}) == std::map<Partition, long long>{{{1}, 1}});
}

TEST_CASE("Q polynomial is divisible and matches the Schur expansion of P") {
    SchurExpander expander;
    for (const auto& lam : strict_up_to(7)) {
        if (lam.empty()) continue;
        const Polynomial q = schur_q_polynomial(lam, 3);
        CHECK(q.is_symmetric());
        const Polynomial p = q.divided(1LL << lam.length());
        Polynomial sum(3);
        for (const auto& [mu, g] : p_expansion(lam)) sum += expander.schur(mu, 3).scaled(g);
        CHECK(sum == p);
    }
    CHECK_THROWS_AS(schur_q_polynomial({1}, 0), PreconditionError);
}
