#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tfp/exact_solver.hpp"
#include "tfp/generator.hpp"
#include "tfp/structure.hpp"

using namespace tfp;

namespace {

Tournament reversed(const Tournament& d, Player u, Player v) {
    ArcRelation arcs = d.arcs();
    arcs[static_cast<std::size_t>(u)].erase(v);
    arcs[static_cast<std::size_t>(v)].insert(u);
    return Tournament(arcs, d.favorite());
}

} // namespace

TEST_CASE("kings in small tournaments") {
    const auto t4 = oracle::transitive(4);
    CHECK(is_king(t4, 0));
    CHECK(is_3king(t4, 0));
    CHECK_FALSE(is_3king(t4, 3));
    CHECK_FALSE(is_king(t4, 1));

    const auto c3 = oracle::three_cycle();
    for (Player v = 0; v < 3; ++v) CHECK(is_king(c3, v));

    const auto tight = tight_no_instance(8);
    CHECK(is_king(tight, 0));
}

TEST_CASE("favorite of a neighbor-acyclic instance without a source is a 3-king") {
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 400 && checked < 100; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9); // 4..12
        const auto d = gen_neighbor_acyclic(n, 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 2)), seed,
                                            Enforce::None);
        if (!sources(d).empty()) continue;
        ++checked;
        CHECK(is_3king(d, 0));
    }
    CHECK(checked == 100);
}

TEST_CASE("3-king matching condition") {
    SECTION("empty C with the other conditions met") {
        // v=0 beats 1, 2; 3 beats 0 and 1; 2 beats 3.
        const auto d = Tournament::from_matrix({{false, true, true, false},
                                                {false, false, true, false},
                                                {false, false, false, true},
                                                {true, true, false, false}},
                                               0);
        const auto r = check_lemma6(d, 0);
        CHECK(r.enough_out_neighbors);
        CHECK(r.degrees_bounded);
        REQUIRE(r.matching.has_value());
        CHECK(r.matching->empty());
        CHECK(r.holds);
        CHECK(can_win(d));
    }
    SECTION("not a 3-king") {
        CHECK_THROWS_AS(check_lemma6(oracle::transitive(4), 3), Error);
    }
    SECTION("more in- than out-neighbors breaks the degree bound") {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            const auto d = gen_neighbor_acyclic(8, 1 + static_cast<int>(seed % 3), seed, Enforce::None);
            if (!sources(d).empty()) continue;
            const auto r = check_lemma6(d, 0);
            CHECK_FALSE(r.degrees_bounded);
            CHECK_FALSE(r.holds);
        }
    }
}

TEST_CASE("king matching-size condition") {
    const auto t = oracle::transitive(8);
    const auto top = check_lemma8(t, 0);
    CHECK(top.holds);
    CHECK(top.k == 0);
    CHECK_THROWS_AS(check_lemma8(t, 1), Error);

    // |A| = n/2 and a single arc from A into B.
    const auto d = Tournament::from_matrix({{false, true, true, false},
                                            {false, false, true, true},
                                            {false, false, false, false},
                                            {true, false, true, false}},
                                           0);
    const auto r = check_lemma8(d, 0);
    CHECK(r.k == 1);
    CHECK(r.holds);
    CHECK(is_arc_matching(d, r.matching, PlayerSet{1, 2}, PlayerSet{3}));
}

TEST_CASE("king conditions imply a yes from the solver") {
    int l6 = 0;
    int l8 = 0;
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        const int n = seed % 2 == 0 ? 8 : 4;
        const auto d = random_tournament(n, seed);
        ExactSolver solver(d);
        for (Player v = 0; v < n; ++v) {
            bool claimed = false;
            if (is_3king(d, v) && check_lemma6(d, v).holds) {
                ++l6;
                claimed = true;
            }
            if (is_king(d, v) && check_lemma8(d, v).holds) {
                ++l8;
                claimed = true;
            }
            if (claimed) CHECK(solver.can_win(v));
        }
    }
    CHECK(l6 > 0);
    CHECK(l8 > 0);
}

TEST_CASE("seed_thm7 base case") {
    const auto d = Tournament::from_matrix({{false, true}, {false, false}}, 0);
    CHECK(check_thm7(d, 0));
    CHECK(seed_thm7(d, 0).leaves == std::vector<Player>{0, 1});
}

TEST_CASE("seed_thm7 on eight players with three out-neighbors") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto d = gen_neighbor_acyclic(8, 3, seed, Enforce::Thm7);
        REQUIRE(check_thm7(d, 0));
        const auto r = seed_thm7_traced(d, 0);
        CHECK(play(d, r.bracket).winner == 0);
        CHECK(validate_sequence(d, d.players(), r.sequence));
        REQUIRE(r.levels.size() == 3);
        CHECK(r.levels[0].parity_case == 2);
        CHECK(r.levels[1].parity_case == 1);
        CHECK(r.levels[2].parity_case == 0);
        for (const auto& level : r.levels) {
            CHECK(level.invariant_holds);
            CHECK(level.out_bound_holds);
        }
    }
}

TEST_CASE("seed_thm7 soundness across sizes") {
    for (int n : {4, 8, 16}) {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const int lo = (n + 2) / 3;
            const int a_size = lo + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1 - lo));
            const auto d = gen_neighbor_acyclic(n, a_size, seed, Enforce::Thm7);
            const auto r = seed_thm7_traced(d, 0);
            CHECK(play(d, r.bracket).winner == 0);
            CHECK(static_cast<int>(r.levels.size()) == log2_exact(n));
        }
    }
}

TEST_CASE("seed_thm7 rejects an inflated out-degree") {
    const auto d = gen_neighbor_acyclic(8, 3, 5, Enforce::Thm7);
    const auto b = topological_order(d, d.in_neighbors(0, d.players()));
    // b_1 may beat no out-neighbor; give it one.
    const Player victim = d.out_neighbors(0, d.players()).front();
    const auto bad = reversed(d, victim, b.front());
    CHECK_FALSE(check_thm7(bad, 0));
    CHECK_THROWS_AS(seed_thm7(bad, 0), Error);
    CHECK_THROWS_AS(seed_thm7(oracle::three_cycle(), 0), Error);
}

TEST_CASE("seeding preconditions imply a yes from the solver") {
    int holds = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const auto d = gen_neighbor_acyclic(8, 1 + static_cast<int>(seed % 6), seed, Enforce::None);
        if (!check_thm7(d, 0)) continue;
        ++holds;
        CHECK(can_win(d));
    }
    CHECK(holds > 0);
}

TEST_CASE("king_matching") {
    SECTION("three out-neighbors out of eight: targets b_2 then b_1") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto d = gen_neighbor_acyclic(8, 3, seed, Enforce::Thm9);
            const auto b = topological_order(d, d.in_neighbors(0, d.players()));
            const auto m = king_matching(d, 0);
            REQUIRE(m.size() == 2);
            CHECK(m[0].second == b[1]);
            CHECK(m[1].second == b[0]);
            CHECK(m[0].first != m[1].first);
            CHECK(is_arc_matching(d, m, d.out_neighbors(0, d.players()), d.in_neighbors(0, d.players())));
            CHECK(2 * (3 + static_cast<int>(m.size())) > 8);
        }
    }
    SECTION("half the field as out-neighbors needs a single arc") {
        const auto d = gen_neighbor_acyclic(8, 4, 3, Enforce::Thm9);
        const auto m = king_matching(d, 0);
        REQUIRE(m.size() == 1);
        CHECK(d.beats(m[0].first, m[0].second));
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(king_matching(tight_no_instance(8), 0), Error);
        CHECK_THROWS_AS(king_matching(oracle::transitive(4), 3), Error);
    }
}

TEST_CASE("strict out-degree bound for a king favorite") {
    CHECK_FALSE(check_thm9(tight_no_instance(8), 0));
    CHECK(check_thm9(oracle::transitive(8), 0));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int a_size = 3 + static_cast<int>(seed % 4);
        const auto d = gen_neighbor_acyclic(8, a_size, seed, Enforce::Thm9);
        REQUIRE(check_thm9(d, 0));
        const auto m = king_matching(d, 0);
        CHECK(static_cast<int>(m.size()) == (2 * a_size >= 8 ? 1 : std::min(8 - 2 * a_size, a_size)));
        CHECK(can_win(d));
    }
}

TEST_CASE("tight instance sits exactly on the out-degree boundary") {
    for (int n : {4, 8, 16}) {
        const auto d = tight_no_instance(n);
        const PlayerSet in = d.in_neighbors(0, d.players());
        CHECK(in.size() == n / 2);
        bool boundary = false;
        for (Player b : in) boundary = boundary || d.out_degree(b) == 2 * d.out_degree(0);
        CHECK(boundary);
        CHECK(is_king(d, 0));
        CHECK(is_neighbor_acyclic(d));
    }
}

TEST_CASE("condition report") {
    const auto r = condition_report(oracle::transitive(8));
    CHECK(r.is_king);
    CHECK(r.is_3king);
    CHECK(r.neighbor_acyclic);
    CHECK(r.lemma8_holds);
    CHECK(r.thm7_holds);
    CHECK(r.thm9_holds);

    const auto sink = condition_report(oracle::transitive(4, 3));
    CHECK_FALSE(sink.is_3king);
    CHECK_FALSE(sink.lemma6_holds);
    CHECK_FALSE(sink.lemma8_holds);
    CHECK_FALSE(sink.thm7_holds);
    CHECK_FALSE(sink.thm9_holds);
    CHECK_FALSE(sink.matching.has_value());

    const auto tight = condition_report(tight_no_instance(8));
    CHECK(tight.is_king);
    CHECK_FALSE(tight.thm9_holds);
    CHECK_FALSE(tight.lemma8_holds);
}
