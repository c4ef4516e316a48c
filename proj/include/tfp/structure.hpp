#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracket.hpp"
#include "error.hpp"
#include "matching.hpp"
#include "player_set.hpp"
#include "tournament.hpp"
#include "width_params.hpp"

namespace tfp {

inline bool is_king(const Tournament& d, Player v) {
    const auto dist = distances_from(d, v);
    return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0 && x <= 2; });
}

inline bool is_3king(const Tournament& d, Player v) {
    const auto dist = distances_from(d, v);
    return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0 && x <= 3; });
}

// ---------------------------------------------------------------------------
// Sufficient conditions from prior work (verdicts only).

struct Lemma6Result {
    bool holds = false;
    bool enough_out_neighbors = false; ///< 3|A| >= n
    bool degrees_bounded = false;      ///< out(b) <= out(v) for b in B
    /// Arcs (b, c) saturating C, when such a matching exists.
    std::optional<std::vector<Arc>> matching;
};

/// With A = N_out(v), B = N_out(A) & N_in(v), C = N_in(v) - B: checks
/// 3|A| >= n, out(b) <= out(v) on B, and a matching from B that covers C.
inline Lemma6Result check_lemma6(const Tournament& d, Player v) {
    if (!is_3king(d, v)) throw Error(ErrorCode::Not3King, "player " + std::to_string(v) + " is not a 3-king");
    const PlayerSet all = d.players();
    const PlayerSet a = d.out_neighbors(v, all);
    PlayerSet reach_a;
    for (Player x : a) reach_a |= d.out_neighbors(x, all);
    const PlayerSet in = d.in_neighbors(v, all);
    const PlayerSet b = (reach_a - a) & in;
    const PlayerSet c = in - b;

    Lemma6Result r;
    r.enough_out_neighbors = 3 * a.size() >= d.size();
    r.degrees_bounded = std::all_of(b.begin(), b.end(), [&](Player x) { return d.out_degree(x) <= d.out_degree(v); });
    auto m = max_arc_matching(d, b, c);
    if (static_cast<int>(m.size()) == c.size()) r.matching = std::move(m);
    r.holds = r.enough_out_neighbors && r.degrees_bounded && r.matching.has_value();
    return r;
}

struct Lemma8Result {
    bool holds = false;
    int k = 0; ///< maximum matching size from N_out(v) to N_in(v)
    std::vector<Arc> matching;
};

/// holds iff |N_out(v)| + k > n/2 for the maximum matching of arcs from
/// N_out(v) to N_in(v).
inline Lemma8Result check_lemma8(const Tournament& d, Player v) {
    if (!is_king(d, v)) throw Error(ErrorCode::NotKing, "player " + std::to_string(v) + " is not a king");
    const PlayerSet all = d.players();
    const PlayerSet a = d.out_neighbors(v, all);
    Lemma8Result r;
    r.matching = max_arc_matching(d, a, d.in_neighbors(v, all));
    r.k = static_cast<int>(r.matching.size());
    r.holds = 2 * (a.size() + r.k) > d.size();
    return r;
}

// ---------------------------------------------------------------------------
// Constructive seeding for neighbor-acyclic instances.

/// Why the construction's preconditions fail at the root, if they do.
inline std::optional<std::string> thm7_issue(const Tournament& d, Player v) {
    const int n = d.size();
    if (!is_power_of_two(n)) return "player count " + std::to_string(n) + " is not a power of two";
    if (!is_neighbor_acyclic(d, v)) return "instance is not neighbor-acyclic";
    const PlayerSet all = d.players();
    const PlayerSet a = d.out_neighbors(v, all);
    const PlayerSet b = d.in_neighbors(v, all);
    if (3 * a.size() < n) return "|N_out(v)| < n/3";
    for (Player x : b) {
        // out(b) <= |N_in| / |N_out| * out(v), cross-multiplied.
        if (static_cast<long>(d.out_degree(x)) * a.size() > static_cast<long>(b.size()) * d.out_degree(v))
            return "out-degree of in-neighbor " + std::to_string(x) + " exceeds the ratio bound";
    }
    return std::nullopt;
}

inline bool check_thm7(const Tournament& d, Player v) { return !thm7_issue(d, v).has_value(); }

/// What one round of the construction saw.
struct Thm7Level {
    int players = 0;
    int a_size = 0;
    int b_size = 0;
    /// 1 or 2 for the parity cases, 0 when no in-neighbor survives.
    int parity_case = 0;
    bool invariant_holds = false;
    bool out_bound_holds = false;
};

struct Thm7Result {
    Bracket bracket;
    MatchSetSequence sequence;
    std::vector<Thm7Level> levels;
};

namespace detail {

[[noreturn]] inline void thm7_fail(std::size_t level, const std::string& what) {
    throw Error(ErrorCode::PreconditionViolated, "round " + std::to_string(level + 1) + ": " + what);
}

/// First player of `order` (skipping `skip`) that beats `target`.
inline std::optional<Player> first_beating(const Tournament& d, const std::vector<Player>& order, Player target,
                                           PlayerSet skip) {
    for (Player a : order)
        if (!skip.contains(a) && d.beats(a, target)) return a;
    return std::nullopt;
}

} // namespace detail

/// Builds a bracket crowning v round by round. Each round keeps the
/// invariant 3|A'| >= |V'| and out_{V'}(b) <= |B'| for every surviving
/// in-neighbor b; with B' = b_1..b_m in topological order this gives
/// out_{A'}(b_i) <= i - 1, which is asserted at every level.
inline Thm7Result seed_thm7_traced(const Tournament& d, Player v) {
    if (auto issue = thm7_issue(d, v)) throw Error(ErrorCode::PreconditionViolated, "root: " + *issue);

    Thm7Result result;
    PlayerSet alive = d.players();
    while (alive.size() > 1) {
        const std::size_t level = result.levels.size();
        const PlayerSet a_set = d.out_neighbors(v, alive);
        const PlayerSet b_set = d.in_neighbors(v, alive);
        const std::vector<Player> a = topological_order(d, a_set);
        const std::vector<Player> b = topological_order(d, b_set);
        const int n = alive.size();
        const int m = static_cast<int>(b.size());

        Thm7Level info;
        info.players = n;
        info.a_size = static_cast<int>(a.size());
        info.b_size = m;
        info.invariant_holds = 3 * info.a_size >= n && std::all_of(b.begin(), b.end(), [&](Player x) {
                                   return d.out_neighbors(x, alive).size() <= m;
                               });
        if (!info.invariant_holds) detail::thm7_fail(level, "invariant lost");
        info.out_bound_holds = true;
        for (int i = 0; i < m; ++i)
            if ((d.out_neighbors(b[static_cast<std::size_t>(i)], alive) & a_set).size() > i) info.out_bound_holds = false;
        if (!info.out_bound_holds) detail::thm7_fail(level, "out_{A'}(b_i) <= i-1 violated");

        MatchSet round;
        PlayerSet used;
        auto take = [&](Player w, Player l) {
            round.push_back(Match{w, l});
            used.insert(w);
            used.insert(l);
        };

        if (m == 0) {
            info.parity_case = 0;
        } else if (m % 2 == 1) {
            info.parity_case = 1;
            const int k = (m + 1) / 2;
            const Player bk = b[static_cast<std::size_t>(k - 1)];
            const auto a1 = detail::first_beating(d, a, bk, {});
            if (!a1) detail::thm7_fail(level, "no out-neighbor of v beats b_k");
            take(*a1, bk);
            for (int i = 1; i <= k - 1; ++i) take(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i + k - 1)]);
        } else {
            info.parity_case = 2;
            const int k = m / 2;
            const Player bk1 = b[static_cast<std::size_t>(k)];
            const Player bk = b[static_cast<std::size_t>(k - 1)];
            const auto a1 = detail::first_beating(d, a, bk1, {});
            if (!a1) detail::thm7_fail(level, "no out-neighbor of v beats b_{k+1}");
            const auto a2 = detail::first_beating(d, a, bk, PlayerSet::single(*a1));
            if (!a2) detail::thm7_fail(level, "no second out-neighbor of v beats b_k");
            take(*a1, bk1);
            take(*a2, bk);
            for (int i = 1; i <= k - 1; ++i) take(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(i + k)]);
        }

        // v takes the topologically last remaining out-neighbor; the rest of
        // A' pair off consecutively (D[A'] is transitive).
        std::vector<Player> rest;
        for (Player x : a)
            if (!used.contains(x)) rest.push_back(x);
        if (rest.empty()) detail::thm7_fail(level, "no out-neighbor left for v");
        take(v, rest.back());
        rest.pop_back();
        if (rest.size() % 2 != 0) detail::thm7_fail(level, "odd number of unmatched out-neighbors");
        for (std::size_t i = 0; i < rest.size(); i += 2) take(rest[i], rest[i + 1]);

        if (used != alive) detail::thm7_fail(level, "round does not cover every player");
        result.levels.push_back(info);
        alive = winners_of(round);
        result.sequence.push_back(std::move(round));
    }

    result.bracket = sequence_to_bracket(result.sequence);
    if (play(d, result.bracket).winner != v) throw std::logic_error("seed_thm7 produced a losing bracket");
    return result;
}

inline Bracket seed_thm7(const Tournament& d, Player v) { return seed_thm7_traced(d, v).bracket; }

// ---------------------------------------------------------------------------
// Matching construction for neighbor-acyclic instances with a king favorite.

inline std::optional<std::string> thm9_precondition_issue(const Tournament& d, Player v) {
    if (!is_neighbor_acyclic(d, v)) return "instance is not neighbor-acyclic";
    if (!is_king(d, v)) return "favorite is not a king";
    const PlayerSet all = d.players();
    for (Player x : d.in_neighbors(v, all))
        if (d.out_degree(x) >= 2 * d.out_degree(v))
            return "in-neighbor " + std::to_string(x) + " has out-degree >= 2 out(v)";
    return std::nullopt;
}

/// Arcs (a, b) from N_out(v) to N_in(v). With p = n - 2|A| > 0 the q-th arc
/// targets b_{1+p-q} (topological order of N_in) and takes the first unused
/// in-neighbor in A; k = min(p, |A|) arcs are produced. When |A| >= n/2 a
/// single arc suffices.
inline std::vector<Arc> king_matching(const Tournament& d, Player v) {
    if (auto issue = thm9_precondition_issue(d, v)) throw Error(ErrorCode::PreconditionViolated, *issue);
    const PlayerSet all = d.players();
    const std::vector<Player> a = topological_order(d, d.out_neighbors(v, all));
    const std::vector<Player> b = topological_order(d, d.in_neighbors(v, all));
    const int n = d.size();
    const int a_size = static_cast<int>(a.size());
    std::vector<Arc> m;

    if (2 * a_size >= n) {
        for (Player y : b) {
            if (auto x = detail::first_beating(d, a, y, {})) {
                m.emplace_back(*x, y);
                break;
            }
        }
        // A king with in-neighbors always has an arc from A into B.
        if (m.empty() && !b.empty()) throw Error(ErrorCode::PreconditionViolated, "no arc from N_out to N_in");
        return m;
    }

    const int p = n - 2 * a_size;
    const int k = std::min(p, a_size);
    PlayerSet used;
    for (int q = 1; q <= k; ++q) {
        const int target = 1 + p - q;
        const Player y = b[static_cast<std::size_t>(target - 1)];
        const auto x = detail::first_beating(d, a, y, used);
        if (!x) throw Error(ErrorCode::PreconditionViolated, "b_" + std::to_string(target) + " lacks a free in-neighbor");
        used.insert(*x);
        m.emplace_back(*x, y);
    }
    return m;
}

inline bool check_thm9(const Tournament& d, Player v) {
    if (thm9_precondition_issue(d, v)) return false;
    const auto m = king_matching(d, v);
    return 2 * (d.out_degree(v) + static_cast<int>(m.size())) > d.size();
}

// ---------------------------------------------------------------------------

struct ConditionReport {
    bool is_king = false;
    bool is_3king = false;
    bool neighbor_acyclic = false;
    bool lemma6_holds = false;
    bool lemma8_holds = false;
    bool thm7_holds = false;
    bool thm9_holds = false;
    /// Arcs from N_out to N_in: the constructive matching when thm9 holds,
    /// otherwise a maximum matching when the favorite is a king.
    std::optional<std::vector<Arc>> matching;
};

inline ConditionReport condition_report(const Tournament& d, Player v) {
    ConditionReport r;
    r.is_king = is_king(d, v);
    r.is_3king = is_3king(d, v);
    r.neighbor_acyclic = is_neighbor_acyclic(d, v);
    if (r.is_3king) r.lemma6_holds = check_lemma6(d, v).holds;
    if (r.is_king) {
        auto l8 = check_lemma8(d, v);
        r.lemma8_holds = l8.holds;
        r.matching = std::move(l8.matching);
    }
    r.thm7_holds = check_thm7(d, v);
    r.thm9_holds = check_thm9(d, v);
    if (r.thm9_holds) r.matching = king_matching(d, v);
    return r;
}

inline ConditionReport condition_report(const Tournament& d) { return condition_report(d, d.favorite()); }

} // namespace tfp
