#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

inline constexpr int kMaxParamPlayers = 16;
/// The arc-subset enumeration (verification mode) is only usable on tiny
/// instances.
inline constexpr int kMaxExhaustiveSfasPlayers = 8;

/// How the subset feedback searches explore candidate modifications.
enum class SearchMode {
    /// Iterative deepening that branches on the arcs (vertices) of a
    /// directed triangle through a terminal.
    Branching,
    /// Every arc (vertex) subset in increasing size, no pruning.
    Exhaustive,
};

struct ParameterReport {
    int fas = 0;
    int fvs = 0;
    int sfas_v = 0;
    int sfvs_v = 0;
    int sfas_in = 0;
    int sfas_out = 0;
    int in_degree = 0;
    int out_degree = 0;

    bool operator==(const ParameterReport&) const = default;
};

namespace detail {

inline void check_param_capacity(const Tournament& d, int limit) {
    if (d.size() > limit)
        throw Error(ErrorCode::CapacityExceeded,
                    std::to_string(d.size()) + " players exceed the limit of " + std::to_string(limit));
}

/// Visits every subset of `universe` with exactly k members.
template <typename Fn>
bool any_subset_of_size(PlayerSet universe, int k, Fn&& fn) {
    const std::vector<Player> items = universe.to_vector();
    const int m = static_cast<int>(items.size());
    if (k > m) return false;
    if (k == 0) return fn(PlayerSet{});
    std::uint64_t pick = (std::uint64_t{1} << k) - 1;
    const std::uint64_t stop = std::uint64_t{1} << m;
    while (pick < stop) {
        PlayerSet chosen;
        for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) chosen.insert(items[static_cast<std::size_t>(std::countr_zero(rest))]);
        if (fn(chosen)) return true;
        // Gosper's hack: next integer with the same popcount.
        const std::uint64_t low = pick & (~pick + 1);
        const std::uint64_t ripple = pick + low;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
    return false;
}

inline void reverse_arc(ArcRelation& out, Player u, Player v) {
    out[static_cast<std::size_t>(u)].erase(v);
    out[static_cast<std::size_t>(v)].insert(u);
}

struct Triangle {
    Player a, b, c; // a -> b -> c -> a
};

/// A directed triangle through some terminal inside `within`.
inline std::optional<Triangle> triangle_through(const ArcRelation& out, PlayerSet terminals, PlayerSet within) {
    for (Player t : terminals & within) {
        PlayerSet into_t;
        for (Player y : within)
            if (out[static_cast<std::size_t>(y)].contains(t)) into_t.insert(y);
        for (Player x : out[static_cast<std::size_t>(t)] & within) {
            const PlayerSet closing = out[static_cast<std::size_t>(x)] & into_t;
            if (!closing.empty()) return Triangle{t, x, closing.front()};
        }
    }
    return std::nullopt;
}

/// Depth-bounded search for an arc set of size <= budget whose reversal
/// leaves no cycle through a terminal. `locked[u]` holds v when the pair
/// {u, v} was already reversed on this branch.
inline bool sfas_branch(ArcRelation& out, ArcRelation& locked, PlayerSet terminals, PlayerSet all, int budget) {
    const auto tri = triangle_through(out, terminals, all);
    if (!tri) {
        // Every vertex on a cycle of a tournament lies on a triangle.
        return true;
    }
    if (budget == 0) return false;
    const std::array<std::pair<Player, Player>, 3> arcs{{{tri->a, tri->b}, {tri->b, tri->c}, {tri->c, tri->a}}};
    for (auto [u, v] : arcs) {
        if (locked[static_cast<std::size_t>(u)].contains(v)) continue;
        reverse_arc(out, u, v);
        locked[static_cast<std::size_t>(u)].insert(v);
        locked[static_cast<std::size_t>(v)].insert(u);
        const bool ok = sfas_branch(out, locked, terminals, all, budget - 1);
        locked[static_cast<std::size_t>(u)].erase(v);
        locked[static_cast<std::size_t>(v)].erase(u);
        reverse_arc(out, v, u);
        if (ok) return true;
    }
    return false;
}

inline bool sfvs_branch(const ArcRelation& out, PlayerSet terminals, PlayerSet alive, int budget) {
    const auto tri = triangle_through(out, terminals, alive);
    if (!tri) return true;
    if (budget == 0) return false;
    for (Player x : {tri->a, tri->b, tri->c}) {
        if (terminals.contains(x)) continue;
        if (sfvs_branch(out, terminals, alive - PlayerSet::single(x), budget - 1)) return true;
    }
    return false;
}

} // namespace detail

/// Minimum number of arc reversals making the tournament acyclic, by the
/// subset DP f(S) = min over last-placed v of f(S - v) + |N_out(v) in S|.
inline int fas_number(const Tournament& d) {
    detail::check_param_capacity(d, kMaxParamPlayers);
    const int n = d.size();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint8_t> best(states, 0);
    for (std::size_t s = 1; s < states; ++s) {
        const PlayerSet set(static_cast<PlayerSet::Mask>(s));
        int value = 255;
        for (Player v : set) {
            const PlayerSet before = set - PlayerSet::single(v);
            const int cost = best[before.mask()] + (d.out_neighbors(v) & before).size();
            value = std::min(value, cost);
        }
        best[s] = static_cast<std::uint8_t>(value);
    }
    return best[states - 1];
}

/// Minimum number of vertex deletions making the tournament acyclic.
inline int fvs_number(const Tournament& d) {
    detail::check_param_capacity(d, kMaxParamPlayers);
    const PlayerSet all = d.players();
    for (int k = 0; k <= d.size(); ++k) {
        if (detail::any_subset_of_size(all, k, [&](PlayerSet x) { return is_acyclic(d, all - x); })) return k;
    }
    return d.size();
}

/// Minimum number of arcs whose reversal leaves no cycle through `terminals`.
inline int sfas_number(const Tournament& d, PlayerSet terminals, SearchMode mode = SearchMode::Branching) {
    const PlayerSet all = d.players();
    if (!terminals.is_subset_of(all)) throw Error(ErrorCode::PreconditionViolated, "terminals outside the tournament");
    if (mode == SearchMode::Branching) {
        detail::check_param_capacity(d, kMaxParamPlayers);
        ArcRelation out = d.arcs();
        ArcRelation locked(out.size());
        for (int k = 0;; ++k)
            if (detail::sfas_branch(out, locked, terminals, all, k)) return k;
    }

    detail::check_param_capacity(d, kMaxExhaustiveSfasPlayers);
    std::vector<std::pair<Player, Player>> arcs;
    for (Player u : all)
        for (Player v : d.out_neighbors(u)) arcs.emplace_back(u, v);
    const int m = static_cast<int>(arcs.size());
    for (int k = 0; k <= m; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            ArcRelation out = d.arcs();
            for (int i : idx) detail::reverse_arc(out, arcs[static_cast<std::size_t>(i)].first, arcs[static_cast<std::size_t>(i)].second);
            if (!has_cycle_through(out, terminals, all)) return k;
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return m;
}

/// Minimum vertex set disjoint from `terminals` whose deletion leaves no
/// cycle through a terminal. Throws Infeasible when terminals alone already
/// close a cycle.
inline int sfvs_number(const Tournament& d, PlayerSet terminals, SearchMode mode = SearchMode::Branching) {
    detail::check_param_capacity(d, kMaxParamPlayers);
    const PlayerSet all = d.players();
    if (!terminals.is_subset_of(all)) throw Error(ErrorCode::PreconditionViolated, "terminals outside the tournament");
    if (has_cycle_through(d, terminals, terminals))
        throw Error(ErrorCode::Infeasible, "a cycle runs through terminals only");
    const PlayerSet candidates = all - terminals;
    for (int k = 0; k <= candidates.size(); ++k) {
        if (mode == SearchMode::Branching) {
            if (detail::sfvs_branch(d.arcs(), terminals, all, k)) return k;
        } else if (detail::any_subset_of_size(candidates, k, [&](PlayerSet x) {
                       return !has_cycle_through(d, terminals, all - x);
                   })) {
            return k;
        }
    }
    return candidates.size();
}

inline ParameterReport report(const Tournament& d, Player favorite) {
    ParameterReport r;
    const PlayerSet all = d.players();
    const PlayerSet v = PlayerSet::single(favorite);
    r.fas = fas_number(d);
    r.fvs = fvs_number(d);
    r.sfas_v = sfas_number(d, v);
    r.sfvs_v = sfvs_number(d, v);
    r.sfas_in = sfas_number(d, d.in_neighbors(favorite, all));
    r.sfas_out = sfas_number(d, d.out_neighbors(favorite, all));
    r.in_degree = d.in_degree(favorite);
    r.out_degree = d.out_degree(favorite);
    return r;
}

inline ParameterReport report(const Tournament& d) { return report(d, d.favorite()); }

/// Both neighbourhoods of the favorite induce acyclic subtournaments.
inline bool is_neighbor_acyclic(const Tournament& d, Player favorite) {
    const PlayerSet all = d.players();
    return is_acyclic(d, d.out_neighbors(favorite, all)) && is_acyclic(d, d.in_neighbors(favorite, all));
}
inline bool is_neighbor_acyclic(const Tournament& d) { return is_neighbor_acyclic(d, d.favorite()); }

/// Names of the ordering relations between parameters that `r` violates.
/// The last one is only required on neighbor-acyclic instances.
inline std::vector<std::string> inequality_violations(const ParameterReport& r, bool neighbor_acyclic) {
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const char* name) {
        if (!ok) bad.emplace_back(name);
    };
    expect(r.fvs <= r.fas, "fvs<=fas");
    expect(r.sfas_v <= r.fas, "sfas_v<=fas");
    expect(r.sfvs_v <= r.fvs, "sfvs_v<=fvs");
    expect(r.sfas_v <= std::min(r.in_degree, r.out_degree), "sfas_v<=min(in,out)");
    expect(r.sfas_v <= r.sfas_in, "sfas_v<=sfas_in");
    expect(r.sfas_v <= r.sfas_out, "sfas_v<=sfas_out");
    expect(r.fvs <= r.sfas_in + r.sfas_out, "fvs<=sfas_in+sfas_out");
    if (neighbor_acyclic) expect(r.fvs <= 2 * r.sfas_v, "fvs<=2*sfas_v");
    return bad;
}

} // namespace tfp
