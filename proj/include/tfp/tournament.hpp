#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "player_set.hpp"

namespace tfp {

/// Out-adjacency of a digraph on dense indices. Used as a mutable snapshot
/// of a tournament's arcs (e.g. after reversing a candidate arc set).
using ArcRelation = std::vector<PlayerSet>;

/// A complete orientation of K_n with a distinguished favorite.
class Tournament {
public:
    Tournament() = default;

    /// Builds a tournament from explicit out-neighbourhoods. Validates that
    /// exactly one arc joins every pair and that there are no loops.
    Tournament(ArcRelation out, Player favorite) : out_(std::move(out)), favorite_(favorite) {
        const int n = static_cast<int>(out_.size());
        if (n < 1) throw Error(ErrorCode::NotATournament, "empty player set");
        PlayerSet::check_capacity(n);
        const PlayerSet all = PlayerSet::range(n);
        for (int u = 0; u < n; ++u) {
            if (!out_[u].is_subset_of(all))
                throw Error(ErrorCode::NotATournament, "arc leaves the player range at row " + std::to_string(u));
            if (out_[u].contains(u))
                throw Error(ErrorCode::NotATournament, "loop at player " + std::to_string(u));
        }
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (out_[u].contains(v) == out_[v].contains(u))
                    throw Error(ErrorCode::NotATournament,
                                "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") must carry exactly one arc");
            }
        }
        if (favorite_ < 0 || favorite_ >= n)
            throw Error(ErrorCode::BadFavorite, "favorite " + std::to_string(favorite_) + " not in [0," +
                                                    std::to_string(n) + ")");
    }

    static Tournament from_matrix(const std::vector<std::vector<bool>>& rows, Player favorite) {
        const std::size_t n = rows.size();
        if (n > static_cast<std::size_t>(PlayerSet::kCapacity)) PlayerSet::check_capacity(static_cast<int>(n));
        ArcRelation out(n);
        for (std::size_t u = 0; u < n; ++u) {
            if (rows[u].size() != n)
                throw Error(ErrorCode::NotATournament, "row " + std::to_string(u) + " has wrong length");
            for (std::size_t v = 0; v < n; ++v)
                if (rows[u][v]) out[u].insert(static_cast<Player>(v));
        }
        return Tournament(std::move(out), favorite);
    }

    int size() const { return static_cast<int>(out_.size()); }
    Player favorite() const { return favorite_; }
    PlayerSet players() const { return PlayerSet::range(size()); }

    bool beats(Player u, Player v) const { return out_[u].contains(v); }

    const ArcRelation& arcs() const { return out_; }

    PlayerSet out_neighbors(Player v) const { return out_[v]; }
    PlayerSet out_neighbors(Player v, PlayerSet within) const { return (out_[v] & within) - PlayerSet::single(v); }
    PlayerSet in_neighbors(Player v) const { return in_neighbors(v, players()); }
    PlayerSet in_neighbors(Player v, PlayerSet within) const {
        return (within - out_[v]) - PlayerSet::single(v);
    }

    int out_degree(Player v) const { return out_[v].size(); }
    int in_degree(Player v) const { return size() - 1 - out_degree(v); }

    /// Same players and arcs with a different favorite.
    Tournament with_favorite(Player favorite) const { return Tournament(out_, favorite); }

    bool operator==(const Tournament&) const = default;

private:
    ArcRelation out_;
    Player favorite_ = 0;
};

inline PlayerSet out_neighbors(const Tournament& d, Player v, PlayerSet within) { return d.out_neighbors(v, within); }
inline PlayerSet in_neighbors(const Tournament& d, Player v, PlayerSet within) { return d.in_neighbors(v, within); }

namespace detail {

/// Source elimination on an arbitrary relation restricted to `within`.
/// Returns the elimination order; shorter than |within| iff a cycle exists.
inline std::vector<Player> eliminate_sources(const ArcRelation& out, PlayerSet within) {
    std::vector<Player> order;
    order.reserve(within.size());
    PlayerSet rest = within;
    while (!rest.empty()) {
        bool found = false;
        for (Player v : rest) {
            bool has_in = false;
            for (Player u : rest) {
                if (u != v && out[u].contains(v)) {
                    has_in = true;
                    break;
                }
            }
            if (!has_in) {
                order.push_back(v);
                rest.erase(v);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return order;
}

} // namespace detail

inline bool is_acyclic(const ArcRelation& out, PlayerSet within) {
    return static_cast<int>(detail::eliminate_sources(out, within).size()) == within.size();
}

inline bool is_acyclic(const Tournament& d, PlayerSet within) { return is_acyclic(d.arcs(), within); }

/// Players of `within` ordered so that each beats every later one.
inline std::vector<Player> topological_order(const Tournament& d, PlayerSet within) {
    auto order = detail::eliminate_sources(d.arcs(), within);
    if (static_cast<int>(order.size()) != within.size())
        throw Error(ErrorCode::NotAcyclic, "induced subtournament contains a cycle");
    return order;
}

/// Players reachable from `from` by a path of length >= 1 inside `within`.
inline PlayerSet reachable_from(const ArcRelation& out, Player from, PlayerSet within) {
    PlayerSet seen;
    PlayerSet frontier = out[from] & within;
    while (!frontier.empty()) {
        seen |= frontier;
        PlayerSet next;
        for (Player u : frontier) next |= out[u];
        frontier = (next & within) - seen;
    }
    return seen;
}

/// True iff some directed cycle inside `within` visits a terminal.
inline bool has_cycle_through(const ArcRelation& out, PlayerSet terminals, PlayerSet within) {
    for (Player t : terminals & within) {
        if (reachable_from(out, t, within).contains(t)) return true;
    }
    return false;
}

inline bool has_cycle_through(const Tournament& d, PlayerSet terminals, PlayerSet within) {
    return has_cycle_through(d.arcs(), terminals, within);
}

/// BFS distance from u to every player (-1 when unreachable).
inline std::vector<int> distances_from(const Tournament& d, Player u) {
    std::vector<int> dist(d.size(), -1);
    dist[u] = 0;
    PlayerSet seen = PlayerSet::single(u);
    PlayerSet frontier = seen;
    for (int level = 1; !frontier.empty(); ++level) {
        PlayerSet next;
        for (Player w : frontier) next |= d.out_neighbors(w);
        next -= seen;
        for (Player w : next) dist[w] = level;
        seen |= next;
        frontier = next;
    }
    return dist;
}

inline bool distance_at_most(const Tournament& d, Player u, Player v, int k) {
    PlayerSet reached = PlayerSet::single(u);
    for (int step = 0; step < k && !reached.contains(v); ++step) {
        PlayerSet next = reached;
        for (Player w : reached) next |= d.out_neighbors(w);
        if (next == reached) break;
        reached = next;
    }
    return reached.contains(v);
}

/// Players with in-degree zero.
inline PlayerSet sources(const Tournament& d) {
    PlayerSet result;
    for (Player v = 0; v < d.size(); ++v)
        if (d.in_degree(v) == 0) result.insert(v);
    return result;
}

} // namespace tfp
