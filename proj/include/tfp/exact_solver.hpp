#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bracket.hpp"
#include "error.hpp"
#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

/// Largest tournament the subset DP accepts.
inline constexpr int kSolverMaxPlayers = 20;

/// Memoized subset DP deciding whether a player can win a knockout on a
/// power-of-two player set:
///
///   win(S, v)  <=>  |S| == 1, or there is a half split S = S1 + S2 with
///                   v in S1, win(S1, v), and some u in S2 with win(S2, u)
///                   that v beats.
///
/// The table is owned by the solver; reuse one solver for many queries on
/// the same tournament.
class ExactSolver {
public:
    explicit ExactSolver(const Tournament& d) : d_(d) {
        if (d.size() > kSolverMaxPlayers)
            throw Error(ErrorCode::CapacityExceeded,
                        std::to_string(d.size()) + " players exceed the solver limit of " +
                            std::to_string(kSolverMaxPlayers));
    }

    bool can_win(Player v, PlayerSet within) {
        check_query(v, within);
        return win(within, v);
    }
    bool can_win(Player v) { return can_win(v, d_.players()); }

    /// A bracket on `within` that crowns v. Throws NotWinnable otherwise.
    Bracket witness_bracket(Player v, PlayerSet within) {
        if (!can_win(v, within))
            throw Error(ErrorCode::NotWinnable, "player " + std::to_string(v) + " cannot win");
        std::vector<Player> leaves;
        leaves.reserve(static_cast<std::size_t>(within.size()));
        build(within, v, leaves);
        return canonicalize(Bracket{std::move(leaves)});
    }
    Bracket witness_bracket(Player v) { return witness_bracket(v, d_.players()); }

    PlayerSet all_fixable_winners() {
        const PlayerSet all = d_.players();
        if (!is_power_of_two(all.size())) throw Error(ErrorCode::NotPowerOfTwo, std::to_string(all.size()) + " players");
        PlayerSet result;
        for (Player v : all)
            if (win(all, v)) result.insert(v);
        return result;
    }

    /// Number of distinct (subset, player) states evaluated so far.
    std::size_t states_touched() const { return memo_.size(); }

private:
    struct Entry {
        bool wins = false;
        PlayerSet::Mask own_half = 0;
        Player opponent = -1;
    };

    static std::uint64_t key(PlayerSet s, Player v) {
        return (static_cast<std::uint64_t>(s.mask()) << 5) | static_cast<std::uint64_t>(v);
    }

    void check_query(Player v, PlayerSet within) const {
        if (!is_power_of_two(within.size()))
            throw Error(ErrorCode::NotPowerOfTwo, std::to_string(within.size()) + " players");
        if (!within.is_subset_of(d_.players()))
            throw Error(ErrorCode::PreconditionViolated, "player set exceeds the tournament");
        if (!within.contains(v))
            throw Error(ErrorCode::PreconditionViolated, "player " + std::to_string(v) + " not in the player set");
    }

    bool win(PlayerSet s, Player v) {
        if (s.size() == 1) return true;
        const std::uint64_t k = key(s, v);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second.wins;

        Entry entry;
        const int need = s.size() / 2 - 1;
        const PlayerSet::Mask rest = (s - PlayerSet::single(v)).mask();
        PlayerSet::Mask sub = rest;
        while (!entry.wins) {
            if (std::popcount(sub) == need) {
                const PlayerSet mine = PlayerSet(sub) | PlayerSet::single(v);
                const PlayerSet theirs = s - mine;
                const PlayerSet prey = d_.out_neighbors(v) & theirs;
                if (!prey.empty() && win(mine, v)) {
                    for (Player u : prey) {
                        if (win(theirs, u)) {
                            entry = Entry{true, mine.mask(), u};
                            break;
                        }
                    }
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        memo_.emplace(k, entry);
        return entry.wins;
    }

    void build(PlayerSet s, Player v, std::vector<Player>& leaves) const {
        if (s.size() == 1) {
            leaves.push_back(v);
            return;
        }
        const Entry& e = memo_.at(key(s, v));
        const PlayerSet mine(e.own_half);
        build(mine, v, leaves);
        build(s - mine, e.opponent, leaves);
    }

    const Tournament& d_;
    std::unordered_map<std::uint64_t, Entry> memo_;
};

inline bool can_win(const Tournament& d, Player v, PlayerSet within) { return ExactSolver(d).can_win(v, within); }
inline bool can_win(const Tournament& d, Player v) { return can_win(d, v, d.players()); }
inline bool can_win(const Tournament& d) { return can_win(d, d.favorite()); }

inline Bracket witness_bracket(const Tournament& d, Player v, PlayerSet within) {
    return ExactSolver(d).witness_bracket(v, within);
}
inline Bracket witness_bracket(const Tournament& d) { return witness_bracket(d, d.favorite(), d.players()); }

inline PlayerSet all_fixable_winners(const Tournament& d) { return ExactSolver(d).all_fixable_winners(); }

/// Exhaustive oracle: plays every structurally distinct bracket (n <= 8).
/// Returns the first crowning bracket, if any.
inline std::optional<Bracket> winning_bracket_by_enumeration(const Tournament& d, Player v, PlayerSet within,
                                                             std::size_t* examined = nullptr) {
    std::size_t count = 0;
    std::optional<Bracket> found;
    for (const Bracket& b : enumerate_brackets(within)) {
        ++count;
        if (play(d, b).winner == v) {
            found = b;
            break;
        }
    }
    if (examined) *examined = count;
    return found;
}

inline bool can_win_by_enumeration(const Tournament& d, Player v, PlayerSet within) {
    return winning_bracket_by_enumeration(d, v, within).has_value();
}
inline bool can_win_by_enumeration(const Tournament& d) {
    return can_win_by_enumeration(d, d.favorite(), d.players());
}

} // namespace tfp
