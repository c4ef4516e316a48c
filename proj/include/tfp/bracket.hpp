#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

/// One played match, written (winner, loser).
struct Match {
    Player winner = 0;
    Player loser = 0;

    auto operator<=>(const Match&) const = default;
};

/// The matches of one round.
using MatchSet = std::vector<Match>;

/// Round-by-round match sets, first round first.
using MatchSetSequence = std::vector<MatchSet>;

/// A seeding: players listed in leaf order of a complete binary tree.
/// Leaves 2i and 2i+1 meet in round one; winners of adjacent blocks meet
/// afterwards.
struct Bracket {
    std::vector<Player> leaves;

    int size() const { return static_cast<int>(leaves.size()); }
    bool operator==(const Bracket&) const = default;
};

struct PlayResult {
    Player winner = 0;
    MatchSetSequence sequence;
};

inline PlayerSet players_of(const MatchSet& round) {
    PlayerSet s;
    for (const Match& m : round) {
        s.insert(m.winner);
        s.insert(m.loser);
    }
    return s;
}

inline PlayerSet winners_of(const MatchSet& round) {
    PlayerSet s;
    for (const Match& m : round) s.insert(m.winner);
    return s;
}

inline PlayerSet losers_of(const MatchSet& round) {
    PlayerSet s;
    for (const Match& m : round) s.insert(m.loser);
    return s;
}

/// Order-insensitive comparison of two sequences (matches within a round
/// form a set).
inline bool same_matches(const MatchSetSequence& a, const MatchSetSequence& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        MatchSet x = a[r];
        MatchSet y = b[r];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    return true;
}

/// Empty when the leaves are a power-of-two list of distinct players below
/// `player_count`; otherwise the reason.
inline std::optional<std::string> bracket_issue(const Bracket& b, int player_count) {
    if (!is_power_of_two(b.size())) return "bracket size " + std::to_string(b.size()) + " is not a power of two";
    PlayerSet seen;
    for (Player p : b.leaves) {
        if (p < 0 || p >= player_count) return "player " + std::to_string(p) + " out of range";
        if (seen.contains(p)) return "player " + std::to_string(p) + " appears twice";
        seen.insert(p);
    }
    return std::nullopt;
}

inline PlayerSet players_of(const Bracket& b) {
    PlayerSet s;
    for (Player p : b.leaves) s.insert(p);
    return s;
}

namespace detail {

inline void canonicalize_block(std::vector<Player>& leaves, std::size_t offset, std::size_t width) {
    if (width < 2) return;
    const std::size_t half = width / 2;
    canonicalize_block(leaves, offset, half);
    canonicalize_block(leaves, offset + half, half);
    const auto first = leaves.begin() + static_cast<std::ptrdiff_t>(offset);
    const auto mid = first + static_cast<std::ptrdiff_t>(half);
    const auto last = mid + static_cast<std::ptrdiff_t>(half);
    if (*std::min_element(mid, last) < *std::min_element(first, mid)) std::rotate(first, mid, last);
}

} // namespace detail

/// Canonical form of a bracket: at every internal node the subtree holding
/// the smaller player index goes left. Two brackets are structurally equal
/// iff their canonical forms are equal.
inline Bracket canonicalize(Bracket b) {
    detail::canonicalize_block(b.leaves, 0, b.leaves.size());
    return b;
}

/// Simulates the knockout. The returned sequence lists each round's matches
/// in bracket order.
inline PlayResult play(const Tournament& d, const Bracket& b) {
    if (auto issue = bracket_issue(b, d.size())) {
        if (!is_power_of_two(b.size())) throw Error(ErrorCode::NotPowerOfTwo, *issue);
        throw Error(ErrorCode::PreconditionViolated, *issue);
    }
    PlayResult result;
    std::vector<Player> alive = b.leaves;
    while (alive.size() > 1) {
        MatchSet round;
        std::vector<Player> next;
        round.reserve(alive.size() / 2);
        next.reserve(alive.size() / 2);
        for (std::size_t i = 0; i < alive.size(); i += 2) {
            const Player x = alive[i];
            const Player y = alive[i + 1];
            const Match m = d.beats(x, y) ? Match{x, y} : Match{y, x};
            round.push_back(m);
            next.push_back(m.winner);
        }
        result.sequence.push_back(std::move(round));
        alive = std::move(next);
    }
    result.winner = alive.front();
    return result;
}

/// Structural validity (everything except arc membership) of a sequence
/// over `players`. Empty on success, otherwise the first violated condition.
inline std::optional<std::string> sequence_shape_issue(PlayerSet players, const MatchSetSequence& seq) {
    const int n = players.size();
    if (!is_power_of_two(n)) return "player count " + std::to_string(n) + " is not a power of two";
    const int rounds = log2_exact(n);
    if (static_cast<int>(seq.size()) != rounds)
        return "expected " + std::to_string(rounds) + " rounds, got " + std::to_string(seq.size());
    PlayerSet expected = players;
    for (int r = 0; r < rounds; ++r) {
        const MatchSet& round = seq[static_cast<std::size_t>(r)];
        const std::size_t want = static_cast<std::size_t>(n) >> (r + 1);
        if (round.size() != want)
            return "round " + std::to_string(r + 1) + " has " + std::to_string(round.size()) + " matches, expected " +
                   std::to_string(want);
        PlayerSet seen;
        for (const Match& m : round) {
            if (m.winner == m.loser || seen.contains(m.winner) || seen.contains(m.loser))
                return "round " + std::to_string(r + 1) + " repeats a player";
            seen.insert(m.winner);
            seen.insert(m.loser);
        }
        if (seen != expected) {
            return r == 0 ? std::string("first round does not cover the player set")
                          : "round " + std::to_string(r + 1) + " participants differ from round " +
                                std::to_string(r) + " winners";
        }
        expected = winners_of(round);
    }
    return std::nullopt;
}

/// Diagnostic variant of validate_sequence.
inline std::optional<std::string> sequence_issue(const Tournament& d, PlayerSet players,
                                                 const MatchSetSequence& seq) {
    if (auto shape = sequence_shape_issue(players, seq)) return shape;
    for (std::size_t r = 0; r < seq.size(); ++r) {
        for (const Match& m : seq[r]) {
            if (m.winner >= d.size() || m.loser >= d.size() || !d.beats(m.winner, m.loser))
                return "round " + std::to_string(r + 1) + " match " + std::to_string(m.winner) + ">" +
                       std::to_string(m.loser) + " is not an arc";
        }
    }
    return std::nullopt;
}

inline bool validate_sequence(const Tournament& d, PlayerSet players, const MatchSetSequence& seq) {
    return !sequence_issue(d, players, seq).has_value();
}

/// Champion of a structurally valid sequence.
inline Player champion_of(const MatchSetSequence& seq) {
    if (seq.empty() || seq.back().size() != 1) throw Error(ErrorCode::InvalidSequence, "no final match");
    return seq.back().front().winner;
}

/// A bracket whose play reproduces `seq` (canonical form).
inline Bracket sequence_to_bracket(const MatchSetSequence& seq) {
    if (seq.empty()) throw Error(ErrorCode::InvalidSequence, "empty sequence");
    const PlayerSet players = players_of(seq.front());
    if (auto issue = sequence_shape_issue(players, seq)) throw Error(ErrorCode::InvalidSequence, *issue);

    // opponent[r][p] = loser that p beat in round r.
    std::vector<std::vector<Player>> beaten(seq.size(), std::vector<Player>(PlayerSet::kCapacity, -1));
    for (std::size_t r = 0; r < seq.size(); ++r)
        for (const Match& m : seq[r]) beaten[r][static_cast<std::size_t>(m.winner)] = m.loser;

    std::vector<Player> leaves;
    leaves.reserve(static_cast<std::size_t>(players.size()));
    std::function<void(Player, int)> emit = [&](Player p, int rounds_won) {
        if (rounds_won == 0) {
            leaves.push_back(p);
            return;
        }
        const Player q = beaten[static_cast<std::size_t>(rounds_won - 1)][static_cast<std::size_t>(p)];
        emit(p, rounds_won - 1);
        emit(q, rounds_won - 1);
    };
    emit(champion_of(seq), static_cast<int>(seq.size()));
    return canonicalize(Bracket{std::move(leaves)});
}

namespace detail {

inline void all_brackets(PlayerSet players, std::vector<std::vector<Player>>& out) {
    const int n = players.size();
    if (n == 1) {
        out.push_back({players.front()});
        return;
    }
    const Player lowest = players.front();
    const PlayerSet rest = players - PlayerSet::single(lowest);
    const int need = n / 2 - 1;
    // Submasks of `rest` with exactly `need` members join `lowest` on the left.
    const PlayerSet::Mask rm = rest.mask();
    PlayerSet::Mask sub = rm;
    while (true) {
        if (std::popcount(sub) == need) {
            const PlayerSet left = PlayerSet(sub) | PlayerSet::single(lowest);
            const PlayerSet right = players - left;
            std::vector<std::vector<Player>> ls;
            std::vector<std::vector<Player>> rs;
            all_brackets(left, ls);
            all_brackets(right, rs);
            for (const auto& l : ls) {
                for (const auto& r : rs) {
                    std::vector<Player> both = l;
                    both.insert(both.end(), r.begin(), r.end());
                    out.push_back(std::move(both));
                }
            }
        }
        if (sub == 0) break;
        sub = (sub - 1) & rm;
    }
}

} // namespace detail

inline constexpr int kMaxEnumerationPlayers = 8;

/// Every structurally distinct bracket over `players`, each exactly once and
/// in canonical form; n!/2^(n-1) of them.
inline std::vector<Bracket> enumerate_brackets(PlayerSet players) {
    if (!is_power_of_two(players.size()))
        throw Error(ErrorCode::NotPowerOfTwo, std::to_string(players.size()) + " players");
    if (players.size() > kMaxEnumerationPlayers)
        throw Error(ErrorCode::CapacityExceeded, "bracket enumeration is limited to 8 players");
    std::vector<std::vector<Player>> raw;
    detail::all_brackets(players, raw);
    std::vector<Bracket> result;
    result.reserve(raw.size());
    for (auto& leaves : raw) result.push_back(Bracket{std::move(leaves)});
    return result;
}

/// Unions per-round match sets of sequences on disjoint player sets, then
/// appends closing rounds. The result is checked for structural validity.
inline MatchSetSequence merge_sequences(const std::vector<MatchSetSequence>& parts,
                                        const std::vector<MatchSet>& extra_rounds) {
    if (parts.empty()) throw Error(ErrorCode::LengthMismatch, "no parts to merge");
    const std::size_t rounds = parts.front().size();
    if (rounds == 0) throw Error(ErrorCode::LengthMismatch, "parts must have at least one round");
    PlayerSet all;
    for (const auto& part : parts) {
        if (part.size() != rounds) throw Error(ErrorCode::LengthMismatch, "parts have different round counts");
        const PlayerSet mine = players_of(part.front());
        if (all.intersects(mine)) throw Error(ErrorCode::OverlappingPlayers, "parts share a player");
        all |= mine;
    }
    MatchSetSequence merged(rounds);
    for (const auto& part : parts)
        for (std::size_t r = 0; r < rounds; ++r) merged[r].insert(merged[r].end(), part[r].begin(), part[r].end());
    for (const auto& round : extra_rounds) merged.push_back(round);
    if (auto issue = sequence_shape_issue(all, merged)) throw Error(ErrorCode::InvalidExtension, *issue);
    return merged;
}

} // namespace tfp
