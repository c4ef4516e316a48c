#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracket.hpp"
#include "error.hpp"
#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

/// A reduction gadget. The favorite of `instance` is always player 0 and
/// `embedding[i]` is the gadget index of original player i.
struct GadgetOutput {
    Tournament instance;
    Player a_star = -1;
    Player b_star = -1;
    std::vector<Player> embedding;
};

/// Empty when (d, v) is special with respect to (a_star, b_star):
/// |N_out(v)| = 3|N_in(v)| - 1 with |N_in(v)| a power of two, the arc
/// (a_star, b_star) goes from N_out(v) to N_in(v), and every other pair
/// across the two neighbourhoods points from N_in(v) to N_out(v).
inline std::optional<std::string> special_issue(const Tournament& d, Player v, Player a_star, Player b_star) {
    const PlayerSet all = d.players();
    const PlayerSet out = d.out_neighbors(v, all);
    const PlayerSet in = d.in_neighbors(v, all);
    if (!is_power_of_two(in.size())) return "|N_in| = " + std::to_string(in.size()) + " is not a power of two";
    if (out.size() != 3 * in.size() - 1) return "|N_out| != 3|N_in| - 1";
    if (!out.contains(a_star)) return "a* is not an out-neighbor of the favorite";
    if (!in.contains(b_star)) return "b* is not an in-neighbor of the favorite";
    if (!d.beats(a_star, b_star)) return "arc (a*, b*) is missing";
    for (Player a : out) {
        for (Player b : in) {
            if (a == a_star && b == b_star) continue;
            if (!d.beats(b, a)) return "cross arc " + std::to_string(a) + "->" + std::to_string(b) + " is not allowed";
        }
    }
    return std::nullopt;
}

inline bool is_special(const Tournament& d, Player v, Player a_star, Player b_star) {
    return !special_issue(d, v, a_star, b_star).has_value();
}

/// The (a*, b*) pair that makes (d, v) special, if one exists.
inline std::optional<std::pair<Player, Player>> find_special_pair(const Tournament& d, Player v) {
    const PlayerSet all = d.players();
    for (Player a : d.out_neighbors(v, all))
        for (Player b : d.out_neighbors(a, all) & d.in_neighbors(v, all))
            if (is_special(d, v, a, b)) return std::make_pair(a, b);
    return std::nullopt;
}

namespace detail {

inline void orient_transitive(ArcRelation& out, Player first, int count) {
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) out[static_cast<std::size_t>(first + i)].insert(first + j);
}

inline void check_gadget_input(const Tournament& d) {
    if (!is_power_of_two(d.size())) throw Error(ErrorCode::NotPowerOfTwo, std::to_string(d.size()) + " players");
    PlayerSet::check_capacity(4 * d.size());
}

/// Arcs between v' = 0, the out-block [1, 3n) and the in-block [3n, 4n):
/// v' beats the out-block, the in-block beats v', and across the blocks
/// only (a*, b*) points out-to-in.
inline void wire_special(ArcRelation& out, int n, Player a_star, Player b_star) {
    for (Player a = 1; a < 3 * n; ++a) out[0].insert(a);
    for (Player b = 3 * n; b < 4 * n; ++b) {
        out[static_cast<std::size_t>(b)].insert(0);
        for (Player a = 1; a < 3 * n; ++a) {
            if (a == a_star && b == b_star)
                out[static_cast<std::size_t>(a)].insert(b);
            else
                out[static_cast<std::size_t>(b)].insert(a);
        }
    }
}

} // namespace detail

/// Gadget with one arc reversal away from no cycle through the favorite.
/// Layout: v' = 0; A = [1, 3n) transitive in index order with a* = 1;
/// B = [3n, 4n) a copy of d with b* the copy of v.
inline GadgetOutput make_special_sfasv(const Tournament& d, Player v) {
    detail::check_gadget_input(d);
    const int n = d.size();
    ArcRelation out(static_cast<std::size_t>(4 * n));
    detail::orient_transitive(out, 1, 3 * n - 1);
    for (Player x = 0; x < n; ++x)
        for (Player y : d.out_neighbors(x)) out[static_cast<std::size_t>(3 * n + x)].insert(3 * n + y);

    GadgetOutput g;
    g.a_star = 1;
    g.b_star = 3 * n + v;
    detail::wire_special(out, n, g.a_star, g.b_star);
    g.instance = Tournament(std::move(out), 0);
    for (Player x = 0; x < n; ++x) g.embedding.push_back(3 * n + x);
    return g;
}

/// Gadget with one arc reversal away from no cycle through N_in(v').
/// Layout: v' = 0; A' = [1, 2n) transitive; A = [2n, 3n) a copy of d with
/// a* the copy of v; B = [3n, 4n) transitive with source b* = 3n. Every
/// player of A' beats every player of A.
inline GadgetOutput make_special_sfasin(const Tournament& d, Player v) {
    detail::check_gadget_input(d);
    const int n = d.size();
    ArcRelation out(static_cast<std::size_t>(4 * n));
    detail::orient_transitive(out, 1, 2 * n - 1);
    detail::orient_transitive(out, 3 * n, n);
    for (Player x = 0; x < n; ++x)
        for (Player y : d.out_neighbors(x)) out[static_cast<std::size_t>(2 * n + x)].insert(2 * n + y);
    for (Player p = 1; p < 2 * n; ++p)
        for (Player q = 2 * n; q < 3 * n; ++q) out[static_cast<std::size_t>(p)].insert(q);

    GadgetOutput g;
    g.a_star = 2 * n + v;
    g.b_star = 3 * n;
    detail::wire_special(out, n, g.a_star, g.b_star);
    g.instance = Tournament(std::move(out), 0);
    for (Player x = 0; x < n; ++x) g.embedding.push_back(2 * n + x);
    return g;
}

struct Lemma2Properties {
    bool final_in_neighbor_is_b_star = false; ///< semifinalists meet N_in only in b*
    bool two_out_neighbors_with_a_star = false;
    bool early_rounds_stay_on_one_side = false;

    bool all() const {
        return final_in_neighbor_is_b_star && two_out_neighbors_with_a_star && early_rounds_stay_on_one_side;
    }
};

/// Evaluates the three structural properties every winning sequence of a
/// special yes-instance has (any valid sequence is accepted, so losing
/// sequences can be inspected too): among the semifinalists N_in(v) contributes
/// exactly b*, N_out(v) exactly two players including a*, and no match
/// before the semifinal crosses between A + {v} and B.
inline Lemma2Properties verify_lemma2_properties(const Tournament& d, Player v, const MatchSetSequence& seq) {
    const auto pair = find_special_pair(d, v);
    if (!pair) throw Error(ErrorCode::NotSpecial, "instance is not special for the favorite");
    if (auto issue = sequence_issue(d, d.players(), seq)) throw Error(ErrorCode::InvalidSequence, *issue);

    const auto [a_star, b_star] = *pair;
    const PlayerSet all = d.players();
    const PlayerSet a = d.out_neighbors(v, all);
    const PlayerSet b = d.in_neighbors(v, all);
    const int early = log2_exact(b.size());
    const PlayerSet semifinal = players_of(seq[static_cast<std::size_t>(early)]);

    Lemma2Properties p;
    p.final_in_neighbor_is_b_star = (semifinal & b) == PlayerSet::single(b_star);
    p.two_out_neighbors_with_a_star = (semifinal & a).size() == 2 && semifinal.contains(a_star);
    const PlayerSet a_side = a | PlayerSet::single(v);
    p.early_rounds_stay_on_one_side = true;
    for (int r = 0; r < early; ++r) {
        for (const Match& m : seq[static_cast<std::size_t>(r)]) {
            const bool both_a = a_side.contains(m.winner) && a_side.contains(m.loser);
            const bool both_b = b.contains(m.winner) && b.contains(m.loser);
            if (!both_a && !both_b) p.early_rounds_stay_on_one_side = false;
        }
    }
    return p;
}

/// Restricts the first log|part| rounds of `seq` to the matches inside
/// `part`. Throws PropertyViolated if a match in those rounds crosses the
/// boundary of `part` or the restriction is not a valid sequence.
inline MatchSetSequence extract_inner_sequence(const MatchSetSequence& seq, PlayerSet part) {
    if (!is_power_of_two(part.size()))
        throw Error(ErrorCode::PropertyViolated, "part size " + std::to_string(part.size()) + " is not a power of two");
    const int rounds = log2_exact(part.size());
    if (static_cast<int>(seq.size()) < rounds) throw Error(ErrorCode::PropertyViolated, "sequence too short");
    MatchSetSequence inner(static_cast<std::size_t>(rounds));
    for (int r = 0; r < rounds; ++r) {
        for (const Match& m : seq[static_cast<std::size_t>(r)]) {
            const bool w_in = part.contains(m.winner);
            const bool l_in = part.contains(m.loser);
            if (w_in != l_in)
                throw Error(ErrorCode::PropertyViolated, "round " + std::to_string(r + 1) + " match " +
                                                             std::to_string(m.winner) + ">" + std::to_string(m.loser) +
                                                             " crosses the part boundary");
            if (w_in) inner[static_cast<std::size_t>(r)].push_back(m);
        }
    }
    if (auto issue = sequence_shape_issue(part, inner)) throw Error(ErrorCode::PropertyViolated, *issue);
    return inner;
}

} // namespace tfp
