#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

/// An arc used as a matching edge: `from` beats `to`.
using Arc = std::pair<Player, Player>;

/// Maximum matching of arcs from `left` to `right` (left player beats right
/// player) by repeated augmenting paths. Pairs are returned in increasing
/// order of the left endpoint.
inline std::vector<Arc> max_arc_matching(const Tournament& d, PlayerSet left, PlayerSet right) {
    std::vector<Player> mate_of_right(PlayerSet::kCapacity, -1);

    std::vector<char> visited(PlayerSet::kCapacity, 0);
    auto augment = [&](auto&& self, Player u) -> bool {
        for (Player w : d.out_neighbors(u) & right) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            const Player holder = mate_of_right[static_cast<std::size_t>(w)];
            if (holder < 0 || self(self, holder)) {
                mate_of_right[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        return false;
    };

    for (Player u : left) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, u);
    }

    std::vector<Arc> result;
    for (Player w : right)
        if (mate_of_right[static_cast<std::size_t>(w)] >= 0) result.emplace_back(mate_of_right[static_cast<std::size_t>(w)], w);
    std::sort(result.begin(), result.end());
    return result;
}

/// True when `m` is a set of arcs of d from `left` to `right` with pairwise
/// distinct endpoints.
inline bool is_arc_matching(const Tournament& d, const std::vector<Arc>& m, PlayerSet left, PlayerSet right) {
    PlayerSet used;
    for (auto [a, b] : m) {
        if (!left.contains(a) || !right.contains(b) || !d.beats(a, b)) return false;
        if (used.contains(a) || used.contains(b)) return false;
        used.insert(a);
        used.insert(b);
    }
    return true;
}

} // namespace tfp
