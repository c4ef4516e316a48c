#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "player_set.hpp"
#include "tournament.hpp"

namespace tfp {

/// xorshift64* (Vigna): shifts 12, 25, 27 and multiplier
/// 0x2545F4914F6CDD1D. Seed 0 maps to 0x9E3779B97F4A7C15.
class Xorshift64Star {
public:
    static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kMultiplier = 0x2545F4914F6CDD1DULL;

    explicit Xorshift64Star(std::uint64_t seed) : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * kMultiplier;
    }

    bool coin() { return (next() >> 63) != 0; }

    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Each pair u < v is oriented by one coin flip (u beats v on heads).
/// The favorite is player 0.
inline Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::BadSize, "need at least one player");
    PlayerSet::check_capacity(n);
    Xorshift64Star rng(seed);
    ArcRelation out(static_cast<std::size_t>(n));
    for (Player u = 0; u < n; ++u) {
        for (Player v = u + 1; v < n; ++v) {
            if (rng.coin())
                out[static_cast<std::size_t>(u)].insert(v);
            else
                out[static_cast<std::size_t>(v)].insert(u);
        }
    }
    return Tournament(std::move(out), 0);
}

enum class Enforce { None, Thm7, Thm9 };

inline constexpr int kRepairRetries = 10000;

/// Neighbor-acyclic instance with favorite 0, out-neighbourhood [1, a_size]
/// and in-neighbourhood (a_size, n). Both blocks are transitive in a
/// shuffled order; cross arcs are random. Under Thm7 / Thm9 the cross arcs of
/// violating in-neighbors are redrawn (at most kRepairRetries rounds) until
/// the corresponding sufficient condition holds.
inline Tournament gen_neighbor_acyclic(int n, int a_size, std::uint64_t seed, Enforce enforce) {
    if (n < 3) throw Error(ErrorCode::BadSize, "need at least three players");
    PlayerSet::check_capacity(n);
    if (enforce != Enforce::None && !is_power_of_two(n))
        throw Error(ErrorCode::NotPowerOfTwo, std::to_string(n) + " players");
    if (a_size < 1 || a_size > n - 2)
        throw Error(ErrorCode::BadSize, "a_size must lie in [1, n-2], got " + std::to_string(a_size));

    Xorshift64Star rng(seed);
    std::vector<Player> a(static_cast<std::size_t>(a_size));
    std::vector<Player> b(static_cast<std::size_t>(n - 1 - a_size));
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Player>(1 + i);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<Player>(1 + a_size + static_cast<int>(i));
    auto shuffle = [&](std::vector<Player>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
    };
    shuffle(a);
    shuffle(b);

    const int na = a_size;
    const int nb = static_cast<int>(b.size());
    ArcRelation out(static_cast<std::size_t>(n));
    for (Player x : a) out[0].insert(x);
    for (Player y : b) out[static_cast<std::size_t>(y)].insert(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) out[static_cast<std::size_t>(a[i])].insert(a[j]);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) out[static_cast<std::size_t>(b[i])].insert(b[j]);

    // Largest number of out-neighbors of v that b_i (1-based topological
    // index) may beat.
    auto allowance = [&](int i) {
        switch (enforce) {
        case Enforce::Thm7: return i - 1;
        case Enforce::Thm9: return std::min(na - 1, 2 * na - nb + i - 2);
        case Enforce::None: break;
        }
        return na;
    };
    auto redraw = [&](int i, std::uint64_t beat_num, std::uint64_t beat_den) {
        const Player y = b[static_cast<std::size_t>(i)];
        for (Player x : a) {
            out[static_cast<std::size_t>(x)].erase(y);
            out[static_cast<std::size_t>(y)].erase(x);
            if (rng.chance(beat_num, beat_den))
                out[static_cast<std::size_t>(y)].insert(x);
            else
                out[static_cast<std::size_t>(x)].insert(y);
        }
    };
    for (int i = 0; i < nb; ++i) redraw(i, 1, 2);
    if (enforce == Enforce::None) return Tournament(std::move(out), 0);

    if (enforce == Enforce::Thm7 && 3 * na < n)
        throw Error(ErrorCode::Unsatisfiable, "|N_out| >= n/3 cannot hold with a_size " + std::to_string(na));
    for (int i = 1; i <= nb; ++i)
        if (allowance(i) < 0)
            throw Error(ErrorCode::Unsatisfiable,
                        "in-neighbor b_" + std::to_string(i) + " exceeds the out-degree bound for every orientation");

    PlayerSet a_set;
    for (Player x : a) a_set.insert(x);
    int worst_vertex = -1;
    int worst_count = 0;
    std::vector<int> failures(static_cast<std::size_t>(nb), 0);
    for (int attempt = 0; attempt < kRepairRetries; ++attempt) {
        bool clean = true;
        for (int i = 1; i <= nb; ++i) {
            const int beaten = (out[static_cast<std::size_t>(b[static_cast<std::size_t>(i - 1)])] & a_set).size();
            if (beaten > allowance(i)) {
                clean = false;
                if (++failures[static_cast<std::size_t>(i - 1)] > worst_count) {
                    worst_count = failures[static_cast<std::size_t>(i - 1)];
                    worst_vertex = i;
                }
                // Win probability scaled to the allowance, never above 1/2.
                const auto allowed = static_cast<std::uint64_t>(allowance(i));
                if (2 * allowed >= static_cast<std::uint64_t>(na))
                    redraw(i - 1, 1, 2);
                else
                    redraw(i - 1, allowed, static_cast<std::uint64_t>(na));
            }
        }
        if (clean) return Tournament(std::move(out), 0);
    }
    throw Error(ErrorCode::Unsatisfiable, "retry budget exhausted; b_" + std::to_string(worst_vertex) +
                                              " violated its out-degree bound most often");
}

/// Boundary instance for the strict out-degree bound: favorite 0,
/// N_out = [1, n/2) transitive with a' = 1, N_in = [n/2, n) transitive.
/// a' beats every in-neighbor; every in-neighbor beats the rest of N_out.
inline Tournament tight_no_instance(int n) {
    if (n < 4 || !is_power_of_two(n)) throw Error(ErrorCode::BadSize, "n must be a power of two >= 4");
    PlayerSet::check_capacity(n);
    const int half = n / 2;
    ArcRelation out(static_cast<std::size_t>(n));
    for (Player a = 1; a < half; ++a) out[0].insert(a);
    for (Player b = half; b < n; ++b) out[static_cast<std::size_t>(b)].insert(0);
    for (Player i = 1; i < half; ++i)
        for (Player j = i + 1; j < half; ++j) out[static_cast<std::size_t>(i)].insert(j);
    for (Player i = half; i < n; ++i)
        for (Player j = i + 1; j < n; ++j) out[static_cast<std::size_t>(i)].insert(j);
    for (Player b = half; b < n; ++b) {
        out[1].insert(b);
        for (Player a = 2; a < half; ++a) out[static_cast<std::size_t>(b)].insert(a);
    }
    return Tournament(std::move(out), 0);
}

} // namespace tfp
