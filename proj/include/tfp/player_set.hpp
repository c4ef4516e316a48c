#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "error.hpp"

namespace tfp {

using Player = int;

/// Fixed-width bit set over player indices [0, kCapacity).
class PlayerSet {
public:
    using Mask = std::uint32_t;
    static constexpr int kCapacity = 24;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Player;
        using difference_type = std::ptrdiff_t;
        using pointer = const Player*;
        using reference = Player;

        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}

        constexpr Player operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr PlayerSet() = default;
    constexpr explicit PlayerSet(Mask mask) : mask_(mask) {}
    PlayerSet(std::initializer_list<Player> players) {
        for (Player p : players) insert(p);
    }

    /// {0, ..., n-1}.
    static PlayerSet range(int n) {
        check_capacity(n);
        return PlayerSet(n == 0 ? Mask{0} : (Mask{1} << n) - 1);
    }
    static constexpr PlayerSet single(Player p) { return PlayerSet(Mask{1} << p); }

    static void check_capacity(int n) {
        if (n < 0 || n > kCapacity)
            throw Error(ErrorCode::CapacityExceeded,
                        "player count " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(kCapacity));
    }

    constexpr Mask mask() const { return mask_; }
    constexpr bool contains(Player p) const { return p >= 0 && p < kCapacity && ((mask_ >> p) & 1U); }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr Player front() const { return std::countr_zero(mask_); }

    void insert(Player p) {
        if (p < 0 || p >= kCapacity)
            throw Error(ErrorCode::CapacityExceeded, "player index " + std::to_string(p) + " out of range");
        mask_ |= Mask{1} << p;
    }
    constexpr void erase(Player p) { mask_ &= ~(Mask{1} << p); }

    constexpr bool is_subset_of(PlayerSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(PlayerSet other) const { return (mask_ & other.mask_) != 0; }

    constexpr iterator begin() const { return iterator(mask_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Player> to_vector() const { return {begin(), end()}; }

    constexpr PlayerSet operator|(PlayerSet o) const { return PlayerSet(mask_ | o.mask_); }
    constexpr PlayerSet operator&(PlayerSet o) const { return PlayerSet(mask_ & o.mask_); }
    constexpr PlayerSet operator-(PlayerSet o) const { return PlayerSet(mask_ & ~o.mask_); }
    constexpr PlayerSet& operator|=(PlayerSet o) { mask_ |= o.mask_; return *this; }
    constexpr PlayerSet& operator&=(PlayerSet o) { mask_ &= o.mask_; return *this; }
    constexpr PlayerSet& operator-=(PlayerSet o) { mask_ &= ~o.mask_; return *this; }
    constexpr bool operator==(const PlayerSet&) const = default;

private:
    Mask mask_ = 0;
};

constexpr bool is_power_of_two(int n) { return n > 0 && std::has_single_bit(static_cast<unsigned>(n)); }

constexpr int log2_exact(int n) { return std::countr_zero(static_cast<unsigned>(n)); }

} // namespace tfp
