#pragma once
/*
Dyadic interval covering and its geometric partition.

The covering is the union over levels k >= 0 of the blocks
[i*2^k, (i+1)*2^k - 1] for i >= 1, so level k tiles {2^k, 2^k+1, ...} with
consecutive blocks of length 2^k. Exactly one level-k block contains round t
iff t >= 2^k, which makes the number of blocks containing t equal to
floor(log2 t) + 1. Nothing is materialized: membership and enumeration are
divisibility arithmetic on the endpoints.

geometric_partition decomposes an arbitrary [q,s] into covering blocks: an
anchor (the leftmost block of maximal size that fits), a run extending left
whose sizes at least halve at each step away from the anchor, and a run
extending right whose sizes at least halve after the first. The two runs
together tile [q,s] exactly, so the partition has at most
2*(floor(log2(s-q+1)) + 1) blocks.
*/

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace saol {

struct DyadicInterval {
    std::int64_t start = 1; // first round covered, 1-based inclusive
    std::int64_t end = 1;   // last round covered, inclusive
    int level = 0;          // end - start + 1 == 2^level

    std::int64_t length() const { return end - start + 1; }
    bool contains(std::int64_t t) const { return start <= t && t <= end; }

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

inline int floor_log2(std::int64_t value) {
    if (value < 1) throw std::invalid_argument("floor_log2: value must be >= 1");
    return std::bit_width(static_cast<std::uint64_t>(value)) - 1;
}

// The i-th block of level k, [i*2^k, (i+1)*2^k - 1]. The leftmost block of a
// level starts at 2^k, so index 0 is rejected.
inline DyadicInterval level_interval(int level, std::int64_t index) {
    if (level < 0 || level > 61)
        throw std::invalid_argument("level_interval: level out of range");
    if (index < 1)
        throw std::invalid_argument("level_interval: index must be >= 1");
    const std::int64_t len = std::int64_t{1} << level;
    return DyadicInterval{index * len, (index + 1) * len - 1, level};
}

// True iff [start,end] is a covering block: its length is a power of two 2^k
// and start is a multiple of 2^k no smaller than 2^k.
inline bool is_covering_interval(std::int64_t start, std::int64_t end) {
    if (start < 1 || end < start) return false;
    const std::int64_t len = end - start + 1;
    if (!std::has_single_bit(static_cast<std::uint64_t>(len))) return false;
    return start % len == 0;
}

inline DyadicInterval as_covering_interval(std::int64_t start, std::int64_t end) {
    if (!is_covering_interval(start, end))
        throw std::invalid_argument("as_covering_interval: not a covering block");
    return DyadicInterval{start, end, floor_log2(end - start + 1)};
}

// All covering blocks containing t, ordered by increasing level. There is one
// per level k with 2^k <= t, hence floor(log2 t) + 1 of them.
inline std::vector<DyadicInterval> active_set(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("active_set: t must be >= 1");
    std::vector<DyadicInterval> blocks;
    const int top = floor_log2(t);
    blocks.reserve(static_cast<std::size_t>(top) + 1);
    for (int level = 0; level <= top; ++level)
        blocks.push_back(level_interval(level, t >> level));
    return blocks;
}

// All covering blocks whose first round is t, ordered by increasing level:
// one per level k with 2^k dividing t. These are the instances spawned at t.
inline std::vector<DyadicInterval> entering_set(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("entering_set: t must be >= 1");
    std::vector<DyadicInterval> blocks;
    const int top = std::countr_zero(static_cast<std::uint64_t>(t));
    blocks.reserve(static_cast<std::size_t>(top) + 1);
    for (int level = 0; level <= top; ++level)
        blocks.push_back(level_interval(level, t >> level));
    return blocks;
}

// Every covering block contained in [1, horizon], level-major then
// left-to-right. There are fewer than 2*horizon of them.
inline std::vector<DyadicInterval> covering_up_to(std::int64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("covering_up_to: horizon must be >= 1");
    std::vector<DyadicInterval> blocks;
    for (int level = 0; (std::int64_t{1} << level) <= horizon; ++level) {
        for (std::int64_t index = 1;; ++index) {
            DyadicInterval block = level_interval(level, index);
            if (block.end > horizon) break;
            blocks.push_back(block);
        }
    }
    return blocks;
}

struct GeometricPartition {
    // Blocks left of and including the anchor, in increasing position; read
    // right-to-left each is at most half the length of its successor.
    std::vector<DyadicInterval> left;
    // Blocks right of the anchor, in increasing position; after the first,
    // each is at most half the length of its predecessor, and the first is
    // no longer than the anchor.
    std::vector<DyadicInterval> right;

    std::vector<DyadicInterval> all() const {
        std::vector<DyadicInterval> blocks = left;
        blocks.insert(blocks.end(), right.begin(), right.end());
        return blocks;
    }
};

inline GeometricPartition geometric_partition(std::int64_t start, std::int64_t end) {
    if (start < 1) throw std::invalid_argument("geometric_partition: start must be >= 1");
    if (end < start) throw std::invalid_argument("geometric_partition: end must be >= start");

    // Anchor: the leftmost covering block of maximal size inside [start,end].
    DyadicInterval anchor = DyadicInterval{start, start, 0};
    for (int level = 0; (std::int64_t{1} << level) <= end - start + 1; ++level) {
        const std::int64_t len = std::int64_t{1} << level;
        std::int64_t first = ((start + len - 1) / len) * len; // first multiple of len >= start
        first = std::max(first, len);                         // index must be >= 1
        if (first + len - 1 <= end) anchor = DyadicInterval{first, first + len - 1, level};
    }

    GeometricPartition partition;

    // Extend left: repeatedly take the largest covering block that ends at the
    // frontier and does not cross start.
    std::int64_t frontier = anchor.start - 1;
    while (frontier >= start) {
        int level = std::countr_zero(static_cast<std::uint64_t>(frontier + 1));
        level = std::min(level, floor_log2((frontier + 1) / 2)); // keep index >= 1
        while (frontier - (std::int64_t{1} << level) + 1 < start) --level;
        const std::int64_t len = std::int64_t{1} << level;
        partition.left.push_back(DyadicInterval{frontier - len + 1, frontier, level});
        frontier -= len;
    }
    std::reverse(partition.left.begin(), partition.left.end());
    partition.left.push_back(anchor);

    // Extend right: largest covering block starting at the frontier that does
    // not cross end.
    frontier = anchor.end + 1;
    while (frontier <= end) {
        int level = std::countr_zero(static_cast<std::uint64_t>(frontier));
        while (frontier + (std::int64_t{1} << level) - 1 > end) --level;
        const std::int64_t len = std::int64_t{1} << level;
        partition.right.push_back(DyadicInterval{frontier, frontier + len - 1, level});
        frontier += len;
    }

    return partition;
}

} // namespace saol
