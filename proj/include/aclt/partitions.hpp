#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aclt/bigint.hpp"

namespace aclt {

/// A partition of {1,...,n} (n even) into two-element blocks {i,j}, i < j,
/// listed in increasing order of the smaller element.
struct PairPartition {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;

    bool valid() const {
        if (n % 2 != 0 || static_cast<int>(pairs.size()) != n / 2) return false;
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (auto [a, b] : pairs) {
            if (a < 1 || b <= a || b > n) return false;
            if (seen[a] || seen[b]) return false;
            seen[a] = seen[b] = true;
        }
        return true;
    }

    /// block index (0-based) of each position 1..n
    std::vector<int> block_of_position() const {
        std::vector<int> blk(static_cast<std::size_t>(n) + 1, -1);
        for (std::size_t k = 0; k < pairs.size(); ++k) blk[pairs[k].first] = blk[pairs[k].second] = static_cast<int>(k);
        return blk;
    }

    friend bool operator==(const PairPartition&, const PairPartition&) = default;
};

namespace detail {

template <class F>
void pair_partitions_rec(int n, std::vector<bool>& used, std::vector<std::pair<int, int>>& acc,
                         PairPartition& buf, F& f) {
    int lo = 1;
    while (lo <= n && used[lo]) ++lo;
    if (lo > n) {
        buf.pairs = acc;
        f(static_cast<const PairPartition&>(buf));
        return;
    }
    used[lo] = true;
    for (int j = lo + 1; j <= n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        acc.emplace_back(lo, j);
        pair_partitions_rec(n, used, acc, buf, f);
        acc.pop_back();
        used[j] = false;
    }
    used[lo] = false;
}

}  // namespace detail

/// Streams every pair partition of {1,...,n} exactly once; (n-1)!! of them.
/// Order: the smallest unpaired element is paired with each larger element in
/// increasing order, recursively.  Odd n streams nothing; n = 0 streams the
/// empty partition.
template <class F>
void for_each_pair_partition(int n, F&& f) {
    if (n < 0 || n % 2 != 0) return;
    PairPartition buf;
    buf.n = n;
    if (n == 0) {
        f(static_cast<const PairPartition&>(buf));
        return;
    }
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> acc;
    acc.reserve(static_cast<std::size_t>(n) / 2);
    detail::pair_partitions_rec(n, used, acc, buf, f);
}

inline std::vector<PairPartition> pair_partitions(int n) {
    std::vector<PairPartition> out;
    for_each_pair_partition(n, [&](const PairPartition& p) { out.push_back(p); });
    return out;
}

/// Two blocks {a,b}, {c,d} cross when a < c < b < d.
inline int crossing_number(const PairPartition& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        for (std::size_t j = 0; j < p.pairs.size(); ++j) {
            if (i == j) continue;
            auto [a, b] = p.pairs[i];
            auto [x, y] = p.pairs[j];
            if (a < x && x < b && b < y) ++c;
        }
    return c;
}

inline bool is_noncrossing(const PairPartition& p) {
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < p.pairs.size(); ++j) {
            auto [a, b] = p.pairs[i];
            auto [x, y] = p.pairs[j];
            if ((a < x && x < b && b < y) || (x < a && a < y && y < b)) return false;
        }
    return true;
}

/// All blocks are adjacent pairs {2k-1, 2k}.
inline bool is_interval(const PairPartition& p) {
    for (auto [a, b] : p.pairs)
        if (b != a + 1 || a % 2 == 0) return false;
    return true;
}

/// Number of bijections from blocks to {1,...,n/2} in which every block
/// receives a larger number than any block strictly containing it; 0 for
/// crossing partitions.  Counted by the forest hook-length formula over the
/// nesting forest.
inline BigInt monotone_labelings(const PairPartition& p) {
    if (!is_noncrossing(p)) return 0;
    const int k = static_cast<int>(p.pairs.size());
    if (k == 0) return 1;
    // parent = innermost strictly containing block
    std::vector<int> parent(k, -1);
    for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (p.pairs[j].first < p.pairs[i].first && p.pairs[i].second < p.pairs[j].second)
                if (best == -1 || p.pairs[best].first < p.pairs[j].first) best = j;
        }
        parent[i] = best;
    }
    std::vector<int> subtree(k, 1);
    // pairs are sorted by first element, so children follow their parent
    for (int i = k - 1; i >= 0; --i)
        if (parent[i] >= 0) subtree[parent[i]] += subtree[i];
    BigInt r = factorial(static_cast<unsigned>(k));
    for (int i = 0; i < k; ++i) r = r.div_exact(static_cast<std::uint32_t>(subtree[i]));
    return r;
}

/// An ordered list of disjoint nonempty blocks covering {1,...,n}; the list
/// position of a block encodes the relative order of the site value assigned
/// to it.
struct OrderedSetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    bool valid() const {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        int total = 0;
        for (const auto& blk : blocks) {
            if (blk.empty()) return false;
            for (int e : blk) {
                if (e < 1 || e > n || seen[e]) return false;
                seen[e] = true;
                ++total;
            }
        }
        return total == n;
    }

    /// rank (1-based block position) of each element 1..n
    std::vector<int> site_pattern() const {
        std::vector<int> s(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t r = 0; r < blocks.size(); ++r)
            for (int e : blocks[r]) s[e] = static_cast<int>(r) + 1;
        return s;
    }

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
};

namespace detail {

// restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1]) + 1, values < max_blocks
template <class F>
void rgs_rec(int n, int pos, int used_blocks, int max_blocks, std::vector<int>& a, F& f) {
    if (pos == n) {
        f(static_cast<const std::vector<int>&>(a), used_blocks);
        return;
    }
    int lim = std::min(used_blocks + 1, max_blocks);
    for (int v = 0; v < lim; ++v) {
        a[pos] = v;
        rgs_rec(n, pos + 1, std::max(used_blocks, v + 1), max_blocks, a, f);
    }
}

}  // namespace detail

/// Streams every unordered set partition of {1,...,n} with at most max_blocks
/// blocks as a restricted growth string: f(assignment, block_count), where
/// assignment[i] is the 0-based block of element i+1 (blocks numbered by first
/// occurrence).
template <class F>
void for_each_set_partition(int n, int max_blocks, F&& f) {
    if (n <= 0 || max_blocks <= 0) return;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    detail::rgs_rec(n, 0, 0, max_blocks, a, f);
}

/// Streams every ordered set partition of {1,...,n} with at most max_blocks
/// blocks: f(sites, block_count) where sites[i] in {1..block_count} is the
/// rank of the block containing element i+1.  With max_blocks >= n the number
/// of partitions streamed is the Fubini number.
template <class F>
void for_each_ordered_set_partition(int n, int max_blocks, F&& f) {
    for_each_set_partition(n, max_blocks, [&](const std::vector<int>& a, int b) {
        std::vector<int> rank(static_cast<std::size_t>(b));
        for (int i = 0; i < b; ++i) rank[i] = i;
        std::vector<int> sites(a.size());
        do {
            for (std::size_t i = 0; i < a.size(); ++i) sites[i] = rank[a[i]] + 1;
            f(static_cast<const std::vector<int>&>(sites), b);
        } while (std::next_permutation(rank.begin(), rank.end()));
    });
}

inline std::vector<OrderedSetPartition> ordered_set_partitions(int n, int max_blocks) {
    std::vector<OrderedSetPartition> out;
    for_each_ordered_set_partition(n, max_blocks, [&](const std::vector<int>& sites, int b) {
        OrderedSetPartition p;
        p.n = n;
        p.blocks.assign(static_cast<std::size_t>(b), {});
        for (std::size_t i = 0; i < sites.size(); ++i) p.blocks[sites[i] - 1].push_back(static_cast<int>(i) + 1);
        out.push_back(std::move(p));
    });
    return out;
}

}  // namespace aclt
