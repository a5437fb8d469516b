#ifndef MONOHIER_TEST_SUPPORT_HPP
#define MONOHIER_TEST_SUPPORT_HPP

// Shared brute-force oracles, deliberately independent of the library's
// enumeration and counting paths.

#include "monohier/partitions.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace test_support {

using monohier::partitions::OrderedPartition;

/// Every ordered partition of {1..n}: every set partition combined with
/// every ordering of its blocks.
inline void all_ordered_partitions(int n,
                                   const std::function<void(const OrderedPartition&)>& fn) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            std::vector<int> order(blocks.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
            do {
                std::vector<std::vector<int>> arranged;
                for (int i : order) arranged.push_back(blocks[i]);
                fn(OrderedPartition(n, arranged));
            } while (std::next_permutation(order.begin(), order.end()));
            return;
        }
        for (std::size_t i = 0, existing = blocks.size(); i < existing; ++i) {
            blocks[i].push_back(next);
            rec(next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        rec(next + 1);
        blocks.pop_back();
    };
    rec(1);
}

inline bool is_pair_partition(const OrderedPartition& p) {
    return std::all_of(p.blocks.begin(), p.blocks.end(),
                       [](const std::vector<int>& b) { return b.size() == 2; });
}

} // namespace test_support

#endif
