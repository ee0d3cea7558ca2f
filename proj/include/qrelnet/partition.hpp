// Copyright 2026 The qrelnet Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Set partitions of a finite ordered ground set {0, ..., m-1}.
 *
 * A partition is stored as its restricted growth string: label[i] is the
 * block of element i, label[0] == 0, and every label is at most one more
 * than the largest label before it. This form is unique per set partition,
 * lists blocks by their smallest element, and orders partitions
 * lexicographically.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrelnet/detail/union_find.hpp"
#include "qrelnet/error.hpp"

namespace qrelnet {

/// Largest ground set for which partitions are enumerated (Bell(8) = 4140).
inline constexpr std::size_t kMaxPartitionGround = 8;

class Partition {
  public:
    Partition() = default;

    /// Canonicalizes arbitrary block labels (any integers; equal labels share
    /// a block).
    template <class Int> static Partition from_labels(std::span<const Int> raw) {
        Partition p;
        p.labels_.resize(raw.size());
        std::vector<std::pair<Int, std::uint8_t>> seen;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto it = std::find_if(seen.begin(), seen.end(),
                                   [&](const auto &s) { return s.first == raw[i]; });
            if (it == seen.end()) {
                seen.emplace_back(raw[i], static_cast<std::uint8_t>(seen.size()));
                p.labels_[i] = seen.back().second;
            } else {
                p.labels_[i] = it->second;
            }
        }
        p.num_blocks_ = seen.size();
        return p;
    }

    static Partition from_labels(std::initializer_list<int> raw) {
        return from_labels(std::span<const int>(raw.begin(), raw.size()));
    }

    /// Blocks must be nonempty, pairwise disjoint and cover {0, ..., m-1}.
    static Partition from_blocks(std::size_t m,
                                 const std::vector<std::vector<std::size_t>> &blocks) {
        std::vector<int> raw(m, -1);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            require(!blocks[b].empty(), errc::partition_mismatch,
                    "partition has an empty block");
            for (std::size_t x : blocks[b]) {
                require(x < m, errc::partition_mismatch,
                        "partition element outside the ground set");
                require(raw[x] == -1, errc::partition_mismatch,
                        "partition blocks overlap");
                raw[x] = static_cast<int>(b);
            }
        }
        for (int r : raw) {
            require(r != -1, errc::partition_mismatch,
                    "partition does not cover the ground set");
        }
        return from_labels(std::span<const int>(raw));
    }

    /// Every element in its own block.
    static Partition singletons(std::size_t m) {
        Partition p;
        p.labels_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            p.labels_[i] = static_cast<std::uint8_t>(i);
        }
        p.num_blocks_ = m;
        return p;
    }

    /// All elements in one block.
    static Partition single_block(std::size_t m) {
        Partition p;
        p.labels_.assign(m, 0);
        p.num_blocks_ = m == 0 ? 0 : 1;
        return p;
    }

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t num_blocks() const noexcept { return num_blocks_; }
    [[nodiscard]] std::size_t block_of(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] std::span<const std::uint8_t> labels() const noexcept {
        return labels_;
    }

    [[nodiscard]] std::vector<std::vector<std::size_t>> blocks() const {
        std::vector<std::vector<std::size_t>> out(num_blocks_);
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            out[labels_[i]].push_back(i);
        }
        return out;
    }

    /// Compact text form, e.g. "{0}{1,2}".
    [[nodiscard]] std::string str() const {
        std::string s;
        for (const auto &block : blocks()) {
            s += '{';
            for (std::size_t j = 0; j < block.size(); ++j) {
                if (j) {
                    s += ',';
                }
                s += std::to_string(block[j]);
            }
            s += '}';
        }
        return s;
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b) {
        return a.labels_ <=> b.labels_;
    }

  private:
    std::vector<std::uint8_t> labels_;
    std::size_t num_blocks_ = 0;
};

/// Bell(m) partitions of {0, ..., m-1} in lexicographic restricted-growth
/// order: the single block comes first, all singletons last.
inline std::vector<Partition> enumerate_partitions(std::size_t m) {
    require(m >= 1 && m <= kMaxPartitionGround, errc::capacity_exceeded,
            "partition ground set size must be in [1, 8], got " +
                std::to_string(m));
    std::vector<Partition> out;
    std::vector<int> rgs(m, 0);
    // prefix_max[i] = max(rgs[0..i-1]); only meaningful for i >= 1.
    std::vector<int> prefix_max(m, 0);
    for (;;) {
        out.push_back(Partition::from_labels(std::span<const int>(rgs)));
        std::size_t i = m;
        while (i > 1 && rgs[i - 1] > prefix_max[i - 1]) {
            --i;
        }
        if (i <= 1) {
            return out;
        }
        --i;
        ++rgs[i];
        for (std::size_t j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
        }
    }
}

/// Finest partition in which two elements share a block whenever they share
/// a block in `p` or in `q`.
inline Partition merge(const Partition &p, const Partition &q) {
    require(p.size() == q.size(), errc::partition_mismatch,
            "merge of partitions over different ground sets");
    const std::size_t m = p.size();
    detail::UnionFind uf(m);
    std::vector<std::size_t> first_p(p.num_blocks(), m);
    std::vector<std::size_t> first_q(q.num_blocks(), m);
    for (std::size_t i = 0; i < m; ++i) {
        auto bp = p.block_of(i);
        auto bq = q.block_of(i);
        if (first_p[bp] == m) {
            first_p[bp] = i;
        } else {
            uf.unite(first_p[bp], i);
        }
        if (first_q[bq] == m) {
            first_q[bq] = i;
        } else {
            uf.unite(first_q[bq], i);
        }
    }
    std::vector<std::size_t> roots(m);
    for (std::size_t i = 0; i < m; ++i) {
        roots[i] = uf.find(i);
    }
    return Partition::from_labels(std::span<const std::size_t>(roots));
}

inline bool is_single_block(const Partition &p) noexcept {
    return p.num_blocks() == 1;
}

} // namespace qrelnet
