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

#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace qrelnet::detail {

// Union-find with path halving; union by index keeps the smallest element
// as the root of every set.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) noexcept {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) noexcept {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
        --sets_;
        return true;
    }

    [[nodiscard]] std::size_t num_sets() const noexcept { return sets_; }
    [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }

  private:
    std::vector<std::size_t> parent_;
    std::size_t sets_;
};

} // namespace qrelnet::detail
