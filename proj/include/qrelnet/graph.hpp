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
 * Finite multigraphs with named vertices and an ordered edge list.
 *
 * Edge i of a graph is bit i of every EdgeState over that graph. Deletion,
 * contraction and quotients keep the relative order of the surviving edges,
 * and contractions and quotients keep the loops they create, so quotients
 * of a graph share its edge indexing.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qrelnet/detail/union_find.hpp"
#include "qrelnet/error.hpp"
#include "qrelnet/partition.hpp"

namespace qrelnet {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    [[nodiscard]] bool is_loop() const noexcept { return u == v; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// One classical configuration: bit i set means edge i is operating.
struct EdgeState {
    std::uint64_t bits = 0;

    [[nodiscard]] bool test(std::size_t edge) const noexcept {
        return (bits >> edge) & 1U;
    }
    friend bool operator==(const EdgeState &, const EdgeState &) = default;
};

/// Binary text, leftmost character is edge 0.
inline std::string to_string(EdgeState eps, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (eps.test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

inline EdgeState parse_edge_state(std::string_view text, std::size_t width) {
    require(text.size() == width, errc::width_mismatch,
            "edge state '" + std::string(text) + "' has width " +
                std::to_string(text.size()) + ", expected " + std::to_string(width));
    check_capacity(width);
    EdgeState eps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        require(text[i] == '0' || text[i] == '1', errc::schema_error,
                "edge state must be a binary string");
        if (text[i] == '1') {
            eps.bits |= std::uint64_t{1} << i;
        }
    }
    return eps;
}

class Graph {
  public:
    Graph() = default;

    Graph(std::vector<std::string> vertices,
          const std::vector<std::pair<std::string, std::string>> &edges)
        : vertices_(std::move(vertices)) {
        index_vertices();
        edges_.reserve(edges.size());
        for (const auto &[a, b] : edges) {
            edges_.push_back({require_vertex(a), require_vertex(b)});
        }
    }

    Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        index_vertices();
        for (const auto &e : edges_) {
            require(e.u < vertices_.size() && e.v < vertices_.size(),
                    errc::unknown_vertex, "edge endpoint out of range");
        }
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string> &vertices() const noexcept {
        return vertices_;
    }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] const std::string &vertex(std::size_t i) const { return vertices_.at(i); }
    [[nodiscard]] const Edge &edge(std::size_t i) const { return edges_.at(i); }

    /// Number of classical states, 2^|E|.
    [[nodiscard]] std::uint64_t num_states() const {
        check_capacity(edges_.size());
        return std::uint64_t{1} << edges_.size();
    }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
        if (auto it = index_.find(std::string(name)); it != index_.end()) {
            return it->second;
        }
        return std::nullopt;
    }

    [[nodiscard]] std::size_t require_vertex(std::string_view name) const {
        auto idx = find(name);
        require(idx.has_value(), errc::unknown_vertex,
                "unknown vertex '" + std::string(name) + "'");
        return *idx;
    }

    [[nodiscard]] bool contains(std::string_view name) const {
        return find(name).has_value();
    }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

  private:
    void index_vertices() {
        index_.clear();
        index_.reserve(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            bool fresh = index_.emplace(vertices_[i], i).second;
            require(fresh, errc::duplicate_vertex,
                    "duplicate vertex '" + vertices_[i] + "'");
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline void check_state(const Graph &g, EdgeState eps) {
    check_capacity(g.num_edges());
    require(g.num_edges() == 64 || (eps.bits >> g.num_edges()) == 0,
            errc::width_mismatch, "edge state wider than the edge list");
}

/// Block index per vertex; indices are contiguous from 0.
struct VertexPartitionMap {
    std::vector<std::size_t> assignment;

    [[nodiscard]] std::size_t num_blocks() const {
        return assignment.empty()
                   ? 0
                   : *std::max_element(assignment.begin(), assignment.end()) + 1;
    }
};

namespace detail {

inline std::string merged_name(std::vector<std::string> members) {
    std::sort(members.begin(), members.end());
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) {
            out += '+';
        }
        out += members[i];
    }
    return out;
}

} // namespace detail

/// Identifies the vertices of each block. Vertices of the result follow the
/// order of first appearance of their block; edges are kept verbatim, with
/// endpoints relabelled.
inline Graph identify(const Graph &g, const VertexPartitionMap &map) {
    require(map.assignment.size() == g.num_vertices(), errc::width_mismatch,
            "vertex partition map does not cover the graph");
    const std::size_t nb = map.num_blocks();
    std::vector<std::vector<std::string>> members(nb);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> new_index(nb, unset);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto b = map.assignment[v];
        members[b].push_back(g.vertex(v));
        if (new_index[b] == unset) {
            new_index[b] = next++;
        }
    }
    require(next == nb, errc::partition_mismatch,
            "vertex partition block indices are not contiguous");

    std::vector<std::string> names(nb);
    std::unordered_set<std::string> taken;
    for (std::size_t b = 0; b < nb; ++b) {
        std::string name = members[b].size() == 1 ? members[b].front()
                                                  : detail::merged_name(members[b]);
        while (!taken.insert(name).second) {
            name += '\'';
        }
        names[new_index[b]] = std::move(name);
    }
    std::vector<Edge> edges;
    edges.reserve(g.num_edges());
    for (const auto &e : g.edges()) {
        edges.push_back({new_index[map.assignment[e.u]], new_index[map.assignment[e.v]]});
    }
    return {std::move(names), std::move(edges)};
}

/// G - e.
inline Graph delete_edge(const Graph &g, std::size_t e) {
    require(e < g.num_edges(), errc::index_out_of_range,
            "edge index " + std::to_string(e) + " out of range");
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    return {g.vertices(), std::move(edges)};
}

/// G . e. Contracting a loop just removes it.
inline Graph contract_edge(const Graph &g, std::size_t e) {
    require(e < g.num_edges(), errc::index_out_of_range,
            "edge index " + std::to_string(e) + " out of range");
    const Edge target = g.edge(e);
    Graph without = delete_edge(g, e);
    if (target.is_loop()) {
        return without;
    }
    const auto [keep, gone] = std::minmax(target.u, target.v);
    VertexPartitionMap map;
    map.assignment.resize(g.num_vertices());
    for (std::size_t v = 0, b = 0; v < g.num_vertices(); ++v) {
        map.assignment[v] = v == gone ? map.assignment[keep] : b++;
    }
    return identify(without, map);
}

/// Resolves and validates an ordered vertex subset given by name.
inline std::vector<std::size_t> resolve_subset(const Graph &g,
                                               std::span<const std::string> names) {
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const auto &n : names) {
        idx.push_back(g.require_vertex(n));
    }
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            errc::duplicate_vertex, "vertex subset lists a vertex twice");
    return idx;
}

/// G / gamma where gamma partitions the subset `u` (u[i] is element i).
inline Graph quotient(const Graph &g, std::span<const std::size_t> u,
                      const Partition &gamma) {
    require(gamma.size() == u.size(), errc::partition_mismatch,
            "partition ground set does not match the vertex subset");
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> key(g.num_vertices(), unset);
    for (std::size_t i = 0; i < u.size(); ++i) {
        require(u[i] < g.num_vertices(), errc::unknown_vertex,
                "subset vertex out of range");
        require(key[u[i]] == unset, errc::duplicate_vertex,
                "vertex subset lists a vertex twice");
        key[u[i]] = gamma.block_of(i);
    }
    // Blocks of gamma take labels 0..k-1; other vertices follow.
    VertexPartitionMap map;
    map.assignment.resize(g.num_vertices());
    std::vector<std::size_t> raw(g.num_vertices());
    std::size_t next = gamma.num_blocks();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        raw[v] = key[v] == unset ? next++ : key[v];
    }
    // Relabel by first appearance so the map is contiguous in vertex order.
    std::vector<std::size_t> relabel(next, unset);
    std::size_t b = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (relabel[raw[v]] == unset) {
            relabel[raw[v]] = b++;
        }
        map.assignment[v] = relabel[raw[v]];
    }
    return identify(g, map);
}

inline Graph quotient(const Graph &g, std::span<const std::string> u,
                      const Partition &gamma) {
    auto idx = resolve_subset(g, u);
    return quotient(g, std::span<const std::size_t>(idx), gamma);
}

/// W(eps): all vertices, only the operating edges.
inline Graph active_subgraph(const Graph &g, EdgeState eps) {
    check_state(g, eps);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (eps.test(i)) {
            edges.push_back(g.edge(i));
        }
    }
    return {g.vertices(), std::move(edges)};
}

/// Reusable scratch for scanning many states of one graph.
class ComponentScanner {
  public:
    explicit ComponentScanner(const Graph &g)
        : num_vertices_(g.num_vertices()), edges_(g.edges()), parent_(g.num_vertices()) {
        check_capacity(edges_.size());
    }

    /// Number of connected components of W(eps), counting isolated vertices.
    std::size_t count_components(EdgeState eps) {
        reset();
        std::size_t comps = num_vertices_;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (eps.test(i) && unite(edges_[i].u, edges_[i].v)) {
                --comps;
            }
        }
        return comps;
    }

    bool connected(EdgeState eps) { return count_components(eps) <= 1; }

    /// Root of every vertex after the last scan.
    std::size_t root(std::size_t v) { return find(v); }

  private:
    void reset() {
        for (std::size_t v = 0; v < num_vertices_; ++v) {
            parent_[v] = v;
        }
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

    std::size_t num_vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> parent_;
};

/// W(eps) has at most one component; the empty graph counts as connected.
inline bool is_connected(const Graph &g, EdgeState eps) {
    check_state(g, eps);
    return ComponentScanner(g).connected(eps);
}

/// Partition {U ∩ C} of `u` over the components C of H(eps), or nullopt when
/// some component misses `u` entirely (an island).
class IslandScanner {
  public:
    IslandScanner(const Graph &h, std::span<const std::size_t> u)
        : scanner_(h), u_(u.begin(), u.end()), in_u_(h.num_vertices(), false),
          num_vertices_(h.num_vertices()) {
        for (auto v : u_) {
            require(v < h.num_vertices(), errc::unknown_vertex,
                    "subset vertex out of range");
            require(!in_u_[v], errc::duplicate_vertex,
                    "vertex subset lists a vertex twice");
            in_u_[v] = true;
        }
        root_hits_u_.resize(num_vertices_);
        labels_.resize(u_.size());
    }

    std::optional<Partition> partition(EdgeState eps) {
        scanner_.count_components(eps);
        std::fill(root_hits_u_.begin(), root_hits_u_.end(), false);
        for (std::size_t i = 0; i < u_.size(); ++i) {
            auto r = scanner_.root(u_[i]);
            root_hits_u_[r] = true;
            labels_[i] = r;
        }
        for (std::size_t v = 0; v < num_vertices_; ++v) {
            if (!root_hits_u_[scanner_.root(v)]) {
                return std::nullopt;
            }
        }
        return Partition::from_labels(std::span<const std::size_t>(labels_));
    }

  private:
    ComponentScanner scanner_;
    std::vector<std::size_t> u_;
    std::vector<bool> in_u_;
    std::size_t num_vertices_;
    std::vector<bool> root_hits_u_;
    std::vector<std::size_t> labels_;
};

inline std::optional<Partition> component_partition(const Graph &h,
                                                    std::span<const std::size_t> u,
                                                    EdgeState eps) {
    check_state(h, eps);
    return IslandScanner(h, u).partition(eps);
}

inline std::optional<Partition> component_partition(const Graph &h,
                                                    std::span<const std::string> u,
                                                    EdgeState eps) {
    auto idx = resolve_subset(h, u);
    return component_partition(h, std::span<const std::size_t>(idx), eps);
}

/// G = K ∪ H glued along the shared vertices `u`, which must be exactly the
/// vertices K and H have in common. H's edges come first and K's edges
/// after them, so a state of G is (state of K) * 2^|E_H| + (state of H).
inline Graph glue(const Graph &k, const Graph &h, std::span<const std::string> u) {
    auto u_in_k = resolve_subset(k, u);
    auto u_in_h = resolve_subset(h, u);
    std::unordered_set<std::string> shared(u.begin(), u.end());
    for (const auto &name : k.vertices()) {
        require(!h.contains(name) || shared.count(name) != 0, errc::overlap_violation,
                "vertex '" + name + "' is in both graphs but not shared");
    }
    check_capacity(k.num_edges() + h.num_edges());
    std::vector<std::string> vertices = h.vertices();
    for (const auto &name : k.vertices()) {
        if (shared.count(name) == 0) {
            vertices.push_back(name);
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(k.num_edges() + h.num_edges());
    for (const auto &e : h.edges()) {
        edges.emplace_back(h.vertex(e.u), h.vertex(e.v));
    }
    for (const auto &e : k.edges()) {
        edges.emplace_back(k.vertex(e.u), k.vertex(e.v));
    }
    return {std::move(vertices), edges};
}

} // namespace qrelnet
