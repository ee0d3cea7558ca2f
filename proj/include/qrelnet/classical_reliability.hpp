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
 * All-terminal reliability of a graph whose edges operate independently and
 * whose vertices are perfect. Both routines are generic over the scalar so
 * they run in binary64 or in exact rational arithmetic.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"
#include "qrelnet/rational.hpp"

namespace qrelnet {

/// One operating probability per edge, aligned with the edge order.
template <class Scalar> using EdgeProbabilities = std::vector<Scalar>;

template <class Scalar>
void check_probabilities(const Graph &g, std::span<const Scalar> p) {
    require(p.size() == g.num_edges(), errc::width_mismatch,
            "expected " + std::to_string(g.num_edges()) +
                " edge probabilities, got " + std::to_string(p.size()));
    for (const auto &pe : p) {
        require(pe >= Scalar(0) && pe <= Scalar(1), errc::invalid_probability,
                "edge probability outside [0, 1]");
    }
}

/// Probability of the classical state eps.
template <class Scalar>
Scalar state_probability(std::span<const Scalar> p, EdgeState eps) {
    Scalar w(1);
    for (std::size_t i = 0; i < p.size() && !(w == Scalar(0)); ++i) {
        w *= eps.test(i) ? p[i] : Scalar(1) - p[i];
    }
    return w;
}

/// Sum of state probabilities over the connected states.
template <class Scalar>
Scalar reliability_enumerate(const Graph &g, std::span<const Scalar> p) {
    check_capacity(g.num_edges());
    check_probabilities(g, p);
    ComponentScanner scanner(g);
    Scalar total(0);
    const std::uint64_t states = g.num_states();
    for (std::uint64_t s = 0; s < states; ++s) {
        if (scanner.connected(EdgeState{s})) {
            total += state_probability(p, EdgeState{s});
        }
    }
    return total;
}

template <class Scalar>
Scalar reliability_enumerate(const Graph &g, const std::vector<Scalar> &p) {
    return reliability_enumerate(g, std::span<const Scalar>(p));
}

namespace detail {

struct LiveEdge {
    std::size_t u;
    std::size_t v;
    std::size_t id;
};

template <class Scalar>
Scalar factorize(std::size_t num_vertices, std::vector<LiveEdge> edges,
                 std::span<const Scalar> p) {
    std::erase_if(edges, [](const LiveEdge &e) { return e.u == e.v; });
    if (edges.empty()) {
        return Scalar(num_vertices <= 1 ? 1 : 0);
    }
    // Edges stay sorted by original index, so front() is the lowest live one.
    const LiveEdge e = edges.front();
    std::vector<LiveEdge> rest(edges.begin() + 1, edges.end());

    const auto keep = std::min(e.u, e.v);
    const auto gone = std::max(e.u, e.v);
    std::vector<LiveEdge> contracted = rest;
    auto relabel = [&](std::size_t x) {
        if (x == gone) {
            return keep;
        }
        return x > gone ? x - 1 : x;
    };
    for (auto &c : contracted) {
        c.u = relabel(c.u);
        c.v = relabel(c.v);
    }
    const Scalar &pe = p[e.id];
    Scalar up = pe == Scalar(0) ? Scalar(0)
                                : pe * factorize(num_vertices - 1, std::move(contracted), p);
    Scalar down = pe == Scalar(1) ? Scalar(0)
                                  : (Scalar(1) - pe) * factorize(num_vertices, std::move(rest), p);
    return up + down;
}

} // namespace detail

/// R_G = p_e R_{G.e} + (1 - p_e) R_{G-e}, always splitting on the lowest
/// indexed remaining edge.
template <class Scalar>
Scalar reliability_factorize(const Graph &g, std::span<const Scalar> p) {
    check_capacity(g.num_edges());
    check_probabilities(g, p);
    std::vector<detail::LiveEdge> edges;
    edges.reserve(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        edges.push_back({g.edge(i).u, g.edge(i).v, i});
    }
    return detail::factorize(g.num_vertices(), std::move(edges), p);
}

template <class Scalar>
Scalar reliability_factorize(const Graph &g, const std::vector<Scalar> &p) {
    return reliability_factorize(g, std::span<const Scalar>(p));
}

} // namespace qrelnet
