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

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qrelnet/quantum_reliability.hpp"
#include "support/oracles.hpp"

namespace qrelnet::oracle {

inline Complex random_phase(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 6.283185307179586);
    return std::polar(1.0, u(rng));
}

/// Host graph with a node "v" of degree n; edges 0..n-1 are the ones at v,
/// the remaining edges live among w0, w1, ...
inline Graph random_host(std::mt19937_64 &rng, std::size_t n, std::size_t others,
                         std::size_t extra_edges) {
    auto vertices = names("w", others);
    vertices.push_back("v");
    const std::size_t v = others;
    std::uniform_int_distribution<std::size_t> pick(0, others - 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({v, pick(rng)});
    }
    for (std::size_t i = 0; i < extra_edges; ++i) {
        edges.push_back({pick(rng), pick(rng)});
    }
    return {std::move(vertices), std::move(edges)};
}

struct Gadget {
    Graph g;
    std::vector<EdgeKind> kinds;
};

/// Replaces node v (degree n) of `host` by ports v0..v{n-1}, one per incident
/// edge, joined by a complete graph of quantum edges.
inline Gadget node_gadget(const Graph &host, std::size_t n) {
    const std::size_t v = *host.find("v");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < host.num_vertices(); ++i) {
        if (i != v) {
            vertices.push_back(host.vertex(i));
        }
    }
    auto ports = names("v", n);
    vertices.insert(vertices.end(), ports.begin(), ports.end());
    Gadget out;
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t next_port = 0;
    for (std::size_t i = 0; i < host.num_edges(); ++i) {
        auto e = host.edge(i);
        std::string a = host.vertex(e.u), b = host.vertex(e.v);
        if (e.u == v) {
            a = ports[next_port++];
        }
        if (e.v == v) {
            b = ports[next_port++];
        }
        edges.emplace_back(a, b);
        out.kinds.push_back(EdgeKind::classical);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.emplace_back(ports[i], ports[j]);
            out.kinds.push_back(EdgeKind::quantum);
        }
    }
    out.g = Graph(std::move(vertices), edges);
    return out;
}

/// Reliability of `host` when node v is up with probability p_node: with v
/// down, each port edge must still be up and host - v must be connected.
inline double imperfect_node_reliability(const Graph &host, const std::vector<double> &p,
                                         std::size_t n, double p_node) {
    const std::size_t v = *host.find("v");
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < host.num_vertices(); ++i) {
        if (i != v) {
            rest.push_back(host.vertex(i));
        }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<double> p_rest;
    double ports_up = 1.0;
    for (std::size_t i = 0; i < host.num_edges(); ++i) {
        if (i < n) {
            ports_up *= p[i];
        } else {
            edges.emplace_back(host.vertex(host.edge(i).u), host.vertex(host.edge(i).v));
            p_rest.push_back(p[i]);
        }
    }
    Graph without(std::move(rest), edges);
    return p_node * brute_reliability(host, p) +
           (1.0 - p_node) * ports_up * brute_reliability(without, p_rest);
}

struct SublayerInstance {
    HybridDecomposition d;
    HybridState state;
};

/// Classical layer on `vertices` nodes; quantum edges only between vertices
/// touched by a classical edge.
inline SublayerInstance random_sublayer(std::mt19937_64 &rng, std::size_t vertices,
                                        std::size_t classical_edges,
                                        std::size_t quantum_edges) {
    while (true) {
        Graph h = random_graph(rng, names("x", vertices), classical_edges, false);
        std::vector<std::size_t> touched;
        for (std::size_t v = 0; v < h.num_vertices(); ++v) {
            for (const auto &e : h.edges()) {
                if (e.u == v || e.v == v) {
                    touched.push_back(v);
                    break;
                }
            }
        }
        if (touched.size() < 2) {
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, touched.size() - 1);
        std::vector<Edge> edges(h.edges().begin(), h.edges().end());
        std::vector<EdgeKind> kinds(edges.size(), EdgeKind::classical);
        while (kinds.size() < classical_edges + quantum_edges) {
            Edge e{touched[pick(rng)], touched[pick(rng)]};
            if (e.is_loop()) {
                continue;
            }
            edges.push_back(e);
            kinds.push_back(EdgeKind::quantum);
        }
        Graph g(h.vertices(), edges);
        SublayerInstance out{canonical_decomposition(g, kinds), {}};
        out.state.quantum = random_state(out.d.k.num_edges(), rng());
        out.state.classical = random_probabilities(rng, out.d.h.num_edges());
        return out;
    }
}

} // namespace qrelnet::oracle
