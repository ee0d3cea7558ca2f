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
 * JSON wire formats for graphs, states, partitions and matrices.
 *
 *   graph      {"vertices":["a","b"],"edges":[["a","b"], ...]}
 *              edges may also be {"ends":["a","b"],"kind":"quantum"}
 *   state      {"type":"product","qubits":[{"p":0.3,"phase":[1,0]}, ...]}
 *              {"type":"two_term","zeta":"11","chi":"00","p":0.3,"phase":[0,1]}
 *              {"type":"amplitudes","values":[[re,im], ...]}
 *   hybrid     {"quantum":<state>,"classical":[p, ...]}
 *   partition  [["1","3"],["2"]]
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrelnet/connectivity_matrix.hpp"
#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"
#include "qrelnet/partition.hpp"
#include "qrelnet/quantum_reliability.hpp"
#include "qrelnet/rational.hpp"
#include "qrelnet/state_vector.hpp"

namespace qrelnet::io {

using nlohmann::json;

inline constexpr const char *kSchema = "qrelnet/1";

namespace detail {

[[noreturn]] inline void schema_fail(const std::string &what) {
    throw Error(errc::schema_error, what);
}

inline const json &field(const json &j, const char *key) {
    if (!j.is_object()) {
        schema_fail(std::string("expected an object with field '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        schema_fail(std::string("missing field '") + key + "'");
    }
    return *it;
}

inline std::string as_string(const json &j, const char *what) {
    if (!j.is_string()) {
        schema_fail(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

inline double as_number(const json &j, const char *what) {
    if (!j.is_number()) {
        schema_fail(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

inline const json &as_array(const json &j, const char *what) {
    if (!j.is_array()) {
        schema_fail(std::string(what) + " must be an array");
    }
    return j;
}

} // namespace detail

inline json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(errc::malformed_json, e.what());
    }
}

inline json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

struct TaggedGraph {
    Graph graph;
    std::vector<EdgeKind> kinds;
};

/// Edges without a "kind" are classical.
inline TaggedGraph tagged_graph_from_json(const json &j) {
    std::vector<std::string> vertices;
    for (const auto &v : detail::as_array(detail::field(j, "vertices"), "vertices")) {
        vertices.push_back(detail::as_string(v, "vertex"));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    TaggedGraph out;
    for (const auto &e : detail::as_array(detail::field(j, "edges"), "edges")) {
        const json *ends = &e;
        EdgeKind kind = EdgeKind::classical;
        if (e.is_object()) {
            ends = &detail::field(e, "ends");
            if (auto k = e.find("kind"); k != e.end()) {
                auto s = detail::as_string(*k, "edge kind");
                if (s == "quantum") {
                    kind = EdgeKind::quantum;
                } else if (s != "classical") {
                    detail::schema_fail("edge kind must be 'quantum' or 'classical'");
                }
            }
        }
        if (!ends->is_array() || ends->size() != 2) {
            detail::schema_fail("edge must be a pair of vertex names");
        }
        edges.emplace_back(detail::as_string((*ends)[0], "edge endpoint"),
                           detail::as_string((*ends)[1], "edge endpoint"));
        out.kinds.push_back(kind);
    }
    out.graph = Graph(std::move(vertices), edges);
    return out;
}

inline Graph graph_from_json(const json &j) { return tagged_graph_from_json(j).graph; }

inline json graph_to_json(const Graph &g) {
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({g.vertex(e.u), g.vertex(e.v)});
    }
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

inline Complex phase_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        detail::schema_fail("phase must be [re, im]");
    }
    return {detail::as_number(j[0], "phase re"), detail::as_number(j[1], "phase im")};
}

/// Parses a state over `num_edges` edges.
inline StateVector state_from_json(const json &j, std::size_t num_edges) {
    const auto type = detail::as_string(detail::field(j, "type"), "state type");
    auto phase_or_one = [&](const json &obj) {
        auto it = obj.find("phase");
        return it == obj.end() ? Complex(1.0, 0.0) : phase_from_json(*it);
    };
    if (type == "product") {
        std::vector<QubitSpec> specs;
        for (const auto &q : detail::as_array(detail::field(j, "qubits"), "qubits")) {
            specs.push_back({detail::as_number(detail::field(q, "p"), "qubit p"), phase_or_one(q)});
        }
        require(specs.size() == num_edges, errc::width_mismatch,
                "product state has " + std::to_string(specs.size()) + " qubits, graph has " +
                    std::to_string(num_edges) + " edges");
        if (specs.empty()) {
            return StateVector();
        }
        return product_state(std::span<const QubitSpec>(specs));
    }
    if (type == "two_term") {
        auto zeta = parse_edge_state(detail::as_string(detail::field(j, "zeta"), "zeta"), num_edges);
        auto chi = parse_edge_state(detail::as_string(detail::field(j, "chi"), "chi"), num_edges);
        double p = detail::as_number(detail::field(j, "p"), "p");
        return two_term_state(num_edges, zeta, chi, p, phase_or_one(j));
    }
    if (type == "amplitudes") {
        std::vector<Complex> amps;
        for (const auto &a : detail::as_array(detail::field(j, "values"), "values")) {
            amps.push_back(phase_from_json(a));
        }
        require(amps.size() == (std::size_t{1} << std::min<std::size_t>(num_edges, 63)),
                errc::width_mismatch,
                "amplitude count does not match 2^" + std::to_string(num_edges));
        return StateVector(std::move(amps));
    }
    detail::schema_fail("unknown state type '" + type + "'");
}

inline json state_to_json(const StateVector &psi) {
    json values = json::array();
    for (const auto &a : psi.amplitudes()) {
        values.push_back({a.real(), a.imag()});
    }
    return {{"type", "amplitudes"}, {"values", values}};
}

inline HybridState hybrid_state_from_json(const json &j, const HybridDecomposition &d) {
    HybridState state{state_from_json(detail::field(j, "quantum"), d.k.num_edges()), {}};
    for (const auto &p : detail::as_array(detail::field(j, "classical"), "classical")) {
        state.classical.push_back(detail::as_number(p, "classical probability"));
    }
    return state;
}

inline json partition_to_json(const Partition &p, std::span<const std::string> ground) {
    require(p.size() == ground.size(), errc::partition_mismatch,
            "partition does not match its ground set");
    json out = json::array();
    for (const auto &block : p.blocks()) {
        json b = json::array();
        for (auto i : block) {
            b.push_back(ground[i]);
        }
        out.push_back(std::move(b));
    }
    return out;
}

inline Partition partition_from_json(const json &j, std::span<const std::string> ground) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto &b : detail::as_array(j, "partition")) {
        std::vector<std::size_t> block;
        for (const auto &name : detail::as_array(b, "partition block")) {
            auto s = detail::as_string(name, "partition element");
            auto it = std::find(ground.begin(), ground.end(), s);
            require(it != ground.end(), errc::unknown_vertex,
                    "partition mentions '" + s + "', which is not in the ground set");
            block.push_back(static_cast<std::size_t>(it - ground.begin()));
        }
        blocks.push_back(std::move(block));
    }
    return Partition::from_blocks(ground.size(), blocks);
}

/// {"m", "ground", "order", "alpha", "beta"}, matrix entries as rational
/// strings.
inline json matrix_to_json(const ConnectivityMatrix &cm, std::span<const std::string> ground) {
    json order = json::array();
    for (const auto &p : cm.order) {
        order.push_back(partition_to_json(p, ground));
    }
    json alpha = json::array(), beta = json::array();
    for (std::size_t i = 0; i < cm.dim(); ++i) {
        json ra = json::array(), rb = json::array();
        for (std::size_t j = 0; j < cm.dim(); ++j) {
            ra.push_back(std::to_string(cm.alpha_at(i, j)));
            rb.push_back(cm.beta_at(i, j).str());
        }
        alpha.push_back(std::move(ra));
        beta.push_back(std::move(rb));
    }
    return {{"m", cm.m},
            {"ground", std::vector<std::string>(ground.begin(), ground.end())},
            {"order", order},
            {"alpha", alpha},
            {"beta", beta}};
}

/// Inverse of matrix_to_json; alpha must be 0/1.
inline ConnectivityMatrix matrix_from_json(const json &j) {
    ConnectivityMatrix cm;
    std::vector<std::string> ground;
    for (const auto &g : detail::as_array(detail::field(j, "ground"), "ground")) {
        ground.push_back(detail::as_string(g, "ground element"));
    }
    cm.m = ground.size();
    for (const auto &p : detail::as_array(detail::field(j, "order"), "order")) {
        cm.order.push_back(partition_from_json(p, ground));
    }
    const std::size_t n = cm.order.size();
    auto read = [&](const char *key, auto convert) {
        const auto &rows = detail::as_array(detail::field(j, key), key);
        if (rows.size() != n) {
            detail::schema_fail(std::string(key) + " has the wrong number of rows");
        }
        for (const auto &row : rows) {
            if (!row.is_array() || row.size() != n) {
                detail::schema_fail(std::string(key) + " row has the wrong length");
            }
            for (const auto &x : row) {
                convert(Rational::parse(detail::as_string(x, key)));
            }
        }
    };
    read("alpha", [&](const Rational &r) {
        if (r != Rational(0) && r != Rational(1)) {
            detail::schema_fail("alpha entries must be 0 or 1");
        }
        cm.alpha.push_back(static_cast<std::uint8_t>(r.num()));
    });
    read("beta", [&](const Rational &r) { cm.beta.push_back(r); });
    return cm;
}

/// Comma-separated list, e.g. "0.5,1/3,1".
inline std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    if (!text.empty() && text.back() == ',') {
        out.emplace_back();
    }
    return out;
}

} // namespace qrelnet::io
