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
 * Command-line driver. `run` parses arguments, dispatches one verb and
 * writes a single JSON document to `out`.
 *
 * Exit codes: 0 success, 2 input validation error (error JSON on `err`),
 * 1 internal error.
 */

#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qrelnet/classical_reliability.hpp"
#include "qrelnet/connectivity_matrix.hpp"
#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"
#include "qrelnet/io.hpp"
#include "qrelnet/quantum_reliability.hpp"
#include "qrelnet/rational.hpp"
#include "qrelnet/state_vector.hpp"

namespace qrelnet::cli {

using io::json;

/// Edge cap after applying QRELNET_MAX_EDGES, which can only lower it.
inline std::size_t edge_cap() {
    const char *env = std::getenv("QRELNET_MAX_EDGES");
    if (env == nullptr || *env == '\0') {
        return kMaxEdges;
    }
    std::size_t value = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    require(ec == std::errc{} && ptr == text.data() + text.size(), errc::usage_error,
            "QRELNET_MAX_EDGES must be a non-negative integer");
    return std::min(value, kMaxEdges);
}

namespace detail {

inline std::string dump(json doc) {
    doc["schema"] = io::kSchema;
    return doc.dump();
}

inline json error_doc(const std::string &code, const std::string &message) {
    return {{"schema", io::kSchema}, {"error", {{"code", code}, {"message", message}}}};
}

inline Graph load_graph(const std::string &path) {
    Graph g = io::graph_from_json(io::load_json_file(path));
    check_capacity(g.num_edges(), edge_cap());
    return g;
}

inline double parse_probability(const std::string &text) {
    if (text.find('/') != std::string::npos) {
        return Rational::parse(text).to_double();
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    require(ec == std::errc{} && ptr == text.data() + text.size() && !text.empty(),
            errc::invalid_probability, "not a probability: '" + text + "'");
    return v;
}

struct Options {
    std::string graph, state, k, h, shared, p;
    std::string method = "enum";
    bool exact = false;
    bool paper_order = false;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    std::size_t m = 0;
};

inline json cmd_reliability(const Options &o) {
    Graph g = load_graph(o.graph);
    auto items = io::split_list(o.p);
    json doc{{"method", o.method}};
    if (o.exact) {
        std::vector<Rational> p;
        for (const auto &s : items) {
            p.push_back(Rational::parse(s));
        }
        Rational r = o.method == "factor" ? reliability_factorize(g, p)
                                          : reliability_enumerate(g, p);
        doc["value"] = r.str();
        doc["exact"] = true;
    } else {
        std::vector<double> p;
        for (const auto &s : items) {
            p.push_back(parse_probability(s));
        }
        doc["value"] = o.method == "factor" ? reliability_factorize(g, p)
                                            : reliability_enumerate(g, p);
        doc["exact"] = false;
    }
    return doc;
}

inline json cmd_qr(const Options &o) {
    Graph g = load_graph(o.graph);
    StateVector psi = io::state_from_json(io::load_json_file(o.state), g.num_edges());
    return {{"value", qr_value(qr_operator(g), psi)}};
}

inline json cmd_split_verify(const Options &o) {
    Graph k = load_graph(o.k);
    Graph h = load_graph(o.h);
    auto shared = io::split_list(o.shared);
    check_split(k, h, shared);
    check_capacity(k.num_edges() + h.num_edges(), edge_cap());
    const auto cm = connectivity_matrix(shared.size());
    DiagonalOperator split = split_operator(k, h, shared, cm);
    DiagonalOperator direct = qr_operator(glue(k, h, shared));
    if (split != direct) {
        throw Error("split_mismatch", "splitting sum differs from the glued operator", true);
    }
    return {{"equal", true},
            {"shared", shared},
            {"num_edges", k.num_edges() + h.num_edges()},
            {"partitions", cm.dim()},
            {"projector", split.is_projector()}};
}

struct HybridInput {
    HybridDecomposition decomposition;
    HybridState state;
};

inline HybridInput load_hybrid(const Options &o) {
    auto tagged = io::tagged_graph_from_json(io::load_json_file(o.graph));
    check_capacity(tagged.graph.num_edges(), edge_cap());
    auto d = canonical_decomposition(tagged.graph, tagged.kinds);
    auto state = io::hybrid_state_from_json(io::load_json_file(o.state), d);
    return {std::move(d), std::move(state)};
}

inline json cmd_hybrid(const Options &o) {
    auto in = load_hybrid(o);
    return {{"value", hybrid_qr(in.decomposition, in.state)},
            {"shared", in.decomposition.shared}};
}

inline json cmd_sublayer(const Options &o) {
    auto in = load_hybrid(o);
    auto r = sublayer_qr(in.decomposition, in.state);
    json corrections = json::array();
    const auto &ground = in.decomposition.shared;
    for (const auto &c : r.corrections) {
        corrections.push_back({{"gamma", io::partition_to_json(c.gamma, ground)},
                               {"gamma_prime", io::partition_to_json(c.gamma_prime, ground)},
                               {"beta", c.beta.str()},
                               {"term", c.term}});
    }
    return {{"total", r.total},
            {"classical", r.classical},
            {"corrections", corrections},
            {"shared", ground}};
}

inline json cmd_sample(const Options &o) {
    Graph g = load_graph(o.graph);
    StateVector psi = io::state_from_json(io::load_json_file(o.state), g.num_edges());
    auto est = born_sample(g, psi, o.samples, o.seed);
    return {{"estimate", est.estimate},
            {"stderr", est.standard_error},
            {"samples", est.samples},
            {"seed", o.seed}};
}

inline json cmd_matrix(const Options &o) {
    require(o.m >= 1 && o.m <= kMaxSharedVertices, errc::capacity_exceeded,
            "--m must be in [1, 7]");
    require(!o.paper_order || o.m == 3, errc::usage_error,
            "--paper-order is only defined for --m 3");
    auto cm = o.paper_order ? connectivity_matrix(reference_order_three())
                            : connectivity_matrix(o.m);
    std::vector<std::string> ground;
    for (std::size_t i = 1; i <= o.m; ++i) {
        ground.push_back(std::to_string(i));
    }
    json doc = io::matrix_to_json(cm, ground);
    doc["order_name"] = o.paper_order ? "reference" : "canonical";
    return doc;
}

} // namespace detail

/// `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    detail::Options o;
    CLI::App app{"Classical and quantum network reliability with perfect nodes", "qrelnet"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    std::function<json()> action;

    auto *rel = app.add_subcommand("reliability", "All-terminal classical reliability");
    rel->add_option("--graph", o.graph, "graph JSON file")->required();
    rel->add_option("--p", o.p, "comma-separated edge probabilities")->required();
    rel->add_option("--method", o.method, "enum or factor")
        ->check(CLI::IsMember({"enum", "factor"}));
    rel->add_flag("--exact", o.exact, "exact rational arithmetic");
    rel->callback([&] { action = [&] { return detail::cmd_reliability(o); }; });

    auto *qr = app.add_subcommand("qr", "Quantum reliability of a state");
    qr->add_option("--graph", o.graph, "graph JSON file")->required();
    qr->add_option("--state", o.state, "state JSON file")->required();
    qr->callback([&] { action = [&] { return detail::cmd_qr(o); }; });

    auto *sv = app.add_subcommand("split-verify", "Exact check of the splitting formula");
    sv->add_option("--k", o.k, "K graph JSON file")->required();
    sv->add_option("--h", o.h, "H graph JSON file")->required();
    sv->add_option("--shared", o.shared, "comma-separated shared vertices")->required();
    sv->callback([&] { action = [&] { return detail::cmd_split_verify(o); }; });

    auto *hy = app.add_subcommand("hybrid", "Quantum reliability of a hybrid network");
    hy->add_option("--graph", o.graph, "tagged graph JSON file")->required();
    hy->add_option("--state", o.state, "hybrid state JSON file")->required();
    hy->callback([&] { action = [&] { return detail::cmd_hybrid(o); }; });

    auto *sl = app.add_subcommand("sublayer", "Classical reliability plus sublayer corrections");
    sl->add_option("--graph", o.graph, "tagged graph JSON file")->required();
    sl->add_option("--state", o.state, "hybrid state JSON file")->required();
    sl->callback([&] { action = [&] { return detail::cmd_sublayer(o); }; });

    auto *sa = app.add_subcommand("sample", "Born-rule Monte Carlo estimate");
    sa->add_option("--graph", o.graph, "graph JSON file")->required();
    sa->add_option("--state", o.state, "state JSON file")->required();
    sa->add_option("-n", o.samples, "number of samples")->check(CLI::PositiveNumber);
    sa->add_option("--seed", o.seed, "generator seed");
    sa->callback([&] { action = [&] { return detail::cmd_sample(o); }; });

    auto *mx = app.add_subcommand("matrix", "Connectivity matrix and its inverse");
    mx->add_option("--m", o.m, "number of shared vertices")->required();
    mx->add_flag("--paper-order", o.paper_order, "use the published ordering for m = 3");
    mx->callback([&] { action = [&] { return detail::cmd_matrix(o); }; });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << detail::error_doc(errc::usage_error, e.what()).dump() << '\n';
        return 2;
    }

    try {
        out << detail::dump(action()) << '\n';
        return 0;
    } catch (const Error &e) {
        err << detail::error_doc(e.code(), e.what()).dump() << '\n';
        return e.internal() ? 1 : 2;
    } catch (const std::exception &e) {
        err << detail::error_doc(errc::internal_error, e.what()).dump() << '\n';
        return 1;
    }
}

} // namespace qrelnet::cli
