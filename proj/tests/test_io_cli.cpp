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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qrelnet/cli.hpp"
#include "qrelnet/io.hpp"

using namespace qrelnet;
using io::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(QRELNET_DATA_DIR) + "/" + name; }

std::string scratch(const std::string &name, const std::string &text) {
    auto path = std::filesystem::temp_directory_path() / ("qrelnet_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::string error_code_of(const CliResult &r) {
    return json::parse(r.err).at("error").at("code").get<std::string>();
}

} // namespace

TEST(Json, GraphRoundTrip) {
    Graph g({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
    EXPECT_EQ(io::graph_from_json(io::graph_to_json(g)), g);
    auto tagged = io::tagged_graph_from_json(json::parse(
        R"({"vertices":["a","b"],"edges":[["a","b"],{"ends":["a","b"],"kind":"quantum"}]})"));
    EXPECT_EQ(tagged.kinds, (std::vector<EdgeKind>{EdgeKind::classical, EdgeKind::quantum}));
}

TEST(Json, SchemaErrors) {
    auto code = [](const std::string &text) {
        try {
            io::graph_from_json(io::parse_json_text(text));
        } catch (const Error &e) {
            return e.code();
        }
        return std::string();
    };
    EXPECT_EQ(code("{"), "malformed_json");
    EXPECT_EQ(code(R"({"edges":[]})"), "schema_error");
    EXPECT_EQ(code(R"({"vertices":["a"],"edges":[["a","z"]]})"), "unknown_vertex");
    EXPECT_EQ(code(R"({"vertices":["a","a"],"edges":[]})"), "duplicate_vertex");
    EXPECT_EQ(code(R"({"vertices":["a"],"edges":[["a"]]})"), "schema_error");
}

TEST(Json, States) {
    auto psi = io::state_from_json(
        json::parse(R"({"type":"product","qubits":[{"p":1},{"p":0.5,"phase":[0,1]}]})"), 2);
    EXPECT_NEAR(std::norm(psi[0b01]), 0.5, 1e-15);
    EXPECT_NEAR(std::norm(psi[0b11]), 0.5, 1e-15);
    auto two = io::state_from_json(json::parse(R"({"type":"two_term","zeta":"10","chi":"01","p":0.3})"), 2);
    EXPECT_NEAR(std::norm(two[0b01]), 0.3, 1e-15); // leftmost character is edge 0
    auto back = io::state_from_json(io::state_to_json(two), 2);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(back[i], two[i]);
    }
    try {
        io::state_from_json(json::parse(R"({"type":"amplitudes","values":[[1,0],[1,0]]})"), 1);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "not_normalized");
    }
}

TEST(Json, MatrixRoundTrip) {
    std::vector<std::string> ground{"1", "2", "3", "4"};
    auto cm = connectivity_matrix(4);
    auto back = io::matrix_from_json(io::matrix_to_json(cm, ground));
    EXPECT_EQ(back.order, cm.order);
    EXPECT_EQ(back.alpha, cm.alpha);
    EXPECT_EQ(back.beta, cm.beta);
}

TEST(Cli, MatrixReferenceOrder) {
    auto r = run_cli({"matrix", "--m", "3", "--paper-order"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["schema"], "qrelnet/1");
    EXPECT_EQ(doc["beta"][0], json::parse(R"(["1/2","-1/2","-1/2","-1/2","1"])"));
    EXPECT_EQ(doc["beta"][4], json::parse(R"(["1","0","0","0","0"])"));
    EXPECT_EQ(doc["alpha"][0], json::parse(R"(["0","0","0","0","1"])"));
    EXPECT_EQ(doc["order"][0], json::parse(R"([["1"],["2"],["3"]])"));
    auto cm = io::matrix_from_json(doc);
    EXPECT_TRUE(is_identity_product(cm));
    EXPECT_EQ(run_cli({"matrix", "--m", "4", "--paper-order"}).code, 2);
}

TEST(Cli, GoldenOutputs) {
    auto rel = run_cli({"reliability", "--graph", data("g1.json"), "--p", "0.25"});
    EXPECT_EQ(rel.out, "{\"exact\":false,\"method\":\"enum\",\"schema\":\"qrelnet/1\",\"value\":0.25}\n");
    auto qr = run_cli({"qr", "--graph", data("g2.json"), "--state", data("psi2.json")});
    EXPECT_EQ(qr.out, "{\"schema\":\"qrelnet/1\",\"value\":1.0}\n");
    auto exact = run_cli({"reliability", "--graph", data("k3.json"), "--p", "1/2,1/2,1/2",
                          "--exact", "--method", "factor"});
    EXPECT_EQ(json::parse(exact.out)["value"], "1/2");
    auto sv = run_cli({"split-verify", "--k", data("k3_k.json"), "--h", data("k3_h.json"),
                       "--shared", "1,2"});
    ASSERT_EQ(sv.code, 0) << sv.err;
    EXPECT_EQ(json::parse(sv.out)["equal"], true);
}

TEST(Cli, HybridAndSublayer) {
    std::vector<std::string> files{"--graph", data("sublayer_graph.json"), "--state",
                                   data("sublayer_state.json")};
    auto args = files;
    args.insert(args.begin(), "hybrid");
    auto hy = json::parse(run_cli(args).out);
    args[0] = "sublayer";
    auto sl = json::parse(run_cli(args).out);
    EXPECT_NEAR(hy["value"].get<double>(), 0.98, 1e-12);
    EXPECT_NEAR(sl["total"].get<double>(), hy["value"].get<double>(), 1e-12);
    EXPECT_NEAR(sl["classical"].get<double>(), 0.72, 1e-12);
    EXPECT_EQ(sl["corrections"].size(), 2u);
}

TEST(Cli, OutputIsDeterministic) {
    std::vector<std::string> sample{"sample", "--graph", data("g2.json"), "--state",
                                    data("psi1.json"), "-n", "20000", "--seed", "9"};
    EXPECT_EQ(run_cli(sample).out, run_cli(sample).out);
    std::vector<std::string> matrix{"matrix", "--m", "4"};
    EXPECT_EQ(run_cli(matrix).out, run_cli(matrix).out);
    auto doc = json::parse(run_cli(sample).out);
    EXPECT_EQ(doc["samples"], 20000);
    EXPECT_LE(std::abs(doc["estimate"].get<double>() - 0.3), 3 * doc["stderr"].get<double>());
}

TEST(Cli, ErrorsAreStructured) {
    auto usage = run_cli({"qr", "--graph"});
    EXPECT_EQ(usage.code, 2);
    EXPECT_EQ(error_code_of(usage), "usage_error");

    auto missing = run_cli({"qr", "--graph", "/nonexistent.json", "--state", data("psi1.json")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_EQ(error_code_of(missing), "io_error");

    auto bad = scratch("bad.json", "{not json");
    auto malformed = run_cli({"qr", "--graph", bad, "--state", data("psi1.json")});
    EXPECT_EQ(malformed.code, 2);
    EXPECT_EQ(error_code_of(malformed), "malformed_json");

    auto width = run_cli({"reliability", "--graph", data("g2.json"), "--p", "0.5"});
    EXPECT_EQ(error_code_of(width), "width_mismatch");

    auto prob = run_cli({"reliability", "--graph", data("g1.json"), "--p", "1.5"});
    EXPECT_EQ(error_code_of(prob), "invalid_probability");

    auto overlap = run_cli({"split-verify", "--k", data("k3.json"), "--h", data("k3_h.json"),
                            "--shared", "1,2"});
    EXPECT_EQ(error_code_of(overlap), "overlap_violation");

    auto empty = run_cli({"split-verify", "--k", data("k3_k.json"), "--h", data("k3_h.json"),
                          "--shared", ""});
    EXPECT_EQ(error_code_of(empty), "empty_shared_set");
    EXPECT_TRUE(run_cli({"--help"}).out.find("reliability") != std::string::npos);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, EdgeCapCanBeLowered) {
    ::setenv("QRELNET_MAX_EDGES", "2", 1);
    auto ok = run_cli({"reliability", "--graph", data("g2.json"), "--p", "0.5,0.5"});
    auto capped = run_cli({"reliability", "--graph", data("k3.json"), "--p", "0.5,0.5,0.5"});
    ::setenv("QRELNET_MAX_EDGES", "100", 1);
    auto raised = run_cli({"reliability", "--graph", data("k3.json"), "--p", "0.5,0.5,0.5"});
    ::unsetenv("QRELNET_MAX_EDGES");
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(capped.code, 2);
    EXPECT_EQ(error_code_of(capped), "capacity_exceeded");
    EXPECT_EQ(raised.code, 0);
    EXPECT_EQ(cli::edge_cap(), kMaxEdges);
}
