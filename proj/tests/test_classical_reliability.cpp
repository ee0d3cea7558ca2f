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

#include <random>

#include "qrelnet/classical_reliability.hpp"
#include "support/oracles.hpp"

using namespace qrelnet;

namespace {
Graph g1() { return Graph({"a", "b"}, {{"a", "b"}}); }
Graph g2() { return Graph({"a", "b"}, {{"a", "b"}, {"a", "b"}}); }
Graph k3() { return Graph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}}); }
} // namespace

TEST(ClassicalReliability, SmallGraphs) {
    EXPECT_DOUBLE_EQ(reliability_enumerate(g1(), std::vector<double>{0.25}), 0.25);
    EXPECT_DOUBLE_EQ(reliability_enumerate(g2(), std::vector<double>{0.5, 0.5}), 0.75);
    EXPECT_DOUBLE_EQ(reliability_enumerate(k3(), std::vector<double>{0.5, 0.5, 0.5}), 0.5);
    EXPECT_EQ(reliability_enumerate(g2(), std::vector<Rational>{Rational(1, 2), Rational(1, 2)}),
              Rational(3, 4));
    EXPECT_EQ(reliability_factorize(k3(), std::vector<Rational>(3, Rational(1, 2))),
              Rational(1, 2));
}

TEST(ClassicalReliability, AllOnesIsConnectivity) {
    Graph disconnected({"a", "b", "c"}, {{"a", "b"}});
    EXPECT_EQ(reliability_enumerate(k3(), std::vector<double>(3, 1.0)), 1.0);
    EXPECT_EQ(reliability_enumerate(disconnected, std::vector<double>{1.0}), 0.0);
    EXPECT_EQ(reliability_factorize(disconnected, std::vector<double>{1.0}), 0.0);
}

TEST(ClassicalReliability, FactorizationClosedForms) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    for (int i = 0; i < 20; ++i) {
        double a = u(rng), b = u(rng);
        EXPECT_NEAR(reliability_factorize(path, std::vector<double>{a, b}), a * b, 1e-15);
        EXPECT_NEAR(reliability_factorize(g2(), std::vector<double>{a, b}),
                    1.0 - (1.0 - a) * (1.0 - b), 1e-15);
    }
    Graph lone({"x"}, std::vector<Edge>{});
    EXPECT_EQ(reliability_factorize(lone, std::vector<double>{}), 1.0);
    EXPECT_EQ(reliability_enumerate(lone, std::vector<double>{}), 1.0);
    Graph loops({"x"}, {{"x", "x"}, {"x", "x"}});
    EXPECT_EQ(reliability_factorize(loops, std::vector<double>{0.1, 0.2}), 1.0);
}

TEST(ClassicalReliability, EnumerationEqualsFactorization) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nv = 1 + rng() % 6;
        Graph g = oracle::random_graph(rng, oracle::names("v", nv), rng() % 11);
        auto p = oracle::random_probabilities(rng, g.num_edges());
        double e = reliability_enumerate(g, p);
        EXPECT_NEAR(e, reliability_factorize(g, p), 1e-12);
        EXPECT_NEAR(e, oracle::brute_reliability(g, p), 1e-12);
        EXPECT_GE(e, 0.0);
        EXPECT_LE(e, 1.0 + 1e-12);
    }
}

TEST(ClassicalReliability, ExactModesAgree) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng, oracle::names("v", 2 + rng() % 4), 1 + rng() % 7);
        std::vector<Rational> p;
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            p.emplace_back(static_cast<std::int64_t>(rng() % 9), 8);
        }
        auto e = reliability_enumerate(g, p);
        EXPECT_EQ(e, reliability_factorize(g, p));
        EXPECT_EQ(e, oracle::brute_reliability(g, p));
    }
}

TEST(ClassicalReliability, MonotoneInEachEdge) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_graph(rng, oracle::names("v", 2 + rng() % 4), 1 + rng() % 8);
        auto p = oracle::random_probabilities(rng, g.num_edges());
        double base = reliability_enumerate(g, p);
        std::size_t e = rng() % g.num_edges();
        p[e] = std::min(1.0, p[e] + 0.1);
        EXPECT_GE(reliability_enumerate(g, p), base - 1e-15);
    }
}

TEST(ClassicalReliability, InputValidation) {
    try {
        reliability_enumerate(g2(), std::vector<double>{0.5});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "width_mismatch");
    }
    try {
        reliability_factorize(g1(), std::vector<double>{1.5});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "invalid_probability");
    }
    std::vector<std::pair<std::string, std::string>> many(25, {"a", "b"});
    Graph big({"a", "b"}, many);
    try {
        reliability_enumerate(big, std::vector<double>(25, 0.5));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "capacity_exceeded");
    }
}
