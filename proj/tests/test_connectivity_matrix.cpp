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

#include "qrelnet/connectivity_matrix.hpp"
#include "support/oracles.hpp"

using namespace qrelnet;

namespace {

std::vector<Rational> halves(std::initializer_list<int> twice) {
    std::vector<Rational> out;
    for (int v : twice) {
        out.emplace_back(v, 2);
    }
    return out;
}

ConnectivityMatrix in_order(std::initializer_list<std::initializer_list<int>> labels) {
    std::vector<Partition> order;
    for (auto l : labels) {
        order.push_back(Partition::from_labels(l));
    }
    return connectivity_matrix(std::move(order));
}

} // namespace

TEST(ConnectivityMatrix, ReferenceThreeVertexMatrices) {
    auto cm = connectivity_matrix(reference_order_three());
    const std::vector<std::uint8_t> alpha{0, 0, 0, 0, 1, //
                                          0, 0, 1, 1, 1, //
                                          0, 1, 0, 1, 1, //
                                          0, 1, 1, 0, 1, //
                                          1, 1, 1, 1, 1};
    EXPECT_EQ(cm.alpha, alpha);
    const auto beta = halves({1,  -1, -1, -1, 2,  //
                              -1, -1, 1,  1,  0,  //
                              -1, 1,  -1, 1,  0,  //
                              -1, 1,  1,  -1, 0,  //
                              2,  0,  0,  0,  0});
    EXPECT_EQ(cm.beta, beta);
}

TEST(ConnectivityMatrix, OneVertex) {
    auto cm = connectivity_matrix(1);
    EXPECT_EQ(cm.alpha, (std::vector<std::uint8_t>{1}));
    EXPECT_EQ(cm.beta, (std::vector<Rational>{1}));
    EXPECT_TRUE(beta_identities_check(cm));
}

TEST(ConnectivityMatrix, TwoVertices) {
    // singletons first, then the single block
    auto cm = in_order({{0, 1}, {0, 0}});
    EXPECT_EQ(cm.alpha, (std::vector<std::uint8_t>{0, 1, 1, 1}));
    EXPECT_EQ(cm.beta, (std::vector<Rational>{-1, 1, 1, 0}));
    EXPECT_TRUE(beta_identities_check(cm));
    // canonical order lists the single block first
    auto canon = connectivity_matrix(2);
    EXPECT_EQ(canon.alpha, (std::vector<std::uint8_t>{1, 1, 1, 0}));
    EXPECT_EQ(canon.beta, (std::vector<Rational>{0, 1, 1, -1}));
}

TEST(ConnectivityMatrix, RejectsIncompleteOrder) {
    std::vector<Partition> order{Partition::singletons(2)};
    EXPECT_THROW(connectivity_matrix(order), Error);
    EXPECT_THROW(connectivity_matrix(8), Error);
    EXPECT_THROW(connectivity_matrix(0), Error);
}

TEST(ConnectivityMatrix, InverseMatchesNaiveRationalElimination) {
    for (std::size_t m = 1; m <= 4; ++m) {
        auto cm = connectivity_matrix(m);
        EXPECT_EQ(cm.beta, oracle::naive_inverse(cm.alpha, cm.dim())) << m;
    }
}

TEST(ConnectivityMatrix, ExactInverseAndSymmetry) {
    for (std::size_t m = 1; m <= 5; ++m) {
        auto cm = connectivity_matrix(m);
        const std::size_t n = cm.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                ASSERT_EQ(cm.alpha_at(i, j), cm.alpha_at(j, i));
                ASSERT_EQ(cm.beta_at(i, j), cm.beta_at(j, i));
                Rational ab, ba;
                for (std::size_t k = 0; k < n; ++k) {
                    ab += Rational(cm.alpha_at(i, k)) * cm.beta_at(k, j);
                    ba += cm.beta_at(i, k) * Rational(cm.alpha_at(k, j));
                }
                ASSERT_EQ(ab, Rational(i == j));
                ASSERT_EQ(ba, Rational(i == j));
            }
        }
        EXPECT_TRUE(is_identity_product(cm));
    }
}

TEST(ConnectivityMatrix, BetaIdentities) {
    EXPECT_TRUE(beta_identities_check(connectivity_matrix(reference_order_three())));
    for (std::size_t m = 1; m <= 5; ++m) {
        EXPECT_TRUE(beta_identities_check(connectivity_matrix(m))) << m;
    }
    auto broken = connectivity_matrix(3);
    broken.beta[0] += Rational(1);
    EXPECT_FALSE(beta_identities_check(broken));
}

TEST(ConnectivityMatrix, SingularInputIsAnInternalError) {
    const std::vector<std::uint8_t> singular{1, 1, 1, 1};
    try {
        detail::invert_exact(singular, 2);
        FAIL() << "expected singular_matrix";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), "singular_matrix");
        EXPECT_TRUE(e.internal());
    }
}
