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
 * The connectivity matrix over the partition lattice of m shared vertices
 * and its exact inverse.
 *
 * alpha(g, g') is 1 when merge(g, g') is a single block and 0 otherwise.
 * The inverse beta is computed by fraction-free Gauss-Jordan elimination
 * over arbitrary-precision integers and stored as reduced 64-bit rationals.
 */

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qrelnet/error.hpp"
#include "qrelnet/partition.hpp"
#include "qrelnet/rational.hpp"

namespace qrelnet {

/// Largest shared-vertex count for the dense matrix (Bell(7) = 877).
inline constexpr std::size_t kMaxSharedVertices = 7;

struct ConnectivityMatrix {
    std::size_t m = 0;
    std::vector<Partition> order;
    std::vector<std::uint8_t> alpha; // row-major, dim x dim
    std::vector<Rational> beta;      // row-major, dim x dim

    [[nodiscard]] std::size_t dim() const noexcept { return order.size(); }
    [[nodiscard]] int alpha_at(std::size_t i, std::size_t j) const {
        return alpha[i * dim() + j];
    }
    [[nodiscard]] const Rational &beta_at(std::size_t i, std::size_t j) const {
        return beta[i * dim() + j];
    }
    [[nodiscard]] std::optional<std::size_t> index_of(const Partition &p) const {
        auto it = std::find(order.begin(), order.end(), p);
        if (it == order.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - order.begin());
    }
};

namespace detail {

/// Exact inverse of a square integer matrix. Throws `singular_matrix`
/// (internal) when no inverse exists.
inline std::vector<Rational> invert_exact(std::span<const std::uint8_t> a,
                                          std::size_t n) {
    const std::size_t w = 2 * n;
    std::vector<mpz_class> m(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i * w + j] = a[i * n + j];
        }
        m[i * w + n + i] = 1;
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class & { return m[i * w + j]; };

    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(at(pivot, k)) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw Error(errc::singular_matrix, "connectivity matrix is singular", true);
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < w; ++j) {
                std::swap(at(pivot, j), at(k, j));
            }
        }
        const mpz_class pk = at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) {
                continue;
            }
            const mpz_class f = at(i, k);
            for (std::size_t j = k + 1; j < w; ++j) {
                // (pk * a_ij - f * a_kj) / prev, division is exact
                mpz_mul(t.get_mpz_t(), pk.get_mpz_t(), at(i, j).get_mpz_t());
                mpz_submul(t.get_mpz_t(), f.get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            if (i < k) {
                at(i, i) = pk;
            }
            at(i, k) = 0;
        }
        prev = pk;
    }

    // Left block is now prev * I; the right block is prev * inverse.
    std::vector<Rational> inv(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class q(at(i, n + j), prev);
            q.canonicalize();
            const mpz_class &num = q.get_num();
            const mpz_class &den = q.get_den();
            if (!num.fits_slong_p() || !den.fits_slong_p()) {
                throw Error(errc::rational_overflow,
                            "inverse entry does not fit in 64 bits", true);
            }
            inv[i * n + j] = Rational(num.get_si(), den.get_si());
        }
    }
    return inv;
}

} // namespace detail

/// Connectivity matrix with rows and columns in the given partition order,
/// which must list every partition of {0, ..., m-1} exactly once.
inline ConnectivityMatrix connectivity_matrix(std::vector<Partition> order) {
    require(!order.empty(), errc::partition_mismatch, "empty partition order");
    const std::size_t m = order.front().size();
    require(m >= 1 && m <= kMaxSharedVertices, errc::capacity_exceeded,
            "shared vertex count must be in [1, 7], got " + std::to_string(m));
    auto canonical = enumerate_partitions(m);
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        require(sorted == canonical, errc::partition_mismatch,
                "partition order is not a permutation of all partitions");
    }
    ConnectivityMatrix cm;
    cm.m = m;
    cm.order = std::move(order);
    const std::size_t n = cm.dim();
    cm.alpha.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto v = static_cast<std::uint8_t>(is_single_block(merge(cm.order[i], cm.order[j])));
            cm.alpha[i * n + j] = v;
            cm.alpha[j * n + i] = v;
        }
    }
    cm.beta = detail::invert_exact(cm.alpha, n);
    return cm;
}

/// Canonical (restricted-growth lexicographic) order.
inline ConnectivityMatrix connectivity_matrix(std::size_t m) {
    require(m >= 1 && m <= kMaxSharedVertices, errc::capacity_exceeded,
            "shared vertex count must be in [1, 7], got " + std::to_string(m));
    return connectivity_matrix(enumerate_partitions(m));
}

/// The published listing for three shared vertices:
/// {1}{2}{3} < {1}{2,3} < {1,3}{2} < {1,2}{3} < {1,2,3}.
inline std::vector<Partition> reference_order_three() {
    return {
        Partition::from_labels({0, 1, 2}),
        Partition::from_labels({0, 1, 1}),
        Partition::from_labels({0, 1, 0}),
        Partition::from_labels({0, 0, 1}),
        Partition::from_labels({0, 0, 0}),
    };
}

inline bool is_identity_product(const ConnectivityMatrix &cm) {
    const std::size_t n = cm.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t k = 0; k < n; ++k) {
                if (cm.alpha_at(i, k)) {
                    s += cm.beta_at(k, j);
                }
            }
            if (s != Rational(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

/// The beta row of the single-block partition is the indicator of the
/// all-singletons partition, and row sums are the indicator of the single
/// block.
inline bool beta_identities_check(const ConnectivityMatrix &cm) {
    const std::size_t n = cm.dim();
    auto single = cm.index_of(Partition::single_block(cm.m));
    auto split = cm.index_of(Partition::singletons(cm.m));
    if (!single || !split) {
        return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (cm.beta_at(*single, j) != Rational(j == *split ? 1 : 0)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum;
        for (std::size_t j = 0; j < n; ++j) {
            sum += cm.beta_at(i, j);
        }
        if (sum != Rational(i == *single ? 1 : 0)) {
            return false;
        }
    }
    return true;
}

} // namespace qrelnet
