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
 * The quantum reliability operator and its splitting over shared vertices.
 *
 * The operator of a graph G is the orthogonal projector onto the span of the
 * connected classical states, diagonal in the classical basis. Everything
 * here (projectors onto component-partition fibers, splitting sums over the
 * partition lattice) therefore stays in the diagonal algebra and is stored as
 * one exact rational per classical state.
 *
 * For a split G = K ∪ H over shared vertices U, states of G are indexed
 * K-major: index = i_K * 2^{|E_H|} + i_H, matching `glue` and `tensor`.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "qrelnet/classical_reliability.hpp"
#include "qrelnet/connectivity_matrix.hpp"
#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"
#include "qrelnet/partition.hpp"
#include "qrelnet/rational.hpp"
#include "qrelnet/state_vector.hpp"

namespace qrelnet {

class DiagonalOperator {
  public:
    DiagonalOperator() : diag_(1) {}

    /// All-zero operator on 2^num_edges states.
    explicit DiagonalOperator(std::size_t num_edges) : num_edges_(num_edges) {
        check_capacity(num_edges);
        diag_.resize(std::size_t{1} << num_edges);
    }

    DiagonalOperator(std::size_t num_edges, std::vector<Rational> diag)
        : num_edges_(num_edges), diag_(std::move(diag)) {
        check_capacity(num_edges);
        require(diag_.size() == (std::size_t{1} << num_edges), errc::width_mismatch,
                "diagonal length does not match the edge count");
    }

    [[nodiscard]] std::size_t num_edges() const noexcept { return num_edges_; }
    [[nodiscard]] std::size_t size() const noexcept { return diag_.size(); }
    [[nodiscard]] std::span<const Rational> diagonal() const noexcept { return diag_; }
    [[nodiscard]] const Rational &operator[](std::size_t i) const { return diag_[i]; }
    Rational &operator[](std::size_t i) { return diag_[i]; }

    /// Every diagonal entry is 0 or 1, i.e. the operator is an orthogonal
    /// projector.
    [[nodiscard]] bool is_projector() const {
        for (const auto &d : diag_) {
            if (d != Rational(0) && d != Rational(1)) {
                return false;
            }
        }
        return true;
    }

    DiagonalOperator &operator+=(const DiagonalOperator &o) {
        require(o.num_edges_ == num_edges_, errc::width_mismatch,
                "operator widths differ");
        for (std::size_t i = 0; i < diag_.size(); ++i) {
            diag_[i] += o.diag_[i];
        }
        return *this;
    }

    friend DiagonalOperator operator+(DiagonalOperator a, const DiagonalOperator &b) {
        a += b;
        return a;
    }

    friend DiagonalOperator operator*(const Rational &c, DiagonalOperator a) {
        for (auto &d : a.diag_) {
            d *= c;
        }
        return a;
    }

    friend bool operator==(const DiagonalOperator &, const DiagonalOperator &) = default;

  private:
    std::size_t num_edges_ = 0;
    std::vector<Rational> diag_;
};

/// a (x) b with a in the high bits.
inline DiagonalOperator kron(const DiagonalOperator &a, const DiagonalOperator &b) {
    DiagonalOperator out(a.num_edges() + b.num_edges());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

/// Projector onto the span of the connected states of g.
inline DiagonalOperator qr_operator(const Graph &g) {
    check_capacity(g.num_edges());
    DiagonalOperator op(g.num_edges());
    ComponentScanner scanner(g);
    for (std::uint64_t s = 0; s < op.size(); ++s) {
        if (scanner.connected(EdgeState{s})) {
            op[s] = 1;
        }
    }
    return op;
}

/// <psi| op |psi>
inline double qr_value(const DiagonalOperator &op, const StateVector &psi) {
    require(op.num_edges() == psi.num_edges(), errc::width_mismatch,
            "operator acts on " + std::to_string(op.num_edges()) +
                " edges, state has " + std::to_string(psi.num_edges()));
    double total = 0.0;
    for (std::size_t s = 0; s < op.size(); ++s) {
        if (!op[s].is_zero()) {
            total += op[s].to_double() * std::norm(psi[s]);
        }
    }
    return total;
}

inline double qr_value(const Graph &g, const StateVector &psi) {
    return qr_value(qr_operator(g), psi);
}

/// Projector onto the island-free states of h whose component partition of
/// `u` equals gamma.
inline DiagonalOperator o_gamma_operator(const Graph &h, std::span<const std::size_t> u,
                                         const Partition &gamma) {
    require(gamma.size() == u.size(), errc::partition_mismatch,
            "partition ground set does not match the vertex subset");
    DiagonalOperator op(h.num_edges());
    IslandScanner scanner(h, u);
    for (std::uint64_t s = 0; s < op.size(); ++s) {
        auto part = scanner.partition(EdgeState{s});
        if (part && *part == gamma) {
            op[s] = 1;
        }
    }
    return op;
}

inline DiagonalOperator o_gamma_operator(const Graph &h, std::span<const std::string> u,
                                         const Partition &gamma) {
    auto idx = resolve_subset(h, u);
    return o_gamma_operator(h, std::span<const std::size_t>(idx), gamma);
}

/// All fiber projectors at once, indexed like cm.order.
inline std::vector<DiagonalOperator> o_gamma_family(const Graph &h,
                                                    std::span<const std::string> u,
                                                    const ConnectivityMatrix &cm) {
    auto idx = resolve_subset(h, u);
    require(idx.size() == cm.m, errc::partition_mismatch,
            "connectivity matrix size does not match the shared set");
    std::vector<DiagonalOperator> ops(cm.dim(), DiagonalOperator(h.num_edges()));
    IslandScanner scanner(h, idx);
    for (std::uint64_t s = 0; s < ops.front().size(); ++s) {
        if (auto part = scanner.partition(EdgeState{s})) {
            ops[*cm.index_of(*part)][s] = 1;
        }
    }
    return ops;
}

/// Checks that k and h meet exactly in `u`, that u is nonempty and small
/// enough, and that the glued graph fits the edge capacity.
inline void check_split(const Graph &k, const Graph &h, std::span<const std::string> u) {
    require(!u.empty(), errc::empty_shared_set, "shared vertex set is empty");
    require(u.size() <= kMaxSharedVertices, errc::capacity_exceeded,
            "at most 7 shared vertices are supported");
    resolve_subset(k, u);
    resolve_subset(h, u);
    std::unordered_set<std::string> shared(u.begin(), u.end());
    for (const auto &name : k.vertices()) {
        require(!h.contains(name) || shared.count(name) != 0, errc::overlap_violation,
                "vertex '" + name + "' is in both graphs but not shared");
    }
    check_capacity(k.num_edges() + h.num_edges());
}

/// Graph / gamma for every gamma in cm.order.
inline std::vector<Graph> quotient_family(const Graph &g, std::span<const std::string> u,
                                          const ConnectivityMatrix &cm) {
    auto idx = resolve_subset(g, u);
    std::vector<Graph> out;
    out.reserve(cm.dim());
    for (const auto &gamma : cm.order) {
        out.push_back(quotient(g, std::span<const std::size_t>(idx), gamma));
    }
    return out;
}

/// sum over gamma, gamma' of beta(gamma, gamma') QR(K/gamma) (x) QR(H/gamma').
inline DiagonalOperator split_operator(const Graph &k, const Graph &h,
                                       std::span<const std::string> u,
                                       const ConnectivityMatrix &cm) {
    check_split(k, h, u);
    require(cm.m == u.size(), errc::partition_mismatch,
            "connectivity matrix size does not match the shared set");
    const std::size_t n = cm.dim();
    std::vector<DiagonalOperator> qk, qh;
    for (const auto &q : quotient_family(k, u, cm)) {
        qk.push_back(qr_operator(q));
    }
    for (const auto &q : quotient_family(h, u, cm)) {
        qh.push_back(qr_operator(q));
    }
    const std::size_t size_h = std::size_t{1} << h.num_edges();
    DiagonalOperator out(k.num_edges() + h.num_edges());
    std::vector<Rational> weight(n);
    for (std::size_t ik = 0; ik < qk.front().size(); ++ik) {
        // weight[g'] = sum_g beta(g, g') QR(K/g)[ik]
        bool any = false;
        for (std::size_t gp = 0; gp < n; ++gp) {
            Rational w;
            for (std::size_t g = 0; g < n; ++g) {
                if (!qk[g][ik].is_zero()) {
                    w += cm.beta_at(g, gp) * qk[g][ik];
                }
            }
            weight[gp] = w;
            any = any || !w.is_zero();
        }
        if (!any) {
            continue;
        }
        for (std::size_t ih = 0; ih < size_h; ++ih) {
            Rational d;
            for (std::size_t gp = 0; gp < n; ++gp) {
                if (!qh[gp][ih].is_zero()) {
                    d += weight[gp] * qh[gp][ih];
                }
            }
            out[ik * size_h + ih] = d;
        }
    }
    return out;
}

inline DiagonalOperator split_operator(const Graph &k, const Graph &h,
                                       std::span<const std::string> u) {
    check_split(k, h, u);
    return split_operator(k, h, u, connectivity_matrix(u.size()));
}

/// Exact comparison of the assembled splitting against QR of the glued graph.
inline bool verify_split(const Graph &k, const Graph &h, std::span<const std::string> u) {
    DiagonalOperator split = split_operator(k, h, u);
    return split == qr_operator(glue(k, h, u));
}

/// Splitting evaluated on a product psi_K (x) psi_H.
inline double qr_split_value(const Graph &k, const Graph &h, std::span<const std::string> u,
                             const StateVector &psi_k, const StateVector &psi_h) {
    check_split(k, h, u);
    require(psi_k.num_edges() == k.num_edges() && psi_h.num_edges() == h.num_edges(),
            errc::width_mismatch, "state widths do not match the split graphs");
    const auto cm = connectivity_matrix(u.size());
    std::vector<double> vk, vh;
    for (const auto &q : quotient_family(k, u, cm)) {
        vk.push_back(qr_value(qr_operator(q), psi_k));
    }
    for (const auto &q : quotient_family(h, u, cm)) {
        vh.push_back(qr_value(qr_operator(q), psi_h));
    }
    double total = 0.0;
    for (std::size_t g = 0; g < cm.dim(); ++g) {
        for (std::size_t gp = 0; gp < cm.dim(); ++gp) {
            const auto &b = cm.beta_at(g, gp);
            if (!b.is_zero()) {
                total += b.to_double() * vk[g] * vh[gp];
            }
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Hybrid networks
// ---------------------------------------------------------------------------

enum class EdgeKind { quantum, classical };

/// K = quantum edges with their endpoints, H = classical edges with their
/// endpoints, shared = V(K) ∩ V(H).
struct HybridDecomposition {
    Graph k;
    Graph h;
    std::vector<std::string> shared;
    std::vector<std::size_t> k_edges; // original edge index of each K edge
    std::vector<std::size_t> h_edges; // original edge index of each H edge
};

/// Vertices incident to no edge are placed in H.
inline HybridDecomposition canonical_decomposition(const Graph &g,
                                                   std::span<const EdgeKind> kinds) {
    require(kinds.size() == g.num_edges(), errc::width_mismatch,
            "one edge kind per edge is required");
    HybridDecomposition d;
    std::vector<bool> in_k(g.num_vertices(), false), in_h(g.num_vertices(), false);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto &mark = kinds[i] == EdgeKind::quantum ? in_k : in_h;
        mark[g.edge(i).u] = true;
        mark[g.edge(i).v] = true;
        (kinds[i] == EdgeKind::quantum ? d.k_edges : d.h_edges).push_back(i);
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (!in_k[v] && !in_h[v]) {
            in_h[v] = true;
        }
    }
    auto build = [&](const std::vector<bool> &mark, const std::vector<std::size_t> &edges) {
        std::vector<std::string> names;
        for (std::size_t v = 0; v < g.num_vertices(); ++v) {
            if (mark[v]) {
                names.push_back(g.vertex(v));
            }
        }
        std::vector<std::pair<std::string, std::string>> es;
        for (auto i : edges) {
            es.emplace_back(g.vertex(g.edge(i).u), g.vertex(g.edge(i).v));
        }
        return Graph(std::move(names), es);
    };
    d.k = build(in_k, d.k_edges);
    d.h = build(in_h, d.h_edges);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (in_k[v] && in_h[v]) {
            d.shared.push_back(g.vertex(v));
        }
    }
    return d;
}

/// Quantum state on K's edges, operating probabilities on H's edges.
struct HybridState {
    StateVector quantum;
    std::vector<double> classical;
};

inline void check_hybrid(const HybridDecomposition &d, const HybridState &state) {
    check_split(d.k, d.h, d.shared);
    require(state.quantum.num_edges() == d.k.num_edges(), errc::width_mismatch,
            "quantum state width does not match the quantum subgraph");
    check_probabilities(d.h, std::span<const double>(state.classical));
}

/// sum over gamma, gamma' of beta QR_{K/gamma}(zeta_K) R_{H/gamma'}(p).
inline double hybrid_qr(const HybridDecomposition &d, const HybridState &state) {
    check_hybrid(d, state);
    const auto cm = connectivity_matrix(d.shared.size());
    std::vector<double> vk, rh;
    for (const auto &q : quotient_family(d.k, d.shared, cm)) {
        vk.push_back(qr_value(qr_operator(q), state.quantum));
    }
    for (const auto &q : quotient_family(d.h, d.shared, cm)) {
        rh.push_back(reliability_enumerate(q, state.classical));
    }
    double total = 0.0;
    for (std::size_t g = 0; g < cm.dim(); ++g) {
        for (std::size_t gp = 0; gp < cm.dim(); ++gp) {
            const auto &b = cm.beta_at(g, gp);
            if (!b.is_zero()) {
                total += b.to_double() * vk[g] * rh[gp];
            }
        }
    }
    return total;
}

/// QR of the glued graph on zeta_K (x) (product of real qubits for H).
inline double hybrid_qr_direct(const HybridDecomposition &d, const HybridState &state) {
    check_hybrid(d, state);
    StateVector classical = d.h.num_edges() == 0
                                ? StateVector()
                                : product_state(std::span<const double>(state.classical));
    return qr_value(qr_operator(glue(d.k, d.h, d.shared)), tensor(state.quantum, classical));
}

struct SublayerCorrection {
    Partition gamma;       // partition of the K side
    Partition gamma_prime; // partition of the H side
    Rational beta;
    double term = 0.0; // beta * QR_{K/gamma}(zeta_K) * R_{H/gamma'}(p)
};

struct SublayerResult {
    double total = 0.0;
    double classical = 0.0;
    std::vector<SublayerCorrection> corrections;
};

/// Classical reliability of H plus the quantum corrections of a sublayer K
/// whose vertices all lie in H. Corrections run over gamma other than the
/// single block and every gamma' with nonzero beta.
inline SublayerResult sublayer_qr(const HybridDecomposition &d, const HybridState &state) {
    check_hybrid(d, state);
    for (const auto &v : d.k.vertices()) {
        require(d.h.contains(v), errc::sublayer_violation,
                "quantum vertex '" + v + "' is not a vertex of the classical layer");
    }
    const auto cm = connectivity_matrix(d.shared.size());
    const std::size_t single = *cm.index_of(Partition::single_block(cm.m));
    std::vector<double> vk, rh;
    for (const auto &q : quotient_family(d.k, d.shared, cm)) {
        vk.push_back(qr_value(qr_operator(q), state.quantum));
    }
    for (const auto &q : quotient_family(d.h, d.shared, cm)) {
        rh.push_back(reliability_enumerate(q, state.classical));
    }
    SublayerResult out;
    out.classical = reliability_enumerate(d.h, state.classical);
    double corrections = 0.0;
    for (std::size_t g = 0; g < cm.dim(); ++g) {
        if (g == single) {
            continue;
        }
        for (std::size_t gp = 0; gp < cm.dim(); ++gp) {
            const auto &b = cm.beta_at(g, gp);
            if (b.is_zero()) {
                continue;
            }
            SublayerCorrection c{cm.order[g], cm.order[gp], b, b.to_double() * vk[g] * rh[gp]};
            corrections += c.term;
            out.corrections.push_back(std::move(c));
        }
    }
    out.total = out.classical + corrections;
    return out;
}

// ---------------------------------------------------------------------------
// Born-rule sampling
// ---------------------------------------------------------------------------

struct SampleEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Draws n classical states with probability |<eps|psi>|^2 by inverse CDF and
/// reports the connected fraction with its binomial standard error.
inline SampleEstimate born_sample(const Graph &g, const StateVector &psi, std::size_t n,
                                  std::uint64_t seed) {
    require(n >= 1, errc::usage_error, "sample count must be at least 1");
    require(psi.num_edges() == g.num_edges(), errc::width_mismatch,
            "state width does not match the graph");
    std::vector<double> cdf(psi.size());
    double acc = 0.0;
    for (std::size_t s = 0; s < psi.size(); ++s) {
        acc += std::norm(psi[s]);
        cdf[s] = acc;
    }
    std::vector<std::uint8_t> connected(psi.size());
    ComponentScanner scanner(g);
    for (std::size_t s = 0; s < psi.size(); ++s) {
        connected[s] = scanner.connected(EdgeState{s});
    }
    std::mt19937_64 rng(seed);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // 53 random bits -> uniform in [0, 1), scaled to the accumulated mass
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        hits += connected[static_cast<std::size_t>(it - cdf.begin())];
    }
    SampleEstimate out;
    out.samples = n;
    out.estimate = static_cast<double>(hits) / static_cast<double>(n);
    out.standard_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n));
    return out;
}

} // namespace qrelnet
