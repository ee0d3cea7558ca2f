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
 * Unit state vectors over the classical states of a graph.
 *
 * Amplitude index = EdgeState bitmask, so edge i is bit i. In a tensor
 * product a (x) b the first factor occupies the high bits:
 * index = i_a * 2^{n_b} + i_b. Global phase is stored as given; every
 * consumer in this library is invariant under it.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"

namespace qrelnet {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-10;

class StateVector {
  public:
    /// The 0-edge unit scalar state.
    StateVector() : amplitudes_{Complex(1.0, 0.0)} {}

    /// Rejects vectors whose length is not a power of two or whose norm is
    /// off by more than 1e-10; nothing is renormalized.
    explicit StateVector(std::vector<Complex> amplitudes)
        : amplitudes_(std::move(amplitudes)) {
        const std::size_t n = amplitudes_.size();
        require(n != 0 && (n & (n - 1)) == 0, errc::width_mismatch,
                "amplitude count must be a power of two");
        while ((std::size_t{1} << num_edges_) < n) {
            ++num_edges_;
        }
        check_capacity(num_edges_);
        double norm2 = 0.0;
        for (const auto &a : amplitudes_) {
            norm2 += std::norm(a);
        }
        require(std::abs(norm2 - 1.0) <= kNormTolerance, errc::not_normalized,
                "state vector norm^2 is " + std::to_string(norm2));
    }

    [[nodiscard]] std::size_t num_edges() const noexcept { return num_edges_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |<eps|psi>|^2
    [[nodiscard]] double probability(EdgeState eps) const {
        return std::norm(amplitudes_.at(eps.bits));
    }

  private:
    std::size_t num_edges_ = 0;
    std::vector<Complex> amplitudes_;
};

/// p^{1/2}|1> + q^{1/2} z |0>.
struct QubitSpec {
    double p = 1.0;
    Complex phase{1.0, 0.0};
};

inline void check_qubit(const QubitSpec &spec) {
    require(spec.p >= 0.0 && spec.p <= 1.0, errc::invalid_probability,
            "qubit probability outside [0, 1]");
    require(std::abs(std::abs(spec.phase) - 1.0) <= kNormTolerance, errc::invalid_phase,
            "qubit phase is not a unit complex number");
}

inline StateVector qubit(const QubitSpec &spec) {
    check_qubit(spec);
    return StateVector({std::sqrt(1.0 - spec.p) * spec.phase, Complex(std::sqrt(spec.p), 0.0)});
}

/// Tensor product of one qubit per edge; specs[i] describes edge i.
inline StateVector product_state(std::span<const QubitSpec> specs) {
    require(!specs.empty(), errc::width_mismatch, "product state needs at least one qubit");
    check_capacity(specs.size());
    std::vector<Complex> one(specs.size()), zero(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        check_qubit(specs[i]);
        one[i] = Complex(std::sqrt(specs[i].p), 0.0);
        zero[i] = std::sqrt(1.0 - specs[i].p) * specs[i].phase;
    }
    // Built by doubling: after step i the vector covers edges 0..i.
    std::vector<Complex> amps{Complex(1.0, 0.0)};
    for (std::size_t i = 0; i < specs.size(); ++i) {
        std::vector<Complex> next(amps.size() * 2);
        for (std::size_t s = 0; s < amps.size(); ++s) {
            next[s] = amps[s] * zero[i];
            next[s + amps.size()] = amps[s] * one[i];
        }
        amps = std::move(next);
    }
    return StateVector(std::move(amps));
}

inline StateVector product_state(std::span<const double> p) {
    std::vector<QubitSpec> specs;
    specs.reserve(p.size());
    for (double pe : p) {
        specs.push_back({pe, Complex(1.0, 0.0)});
    }
    return product_state(std::span<const QubitSpec>(specs));
}

/// p^{1/2}|zeta> + q^{1/2} z |chi> over `num_edges` edges.
inline StateVector two_term_state(std::size_t num_edges, EdgeState zeta, EdgeState chi,
                                  double p, Complex z) {
    check_capacity(num_edges);
    check_qubit({p, z});
    require(zeta != chi, errc::identical_basis_states,
            "two-term state needs distinct basis states");
    const std::uint64_t states = std::uint64_t{1} << num_edges;
    require(zeta.bits < states && chi.bits < states, errc::width_mismatch,
            "basis state wider than the edge count");
    std::vector<Complex> amps(states);
    amps[zeta.bits] = Complex(std::sqrt(p), 0.0);
    amps[chi.bits] = std::sqrt(1.0 - p) * z;
    return StateVector(std::move(amps));
}

inline StateVector two_term_state(const Graph &g, EdgeState zeta, EdgeState chi, double p,
                                  Complex z) {
    return two_term_state(g.num_edges(), zeta, chi, p, z);
}

/// a (x) b with a in the high bits.
inline StateVector tensor(const StateVector &a, const StateVector &b) {
    check_capacity(a.num_edges() + b.num_edges());
    std::vector<Complex> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(amps));
}

/// Multiplies every amplitude by the unit complex `mu`.
inline StateVector with_global_phase(const StateVector &psi, Complex mu) {
    require(std::abs(std::abs(mu) - 1.0) <= kNormTolerance, errc::invalid_phase,
            "global phase is not a unit complex number");
    std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    for (auto &a : amps) {
        a *= mu;
    }
    return StateVector(std::move(amps));
}

/// Normalized vector of independent standard complex Gaussians.
inline StateVector random_state(std::size_t num_edges, std::uint64_t seed) {
    check_capacity(num_edges);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << num_edges);
    double norm2 = 0.0;
    for (auto &a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Complex(re, im);
        norm2 += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector(std::move(amps));
}

} // namespace qrelnet
