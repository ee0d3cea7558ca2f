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
 * Error type shared by every qrelnet module. Each error carries a stable
 * machine-readable code string; the CLI maps codes to exit status.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrelnet {

/// Hard upper bound on the number of edges of any graph handled densely.
inline constexpr std::size_t kMaxEdges = 24;

namespace errc {
inline constexpr const char *index_out_of_range = "index_out_of_range";
inline constexpr const char *unknown_vertex = "unknown_vertex";
inline constexpr const char *duplicate_vertex = "duplicate_vertex";
inline constexpr const char *capacity_exceeded = "capacity_exceeded";
inline constexpr const char *width_mismatch = "width_mismatch";
inline constexpr const char *partition_mismatch = "partition_mismatch";
inline constexpr const char *invalid_probability = "invalid_probability";
inline constexpr const char *invalid_phase = "invalid_phase";
inline constexpr const char *not_normalized = "not_normalized";
inline constexpr const char *identical_basis_states = "identical_basis_states";
inline constexpr const char *overlap_violation = "overlap_violation";
inline constexpr const char *sublayer_violation = "sublayer_violation";
inline constexpr const char *empty_shared_set = "empty_shared_set";
inline constexpr const char *rational_overflow = "rational_overflow";
inline constexpr const char *invalid_rational = "invalid_rational";
inline constexpr const char *division_by_zero = "division_by_zero";
inline constexpr const char *malformed_json = "malformed_json";
inline constexpr const char *schema_error = "schema_error";
inline constexpr const char *usage_error = "usage_error";
inline constexpr const char *io_error = "io_error";
inline constexpr const char *singular_matrix = "singular_matrix";
inline constexpr const char *internal_error = "internal_error";
} // namespace errc

class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &message, bool internal = false)
        : std::runtime_error(message), code_(std::move(code)),
          internal_(internal) {}

    [[nodiscard]] const std::string &code() const noexcept { return code_; }

    /// True when the failure indicates a library defect rather than bad input.
    [[nodiscard]] bool internal() const noexcept { return internal_; }

  private:
    std::string code_;
    bool internal_;
};

inline void require(bool condition, const char *code, const std::string &msg) {
    if (!condition) {
        throw Error(code, msg);
    }
}

inline void check_capacity(std::size_t num_edges,
                           std::size_t cap = kMaxEdges) {
    if (num_edges > cap) {
        throw Error(errc::capacity_exceeded,
                    "graph has " + std::to_string(num_edges) +
                        " edges; capacity is " + std::to_string(cap));
    }
}

} // namespace qrelnet
