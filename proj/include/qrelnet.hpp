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

#include "qrelnet/classical_reliability.hpp"
#include "qrelnet/connectivity_matrix.hpp"
#include "qrelnet/error.hpp"
#include "qrelnet/graph.hpp"
#include "qrelnet/partition.hpp"
#include "qrelnet/quantum_reliability.hpp"
#include "qrelnet/rational.hpp"
#include "qrelnet/state_vector.hpp"
