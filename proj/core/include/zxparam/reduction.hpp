// Copyright 2026 The zxparam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZXPARAM_REDUCTION_HPP
#define ZXPARAM_REDUCTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxparam/circuit.hpp"
#include "zxparam/rewrite.hpp"

namespace zxparam {

/// Affine map beta = P * alpha + c from the parameters of one circuit to those
/// of another. Column j of P belongs to params_in[j], row i to params_out[i];
/// constants are in pi/2 units.
struct ReductionMap {
    std::vector<std::string> params_in;
    std::vector<std::string> params_out;
    std::vector<std::vector<int>> p_matrix;
    std::vector<int> constants;
    /// Input parameters dropped with a scalar subdiagram (zero columns of P).
    std::vector<std::string> eliminated;

    std::size_t rows() const { return params_out.size(); }
    std::size_t cols() const { return params_in.size(); }

    /// Each column has at most one nonzero entry.
    bool parsimonious() const;
    /// "u0 = t0 + t1" style rendering of row i.
    std::string row_string(std::size_t i) const;

    /// The identity map on `names`.
    static ReductionMap identity(const std::vector<std::string>& names);

    friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

class InconsistentProvenance : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Replays a simplify event log starting from the parametrised spiders of
/// `initial` and returns the reduction it implies. Rows are ordered by their
/// smallest parameter id and named u0, u1, ...; each row reproduces the
/// terminal ParamExpr exactly, signs and Clifford constant included.
ReductionMap extract_reduction(const Diagram& initial, const std::vector<RewriteEvent>& events,
                               const std::vector<std::string>& original_params);

struct TeleportResult {
    Circuit circuit;
    ReductionMap map;
    /// Terminal diagram the fusion groups were read from.
    Diagram terminal;
    std::size_t params_before = 0;
};

/// Applies the fusions found by simplify in place: per group the earliest
/// RzParam gate is kept and renamed, the others are deleted. The returned map is
/// constant-free with every representative coefficient +1.
TeleportResult phase_teleport(const Circuit& c, const SimplifyOptions& options = {});

}  // namespace zxparam

#endif  // ZXPARAM_REDUCTION_HPP
