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

#ifndef ZXPARAM_CIRCUIT_HPP
#define ZXPARAM_CIRCUIT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxparam/diagram.hpp"

namespace zxparam {

enum class GateKind : std::uint8_t { H, S, Sdg, Z, X, CZ, CX, RzClifford, RzParam };

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = 0;
    /// Second qubit for CZ and CX (target for CX), otherwise -1.
    int q1 = -1;
    /// Multiple of pi/2 for RzClifford, mod 4.
    int k = 0;
    /// Parameter index for RzParam.
    ParamId param = -1;

    bool two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CX; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// A Clifford circuit with symbolic Z rotations. Parameter ids index
/// `param_names` and follow the order of first appearance.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    std::vector<std::string> param_names;

    std::size_t num_params() const { return param_names.size(); }
    /// Index of the RzParam gate carrying each parameter.
    std::vector<std::size_t> param_gate_index() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

class SyntaxError : public std::runtime_error {
   public:
    SyntaxError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

class NonCliffordConstant : public std::runtime_error {
   public:
    NonCliffordConstant(int line, const std::string& angle)
        : std::runtime_error("line " + std::to_string(line) + ": rz angle '" + angle +
                             "' is not a multiple of pi/2"),
          line(line) {}
    int line;
};

class RepeatedParameterName : public std::runtime_error {
   public:
    RepeatedParameterName(int line, const std::string& name)
        : std::runtime_error("line " + std::to_string(line) + ": parameter '" + name +
                             "' already used"),
          line(line),
          name(name) {}
    int line;
    std::string name;
};

/// Parses the line-oriented circuit format:
///
///     qreg <n>
///     h q | s q | sdg q | z q | x q | cz q1 q2 | cx control target
///     rz(<ident>) q
///     rz(<k>pi/2) q        also rz(0), rz(pi), rz(-pi/2), rz(3pi/2)
///
/// `#` starts a comment. Numeric angles may also be written as multiples of pi
/// such as 0.5pi or 1.5*pi; anything else that is numeric raises NonCliffordConstant.
Circuit parse_circuit(std::string_view text);

std::string emit_circuit(const Circuit& c);

/// Circuit as a raw spider network, before graph-like normalisation.
SpiderNetwork circuit_to_network(const Circuit& c);

/// Graph-like diagram of `c`; parameter ids are kept.
Diagram circuit_to_diagram(const Circuit& c);

}  // namespace zxparam

#endif  // ZXPARAM_CIRCUIT_HPP
