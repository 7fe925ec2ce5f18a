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

#ifndef ZXPARAM_PHASE_HPP
#define ZXPARAM_PHASE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace zxparam {

/// Index of a free parameter. Circuits map these to names; diagrams only see indices.
using ParamId = std::int32_t;

/// Reduces an integer to the range [0, 4).
constexpr int mod4(int k) {
    return ((k % 4) + 4) % 4;
}

/// A signed affine combination of free parameters plus a Clifford constant.
///
/// The value is `clifford * pi/2 + sum_j sign_j * alpha_j`. Every stored sign is
/// exactly +1 or -1; an absent parameter has coefficient 0. A spider's phase is an
/// expression of this form, so `Phase` is an alias.
class ParamExpr {
   public:
    ParamExpr() = default;
    explicit ParamExpr(int clifford) : clifford_(mod4(clifford)) {}

    static ParamExpr param(ParamId id, int sign = 1, int clifford = 0);

    int clifford() const { return clifford_; }
    const std::map<ParamId, int>& terms() const { return terms_; }

    /// True when no parameter occurs, i.e. the phase is a multiple of pi/2.
    bool is_clifford() const { return terms_.empty(); }
    /// Clifford with phase 0 or pi.
    bool is_pauli() const { return is_clifford() && clifford_ % 2 == 0; }
    /// Clifford with phase +-pi/2.
    bool is_proper_clifford() const { return is_clifford() && clifford_ % 2 == 1; }

    void add_clifford(int k) { clifford_ = mod4(clifford_ + k); }

    /// Adds `sign * other` term-wise. Throws std::logic_error if a parameter would
    /// end up with a coefficient outside {-1, 0, +1}.
    void add(const ParamExpr& other, int sign = 1);

    ParamExpr negated() const;
    ParamExpr clifford_part() const { return ParamExpr(clifford_); }
    ParamExpr params_only() const;

    /// Evaluates the expression in radians; `alpha` is indexed by ParamId.
    double value(std::span<const double> alpha) const;
    /// e^{i * value}, with the Clifford part computed exactly.
    std::complex<double> unit(std::span<const double> alpha) const;

    /// Human-readable form such as "pi/2 + a0 - a3", using `name` for parameters.
    template <typename NameFn>
    std::string str(NameFn&& name) const;
    std::string str() const;

    friend bool operator==(const ParamExpr&, const ParamExpr&) = default;

   private:
    std::map<ParamId, int> terms_;
    int clifford_ = 0;
};

using Phase = ParamExpr;

ParamExpr operator+(ParamExpr lhs, const ParamExpr& rhs);
ParamExpr operator-(ParamExpr lhs, const ParamExpr& rhs);

/// Exact value of i^k.
std::complex<double> i_pow(int k);

std::string clifford_str(int k);

template <typename NameFn>
std::string ParamExpr::str(NameFn&& name) const {
    std::string out;
    for (const auto& [id, sign] : terms_) {
        if (out.empty()) {
            out += sign < 0 ? "-" : "";
        } else {
            out += sign < 0 ? " - " : " + ";
        }
        out += name(id);
    }
    if (clifford_ != 0 || out.empty()) {
        std::string c = clifford_str(clifford_);
        if (out.empty()) {
            out = c;
        } else {
            out += " + " + c;
        }
    }
    return out;
}

}  // namespace zxparam

#endif  // ZXPARAM_PHASE_HPP
