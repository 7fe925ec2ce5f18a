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

#include "zxparam/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zxparam {

ParamExpr ParamExpr::param(ParamId id, int sign, int clifford) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("parameter coefficient must be +1 or -1");
    }
    ParamExpr e(clifford);
    e.terms_.emplace(id, sign);
    return e;
}

void ParamExpr::add(const ParamExpr& other, int sign) {
    clifford_ = mod4(clifford_ + sign * other.clifford_);
    for (const auto& [id, s] : other.terms_) {
        int coeff = s * sign;
        auto it = terms_.find(id);
        if (it == terms_.end()) {
            terms_.emplace(id, coeff);
            continue;
        }
        int sum = it->second + coeff;
        if (sum == 0) {
            terms_.erase(it);
        } else {
            throw std::logic_error("parameter " + std::to_string(id) +
                                   " would acquire coefficient " + std::to_string(sum));
        }
    }
}

ParamExpr ParamExpr::negated() const {
    ParamExpr out(-clifford_);
    for (const auto& [id, s] : terms_) {
        out.terms_.emplace(id, -s);
    }
    return out;
}

ParamExpr ParamExpr::params_only() const {
    ParamExpr out = *this;
    out.clifford_ = 0;
    return out;
}

double ParamExpr::value(std::span<const double> alpha) const {
    double v = clifford_ * std::numbers::pi / 2;
    for (const auto& [id, s] : terms_) {
        if (id < 0 || static_cast<std::size_t>(id) >= alpha.size()) {
            throw std::out_of_range("no value for parameter " + std::to_string(id));
        }
        v += s * alpha[static_cast<std::size_t>(id)];
    }
    return v;
}

std::complex<double> ParamExpr::unit(std::span<const double> alpha) const {
    std::complex<double> z = i_pow(clifford_);
    if (!terms_.empty()) {
        double v = params_only().value(alpha);
        z *= std::polar(1.0, v);
    }
    return z;
}

std::string ParamExpr::str() const {
    return str([](ParamId id) { return "a" + std::to_string(id); });
}

ParamExpr operator+(ParamExpr lhs, const ParamExpr& rhs) {
    lhs.add(rhs, 1);
    return lhs;
}

ParamExpr operator-(ParamExpr lhs, const ParamExpr& rhs) {
    lhs.add(rhs, -1);
    return lhs;
}

std::complex<double> i_pow(int k) {
    switch (mod4(k)) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

std::string clifford_str(int k) {
    switch (mod4(k)) {
        case 0:
            return "0";
        case 1:
            return "pi/2";
        case 2:
            return "pi";
        default:
            return "3pi/2";
    }
}

}  // namespace zxparam
