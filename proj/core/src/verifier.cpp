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

#include "zxparam/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace zxparam {

namespace {

struct Deviation {
    cplx lambda;
    double deviation;
    bool ok;
};

Deviation proportional(const std::vector<cplx>& t1, const std::vector<cplx>& t2, double tol) {
    cplx num{0.0, 0.0};
    double den = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < t1.size(); ++i) {
        num += std::conj(t2[i]) * t1[i];
        den += std::norm(t2[i]);
        scale = std::max(scale, std::abs(t1[i]));
    }
    if (den == 0.0 || scale == 0.0) {
        return {cplx{0.0, 0.0}, std::numeric_limits<double>::infinity(), false};
    }
    const cplx lambda = num / den;
    double dev = 0.0;
    for (std::size_t i = 0; i < t1.size(); ++i) {
        dev = std::max(dev, std::abs(t1[i] - lambda * t2[i]) / scale);
    }
    return {lambda, dev, dev <= tol && std::abs(lambda) > 0.0};
}

void apply_gate(const Gate& g, const std::vector<double>& alpha, std::vector<cplx>& psi) {
    const std::size_t dim = psi.size();
    const std::size_t m0 = std::size_t{1} << g.q0;
    const std::size_t m1 = g.q1 >= 0 ? std::size_t{1} << g.q1 : 0;
    auto diag = [&](cplx phase) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & m0) {
                psi[i] *= phase;
            }
        }
    };
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m0)) {
                    const cplx a = psi[i];
                    const cplx b = psi[i | m0];
                    psi[i] = r * (a + b);
                    psi[i | m0] = r * (a - b);
                }
            }
            break;
        }
        case GateKind::S:
            diag(i_pow(1));
            break;
        case GateKind::Sdg:
            diag(i_pow(3));
            break;
        case GateKind::Z:
            diag(i_pow(2));
            break;
        case GateKind::RzClifford:
            diag(i_pow(g.k));
            break;
        case GateKind::RzParam:
            diag(std::polar(1.0, alpha.at(static_cast<std::size_t>(g.param))));
            break;
        case GateKind::X:
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m0)) {
                    std::swap(psi[i], psi[i | m0]);
                }
            }
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && (i & m1)) {
                    psi[i] = -psi[i];
                }
            }
            break;
        case GateKind::CX:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && !(i & m1)) {
                    std::swap(psi[i], psi[i | m1]);
                }
            }
            break;
    }
}

}  // namespace

ProportionalityReport check_proportional(const TensorState& t1, const TensorState& t2, double tol) {
    return check_proportional(t1.amplitudes, t2.amplitudes, tol);
}

ProportionalityReport check_proportional(const std::vector<cplx>& t1, const std::vector<cplx>& t2, double tol) {
    if (t1.size() != t2.size()) {
        throw ShapeMismatch("tensors have " + std::to_string(t1.size()) + " and " +
                            std::to_string(t2.size()) + " amplitudes");
    }
    Deviation d = proportional(t1, t2, tol);
    ProportionalityReport r;
    r.holds = d.ok;
    r.ratios = {d.lambda};
    r.max_deviation = d.deviation;
    if (!d.ok) {
        r.first_failure = 0;
    }
    return r;
}

std::vector<cplx> circuit_unitary(const Circuit& c, const std::vector<double>& alpha) {
    if (c.n_qubits > 14) {
        throw TooLarge("circuit on " + std::to_string(c.n_qubits) + " qubits is too large to simulate");
    }
    if (alpha.size() < c.num_params()) {
        throw DimensionMismatch("expected " + std::to_string(c.num_params()) + " parameter values");
    }
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    std::vector<cplx> u(dim * dim);
    std::vector<cplx> psi(dim);
    for (std::size_t in = 0; in < dim; ++in) {
        std::fill(psi.begin(), psi.end(), cplx{0.0, 0.0});
        psi[in] = 1.0;
        for (const Gate& g : c.gates) {
            apply_gate(g, alpha, psi);
        }
        for (std::size_t out = 0; out < dim; ++out) {
            u[out * dim + in] = psi[out];
        }
    }
    return u;
}

std::vector<std::vector<double>> reduction_samples(std::size_t k, std::size_t n_random, std::uint64_t seed) {
    std::vector<std::vector<double>> samples;
    samples.emplace_back(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> s(k, 0.0);
        s[j] = std::numbers::pi;
        samples.push_back(std::move(s));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t r = 0; r < n_random; ++r) {
        std::vector<double> s(k);
        for (double& x : s) {
            x = angle(rng);
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

ProportionalityReport check_reduction(const Circuit& c1, const Circuit& c2, const ReductionMap& map,
                                      std::size_t n_random, double tol, std::uint64_t seed) {
    if (c1.n_qubits != c2.n_qubits) {
        throw DimensionMismatch("circuits act on " + std::to_string(c1.n_qubits) + " and " +
                                std::to_string(c2.n_qubits) + " qubits");
    }
    const std::size_t k = c1.num_params();
    const std::size_t l = c2.num_params();
    if (map.cols() != k || map.rows() != l || map.p_matrix.size() != l || map.constants.size() != l) {
        throw DimensionMismatch("map is " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                                " but the circuits have " + std::to_string(l) + " and " +
                                std::to_string(k) + " parameters");
    }
    std::vector<std::size_t> col_of(k);
    for (std::size_t j = 0; j < k; ++j) {
        auto it = std::find(c1.param_names.begin(), c1.param_names.end(), map.params_in[j]);
        if (it == c1.param_names.end()) {
            throw DimensionMismatch("map input '" + map.params_in[j] + "' is not a parameter of the first circuit");
        }
        col_of[j] = static_cast<std::size_t>(it - c1.param_names.begin());
    }
    std::vector<std::size_t> row_of(l);
    for (std::size_t i = 0; i < l; ++i) {
        if (map.p_matrix[i].size() != k) {
            throw DimensionMismatch("map row " + std::to_string(i) + " has the wrong length");
        }
        auto it = std::find(c2.param_names.begin(), c2.param_names.end(), map.params_out[i]);
        if (it == c2.param_names.end()) {
            throw DimensionMismatch("map output '" + map.params_out[i] + "' is not a parameter of the second circuit");
        }
        row_of[i] = static_cast<std::size_t>(it - c2.param_names.begin());
    }

    std::vector<std::vector<double>> samples = reduction_samples(k, n_random, seed);

    ProportionalityReport report;
    report.holds = true;
    for (std::size_t si = 0; si < samples.size(); ++si) {
        const std::vector<double>& a1 = samples[si];
        std::vector<double> a2(l, 0.0);
        for (std::size_t i = 0; i < l; ++i) {
            double v = map.constants[i] * std::numbers::pi / 2.0;
            for (std::size_t j = 0; j < k; ++j) {
                v += map.p_matrix[i][j] * a1[col_of[j]];
            }
            a2[row_of[i]] = v;
        }
        Deviation d = proportional(circuit_unitary(c1, a1), circuit_unitary(c2, a2), tol);
        report.ratios.push_back(d.lambda);
        report.max_deviation = std::max(report.max_deviation, d.deviation);
        if (!d.ok && report.holds) {
            report.holds = false;
            report.first_failure = si;
        }
    }
    report.samples = std::move(samples);
    return report;
}

std::vector<ParamId> trivial_params(const Circuit& c, double tol) {
    std::vector<ParamId> out;
    const std::size_t k = c.num_params();
    const std::vector<cplx> base = circuit_unitary(c, std::vector<double>(k, 0.0));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> a(k, 0.0);
        a[j] = std::numbers::pi;
        if (proportional(base, circuit_unitary(c, a), tol).ok) {
            out.push_back(static_cast<ParamId>(j));
        }
    }
    return out;
}

}  // namespace zxparam
