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

#include <algorithm>
#include <numeric>

#include "zxparam/verifier.hpp"

namespace zxparam {

Circuit restrict_params(const Circuit& c, const std::vector<ParamId>& keep,
                        const std::vector<std::string>& names) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    out.param_names = names;
    for (const Gate& g : c.gates) {
        if (g.kind != GateKind::RzParam) {
            out.gates.push_back(g);
            continue;
        }
        auto it = std::find(keep.begin(), keep.end(), g.param);
        if (it != keep.end()) {
            Gate ng = g;
            ng.param = static_cast<ParamId>(it - keep.begin());
            out.gates.push_back(ng);
        }
    }
    return out;
}

namespace {

// Advances a restricted growth string; false after the last one.
bool next_rgs(std::vector<int>& a) {
    const std::size_t k = a.size();
    for (std::size_t i = k; i-- > 1;) {
        int prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
        if (a[i] <= prefix_max) {
            ++a[i];
            std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
            return true;
        }
    }
    return false;
}

}  // namespace

OracleResult brute_force_min(const Circuit& c, double tol, std::size_t max_params, std::size_t n_random,
                             std::uint64_t seed) {
    const std::size_t k = c.num_params();
    if (k > max_params) {
        throw TooManyParams("circuit has " + std::to_string(k) + " parameters; the oracle handles at most " +
                            std::to_string(max_params));
    }
    OracleResult result;
    if (k == 0) {
        result.witness = ReductionMap::identity({});
        result.reduced = c;
        return result;
    }

    const std::vector<std::vector<double>> samples = reduction_samples(k, n_random, seed);
    std::vector<std::vector<cplx>> reference;
    for (const auto& s : samples) {
        reference.push_back(circuit_unitary(c, s));
    }

    for (std::size_t l = 1; l <= k; ++l) {
        std::vector<int> rgs(k, 0);
        do {
            if (static_cast<std::size_t>(*std::max_element(rgs.begin(), rgs.end())) + 1 != l) {
                continue;
            }
            std::vector<std::vector<ParamId>> groups(l);
            for (std::size_t j = 0; j < k; ++j) {
                groups[static_cast<std::size_t>(rgs[j])].push_back(static_cast<ParamId>(j));
            }
            // Mixed-radix counter over representative choices.
            std::vector<std::size_t> rep_choice(l, 0);
            for (;;) {
                std::vector<ParamId> reps(l);
                for (std::size_t g = 0; g < l; ++g) {
                    reps[g] = groups[g][rep_choice[g]];
                }
                std::vector<std::size_t> order(l);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });
                std::vector<ParamId> kept;
                std::vector<std::string> names;
                for (std::size_t i = 0; i < l; ++i) {
                    kept.push_back(reps[order[i]]);
                    names.push_back("u" + std::to_string(i));
                }
                Circuit reduced = restrict_params(c, kept, names);

                const std::size_t n_signs = k - l;
                for (std::size_t mask = 0; mask < (std::size_t{1} << n_signs); ++mask) {
                    ReductionMap m;
                    m.params_in = c.param_names;
                    m.params_out = names;
                    m.constants.assign(l, 0);
                    m.p_matrix.assign(l, std::vector<int>(k, 0));
                    std::size_t bit = 0;
                    for (std::size_t i = 0; i < l; ++i) {
                        for (ParamId p : groups[order[i]]) {
                            int sign = 1;
                            if (p != kept[i]) {
                                sign = ((mask >> bit) & 1U) ? -1 : 1;
                                ++bit;
                            }
                            m.p_matrix[i][static_cast<std::size_t>(p)] = sign;
                        }
                    }
                    ++result.candidates_tested;
                    bool ok = true;
                    for (std::size_t si = 0; si < samples.size() && ok; ++si) {
                        std::vector<double> a2(l, 0.0);
                        for (std::size_t i = 0; i < l; ++i) {
                            for (std::size_t j = 0; j < k; ++j) {
                                a2[i] += m.p_matrix[i][j] * samples[si][j];
                            }
                        }
                        ok = check_proportional(reference[si], circuit_unitary(reduced, a2), tol).holds;
                    }
                    if (ok) {
                        result.count = l;
                        result.witness = std::move(m);
                        result.reduced = std::move(reduced);
                        return result;
                    }
                }

                std::size_t g = 0;
                while (g < l && ++rep_choice[g] == groups[g].size()) {
                    rep_choice[g] = 0;
                    ++g;
                }
                if (g == l) {
                    break;
                }
            }
        } while (next_rgs(rgs));
    }
    // Unreachable for valid input: the identity map always passes at l = k.
    throw std::logic_error("brute_force_min found no witness, not even the identity");
}

}  // namespace zxparam
