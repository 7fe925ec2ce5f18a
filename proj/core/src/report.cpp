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

#include "zxparam/report.hpp"

#include <algorithm>

namespace zxparam {

void to_json(nlohmann::json& j, const ReductionMap& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json terms = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.p_matrix[i][c] != 0) {
                terms.push_back({m.params_in[c], m.p_matrix[i][c]});
            }
        }
        rows.push_back({{"name", m.params_out[i]}, {"terms", terms}, {"const_pi_over_2", mod4(m.constants[i])}});
    }
    j = nlohmann::json{{"params_in", m.params_in},
                       {"params_out", m.params_out},
                       {"rows", rows},
                       {"eliminated", m.eliminated}};
}

void from_json(const nlohmann::json& j, ReductionMap& m) {
    try {
        m = ReductionMap{};
        m.params_in = j.at("params_in").get<std::vector<std::string>>();
        m.params_out = j.at("params_out").get<std::vector<std::string>>();
        if (j.contains("eliminated")) {
            m.eliminated = j.at("eliminated").get<std::vector<std::string>>();
        }
        const auto& rows = j.at("rows");
        if (!rows.is_array() || rows.size() != m.params_out.size()) {
            throw ReportError("rows do not match params_out");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.at("name").get<std::string>() != m.params_out[i]) {
                throw ReportError("row " + std::to_string(i) + " is named '" + row.at("name").get<std::string>() +
                                  "', expected '" + m.params_out[i] + "'");
            }
            std::vector<int> p(m.params_in.size(), 0);
            for (const auto& term : row.at("terms")) {
                const auto name = term.at(0).get<std::string>();
                const int sign = term.at(1).get<int>();
                auto it = std::find(m.params_in.begin(), m.params_in.end(), name);
                if (it == m.params_in.end()) {
                    throw ReportError("row " + std::to_string(i) + " refers to unknown parameter '" + name + "'");
                }
                if (sign != 1 && sign != -1) {
                    throw ReportError("row " + std::to_string(i) + " has coefficient " + std::to_string(sign));
                }
                p[static_cast<std::size_t>(it - m.params_in.begin())] = sign;
            }
            m.p_matrix.push_back(std::move(p));
            m.constants.push_back(mod4(row.at("const_pi_over_2").get<int>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("malformed reduction report: ") + e.what());
    }
}

void to_json(nlohmann::json& j, const ProportionalityReport& r) {
    nlohmann::json ratios = nlohmann::json::array();
    for (const cplx& l : r.ratios) {
        ratios.push_back({l.real(), l.imag()});
    }
    j = nlohmann::json{{"holds", r.holds}, {"max_deviation", r.max_deviation}, {"ratios", ratios}};
    if (r.first_failure) {
        j["first_failure"] = *r.first_failure;
        if (*r.first_failure < r.samples.size()) {
            j["failing_sample"] = r.samples[*r.first_failure];
        }
    }
}

void to_json(nlohmann::json& j, const CertificateReport& r) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const ZZPair& p : r.zz_pairs) {
        pairs.push_back({{"legs", {p.first, p.second}},
                         {"condition", p.condition == ZZCondition::AdjacentIsolated ? "i" : "ii"}});
    }
    j = nlohmann::json{{"passes", r.passes}, {"num_params", r.num_params}, {"reasons", r.reasons}, {"zz_pairs", pairs}};
}

std::string dump_reduction(const ReductionMap& m) {
    return nlohmann::json(m).dump(2) + "\n";
}

ReductionMap parse_reduction(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ReportError(std::string("reduction report is not valid JSON: ") + e.what());
    }
    return j.get<ReductionMap>();
}

}  // namespace zxparam
