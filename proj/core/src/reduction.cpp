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

#include "zxparam/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zxparam {

bool ReductionMap::parsimonious() const {
    for (std::size_t j = 0; j < cols(); ++j) {
        int nonzero = 0;
        for (const auto& row : p_matrix) {
            nonzero += row.at(j) != 0 ? 1 : 0;
        }
        if (nonzero > 1) {
            return false;
        }
    }
    return true;
}

std::string ReductionMap::row_string(std::size_t i) const {
    std::string out = params_out.at(i) + " =";
    bool first = true;
    for (std::size_t j = 0; j < cols(); ++j) {
        const int s = p_matrix.at(i).at(j);
        if (s == 0) {
            continue;
        }
        if (first) {
            out += s < 0 ? " -" : " ";
        } else {
            out += s < 0 ? " - " : " + ";
        }
        out += params_in[j];
        first = false;
    }
    const int k = mod4(constants.at(i));
    if (k != 0 || first) {
        out += first ? " " + clifford_str(k) : " + " + clifford_str(k);
    }
    return out;
}

ReductionMap ReductionMap::identity(const std::vector<std::string>& names) {
    ReductionMap m;
    m.params_in = names;
    m.params_out = names;
    m.constants.assign(names.size(), 0);
    m.p_matrix.assign(names.size(), std::vector<int>(names.size(), 0));
    for (std::size_t i = 0; i < names.size(); ++i) {
        m.p_matrix[i][i] = 1;
    }
    return m;
}

namespace {

ParamId min_param(const Phase& p) {
    return p.terms().begin()->first;
}

ReductionMap rows_from(const std::map<VertexId, Phase>& state, const std::set<ParamId>& eliminated,
                       const std::vector<std::string>& names) {
    std::vector<Phase> rows;
    for (const auto& [v, ph] : state) {
        rows.push_back(ph);
    }
    std::sort(rows.begin(), rows.end(),
              [](const Phase& a, const Phase& b) { return min_param(a) < min_param(b); });
    ReductionMap m;
    m.params_in = names;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.params_out.push_back("u" + std::to_string(i));
        std::vector<int> row(names.size(), 0);
        for (const auto& [p, s] : rows[i].terms()) {
            row[static_cast<std::size_t>(p)] = s;
        }
        m.p_matrix.push_back(std::move(row));
        m.constants.push_back(rows[i].clifford());
    }
    for (ParamId p : eliminated) {
        m.eliminated.push_back(names[static_cast<std::size_t>(p)]);
    }
    return m;
}

}  // namespace

ReductionMap extract_reduction(const Diagram& initial, const std::vector<RewriteEvent>& events,
                               const std::vector<std::string>& original_params) {
    std::map<VertexId, Phase> state;
    for (VertexId v : initial.parametrised_spiders()) {
        state.emplace(v, initial.phase(v));
    }
    std::set<ParamId> eliminated;

    auto check_ids = [&](const Phase& ph) {
        for (const auto& [p, s] : ph.terms()) {
            if (p < 0 || static_cast<std::size_t>(p) >= original_params.size()) {
                throw InconsistentProvenance("unknown parameter id " + std::to_string(p));
            }
        }
    };
    for (const auto& [v, ph] : state) {
        check_ids(ph);
    }

    for (std::size_t step = 0; step < events.size(); ++step) {
        const RewriteEvent& ev = events[step];
        const std::string where = "event " + std::to_string(step) + " (" + to_string(ev.rule) + ")";
        for (VertexId v : ev.removed) {
            state.erase(v);
        }
        for (const auto& [v, ph] : ev.phase_updates) {
            if (ph.is_clifford()) {
                state.erase(v);
            } else {
                check_ids(ph);
                state[v] = ph;
            }
        }
        for (ParamId p : ev.eliminated) {
            if (!eliminated.insert(p).second) {
                throw InconsistentProvenance(where + ": parameter eliminated twice");
            }
        }
        if (ev.param_merge) {
            auto it = state.find(ev.param_merge->survivor);
            if (it == state.end()) {
                throw InconsistentProvenance(where + ": merge survivor carries no parameters");
            }
            for (const auto& [p, s] : ev.param_merge->absorbed) {
                auto t = it->second.terms().find(p);
                if (t == it->second.terms().end() || t->second != s) {
                    throw InconsistentProvenance(where + ": absorbed parameter missing from survivor");
                }
            }
        }
        std::set<ParamId> seen;
        for (const auto& [v, ph] : state) {
            for (const auto& [p, s] : ph.terms()) {
                if (!seen.insert(p).second || eliminated.count(p)) {
                    throw InconsistentProvenance(where + ": parameter " + original_params[static_cast<std::size_t>(p)] +
                                                 " occurs twice");
                }
            }
        }
    }

    std::set<ParamId> covered = eliminated;
    for (const auto& [v, ph] : state) {
        for (const auto& [p, s] : ph.terms()) {
            covered.insert(p);
        }
    }
    for (std::size_t p = 0; p < original_params.size(); ++p) {
        if (!covered.count(static_cast<ParamId>(p)) && initial.param_registry().count(static_cast<ParamId>(p))) {
            throw InconsistentProvenance("parameter " + original_params[p] + " was lost");
        }
    }
    return rows_from(state, eliminated, original_params);
}

TeleportResult phase_teleport(const Circuit& c, const SimplifyOptions& options) {
    Diagram initial = circuit_to_diagram(c);
    SimplifyResult simp = simplify(initial, options);
    ReductionMap raw = extract_reduction(initial, simp.events, c.param_names);

    std::map<VertexId, Phase> terminal;
    for (VertexId v : simp.diagram.parametrised_spiders()) {
        terminal.emplace(v, simp.diagram.phase(v));
    }
    std::set<ParamId> no_elims;
    for (const std::string& name : raw.eliminated) {
        auto it = std::find(c.param_names.begin(), c.param_names.end(), name);
        no_elims.insert(static_cast<ParamId>(it - c.param_names.begin()));
    }
    if (rows_from(terminal, no_elims, c.param_names) != raw) {
        throw InconsistentProvenance("event replay disagrees with the terminal diagram");
    }

    TeleportResult out;
    out.params_before = c.num_params();
    out.terminal = std::move(simp.diagram);
    ReductionMap& m = out.map;
    m = raw;
    // Representative of row i is its first nonzero column, i.e. the earliest gate.
    std::map<ParamId, ParamId> rep_row;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto& row = m.p_matrix[i];
        auto rep = std::find_if(row.begin(), row.end(), [](int s) { return s != 0; });
        const int sign = *rep;
        for (int& s : row) {
            s *= sign;
        }
        m.constants[i] = 0;
        rep_row.emplace(static_cast<ParamId>(rep - row.begin()), static_cast<ParamId>(i));
    }

    Circuit& oc = out.circuit;
    oc.n_qubits = c.n_qubits;
    oc.param_names = m.params_out;
    for (const Gate& g : c.gates) {
        if (g.kind != GateKind::RzParam) {
            oc.gates.push_back(g);
            continue;
        }
        auto it = rep_row.find(g.param);
        if (it != rep_row.end()) {
            Gate ng = g;
            ng.param = it->second;
            oc.gates.push_back(ng);
        }
    }
    return out;
}

}  // namespace zxparam
