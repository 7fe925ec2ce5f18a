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
#include <queue>

#include "zxparam/verifier.hpp"

namespace zxparam {

namespace {

void require_terminal(const Diagram& d) {
    ValidationReport v = validate(d);
    if (!v.ok()) {
        throw NotTerminalForm("diagram is not graph-like: " + v.violations.front().message);
    }
    for (VertexId s : d.spiders()) {
        if (d.is_internal(s) && d.phase(s).is_clifford() && !is_gadget_axis(d, s)) {
            throw NotTerminalForm("internal Clifford spider " + std::to_string(s) + " remains");
        }
    }
}

}  // namespace

std::vector<ParameterLeg> parameter_legs(const Diagram& d) {
    std::vector<ParameterLeg> legs;
    for (VertexId p : d.parametrised_spiders()) {
        ParameterLeg leg;
        leg.phase_spider = p;
        if (is_gadget_leaf(d, p)) {
            leg.vertex = d.neighbours(p).begin()->first;
            leg.decoration = LegDecoration::H;
        } else {
            leg.vertex = p;
        }
        for (const auto& [n, k] : d.neighbours(leg.vertex)) {
            if (n != p) {
                leg.neighbourhood.insert(n);
            }
        }
        legs.push_back(std::move(leg));
    }
    return legs;
}

std::vector<ZZPair> zz_certificate(const Diagram& d) {
    require_terminal(d);
    const std::vector<ParameterLeg> legs = parameter_legs(d);
    std::vector<ZZPair> out;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        for (std::size_t j = i + 1; j < legs.size(); ++j) {
            const ParameterLeg& u = legs[i];
            const ParameterLeg& v = legs[j];
            if (u.vertex == v.vertex) {
                continue;
            }
            const bool adjacent = u.neighbourhood.count(v.vertex) != 0;
            if (adjacent) {
                if (u.decoration != v.decoration && u.neighbourhood.size() == 1 &&
                    v.neighbourhood.size() == 1 && v.neighbourhood.count(u.vertex)) {
                    out.push_back({u.phase_spider, v.phase_spider, ZZCondition::AdjacentIsolated});
                }
            } else if (u.decoration == LegDecoration::H && v.decoration == LegDecoration::H &&
                       u.neighbourhood == v.neighbourhood) {
                out.push_back({u.phase_spider, v.phase_spider, ZZCondition::IdenticalNeighbourhood});
            }
        }
    }
    return out;
}

CertificateReport optimality_certificate(const Diagram& d) {
    require_terminal(d);
    CertificateReport r;
    r.num_params = d.parametrised_spiders().size();

    std::map<std::set<VertexId>, VertexId> seen;
    for (const GadgetView& g : find_gadgets(d)) {
        if (g.neighbourhood.size() < 2) {
            r.reasons.push_back("(a) gadget at " + std::to_string(g.axis_spider) + " has " +
                                std::to_string(g.neighbourhood.size()) + " neighbour(s)");
        }
        auto [it, inserted] = seen.emplace(g.neighbourhood, g.axis_spider);
        if (!inserted) {
            r.reasons.push_back("(b) gadgets at " + std::to_string(it->second) + " and " +
                                std::to_string(g.axis_spider) + " share a neighbourhood");
        }
    }

    r.zz_pairs = zz_certificate(d);
    for (const ZZPair& p : r.zz_pairs) {
        r.reasons.push_back("(c) parameter legs " + std::to_string(p.first) + " and " +
                            std::to_string(p.second) + " have a ZZ stabiliser (" +
                            (p.condition == ZZCondition::AdjacentIsolated ? "adjacent pair" : "identical neighbours") +
                            ")");
    }

    // (d) every parametrised spider must reach a boundary.
    std::set<VertexId> reached;
    std::queue<VertexId> q;
    for (VertexId b : d.boundaries()) {
        reached.insert(b);
        q.push(b);
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (const auto& [n, k] : d.neighbours(v)) {
            if (reached.insert(n).second) {
                q.push(n);
            }
        }
    }
    for (VertexId p : d.parametrised_spiders()) {
        if (!reached.count(p)) {
            r.reasons.push_back("(d) parametrised spider " + std::to_string(p) + " is disconnected from the boundary");
        }
    }
    r.passes = r.reasons.empty();
    return r;
}

}  // namespace zxparam
