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

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "zxparam/rewrite.hpp"

namespace zxparam {

namespace {

enum class Action : std::uint8_t { Lc, Pivot, BoundaryPivot, GadgetPivot, IdFuse, Fusion, Scalar, Decoration };

struct Candidate {
    Action action;
    VertexId a = 0;
    VertexId b = 0;
};

bool unparam_internal_pauli(const Diagram& d, VertexId v) {
    return d.is_internal(v) && d.phase(v).is_pauli();
}

class Chooser {
   public:
    explicit Chooser(const std::optional<std::uint64_t>& seed) {
        if (seed) {
            rng_.emplace(*seed);
        }
    }

    const Candidate* pick(const std::vector<Candidate>& cs) {
        if (cs.empty()) {
            return nullptr;
        }
        if (!rng_) {
            return &cs.front();
        }
        std::uniform_int_distribution<std::size_t> dist(0, cs.size() - 1);
        return &cs[dist(*rng_)];
    }

   private:
    std::optional<std::mt19937_64> rng_;
};

// Candidates of the highest-priority non-empty class, in ascending id order.
std::vector<Candidate> next_class(const Diagram& d) {
    std::vector<Candidate> cs;
    const std::vector<VertexId> spiders = d.spiders();
    std::set<VertexId> axes;
    for (VertexId v : spiders) {
        if (is_gadget_axis(d, v)) {
            axes.insert(v);
        }
    }

    for (VertexId v : spiders) {
        if (d.is_internal(v) && d.phase(v).is_proper_clifford()) {
            cs.push_back({Action::Lc, v, 0});
        }
    }
    if (!cs.empty()) {
        return cs;
    }

    std::vector<VertexId> us;
    for (VertexId v : spiders) {
        if (unparam_internal_pauli(d, v) && !axes.count(v)) {
            us.push_back(v);
        }
    }

    // Classes for each internal non-axis 0/pi spider u, by neighbour kind.
    std::vector<Candidate> with_axis;
    std::vector<Candidate> boundary_clifford;
    std::vector<Candidate> gadget;
    std::vector<Candidate> boundary_param;
    for (VertexId u : us) {
        for (const auto& [n, k] : d.neighbours(u)) {
            const Phase& p = d.phase(n);
            if (d.is_internal(n)) {
                if (p.is_pauli()) {
                    if (axes.count(n)) {
                        with_axis.push_back({Action::Pivot, u, n});
                    } else if (u < n) {
                        cs.push_back({Action::Pivot, u, n});
                    }
                } else if (!p.is_clifford() && !is_gadget_leaf(d, n)) {
                    gadget.push_back({Action::GadgetPivot, u, n});
                }
            } else if (p.is_clifford()) {
                boundary_clifford.push_back({Action::BoundaryPivot, u, n});
            } else {
                boundary_param.push_back({Action::BoundaryPivot, u, n});
            }
        }
    }
    for (auto* cls : {&cs, &boundary_clifford, &with_axis, &gadget, &boundary_param}) {
        if (!cls->empty()) {
            return std::move(*cls);
        }
    }

    std::vector<GadgetView> gadgets = find_gadgets(d);
    for (const GadgetView& g : gadgets) {
        if (g.neighbourhood.size() == 1) {
            cs.push_back({Action::IdFuse, g.axis_spider, 0});
        }
    }
    if (!cs.empty()) {
        return cs;
    }

    std::map<std::set<VertexId>, VertexId> first_by_nbhd;
    for (const GadgetView& g : gadgets) {
        auto [it, inserted] = first_by_nbhd.emplace(g.neighbourhood, g.axis_spider);
        if (!inserted) {
            cs.push_back({Action::Fusion, it->second, g.axis_spider});
        }
    }
    if (!cs.empty()) {
        return cs;
    }

    for (VertexId v : spiders) {
        if (d.degree(v) == 0) {
            cs.push_back({Action::Scalar, v, 0});
        }
    }
    for (const GadgetView& g : gadgets) {
        if (g.neighbourhood.empty()) {
            cs.push_back({Action::Scalar, g.axis_spider, 0});
        }
    }
    if (!cs.empty()) {
        return cs;
    }

    for (VertexId v : spiders) {
        auto b = d.boundary_of(v);
        if (b && d.edge(v, *b) == EdgeKind::Hadamard && d.phase(v).is_proper_clifford()) {
            cs.push_back({Action::Decoration, v, 0});
        }
    }
    return cs;
}

}  // namespace

SimplifyResult simplify(Diagram d, const SimplifyOptions& options) {
    SimplifyResult result;
    Chooser chooser(options.seed);
    std::optional<Diagram> before;

    auto emit = [&](RewriteEvent ev) {
        if (options.observer) {
            options.observer(*before, ev, d);
        }
        result.events.push_back(std::move(ev));
    };

    for (std::size_t step = 0;; ++step) {
        if (step >= options.max_steps) {
            throw std::runtime_error("simplify exceeded " + std::to_string(options.max_steps) +
                                     " rewrite steps");
        }
        std::vector<Candidate> cs = next_class(d);
        const Candidate* c = chooser.pick(cs);
        if (!c) {
            break;
        }
        if (options.observer) {
            before = d;
        }
        switch (c->action) {
            case Action::Lc:
                emit(local_complement_simp(d, c->a));
                break;
            case Action::Pivot:
                emit(pivot_simp(d, c->a, c->b));
                break;
            case Action::BoundaryPivot:
                emit(boundary_pivot(d, c->a, c->b));
                break;
            case Action::GadgetPivot:
                emit(gadget_pivot(d, c->a, c->b));
                break;
            case Action::IdFuse:
                emit(gadget_id_fuse(d, *gadget_at(d, c->a)));
                break;
            case Action::Fusion:
                emit(gadget_fusion(d, *gadget_at(d, c->a), *gadget_at(d, c->b)));
                break;
            case Action::Scalar:
                emit(remove_scalar_component(d, c->a));
                break;
            case Action::Decoration:
                emit(normalise_boundary_decoration(d, c->a));
                break;
        }
    }
    result.diagram = std::move(d);
    return result;
}

std::vector<std::string> terminal_form_violations(const Diagram& d) {
    std::vector<std::string> out;
    for (const Violation& v : validate(d).violations) {
        out.push_back("not graph-like: " + v.message);
    }
    for (VertexId v : d.spiders()) {
        const Phase& p = d.phase(v);
        if (d.is_internal(v) && p.is_clifford() && !is_gadget_axis(d, v)) {
            out.push_back("internal Clifford spider " + std::to_string(v));
        }
        auto b = d.boundary_of(v);
        if (b && p.is_proper_clifford() && d.edge(v, *b) == EdgeKind::Hadamard) {
            out.push_back("boundary spider " + std::to_string(v) + " has an S-then-H decoration");
        }
    }
    std::set<std::set<VertexId>> seen;
    for (const GadgetView& g : find_gadgets(d)) {
        if (g.neighbourhood.size() < 2) {
            out.push_back("gadget " + std::to_string(g.axis_spider) + " has " +
                          std::to_string(g.neighbourhood.size()) + " neighbours");
        }
        if (!seen.insert(g.neighbourhood).second) {
            out.push_back("gadget " + std::to_string(g.axis_spider) + " repeats a neighbourhood");
        }
    }
    return out;
}

}  // namespace zxparam
