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

#include "zxparam/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zxparam {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::LocalComp:
            return "local_complement";
        case Rule::Pivot:
            return "pivot";
        case Rule::BoundaryPivot:
            return "boundary_pivot";
        case Rule::GadgetPivot:
            return "gadget_pivot";
        case Rule::GadgetFusion:
            return "gadget_fusion";
        case Rule::GadgetIdFuse:
            return "gadget_id_fuse";
        case Rule::ScalarRemoval:
            return "scalar_removal";
    }
    return "unknown";
}

namespace {

using Snapshot = std::map<VertexId, Phase>;

Snapshot param_snapshot(const Diagram& d) {
    Snapshot s;
    for (const auto& [p, v] : d.param_registry()) {
        s.emplace(v, d.phase(v));
    }
    return s;
}

void record_updates(const Diagram& d, const Snapshot& before, RewriteEvent& ev) {
    std::map<VertexId, Phase> changed;
    for (const auto& [v, ph] : before) {
        if (d.contains(v) && d.phase(v) != ph) {
            changed.emplace(v, d.phase(v));
        }
    }
    for (const auto& [p, v] : d.param_registry()) {
        auto it = before.find(v);
        if (it == before.end() || it->second != d.phase(v)) {
            changed.emplace(v, d.phase(v));
        }
    }
    ev.phase_updates.assign(changed.begin(), changed.end());
}

void finish(RewriteEvent& ev, std::set<VertexId>& touched, const std::set<VertexId>& removed) {
    for (VertexId v : removed) {
        touched.erase(v);
    }
    ev.removed.assign(removed.begin(), removed.end());
    ev.touched.assign(touched.begin(), touched.end());
}

bool all_hadamard_to_spiders(const Diagram& d, VertexId v) {
    for (const auto& [n, k] : d.neighbours(v)) {
        if (k != EdgeKind::Hadamard || !d.is_spider(n)) {
            return false;
        }
    }
    return true;
}

void require_internal_pauli(const Diagram& d, Rule rule, VertexId u) {
    if (!d.contains(u) || !d.is_spider(u)) {
        throw NotApplicable(rule, "vertex " + std::to_string(u) + " is not a spider");
    }
    if (!d.is_internal(u)) {
        throw NotApplicable(rule, "spider " + std::to_string(u) + " is on a boundary");
    }
    if (!d.phase(u).is_pauli()) {
        throw NotApplicable(rule, "spider " + std::to_string(u) + " does not have phase 0 or pi");
    }
    if (!all_hadamard_to_spiders(d, u)) {
        throw NotApplicable(rule, "spider " + std::to_string(u) + " is not graph-like");
    }
}

void require_h_edge(const Diagram& d, Rule rule, VertexId u, VertexId v) {
    if (u == v || d.edge(u, v) != EdgeKind::Hadamard) {
        throw NotApplicable(rule, "no Hadamard edge between " + std::to_string(u) + " and " +
                                      std::to_string(v));
    }
}

// Complements edges among the neighbours of v and removes v.
void lc_core(Diagram& d, VertexId v, std::set<VertexId>& touched, std::set<VertexId>& removed) {
    std::vector<VertexId> nb;
    for (const auto& [n, k] : d.neighbours(v)) {
        nb.push_back(n);
    }
    Phase a = d.phase(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            d.toggle_hadamard_edge(nb[i], nb[j]);
        }
        d.add_to_phase(nb[i], a, -1);
        touched.insert(nb[i]);
    }
    d.remove_vertex(v);
    removed.insert(v);
}

// Pivot along the Hadamard edge u-v; both are 0/pi spiders whose other
// neighbours are all spiders.
void pivot_core(Diagram& d, VertexId u, VertexId v, std::set<VertexId>& touched,
                std::set<VertexId>& removed) {
    std::set<VertexId> nu;
    std::set<VertexId> nv;
    for (const auto& [n, k] : d.neighbours(u)) {
        if (n != v) {
            nu.insert(n);
        }
    }
    for (const auto& [n, k] : d.neighbours(v)) {
        if (n != u) {
            nv.insert(n);
        }
    }
    std::vector<VertexId> a;
    std::vector<VertexId> b;
    std::vector<VertexId> c;
    std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(a));
    std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(b));
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(c));

    auto toggle_all = [&](const std::vector<VertexId>& x, const std::vector<VertexId>& y) {
        for (VertexId p : x) {
            for (VertexId q : y) {
                d.toggle_hadamard_edge(p, q);
            }
        }
    };
    toggle_all(a, b);
    toggle_all(a, c);
    toggle_all(b, c);

    int pu = d.phase(u).clifford();
    int pv = d.phase(v).clifford();
    for (VertexId x : a) {
        d.add_to_phase(x, Phase(pv));
    }
    for (VertexId x : b) {
        d.add_to_phase(x, Phase(pu));
    }
    for (VertexId x : c) {
        d.add_to_phase(x, Phase(pu + pv + 2));
    }
    touched.insert(nu.begin(), nu.end());
    touched.insert(nv.begin(), nv.end());
    d.remove_vertex(u);
    d.remove_vertex(v);
    removed.insert(u);
    removed.insert(v);
}

// Moves the phase of v onto a fresh gadget hanging off v. Returns (axis, leaf).
std::pair<VertexId, VertexId> lift_phase(Diagram& d, VertexId v, std::set<VertexId>& touched) {
    Phase g = d.phase(v);
    d.set_phase(v, Phase());
    VertexId axis = d.add_spider(Phase());
    VertexId leaf = d.add_spider(g);
    d.add_edge(v, axis, EdgeKind::Hadamard);
    d.add_edge(axis, leaf, EdgeKind::Hadamard);
    touched.insert(axis);
    touched.insert(leaf);
    return {axis, leaf};
}

}  // namespace

RewriteEvent local_complement_simp(Diagram& d, VertexId v) {
    constexpr Rule rule = Rule::LocalComp;
    if (!d.contains(v) || !d.is_spider(v)) {
        throw NotApplicable(rule, "vertex " + std::to_string(v) + " is not a spider");
    }
    if (!d.is_internal(v)) {
        throw NotApplicable(rule, "spider " + std::to_string(v) + " is on a boundary");
    }
    if (!d.phase(v).is_proper_clifford()) {
        throw NotApplicable(rule, "spider " + std::to_string(v) + " does not have phase +-pi/2");
    }
    if (!all_hadamard_to_spiders(d, v)) {
        throw NotApplicable(rule, "spider " + std::to_string(v) + " is not graph-like");
    }
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    std::set<VertexId> touched;
    std::set<VertexId> removed;
    lc_core(d, v, touched, removed);
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent pivot_simp(Diagram& d, VertexId u, VertexId v) {
    constexpr Rule rule = Rule::Pivot;
    require_internal_pauli(d, rule, u);
    require_internal_pauli(d, rule, v);
    require_h_edge(d, rule, u, v);
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    std::set<VertexId> touched;
    std::set<VertexId> removed;
    pivot_core(d, u, v, touched, removed);
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent boundary_pivot(Diagram& d, VertexId u, VertexId b) {
    constexpr Rule rule = Rule::BoundaryPivot;
    require_internal_pauli(d, rule, u);
    if (!d.contains(b) || !d.is_spider(b)) {
        throw NotApplicable(rule, "vertex " + std::to_string(b) + " is not a spider");
    }
    require_h_edge(d, rule, u, b);
    auto bnode = d.boundary_of(b);
    if (!bnode) {
        throw NotApplicable(rule, "spider " + std::to_string(b) + " is internal");
    }
    std::size_t n_boundaries = 0;
    for (const auto& [n, k] : d.neighbours(b)) {
        if (d.is_boundary(n)) {
            ++n_boundaries;
        } else if (k != EdgeKind::Hadamard) {
            throw NotApplicable(rule, "spider " + std::to_string(b) + " is not graph-like");
        }
    }
    if (n_boundaries != 1) {
        throw NotApplicable(rule, "spider " + std::to_string(b) + " has several boundaries");
    }

    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    std::set<VertexId> touched;
    std::set<VertexId> removed;

    EdgeKind bk = *d.edge(b, *bnode);
    d.remove_edge(b, *bnode);
    VertexId w = d.add_spider(Phase());
    d.add_edge(b, w, EdgeKind::Hadamard);
    d.add_edge(w, *bnode, toggled(bk));
    touched.insert(w);

    const Phase gamma = d.phase(b);
    if (gamma.is_pauli()) {
        pivot_core(d, u, b, touched, removed);
    } else {
        auto [axis, leaf] = lift_phase(d, b, touched);
        pivot_core(d, u, b, touched, removed);
        if (gamma.is_clifford()) {
            lc_core(d, leaf, touched, removed);
            lc_core(d, axis, touched, removed);
        }
    }
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent gadget_pivot(Diagram& d, VertexId u, VertexId w) {
    constexpr Rule rule = Rule::GadgetPivot;
    require_internal_pauli(d, rule, u);
    if (!d.contains(w) || !d.is_spider(w) || !d.is_internal(w)) {
        throw NotApplicable(rule, "vertex " + std::to_string(w) + " is not an internal spider");
    }
    if (d.phase(w).is_clifford()) {
        throw NotApplicable(rule, "spider " + std::to_string(w) + " carries no parameter");
    }
    if (!all_hadamard_to_spiders(d, w)) {
        throw NotApplicable(rule, "spider " + std::to_string(w) + " is not graph-like");
    }
    require_h_edge(d, rule, u, w);
    if (is_gadget_leaf(d, w)) {
        throw NotApplicable(rule, "spider " + std::to_string(w) + " is already a gadget leaf");
    }
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    std::set<VertexId> touched;
    std::set<VertexId> removed;
    lift_phase(d, w, touched);
    pivot_core(d, u, w, touched, removed);
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent gadget_fusion(Diagram& d, const GadgetView& g1, const GadgetView& g2) {
    constexpr Rule rule = Rule::GadgetFusion;
    if (g1.axis_spider == g2.axis_spider) {
        throw NotApplicable(rule, "a gadget cannot fuse with itself");
    }
    if (gadget_at(d, g1.axis_spider) != g1 || gadget_at(d, g2.axis_spider) != g2) {
        throw NotApplicable(rule, "gadget view does not match the diagram");
    }
    if (g1.neighbourhood != g2.neighbourhood) {
        throw NotApplicable(rule, "gadget neighbourhoods differ");
    }
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    const int sign = d.phase(g1.axis_spider).clifford() == d.phase(g2.axis_spider).clifford() ? 1 : -1;
    const Phase gamma2 = d.phase(g2.phase_spider);
    const bool both_param = !d.phase(g1.phase_spider).is_clifford() && !gamma2.is_clifford();

    d.remove_vertex(g2.phase_spider);
    d.remove_vertex(g2.axis_spider);
    d.add_to_phase(g1.phase_spider, gamma2, sign);
    if (sign < 0) {
        ev.global_phase = gamma2;
    }
    if (both_param) {
        ParamMerge m;
        m.survivor = g1.phase_spider;
        for (const auto& [p, s] : gamma2.terms()) {
            m.absorbed.emplace_back(p, s * sign);
        }
        ev.param_merge = std::move(m);
    }
    std::set<VertexId> touched{g1.phase_spider};
    std::set<VertexId> removed{g2.axis_spider, g2.phase_spider};
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent gadget_id_fuse(Diagram& d, const GadgetView& g) {
    constexpr Rule rule = Rule::GadgetIdFuse;
    if (gadget_at(d, g.axis_spider) != g) {
        throw NotApplicable(rule, "gadget view does not match the diagram");
    }
    if (g.neighbourhood.size() != 1) {
        throw NotApplicable(rule, "gadget has " + std::to_string(g.neighbourhood.size()) +
                                      " neighbours");
    }
    const VertexId n = *g.neighbourhood.begin();
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    const bool pi_axis = d.phase(g.axis_spider).clifford() == 2;
    const int sign = pi_axis ? -1 : 1;
    const Phase gamma = d.phase(g.phase_spider);
    const bool both_param = !d.phase(n).is_clifford() && !gamma.is_clifford();

    d.remove_vertex(g.phase_spider);
    d.remove_vertex(g.axis_spider);
    d.add_to_phase(n, gamma, sign);
    if (pi_axis) {
        ev.global_phase = gamma;
    }
    if (both_param) {
        ParamMerge m;
        m.survivor = n;
        for (const auto& [p, s] : gamma.terms()) {
            m.absorbed.emplace_back(p, s * sign);
        }
        ev.param_merge = std::move(m);
    }
    std::set<VertexId> touched{n};
    std::set<VertexId> removed{g.axis_spider, g.phase_spider};
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

RewriteEvent remove_scalar_component(Diagram& d, VertexId v) {
    constexpr Rule rule = Rule::ScalarRemoval;
    if (!d.contains(v) || !d.is_spider(v)) {
        throw NotApplicable(rule, "vertex " + std::to_string(v) + " is not a spider");
    }
    RewriteEvent ev;
    ev.rule = rule;
    if (d.degree(v) == 0) {
        for (const auto& [p, s] : d.phase(v).terms()) {
            ev.eliminated.push_back(p);
        }
        d.remove_vertex(v);
        ev.removed = {v};
        return ev;
    }
    auto g = gadget_at(d, v);
    if (!g || !g->neighbourhood.empty()) {
        throw NotApplicable(rule, "spider " + std::to_string(v) + " is not part of a scalar");
    }
    const Phase gamma = d.phase(g->phase_spider);
    for (const auto& [p, s] : gamma.terms()) {
        ev.eliminated.push_back(p);
    }
    if (d.phase(g->axis_spider).clifford() == 2) {
        ev.global_phase = gamma;
    }
    d.remove_vertex(g->phase_spider);
    d.remove_vertex(g->axis_spider);
    ev.removed = {std::min(g->axis_spider, g->phase_spider), std::max(g->axis_spider, g->phase_spider)};
    return ev;
}

std::vector<RewriteEvent> remove_scalar_spiders(Diagram& d) {
    std::vector<RewriteEvent> out;
    for (VertexId v : d.spiders()) {
        if (d.contains(v) && (d.degree(v) == 0 || (is_gadget_axis(d, v) && d.degree(v) == 1))) {
            out.push_back(remove_scalar_component(d, v));
        }
    }
    return out;
}

RewriteEvent normalise_boundary_decoration(Diagram& d, VertexId w) {
    constexpr Rule rule = Rule::LocalComp;
    if (!d.contains(w) || !d.is_spider(w)) {
        throw NotApplicable(rule, "vertex " + std::to_string(w) + " is not a spider");
    }
    auto bnode = d.boundary_of(w);
    if (!bnode || d.edge(w, *bnode) != EdgeKind::Hadamard) {
        throw NotApplicable(rule, "spider " + std::to_string(w) + " has no Hadamard boundary edge");
    }
    if (!d.phase(w).is_proper_clifford()) {
        throw NotApplicable(rule, "spider " + std::to_string(w) + " does not have phase +-pi/2");
    }
    for (const auto& [n, k] : d.neighbours(w)) {
        if (n != *bnode && (d.is_boundary(n) || k != EdgeKind::Hadamard)) {
            throw NotApplicable(rule, "spider " + std::to_string(w) + " is not graph-like");
        }
    }
    Snapshot before = param_snapshot(d);
    RewriteEvent ev;
    ev.rule = rule;
    std::set<VertexId> touched;
    std::set<VertexId> removed;
    d.remove_edge(w, *bnode);
    VertexId w2 = d.add_spider(Phase());
    d.add_edge(w, w2, EdgeKind::Hadamard);
    d.add_edge(w2, *bnode, EdgeKind::Plain);
    touched.insert(w2);
    lc_core(d, w, touched, removed);
    finish(ev, touched, removed);
    record_updates(d, before, ev);
    return ev;
}

}  // namespace zxparam
