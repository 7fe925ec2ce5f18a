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

#include "zxparam/diagram.hpp"

#include <algorithm>

namespace zxparam {

const Diagram::VertexData& Diagram::at(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw std::out_of_range("no vertex " + std::to_string(v));
    }
    return it->second;
}

Diagram::VertexData& Diagram::at(VertexId v) {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw std::out_of_range("no vertex " + std::to_string(v));
    }
    return it->second;
}

void Diagram::bump_id(VertexId id) {
    if (vertices_.count(id) != 0) {
        throw std::invalid_argument("vertex id " + std::to_string(id) + " already in use");
    }
    next_id_ = std::max(next_id_, id + 1);
}

VertexId Diagram::add_boundary(BoundaryKind kind, int position) {
    VertexId id = next_id_;
    add_boundary_at(id, kind, position);
    return id;
}

VertexId Diagram::add_spider(Phase phase) {
    VertexId id = next_id_;
    add_spider_at(id, std::move(phase));
    return id;
}

void Diagram::add_boundary_at(VertexId id, BoundaryKind kind, int position) {
    bump_id(id);
    VertexData data;
    data.type = VertexType::Boundary;
    data.boundary = {kind, position};
    vertices_.emplace(id, std::move(data));
}

void Diagram::add_spider_at(VertexId id, Phase phase) {
    bump_id(id);
    claim_params(id, phase);
    VertexData data;
    data.type = VertexType::ZSpider;
    data.phase = std::move(phase);
    vertices_.emplace(id, std::move(data));
}

void Diagram::claim_params(VertexId v, const Phase& phase) {
    for (const auto& [p, s] : phase.terms()) {
        auto it = registry_.find(p);
        if (it != registry_.end() && it->second != v) {
            throw RepeatedParameter(p);
        }
    }
    for (const auto& [p, s] : phase.terms()) {
        registry_[p] = v;
    }
}

void Diagram::release_params(VertexId v, const Phase& phase) {
    for (const auto& [p, s] : phase.terms()) {
        auto it = registry_.find(p);
        if (it != registry_.end() && it->second == v) {
            registry_.erase(it);
        }
    }
}

void Diagram::add_edge(VertexId u, VertexId v, EdgeKind kind) {
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
    auto& du = at(u);
    auto& dv = at(v);
    if (du.nbrs.count(v) != 0) {
        throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " already exists");
    }
    du.nbrs[v] = kind;
    dv.nbrs[u] = kind;
}

void Diagram::toggle_hadamard_edge(VertexId u, VertexId v) {
    auto e = edge(u, v);
    if (!e) {
        add_edge(u, v, EdgeKind::Hadamard);
    } else if (*e == EdgeKind::Hadamard) {
        remove_edge(u, v);
    } else {
        throw std::logic_error("cannot toggle a Hadamard edge over a plain edge " +
                               std::to_string(u) + "-" + std::to_string(v));
    }
}

void Diagram::set_edge_kind(VertexId u, VertexId v, EdgeKind kind) {
    auto& du = at(u);
    auto it = du.nbrs.find(v);
    if (it == du.nbrs.end()) {
        throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    it->second = kind;
    at(v).nbrs[u] = kind;
}

void Diagram::remove_edge(VertexId u, VertexId v) {
    auto& du = at(u);
    if (du.nbrs.erase(v) == 0) {
        throw std::out_of_range("no edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    at(v).nbrs.erase(u);
}

void Diagram::remove_vertex(VertexId v) {
    auto& dv = at(v);
    for (const auto& [n, k] : dv.nbrs) {
        if (n != v) {
            at(n).nbrs.erase(v);
        }
    }
    release_params(v, dv.phase);
    vertices_.erase(v);
}

void Diagram::set_phase(VertexId v, Phase phase) {
    auto& dv = at(v);
    if (dv.type != VertexType::ZSpider) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not a spider");
    }
    release_params(v, dv.phase);
    try {
        claim_params(v, phase);
    } catch (...) {
        claim_params(v, dv.phase);
        throw;
    }
    dv.phase = std::move(phase);
}

void Diagram::add_to_phase(VertexId v, const Phase& delta, int sign) {
    Phase p = phase(v);
    p.add(delta, sign);
    set_phase(v, std::move(p));
}

const BoundaryInfo& Diagram::boundary_info(VertexId v) const {
    const auto& dv = at(v);
    if (dv.type != VertexType::Boundary) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not a boundary");
    }
    return dv.boundary;
}

const Phase& Diagram::phase(VertexId v) const {
    const auto& dv = at(v);
    if (dv.type != VertexType::ZSpider) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not a spider");
    }
    return dv.phase;
}

std::optional<EdgeKind> Diagram::edge(VertexId u, VertexId v) const {
    const auto& du = at(u);
    auto it = du.nbrs.find(v);
    if (it == du.nbrs.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<VertexId> Diagram::boundary_of(VertexId v) const {
    for (const auto& [n, k] : at(v).nbrs) {
        if (at(n).type == VertexType::Boundary) {
            return n;
        }
    }
    return std::nullopt;
}

std::vector<VertexId> Diagram::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size());
    for (const auto& [id, data] : vertices_) {
        out.push_back(id);
    }
    return out;
}

std::vector<VertexId> Diagram::spiders() const {
    std::vector<VertexId> out;
    for (const auto& [id, data] : vertices_) {
        if (data.type == VertexType::ZSpider) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<VertexId> Diagram::boundaries() const {
    std::vector<VertexId> out;
    for (const auto& [id, data] : vertices_) {
        if (data.type == VertexType::Boundary) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<VertexId> Diagram::wire_order() const {
    auto out = boundaries();
    std::stable_sort(out.begin(), out.end(), [this](VertexId a, VertexId b) {
        return at(a).boundary < at(b).boundary;
    });
    return out;
}

std::size_t Diagram::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [id, data] : vertices_) {
        twice += data.nbrs.size();
    }
    return twice / 2;
}

std::vector<std::tuple<VertexId, VertexId, EdgeKind>> Diagram::edges() const {
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> out;
    for (const auto& [id, data] : vertices_) {
        for (const auto& [n, k] : data.nbrs) {
            if (id <= n) {
                out.emplace_back(id, n, k);
            }
        }
    }
    return out;
}

std::vector<VertexId> Diagram::parametrised_spiders() const {
    std::vector<VertexId> out;
    for (const auto& [id, data] : vertices_) {
        if (data.type == VertexType::ZSpider && !data.phase.is_clifford()) {
            out.push_back(id);
        }
    }
    return out;
}

void Diagram::insert_edge_unchecked(VertexId u, VertexId v, EdgeKind kind) {
    at(u).nbrs[v] = kind;
    at(v).nbrs[u] = kind;
}

bool operator==(const Diagram& a, const Diagram& b) {
    if (a.vertices_.size() != b.vertices_.size()) {
        return false;
    }
    for (auto ia = a.vertices_.begin(), ib = b.vertices_.begin(); ia != a.vertices_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) {
            return false;
        }
        const auto& x = ia->second;
        const auto& y = ib->second;
        if (x.type != y.type || x.nbrs != y.nbrs) {
            return false;
        }
        if (x.type == VertexType::Boundary ? x.boundary != y.boundary : x.phase != y.phase) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

int SpiderNetwork::next_id() const {
    int id = 0;
    for (const auto& n : nodes) {
        id = std::max(id, n.id + 1);
    }
    return id;
}

int SpiderNetwork::add_boundary(BoundaryKind kind, int position) {
    NetworkNode n;
    n.id = next_id();
    n.kind = NodeKind::Boundary;
    n.boundary = {kind, position};
    nodes.push_back(n);
    return n.id;
}

int SpiderNetwork::add_z(Phase phase) {
    NetworkNode n;
    n.id = next_id();
    n.kind = NodeKind::Z;
    n.phase = std::move(phase);
    nodes.push_back(std::move(n));
    return nodes.back().id;
}

int SpiderNetwork::add_x(Phase phase) {
    NetworkNode n;
    n.id = next_id();
    n.kind = NodeKind::X;
    n.phase = std::move(phase);
    nodes.push_back(std::move(n));
    return nodes.back().id;
}

int SpiderNetwork::add_hbox() {
    NetworkNode n;
    n.id = next_id();
    n.kind = NodeKind::HBox;
    nodes.push_back(n);
    return n.id;
}

void SpiderNetwork::connect(int a, int b, EdgeKind kind) {
    wires.push_back({a, b, kind});
}

SpiderNetwork to_network(const Diagram& d) {
    SpiderNetwork net;
    for (VertexId v : d.vertices()) {
        NetworkNode n;
        n.id = v;
        if (d.is_boundary(v)) {
            n.kind = NodeKind::Boundary;
            n.boundary = d.boundary_info(v);
        } else {
            n.kind = NodeKind::Z;
            n.phase = d.phase(v);
        }
        net.nodes.push_back(std::move(n));
    }
    for (const auto& [u, v, k] : d.edges()) {
        net.connect(u, v, k);
    }
    return net;
}

// ---------------------------------------------------------------------------

std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::SelfLoop:
            return "self-loop";
        case ViolationKind::AsymmetricEdge:
            return "asymmetric-edge";
        case ViolationKind::PlainSpiderEdge:
            return "plain-spider-edge";
        case ViolationKind::BoundaryDegree:
            return "boundary-degree";
        case ViolationKind::HadamardBoundaryPair:
            return "hadamard-boundary-pair";
        case ViolationKind::MultipleBoundaries:
            return "multiple-boundaries";
        case ViolationKind::RegistryMismatch:
            return "registry-mismatch";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
}

ValidationReport validate(const Diagram& d) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::vector<VertexId> vs, std::string msg,
                   std::optional<ParamId> p = std::nullopt) {
        report.violations.push_back({kind, std::move(vs), p, std::move(msg)});
    };

    for (VertexId v : d.vertices()) {
        std::size_t n_boundaries = 0;
        for (const auto& [n, k] : d.neighbours(v)) {
            if (n == v) {
                add(ViolationKind::SelfLoop, {v}, "vertex " + std::to_string(v) + " has a self-loop");
                continue;
            }
            if (!d.contains(n) || d.edge(n, v) != k) {
                add(ViolationKind::AsymmetricEdge, {v, n},
                    "edge " + std::to_string(v) + "-" + std::to_string(n) + " is not symmetric");
                continue;
            }
            if (d.is_boundary(n)) {
                ++n_boundaries;
            }
            if (v < n && d.is_spider(v) && d.is_spider(n) && k == EdgeKind::Plain) {
                add(ViolationKind::PlainSpiderEdge, {v, n},
                    "spiders " + std::to_string(v) + " and " + std::to_string(n) +
                        " are joined by a plain edge");
            }
            if (v < n && d.is_boundary(v) && d.is_boundary(n) && k == EdgeKind::Hadamard) {
                add(ViolationKind::HadamardBoundaryPair, {v, n},
                    "boundaries " + std::to_string(v) + " and " + std::to_string(n) +
                        " are joined by a Hadamard edge");
            }
        }
        if (d.is_boundary(v) && d.degree(v) != 1) {
            add(ViolationKind::BoundaryDegree, {v},
                "boundary " + std::to_string(v) + " has degree " + std::to_string(d.degree(v)));
        }
        if (d.is_spider(v) && n_boundaries > 1) {
            add(ViolationKind::MultipleBoundaries, {v},
                "spider " + std::to_string(v) + " touches " + std::to_string(n_boundaries) +
                    " boundaries");
        }
    }

    const auto& reg = d.param_registry();
    for (VertexId v : d.spiders()) {
        for (const auto& [p, s] : d.phase(v).terms()) {
            auto it = reg.find(p);
            if (it == reg.end() || it->second != v) {
                add(ViolationKind::RegistryMismatch, {v},
                    "parameter " + std::to_string(p) + " on spider " + std::to_string(v) +
                        " is not registered to it",
                    p);
            }
        }
    }
    for (const auto& [p, v] : reg) {
        bool owned = d.contains(v) && d.is_spider(v) && d.phase(v).terms().count(p) != 0;
        if (!owned) {
            add(ViolationKind::RegistryMismatch, {v},
                "registry maps parameter " + std::to_string(p) + " to vertex " + std::to_string(v) +
                    " which does not carry it",
                p);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

std::optional<VertexId> gadget_leaf(const Diagram& d, VertexId axis) {
    if (!d.contains(axis) || !d.is_spider(axis) || !d.phase(axis).is_pauli() || !d.is_internal(axis)) {
        return std::nullopt;
    }
    for (const auto& [n, k] : d.neighbours(axis)) {
        if (k == EdgeKind::Hadamard && d.is_spider(n) && d.degree(n) == 1 &&
            !d.phase(n).is_clifford()) {
            return n;
        }
    }
    return std::nullopt;
}

bool is_gadget_axis(const Diagram& d, VertexId v) {
    return gadget_leaf(d, v).has_value();
}

bool is_gadget_leaf(const Diagram& d, VertexId v) {
    if (!d.is_spider(v) || d.degree(v) != 1) {
        return false;
    }
    VertexId axis = d.neighbours(v).begin()->first;
    return gadget_leaf(d, axis) == v;
}

std::optional<GadgetView> gadget_at(const Diagram& d, VertexId axis) {
    auto leaf = gadget_leaf(d, axis);
    if (!leaf) {
        return std::nullopt;
    }
    GadgetView g;
    g.axis_spider = axis;
    g.phase_spider = *leaf;
    for (const auto& [n, k] : d.neighbours(axis)) {
        if (n != *leaf) {
            g.neighbourhood.insert(n);
        }
    }
    return g;
}

std::vector<GadgetView> find_gadgets(const Diagram& d) {
    std::vector<GadgetView> out;
    for (VertexId v : d.spiders()) {
        if (auto g = gadget_at(d, v)) {
            out.push_back(std::move(*g));
        }
    }
    return out;
}

}  // namespace zxparam
