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
#include <map>
#include <numeric>
#include <set>

#include "zxparam/diagram.hpp"

namespace zxparam {
namespace {

struct TypedEdge {
    int a;
    int b;
    EdgeKind kind;
};

class UnionFind {
   public:
    int find(int x) {
        auto it = parent_.find(x);
        if (it == parent_.end()) {
            parent_[x] = x;
            return x;
        }
        if (it->second == x) {
            return x;
        }
        int r = find(it->second);
        parent_[x] = r;
        return r;
    }
    // The smaller id becomes the representative.
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
    }

   private:
    std::map<int, int> parent_;
};

// Removes Hadamard boxes by splicing their two wires together with the kind toggled.
std::vector<TypedEdge> splice_hboxes(const SpiderNetwork& raw, const std::map<int, NodeKind>& kinds) {
    std::vector<TypedEdge> edges;
    for (const auto& w : raw.wires) {
        if (kinds.count(w.a) == 0 || kinds.count(w.b) == 0) {
            throw std::invalid_argument("wire references unknown node");
        }
        edges.push_back({w.a, w.b, w.kind});
    }
    for (const auto& node : raw.nodes) {
        if (node.kind != NodeKind::HBox) {
            continue;
        }
        int h = node.id;
        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].a == h) {
                incident.push_back(i);
            }
            if (edges[i].b == h) {
                incident.push_back(i);
            }
        }
        if (incident.size() != 2) {
            throw std::invalid_argument("Hadamard box " + std::to_string(h) + " must have degree 2");
        }
        if (incident[0] == incident[1]) {
            throw std::invalid_argument("Hadamard box " + std::to_string(h) +
                                        " is wired to itself (zero scalar)");
        }
        auto other = [&](const TypedEdge& e) { return e.a == h ? e.b : e.a; };
        const TypedEdge e1 = edges[incident[0]];
        const TypedEdge e2 = edges[incident[1]];
        bool hadamard = (e1.kind == EdgeKind::Hadamard) != (e2.kind == EdgeKind::Hadamard);
        TypedEdge merged{other(e1), other(e2), hadamard ? EdgeKind::Plain : EdgeKind::Hadamard};
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::max(incident[0], incident[1])));
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::min(incident[0], incident[1])));
        edges.push_back(merged);
    }
    return edges;
}

}  // namespace

Diagram to_graph_like(const SpiderNetwork& raw) {
    std::map<int, NodeKind> kinds;
    std::map<int, const NetworkNode*> by_id;
    for (const auto& n : raw.nodes) {
        if (!kinds.emplace(n.id, n.kind).second) {
            throw std::invalid_argument("duplicate node id " + std::to_string(n.id));
        }
        by_id[n.id] = &n;
    }

    // Parameter uniqueness over the raw network.
    std::set<ParamId> seen;
    for (const auto& n : raw.nodes) {
        if (n.kind == NodeKind::Z || n.kind == NodeKind::X) {
            for (const auto& [p, s] : n.phase.terms()) {
                if (!seen.insert(p).second) {
                    throw RepeatedParameter(p);
                }
            }
        }
    }

    auto edges = splice_hboxes(raw, kinds);

    // Colour change: an X spider is a Z spider with a Hadamard on every leg.
    auto is_x = [&](int id) { return kinds.at(id) == NodeKind::X; };
    for (auto& e : edges) {
        bool flip = is_x(e.a) != is_x(e.b);
        if (e.a == e.b) {
            flip = false;
        }
        if (flip) {
            e.kind = toggled(e.kind);
        }
    }

    auto is_spider = [&](int id) { return kinds.at(id) == NodeKind::Z || kinds.at(id) == NodeKind::X; };

    std::map<int, int> boundary_degree;
    for (const auto& e : edges) {
        if (!is_spider(e.a)) {
            ++boundary_degree[e.a];
        }
        if (!is_spider(e.b)) {
            ++boundary_degree[e.b];
        }
    }
    for (const auto& n : raw.nodes) {
        if (n.kind == NodeKind::Boundary && boundary_degree[n.id] != 1) {
            throw std::invalid_argument("boundary node " + std::to_string(n.id) + " must have degree 1");
        }
    }

    // Spider fusion along plain spider-spider wires.
    UnionFind uf;
    for (const auto& e : edges) {
        if (e.kind == EdgeKind::Plain && is_spider(e.a) && is_spider(e.b)) {
            uf.unite(e.a, e.b);
        }
    }
    std::map<int, Phase> group_phase;
    for (const auto& n : raw.nodes) {
        if (n.kind == NodeKind::Z || n.kind == NodeKind::X) {
            group_phase[uf.find(n.id)].add(n.phase);
        }
    }

    // Resolve edges between groups: plain self-loops vanish, Hadamard self-loops
    // contribute pi, parallel Hadamard edges cancel in pairs.
    std::map<std::pair<int, int>, int> hadamard_parity;
    std::vector<TypedEdge> boundary_edges;
    for (const auto& e : edges) {
        bool sa = is_spider(e.a);
        bool sb = is_spider(e.b);
        if (sa && sb) {
            int a = uf.find(e.a);
            int b = uf.find(e.b);
            if (a == b) {
                if (e.kind == EdgeKind::Hadamard) {
                    group_phase[a].add_clifford(2);
                }
                continue;
            }
            hadamard_parity[{std::min(a, b), std::max(a, b)}] ^= 1;
        } else {
            int a = sa ? uf.find(e.a) : e.a;
            int b = sb ? uf.find(e.b) : e.b;
            boundary_edges.push_back({a, b, e.kind});
        }
    }

    Diagram d;
    for (const auto& n : raw.nodes) {
        if (n.kind == NodeKind::Boundary) {
            d.add_boundary_at(n.id, n.boundary.kind, n.boundary.position);
        }
    }
    for (const auto& [id, phase] : group_phase) {
        d.add_spider_at(id, phase);
    }
    // Fresh ids for inserted spiders start above every raw id.
    int fresh = raw.next_id();
    auto new_spider = [&]() {
        d.add_spider_at(fresh, Phase{});
        return fresh++;
    };

    for (const auto& [pair, parity] : hadamard_parity) {
        if (parity != 0) {
            d.add_edge(pair.first, pair.second, EdgeKind::Hadamard);
        }
    }

    std::sort(boundary_edges.begin(), boundary_edges.end(), [](const TypedEdge& x, const TypedEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (auto e : boundary_edges) {
        bool sa = d.is_spider(e.a);
        bool sb = d.is_spider(e.b);
        if (!sa && !sb) {
            if (e.kind == EdgeKind::Plain) {
                d.add_edge(e.a, e.b, EdgeKind::Plain);
            } else {
                int s1 = new_spider();
                int s2 = new_spider();
                d.add_edge(e.a, s1, EdgeKind::Plain);
                d.add_edge(s1, s2, EdgeKind::Hadamard);
                d.add_edge(s2, e.b, EdgeKind::Plain);
            }
            continue;
        }
        int spider = sa ? e.a : e.b;
        int boundary = sa ? e.b : e.a;
        if (e.kind == EdgeKind::Hadamard) {
            // B -H- s  ==  B - w(0) -H- s
            int w = new_spider();
            d.add_edge(boundary, w, EdgeKind::Plain);
            d.add_edge(w, spider, EdgeKind::Hadamard);
        } else if (d.boundary_of(spider).has_value()) {
            // s - B  ==  s -H- x(0) -H- y(0) - B
            int x = new_spider();
            int y = new_spider();
            d.add_edge(spider, x, EdgeKind::Hadamard);
            d.add_edge(x, y, EdgeKind::Hadamard);
            d.add_edge(y, boundary, EdgeKind::Plain);
        } else {
            d.add_edge(spider, boundary, EdgeKind::Plain);
        }
    }
    return d;
}

}  // namespace zxparam
