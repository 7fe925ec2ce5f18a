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
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "zxparam/verifier.hpp"

namespace zxparam {

namespace {

constexpr std::size_t kMaxFactorVars = 24;

struct Factor {
    std::vector<int> vars;  // sorted; bit i of an index is vars[i]
    std::vector<cplx> table;
};

Factor multiply(const Factor& f, const Factor& g) {
    Factor out;
    std::set_union(f.vars.begin(), f.vars.end(), g.vars.begin(), g.vars.end(),
                   std::back_inserter(out.vars));
    if (out.vars.size() > kMaxFactorVars) {
        throw TooLarge("intermediate tensor over " + std::to_string(out.vars.size()) + " indices");
    }
    const std::size_t n = out.vars.size();
    std::vector<std::size_t> fbit(n, 0);
    std::vector<std::size_t> gbit(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        auto fi = std::find(f.vars.begin(), f.vars.end(), out.vars[k]);
        auto gi = std::find(g.vars.begin(), g.vars.end(), out.vars[k]);
        fbit[k] = fi == f.vars.end() ? 0 : std::size_t{1} << (fi - f.vars.begin());
        gbit[k] = gi == g.vars.end() ? 0 : std::size_t{1} << (gi - g.vars.begin());
    }
    out.table.resize(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
        std::size_t a = 0;
        std::size_t b = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if ((idx >> k) & 1U) {
                a |= fbit[k];
                b |= gbit[k];
            }
        }
        out.table[idx] = f.table[a] * g.table[b];
    }
    return out;
}

Factor sum_out(const Factor& f, int var) {
    auto it = std::find(f.vars.begin(), f.vars.end(), var);
    const std::size_t pos = static_cast<std::size_t>(it - f.vars.begin());
    Factor out;
    out.vars = f.vars;
    out.vars.erase(out.vars.begin() + static_cast<std::ptrdiff_t>(pos));
    out.table.assign(std::size_t{1} << out.vars.size(), cplx{0.0, 0.0});
    const std::size_t low = (std::size_t{1} << pos) - 1;
    for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
        const std::size_t base = (idx & low) | ((idx & ~low) << 1);
        out.table[idx] = f.table[base] + f.table[base | (std::size_t{1} << pos)];
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
};

std::vector<double> dense_assignment(const SpiderNetwork& net, const Assignment& assignment) {
    ParamId top = -1;
    for (const auto& [p, v] : assignment) {
        top = std::max(top, p);
    }
    std::vector<double> alpha(static_cast<std::size_t>(top + 1), std::numeric_limits<double>::quiet_NaN());
    for (const auto& [p, v] : assignment) {
        if (p >= 0) {
            alpha[static_cast<std::size_t>(p)] = v;
        }
    }
    for (const NetworkNode& n : net.nodes) {
        for (const auto& [p, s] : n.phase.terms()) {
            if (p < 0 || static_cast<std::size_t>(p) >= alpha.size() ||
                std::isnan(alpha[static_cast<std::size_t>(p)])) {
                throw MissingAssignment(p);
            }
        }
    }
    return alpha;
}

}  // namespace

TensorState tensor_eval(const SpiderNetwork& net, const Assignment& assignment) {
    const std::vector<double> alpha = dense_assignment(net, assignment);

    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        index.emplace(net.nodes[i].id, i);
    }
    auto node = [&](int id) -> const NetworkNode& {
        auto it = index.find(id);
        if (it == index.end()) {
            throw std::invalid_argument("wire references unknown node " + std::to_string(id));
        }
        return net.nodes[it->second];
    };

    // Splice arity-2 H-boxes into Hadamard-toggled wires.
    struct W {
        int a;
        int b;
        EdgeKind kind;
        bool live;
    };
    std::vector<W> wires;
    std::map<int, std::vector<std::size_t>> ends;
    for (const NetworkWire& w : net.wires) {
        node(w.a);
        node(w.b);
        wires.push_back({w.a, w.b, w.kind, true});
        ends[w.a].push_back(wires.size() - 1);
        ends[w.b].push_back(wires.size() - 1);
    }
    for (const NetworkNode& n : net.nodes) {
        if (n.kind != NodeKind::HBox) {
            continue;
        }
        std::vector<std::size_t> live;
        for (std::size_t wi : ends[n.id]) {
            if (wires[wi].live) {
                live.push_back(wi);
            }
        }
        if (live.size() != 2 || live[0] == live[1]) {
            throw std::invalid_argument("H-box " + std::to_string(n.id) + " must have exactly two distinct wires");
        }
        auto other = [&](std::size_t wi) { return wires[wi].a == n.id ? wires[wi].b : wires[wi].a; };
        const int x = other(live[0]);
        const int y = other(live[1]);
        EdgeKind k = toggled(wires[live[0]].kind == wires[live[1]].kind ? EdgeKind::Plain : EdgeKind::Hadamard);
        wires[live[0]].live = false;
        wires[live[1]].live = false;
        wires.push_back({x, y, k, true});
        ends[x].push_back(wires.size() - 1);
        ends[y].push_back(wires.size() - 1);
    }

    std::vector<int> boundary_ids;
    for (const NetworkNode& n : net.nodes) {
        if (n.kind == NodeKind::Boundary) {
            boundary_ids.push_back(n.id);
        }
    }
    std::sort(boundary_ids.begin(), boundary_ids.end(), [&](int a, int b) {
        const auto& na = node(a).boundary;
        const auto& nb = node(b).boundary;
        return na != nb ? na < nb : a < b;
    });
    if (boundary_ids.size() > static_cast<std::size_t>(kMaxTensorWires)) {
        throw TooLarge(std::to_string(boundary_ids.size()) + " open wires exceed the limit of " +
                       std::to_string(kMaxTensorWires));
    }

    // One binary variable per node; X spiders are colour-changed.
    UnionFind uf(net.nodes.size());
    std::vector<std::pair<int, int>> hadamards;
    for (const W& w : wires) {
        if (!w.live) {
            continue;
        }
        EdgeKind k = w.kind;
        if (node(w.a).kind == NodeKind::X) {
            k = toggled(k);
        }
        if (node(w.b).kind == NodeKind::X) {
            k = toggled(k);
        }
        const int ia = static_cast<int>(index.at(w.a));
        const int ib = static_cast<int>(index.at(w.b));
        if (k == EdgeKind::Plain) {
            uf.unite(ia, ib);
        } else {
            hadamards.emplace_back(ia, ib);
        }
    }

    std::vector<Factor> factors;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (auto [ia, ib] : hadamards) {
        int a = uf.find(ia);
        int b = uf.find(ib);
        if (a == b) {
            factors.push_back({{a}, {inv_sqrt2, -inv_sqrt2}});
        } else {
            Factor f;
            f.vars = {std::min(a, b), std::max(a, b)};
            f.table = {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
            factors.push_back(std::move(f));
        }
    }
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        const NetworkNode& n = net.nodes[i];
        if (n.kind != NodeKind::Z && n.kind != NodeKind::X) {
            continue;
        }
        if (n.phase == Phase()) {
            continue;
        }
        factors.push_back({{uf.find(static_cast<int>(i))}, {cplx{1.0, 0.0}, n.phase.unit(alpha)}});
    }

    std::set<int> kept;
    for (int b : boundary_ids) {
        kept.insert(uf.find(static_cast<int>(index.at(b))));
    }
    std::set<int> to_eliminate;
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (net.nodes[i].kind == NodeKind::HBox) {
            continue;
        }
        const int r = uf.find(static_cast<int>(i));
        if (!kept.count(r)) {
            to_eliminate.insert(r);
        }
    }

    cplx scalar{1.0, 0.0};
    while (!to_eliminate.empty()) {
        int best = -1;
        std::size_t best_deg = std::numeric_limits<std::size_t>::max();
        for (int v : to_eliminate) {
            std::set<int> nb;
            for (const Factor& f : factors) {
                if (std::binary_search(f.vars.begin(), f.vars.end(), v)) {
                    nb.insert(f.vars.begin(), f.vars.end());
                }
            }
            if (nb.size() < best_deg) {
                best_deg = nb.size();
                best = v;
            }
        }
        to_eliminate.erase(best);
        Factor prod{{}, {cplx{1.0, 0.0}}};
        std::vector<Factor> rest;
        bool any = false;
        for (Factor& f : factors) {
            if (std::binary_search(f.vars.begin(), f.vars.end(), best)) {
                prod = multiply(prod, f);
                any = true;
            } else {
                rest.push_back(std::move(f));
            }
        }
        factors = std::move(rest);
        if (!any) {
            scalar *= 2.0;
            continue;
        }
        Factor s = sum_out(prod, best);
        if (s.vars.empty()) {
            scalar *= s.table[0];
        } else {
            factors.push_back(std::move(s));
        }
    }

    Factor total{{}, {scalar}};
    for (const Factor& f : factors) {
        total = multiply(total, f);
    }

    TensorState out;
    out.wire_order.assign(boundary_ids.begin(), boundary_ids.end());
    const std::size_t w = boundary_ids.size();
    std::vector<int> wire_var(w);
    for (std::size_t i = 0; i < w; ++i) {
        wire_var[i] = uf.find(static_cast<int>(index.at(boundary_ids[i])));
    }
    out.amplitudes.assign(std::size_t{1} << w, cplx{0.0, 0.0});
    for (std::size_t idx = 0; idx < out.amplitudes.size(); ++idx) {
        std::map<int, int> value;
        bool consistent = true;
        for (std::size_t i = 0; i < w && consistent; ++i) {
            const int bit = static_cast<int>((idx >> i) & 1U);
            auto [it, inserted] = value.emplace(wire_var[i], bit);
            consistent = inserted || it->second == bit;
        }
        if (!consistent) {
            continue;
        }
        std::size_t t = 0;
        for (std::size_t k = 0; k < total.vars.size(); ++k) {
            auto it = value.find(total.vars[k]);
            if (it != value.end() && it->second != 0) {
                t |= std::size_t{1} << k;
            }
        }
        out.amplitudes[idx] = total.table[t];
    }
    return out;
}

TensorState tensor_eval(const Diagram& d, const Assignment& assignment) {
    return tensor_eval(to_network(d), assignment);
}

}  // namespace zxparam
