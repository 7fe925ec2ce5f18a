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

#include "zxparam/rewrite.hpp"
#include "zxparam/verifier.hpp"

namespace zxparam {

namespace {

using Row = std::vector<std::uint8_t>;

// Gauss-Jordan over GF(2) on the augmented rows [a | b]; throws on 0 = 1.
void reduce(std::vector<Row>& a, std::vector<std::uint8_t>& b, std::size_t n) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == a.size()) {
            continue;
        }
        std::swap(a[rank], a[pivot]);
        std::swap(b[rank], b[pivot]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != rank && a[r][col]) {
                for (std::size_t c = 0; c < n; ++c) {
                    a[r][c] ^= a[rank][c];
                }
                b[r] ^= b[rank];
            }
        }
        ++rank;
    }
    for (std::size_t r = rank; r < a.size(); ++r) {
        if (b[r]) {
            throw ZeroState("affine constraints are inconsistent");
        }
    }
    a.resize(rank);
    b.resize(rank);
}

// Removes internal spiders until each remaining one is a 0/pi spider adjacent
// only to boundary spiders.
void two_layer(Diagram& d) {
    for (;;) {
        bool changed = false;
        for (VertexId v : d.spiders()) {
            if (d.contains(v) && d.is_internal(v) && d.phase(v).is_proper_clifford()) {
                local_complement_simp(d, v);
                changed = true;
            }
        }
        for (VertexId u : d.spiders()) {
            if (!d.contains(u) || !d.is_internal(u) || !d.phase(u).is_pauli()) {
                continue;
            }
            for (const auto& [v, k] : d.neighbours(u)) {
                if (d.is_internal(v) && d.phase(v).is_pauli()) {
                    pivot_simp(d, u, v);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) {
            return;
        }
    }
}

}  // namespace

APForm ap_form(const Diagram& input) {
    Diagram d = input;
    if (d.num_params() != 0) {
        throw NotClifford("AP form needs a diagram without parameters");
    }
    std::vector<VertexId> outs = d.wire_order();
    for (VertexId b : outs) {
        if (d.boundary_info(b).kind != BoundaryKind::Output) {
            throw NotClifford("AP form needs a state: the diagram has inputs");
        }
    }

    // Every output gets its own spider behind a plain wire.
    for (VertexId b : outs) {
        const auto [n, k] = *d.neighbours(b).begin();
        if (d.is_boundary(n)) {
            if (n < b) {
                continue;
            }
            d.remove_edge(b, n);
            VertexId s1 = d.add_spider();
            VertexId s2 = d.add_spider();
            d.add_edge(b, s1, EdgeKind::Plain);
            d.add_edge(n, s2, EdgeKind::Plain);
            if (k == EdgeKind::Hadamard) {
                d.add_edge(s1, s2, EdgeKind::Hadamard);
            } else {
                VertexId m = d.add_spider();
                d.add_edge(s1, m, EdgeKind::Hadamard);
                d.add_edge(m, s2, EdgeKind::Hadamard);
            }
        } else if (k == EdgeKind::Hadamard) {
            d.remove_edge(b, n);
            VertexId w = d.add_spider();
            d.add_edge(b, w, EdgeKind::Plain);
            d.add_edge(w, n, EdgeKind::Hadamard);
        }
    }
    two_layer(d);

    APForm ap;
    ap.n = outs.size();
    ap.linear_phase.assign(ap.n, 0);
    std::map<VertexId, int> var;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        VertexId s = d.neighbours(outs[i]).begin()->first;
        var.emplace(s, static_cast<int>(i));
        ap.linear_phase[i] = d.phase(s).clifford();
    }
    std::vector<Row> a;
    std::vector<std::uint8_t> b;
    for (VertexId v : d.spiders()) {
        auto it = var.find(v);
        if (it != var.end()) {
            for (const auto& [n, k] : d.neighbours(v)) {
                auto jt = var.find(n);
                if (jt != var.end() && it->second < jt->second) {
                    ap.quadratic_pairs.emplace(it->second, jt->second);
                }
            }
            continue;
        }
        Row row(ap.n, 0);
        for (const auto& [n, k] : d.neighbours(v)) {
            row[static_cast<std::size_t>(var.at(n))] = 1;
        }
        a.push_back(std::move(row));
        b.push_back(static_cast<std::uint8_t>(d.phase(v).clifford() / 2));
    }
    reduce(a, b, ap.n);
    ap.a_matrix = std::move(a);
    ap.b_vector = std::move(b);
    return ap;
}

std::vector<cplx> ap_state(const APForm& ap) {
    std::vector<cplx> out(std::size_t{1} << ap.n, cplx{0.0, 0.0});
    for (std::size_t x = 0; x < out.size(); ++x) {
        bool ok = true;
        for (std::size_t r = 0; r < ap.a_matrix.size() && ok; ++r) {
            unsigned parity = 0;
            for (std::size_t i = 0; i < ap.n; ++i) {
                parity ^= ap.a_matrix[r][i] & ((x >> i) & 1U);
            }
            ok = parity == ap.b_vector[r];
        }
        if (!ok) {
            continue;
        }
        int phi = 0;
        for (std::size_t i = 0; i < ap.n; ++i) {
            if ((x >> i) & 1U) {
                phi += ap.linear_phase[i];
            }
        }
        for (const auto& [i, j] : ap.quadratic_pairs) {
            if (((x >> i) & 1U) && ((x >> j) & 1U)) {
                phi += 2;
            }
        }
        out[x] = i_pow(phi);
    }
    return out;
}

}  // namespace zxparam
