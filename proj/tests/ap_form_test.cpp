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


#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "zxparam/circuit.hpp"
#include "zxparam/verifier.hpp"

namespace zxparam {
namespace {

using testing::cplx;

void expect_proportional(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    ASSERT_EQ(a.size(), b.size());
    auto fit = testing::fit_ratio(a, b);
    EXPECT_LT(fit.deviation, 1e-10);
    EXPECT_GT(std::abs(fit.lambda), 1e-12);
}

Diagram zero_state() {
    SpiderNetwork net;
    int o = net.add_boundary(BoundaryKind::Output, 0);
    int x = net.add_x();
    net.connect(x, o);
    return to_graph_like(net);
}

TEST(APForm, ZeroKet) {
    APForm ap = ap_form(zero_state());
    EXPECT_EQ(ap.n, 1u);
    EXPECT_EQ(ap.a_matrix, (std::vector<std::vector<std::uint8_t>>{{1}}));
    EXPECT_EQ(ap.b_vector, std::vector<std::uint8_t>{0});
    EXPECT_EQ(ap.linear_phase, std::vector<int>{0});
    EXPECT_TRUE(ap.quadratic_pairs.empty());
    expect_proportional(ap_state(ap), {1, 0});
}

TEST(APForm, OneKet) {
    SpiderNetwork net;
    int o = net.add_boundary(BoundaryKind::Output, 0);
    int x = net.add_x(Phase(2));
    net.connect(x, o);
    APForm ap = ap_form(to_graph_like(net));
    EXPECT_EQ(ap.b_vector, std::vector<std::uint8_t>{1});
    expect_proportional(ap_state(ap), {0, 1});
}

TEST(APForm, BellPair) {
    Diagram d;
    VertexId o0 = d.add_boundary(BoundaryKind::Output, 0);
    VertexId o1 = d.add_boundary(BoundaryKind::Output, 1);
    d.add_edge(o0, o1, EdgeKind::Plain);
    APForm ap = ap_form(d);
    EXPECT_EQ(ap.a_matrix, (std::vector<std::vector<std::uint8_t>>{{1, 1}}));
    EXPECT_EQ(ap.b_vector, std::vector<std::uint8_t>{0});
    expect_proportional(ap_state(ap), {1, 0, 0, 1});
}

TEST(APForm, BellPairFromCircuit) {
    Circuit c = parse_circuit("qreg 2\nh 0\ncx 0 1\n");
    SpiderNetwork net = circuit_to_network(c);
    for (NetworkNode& n : net.nodes) {
        if (n.kind == NodeKind::Boundary && n.boundary.kind == BoundaryKind::Input) {
            n.kind = NodeKind::X;
        }
    }
    APForm ap = ap_form(to_graph_like(net));
    EXPECT_EQ(ap.a_matrix, (std::vector<std::vector<std::uint8_t>>{{1, 1}}));
    EXPECT_EQ(ap.b_vector, std::vector<std::uint8_t>{0});
}

TEST(APForm, TwoVertexGraphState) {
    Diagram d;
    VertexId o0 = d.add_boundary(BoundaryKind::Output, 0);
    VertexId o1 = d.add_boundary(BoundaryKind::Output, 1);
    VertexId a = d.add_spider();
    VertexId b = d.add_spider();
    d.add_edge(o0, a, EdgeKind::Plain);
    d.add_edge(o1, b, EdgeKind::Plain);
    d.add_edge(a, b, EdgeKind::Hadamard);
    APForm ap = ap_form(d);
    EXPECT_TRUE(ap.a_matrix.empty());
    EXPECT_EQ(ap.quadratic_pairs, (std::set<std::pair<int, int>>{{0, 1}}));
    EXPECT_EQ(ap.linear_phase, (std::vector<int>{0, 0}));
    expect_proportional(ap_state(ap), {1, 1, 1, -1});
}

TEST(APForm, LinearPhases) {
    Diagram d;
    VertexId o = d.add_boundary(BoundaryKind::Output, 0);
    VertexId s = d.add_spider(Phase(1));
    d.add_edge(o, s, EdgeKind::Plain);
    APForm ap = ap_form(d);
    EXPECT_EQ(ap.linear_phase, std::vector<int>{1});
    expect_proportional(ap_state(ap), {1, cplx(0, 1)});
}

TEST(APForm, ZeroStateIsRejected) {
    SpiderNetwork net;
    int o = net.add_boundary(BoundaryKind::Output, 0);
    int z = net.add_z();
    int x0 = net.add_x();
    int x1 = net.add_x(Phase(2));
    net.connect(z, o);
    net.connect(z, x0);
    net.connect(z, x1);
    EXPECT_THROW(ap_form(to_graph_like(net)), ZeroState);
}

TEST(APForm, NonCliffordInputsAreRejected) {
    Diagram d;
    VertexId o = d.add_boundary(BoundaryKind::Output, 0);
    VertexId s = d.add_spider(Phase::param(0));
    d.add_edge(o, s, EdgeKind::Plain);
    EXPECT_THROW(ap_form(d), NotClifford);
    EXPECT_THROW(ap_form(circuit_to_diagram(parse_circuit("qreg 1\nh 0\n"))), NotClifford);
}

TEST(APForm, RandomStatesRoundTrip) {
    testing::Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        testing::StateInstance s = testing::random_clifford_state(rng, n, 25);
        const std::vector<cplx> u = testing::kron_unitary(s.circuit, {});
        const std::size_t dim = std::size_t{1} << n;
        std::vector<cplx> expected(dim);
        for (std::size_t out = 0; out < dim; ++out) {
            expected[out] = u[out * dim];
        }
        APForm ap = ap_form(s.diagram);
        EXPECT_EQ(ap.a_matrix.size(), ap.b_vector.size());
        for (std::size_t r = 0; r < ap.a_matrix.size(); ++r) {
            // Reduced row echelon: each pivot column is zero in every other row.
            std::size_t pivot = 0;
            while (ap.a_matrix[r][pivot] == 0) {
                ++pivot;
            }
            for (std::size_t r2 = 0; r2 < ap.a_matrix.size(); ++r2) {
                if (r2 != r) {
                    EXPECT_EQ(ap.a_matrix[r2][pivot], 0);
                }
            }
        }
        expect_proportional(ap_state(ap), expected);
    }
}

}  // namespace
}  // namespace zxparam
