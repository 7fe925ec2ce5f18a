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

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "generators.hpp"
#include "zxparam/circuit.hpp"
#include "zxparam/diagram.hpp"
#include "zxparam/rewrite.hpp"

namespace zxparam {
namespace {

// CZ with one boundary per spider: qubit q is i - s -H- m -H- o.
Diagram cz_diagram() {
    Diagram d;
    VertexId i0 = d.add_boundary(BoundaryKind::Input, 0);
    VertexId i1 = d.add_boundary(BoundaryKind::Input, 1);
    VertexId o0 = d.add_boundary(BoundaryKind::Output, 0);
    VertexId o1 = d.add_boundary(BoundaryKind::Output, 1);
    VertexId a = d.add_spider();
    VertexId b = d.add_spider();
    VertexId ma = d.add_spider();
    VertexId mb = d.add_spider();
    d.add_edge(i0, a, EdgeKind::Plain);
    d.add_edge(a, ma, EdgeKind::Hadamard);
    d.add_edge(ma, o0, EdgeKind::Hadamard);
    d.add_edge(i1, b, EdgeKind::Plain);
    d.add_edge(b, mb, EdgeKind::Hadamard);
    d.add_edge(mb, o1, EdgeKind::Hadamard);
    d.add_edge(a, b, EdgeKind::Hadamard);
    return d;
}

TEST(Diagram, BasicConstruction) {
    Diagram d = cz_diagram();
    EXPECT_EQ(d.num_vertices(), 8u);
    EXPECT_EQ(d.num_edges(), 7u);
    EXPECT_EQ(d.spiders().size(), 4u);
    EXPECT_EQ(d.boundaries().size(), 4u);
    EXPECT_EQ(d.edge(4, 5), EdgeKind::Hadamard);
    EXPECT_EQ(d.boundary_of(4), VertexId{0});
    EXPECT_FALSE(d.is_internal(4));
}

TEST(Diagram, WireOrderIsInputsThenOutputs) {
    Diagram d;
    VertexId o1 = d.add_boundary(BoundaryKind::Output, 1);
    VertexId i0 = d.add_boundary(BoundaryKind::Input, 0);
    VertexId o0 = d.add_boundary(BoundaryKind::Output, 0);
    EXPECT_EQ(d.wire_order(), (std::vector<VertexId>{i0, o0, o1}));
}

TEST(Diagram, DuplicateEdgeAndSelfLoopThrow) {
    Diagram d = cz_diagram();
    EXPECT_THROW(d.add_edge(4, 5, EdgeKind::Hadamard), std::invalid_argument);
    EXPECT_THROW(d.add_edge(4, 4, EdgeKind::Hadamard), std::invalid_argument);
}

TEST(Diagram, ToggleHadamardEdge) {
    Diagram d = cz_diagram();
    d.toggle_hadamard_edge(4, 5);
    EXPECT_FALSE(d.connected(4, 5));
    d.toggle_hadamard_edge(4, 5);
    EXPECT_EQ(d.edge(4, 5), EdgeKind::Hadamard);
    EXPECT_ANY_THROW(d.toggle_hadamard_edge(0, 4));
}

TEST(Diagram, RemoveVertexDropsEdgesAndParams) {
    Diagram d = cz_diagram();
    d.set_phase(4, Phase::param(7));
    EXPECT_EQ(d.param_registry().at(7), 4);
    d.remove_vertex(4);
    EXPECT_FALSE(d.contains(4));
    EXPECT_EQ(d.degree(0), 0u);
    EXPECT_EQ(d.num_params(), 0u);
}

TEST(Diagram, ParameterRegistryTracksPhases) {
    Diagram d;
    VertexId a = d.add_spider(Phase::param(0));
    VertexId b = d.add_spider(Phase::param(1, -1));
    EXPECT_EQ(d.param_registry().at(0), a);
    Phase moved = d.phase(b);
    d.set_phase(b, Phase(0));
    d.add_to_phase(a, moved);
    EXPECT_EQ(d.param_registry().at(1), a);
    EXPECT_EQ(d.parametrised_spiders(), std::vector<VertexId>{a});
    EXPECT_TRUE(validate(d).ok());
}

TEST(Diagram, RepeatedParameterIsRejected) {
    Diagram d;
    d.add_spider(Phase::param(0));
    EXPECT_THROW(d.add_spider(Phase::param(0, -1)), RepeatedParameter);
}

TEST(Validate, WellFormedCz) {
    EXPECT_TRUE(validate(cz_diagram()).ok());
}

TEST(Validate, SelfLoopNamesVertex) {
    Diagram d = cz_diagram();
    d.insert_edge_unchecked(4, 4, EdgeKind::Hadamard);
    auto r = validate(d);
    ASSERT_TRUE(r.has(ViolationKind::SelfLoop));
    auto it = std::find_if(r.violations.begin(), r.violations.end(),
                           [](const Violation& v) { return v.kind == ViolationKind::SelfLoop; });
    EXPECT_EQ(it->vertices, std::vector<VertexId>{4});
}

TEST(Validate, PlainSpiderEdge) {
    Diagram d = cz_diagram();
    d.set_edge_kind(4, 5, EdgeKind::Plain);
    EXPECT_TRUE(validate(d).has(ViolationKind::PlainSpiderEdge));
}

TEST(Validate, HadamardBoundaryPair) {
    Diagram d;
    VertexId i = d.add_boundary(BoundaryKind::Input, 0);
    VertexId o = d.add_boundary(BoundaryKind::Output, 0);
    d.add_edge(i, o, EdgeKind::Hadamard);
    EXPECT_TRUE(validate(d).has(ViolationKind::HadamardBoundaryPair));
}

TEST(Validate, BoundaryDegreeAndMultipleBoundaries) {
    Diagram d;
    VertexId i = d.add_boundary(BoundaryKind::Input, 0);
    VertexId o = d.add_boundary(BoundaryKind::Output, 0);
    VertexId s = d.add_spider();
    d.add_edge(i, s, EdgeKind::Plain);
    d.add_edge(o, s, EdgeKind::Plain);
    d.add_boundary(BoundaryKind::Output, 1);
    auto r = validate(d);
    EXPECT_TRUE(r.has(ViolationKind::MultipleBoundaries));
    EXPECT_TRUE(r.has(ViolationKind::BoundaryDegree));
}

TEST(Validate, RegistryMismatchReportsParameter) {
    Diagram d = cz_diagram();
    d.set_phase(4, Phase::param(2));
    d.mutable_param_registry().erase(2);
    auto r = validate(d);
    ASSERT_TRUE(r.has(ViolationKind::RegistryMismatch));
    EXPECT_EQ(r.violations.front().param, ParamId{2});

    Diagram e = cz_diagram();
    e.mutable_param_registry()[9] = 5;
    EXPECT_TRUE(validate(e).has(ViolationKind::RegistryMismatch));
}

TEST(Gadgets, NoInternalSpidersMeansNoGadgets) {
    EXPECT_TRUE(find_gadgets(cz_diagram()).empty());
}

TEST(Gadgets, HandBuiltGadget) {
    Diagram d = cz_diagram();
    VertexId axis = d.add_spider(Phase(2));
    VertexId leaf = d.add_spider(Phase::param(0));
    d.add_edge(axis, leaf, EdgeKind::Hadamard);
    d.add_edge(axis, 4, EdgeKind::Hadamard);
    d.add_edge(axis, 5, EdgeKind::Hadamard);
    auto gs = find_gadgets(d);
    ASSERT_EQ(gs.size(), 1u);
    EXPECT_EQ(gs[0].axis_spider, axis);
    EXPECT_EQ(gs[0].phase_spider, leaf);
    EXPECT_EQ(gs[0].neighbourhood, (std::set<VertexId>{4, 5}));
    EXPECT_TRUE(is_gadget_axis(d, axis));
    EXPECT_TRUE(is_gadget_leaf(d, leaf));
    EXPECT_FALSE(is_gadget_leaf(d, 4));
    EXPECT_EQ(gadget_at(d, axis), gs[0]);
}

TEST(Gadgets, ProperCliffordHubIsNotAnAxis) {
    Diagram d = cz_diagram();
    VertexId axis = d.add_spider(Phase(1));
    VertexId leaf = d.add_spider(Phase::param(0));
    d.add_edge(axis, leaf, EdgeKind::Hadamard);
    d.add_edge(axis, 4, EdgeKind::Hadamard);
    EXPECT_TRUE(find_gadgets(d).empty());
}

// Independent scan: every degree-1 parametrised spider whose single Hadamard
// neighbour is an internal 0/pi spider.
std::set<std::pair<VertexId, VertexId>> scan_gadgets(const Diagram& d) {
    std::set<std::pair<VertexId, VertexId>> out;
    std::set<VertexId> axes;
    for (VertexId v : d.spiders()) {
        if (d.degree(v) != 1 || d.phase(v).is_clifford()) {
            continue;
        }
        auto [a, k] = *d.neighbours(v).begin();
        if (k != EdgeKind::Hadamard || !d.is_spider(a) || !d.is_internal(a) || !d.phase(a).is_pauli()) {
            continue;
        }
        if (axes.insert(a).second) {
            out.insert({a, v});
        }
    }
    return out;
}

TEST(Gadgets, MatchesIndependentScanAfterSimplification) {
    testing::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = testing::random_circuit(rng, {6, 25, 5, 1.0});
        Diagram d = simplify(circuit_to_diagram(c)).diagram;
        std::set<std::pair<VertexId, VertexId>> got;
        for (const GadgetView& g : find_gadgets(d)) {
            got.insert({g.axis_spider, g.phase_spider});
            std::set<VertexId> nb;
            for (const auto& [n, k] : d.neighbours(g.axis_spider)) {
                if (n != g.phase_spider) {
                    nb.insert(n);
                }
            }
            EXPECT_EQ(g.neighbourhood, nb);
        }
        EXPECT_EQ(got, scan_gadgets(d)) << "trial " << trial;
    }
}

}  // namespace
}  // namespace zxparam
