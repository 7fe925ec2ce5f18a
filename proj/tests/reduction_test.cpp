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
#include <map>

#include "generators.hpp"
#include "zxparam/circuit.hpp"
#include "zxparam/reduction.hpp"
#include "zxparam/rewrite.hpp"
#include "zxparam/verifier.hpp"

namespace zxparam {
namespace {

using testing::Rng;

ReductionMap reduce(const Circuit& c) {
    Diagram d = circuit_to_diagram(c);
    return extract_reduction(d, simplify(d).events, c.param_names);
}

std::multiset<std::tuple<int, int, int, int>> clifford_gates(const Circuit& c) {
    std::multiset<std::tuple<int, int, int, int>> out;
    for (const Gate& g : c.gates) {
        if (g.kind != GateKind::RzParam) {
            out.insert({static_cast<int>(g.kind), g.q0, g.q1, g.k});
        }
    }
    return out;
}

TEST(ReductionMap, IdentityAndPrinting) {
    ReductionMap m = ReductionMap::identity({"a", "b"});
    EXPECT_TRUE(m.parsimonious());
    EXPECT_EQ(m.p_matrix, (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
    EXPECT_EQ(m.row_string(1), "b = b");

    ReductionMap f;
    f.params_in = {"t0", "t1", "t2"};
    f.params_out = {"u0"};
    f.p_matrix = {{1, -1, 0}};
    f.constants = {2};
    EXPECT_EQ(f.row_string(0), "u0 = t0 - t1 + pi");
    f.p_matrix.push_back({1, 0, 1});
    f.params_out.push_back("u1");
    f.constants.push_back(0);
    EXPECT_FALSE(f.parsimonious());
}

TEST(ExtractReduction, FusionExample) {
    ReductionMap m = reduce(parse_circuit("qreg 1\nrz(t0) 0\nrz(t1) 0\n"));
    EXPECT_EQ(m.p_matrix, (std::vector<std::vector<int>>{{1, 1}}));
    EXPECT_EQ(m.constants, std::vector<int>{0});
    EXPECT_EQ(m.params_out, std::vector<std::string>{"u0"});
    EXPECT_TRUE(m.eliminated.empty());
}

TEST(ExtractReduction, SingleParameter) {
    for (const char* text : {"qreg 1\nrz(t0) 0\n", "qreg 2\nh 0\ncx 0 1\nrz(t0) 1\nh 1\n",
                             "qreg 1\nh 0\nrz(t0) 0\nh 0\n"}) {
        ReductionMap m = reduce(parse_circuit(text));
        ASSERT_EQ(m.rows(), 1u) << text;
        EXPECT_EQ(std::abs(m.p_matrix[0][0]), 1) << text;
    }
}

TEST(ExtractReduction, ReplayMatchesTerminalExpressions) {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = testing::random_circuit(rng, {5, 30, 6, 1.0});
        Diagram d = circuit_to_diagram(c);
        SimplifyResult r = simplify(d);
        ReductionMap m = extract_reduction(d, r.events, c.param_names);
        EXPECT_TRUE(m.parsimonious());
        std::vector<Phase> terminal;
        for (VertexId v : r.diagram.parametrised_spiders()) {
            terminal.push_back(r.diagram.phase(v));
        }
        ASSERT_EQ(terminal.size(), m.rows()) << "trial " << trial;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Phase row(m.constants[i]);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m.p_matrix[i][j] != 0) {
                    row.add(Phase::param(static_cast<ParamId>(j), m.p_matrix[i][j]));
                }
            }
            EXPECT_NE(std::find(terminal.begin(), terminal.end(), row), terminal.end())
                << "trial " << trial << " row " << m.row_string(i);
        }
    }
}

TEST(ExtractReduction, ScalarParametersAreEliminated) {
    Diagram d;
    VertexId o = d.add_boundary(BoundaryKind::Output, 0);
    VertexId s = d.add_spider(Phase::param(0));
    d.add_edge(o, s, EdgeKind::Plain);
    VertexId axis = d.add_spider();
    VertexId leaf = d.add_spider(Phase::param(1));
    d.add_edge(axis, leaf, EdgeKind::Hadamard);
    ReductionMap m = extract_reduction(d, simplify(d).events, {"a", "b"});
    EXPECT_EQ(m.eliminated, std::vector<std::string>{"b"});
    EXPECT_EQ(m.p_matrix, (std::vector<std::vector<int>>{{1, 0}}));
}

TEST(ExtractReduction, UnknownParameterId) {
    Circuit c = parse_circuit("qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    Diagram d = circuit_to_diagram(c);
    EXPECT_THROW(extract_reduction(d, simplify(d).events, {"t0"}), InconsistentProvenance);
}

TEST(ExtractReduction, LostParameter) {
    Circuit c = parse_circuit("qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    Diagram d = circuit_to_diagram(c);
    RewriteEvent ev;
    ev.rule = Rule::ScalarRemoval;
    ev.removed = {d.param_registry().at(0)};
    EXPECT_THROW(extract_reduction(d, {ev}, c.param_names), InconsistentProvenance);
}

TEST(ExtractReduction, DuplicatedParameter) {
    Circuit c = parse_circuit("qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    Diagram d = circuit_to_diagram(c);
    RewriteEvent ev;
    ev.rule = Rule::GadgetFusion;
    ev.phase_updates = {{d.param_registry().at(1), Phase::param(0) + Phase::param(1)}};
    EXPECT_THROW(extract_reduction(d, {ev}, c.param_names), InconsistentProvenance);
}

TEST(ExtractReduction, BogusMerge) {
    Circuit c = parse_circuit("qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    Diagram d = circuit_to_diagram(c);
    RewriteEvent ev;
    ev.rule = Rule::GadgetFusion;
    ev.param_merge = ParamMerge{{{1, 1}}, d.param_registry().at(0)};
    EXPECT_THROW(extract_reduction(d, {ev}, c.param_names), InconsistentProvenance);
    ev.param_merge = ParamMerge{{{1, 1}}, 12345};
    EXPECT_THROW(extract_reduction(d, {ev}, c.param_names), InconsistentProvenance);
}

TEST(PhaseTeleport, FusionExample) {
    TeleportResult t = phase_teleport(parse_circuit("qreg 1\nrz(t0) 0\nrz(t1) 0\n"));
    EXPECT_EQ(emit_circuit(t.circuit), "qreg 1\nrz(u0) 0\n");
    EXPECT_EQ(t.map.row_string(0), "u0 = t0 + t1");
    EXPECT_EQ(t.params_before, 2u);
}

TEST(PhaseTeleport, ControlPhaseCommutesThroughCx) {
    Circuit c = parse_circuit("qreg 2\nrz(t0) 0\ncx 0 1\nrz(t1) 0\ncx 0 1\n");
    TeleportResult t = phase_teleport(c);
    EXPECT_EQ(t.circuit.num_params(), 1u);
    EXPECT_EQ(brute_force_min(c).count, 1u);
    EXPECT_TRUE(check_reduction(c, t.circuit, t.map).holds);
}

TEST(PhaseTeleport, HadamardSeparatedIsUnchanged) {
    Circuit c = parse_circuit("qreg 1\nrz(t0) 0\nh 0\nrz(t1) 0\n");
    TeleportResult t = phase_teleport(c);
    EXPECT_EQ(t.circuit.num_params(), 2u);
    EXPECT_EQ(t.circuit.gates, c.gates);
    EXPECT_EQ(brute_force_min(c).count, 2u);
}

TEST(PhaseTeleport, RepresentativeSignIsNormalised) {
    // X conjugation flips the sign of the first rotation relative to the second.
    Circuit c = parse_circuit("qreg 1\nx 0\nrz(t0) 0\nx 0\nrz(t1) 0\n");
    TeleportResult t = phase_teleport(c);
    ASSERT_EQ(t.map.rows(), 1u);
    EXPECT_EQ(t.map.p_matrix[0], (std::vector<int>{1, -1}));
    EXPECT_EQ(t.map.constants[0], 0);
    EXPECT_TRUE(check_reduction(c, t.circuit, t.map).holds);
}

TEST(PhaseTeleport, RandomCircuits) {
    Rng rng(32);
    for (int trial = 0; trial < 80; ++trial) {
        Circuit c = testing::random_circuit(rng, testing::random_spec(rng, 5, 30, 6));
        TeleportResult t = phase_teleport(c);
        EXPECT_EQ(clifford_gates(t.circuit), clifford_gates(c));
        EXPECT_EQ(t.circuit.num_params(), t.terminal.parametrised_spiders().size());
        EXPECT_EQ(t.circuit.num_params(), t.map.rows());
        EXPECT_TRUE(t.map.parsimonious());
        auto idx = c.param_gate_index();
        for (std::size_t i = 0; i < t.map.rows(); ++i) {
            EXPECT_EQ(t.map.constants[i], 0);
            const auto& row = t.map.p_matrix[i];
            auto rep = std::find_if(row.begin(), row.end(), [](int s) { return s != 0; });
            ASSERT_NE(rep, row.end());
            EXPECT_EQ(*rep, 1);
            // The representative is the earliest gate of its group.
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] != 0) {
                    EXPECT_LE(idx[static_cast<std::size_t>(rep - row.begin())], idx[j]);
                }
            }
        }
        EXPECT_TRUE(check_reduction(c, t.circuit, t.map).holds) << emit_circuit(c);
        EXPECT_EQ(phase_teleport(t.circuit).circuit.num_params(), t.circuit.num_params());
    }
}

TEST(PhaseTeleport, CliffordCircuitIsUntouched) {
    Circuit c = parse_circuit("qreg 2\nh 0\ncx 0 1\ns 1\n");
    TeleportResult t = phase_teleport(c);
    EXPECT_EQ(t.circuit, c);
    EXPECT_EQ(t.map.rows(), 0u);
}

}  // namespace
}  // namespace zxparam
