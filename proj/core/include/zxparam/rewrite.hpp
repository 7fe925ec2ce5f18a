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

#ifndef ZXPARAM_REWRITE_HPP
#define ZXPARAM_REWRITE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxparam/diagram.hpp"

namespace zxparam {

enum class Rule : std::uint8_t {
    LocalComp,
    Pivot,
    BoundaryPivot,
    GadgetPivot,
    GadgetFusion,
    GadgetIdFuse,
    ScalarRemoval,
};

std::string to_string(Rule r);

/// Thrown by a rule whose preconditions do not hold; the diagram is left untouched.
class NotApplicable : public std::invalid_argument {
   public:
    NotApplicable(Rule rule, const std::string& why)
        : std::invalid_argument(to_string(rule) + " not applicable: " + why), rule(rule) {}
    Rule rule;
};

/// Parameters folded into a surviving spider by a fusion rule.
struct ParamMerge {
    /// Absorbed parameters with the sign they carry in the survivor.
    std::vector<std::pair<ParamId, int>> absorbed;
    VertexId survivor = 0;

    friend bool operator==(const ParamMerge&, const ParamMerge&) = default;
};

/// Provenance record of one rule application.
struct RewriteEvent {
    Rule rule = Rule::LocalComp;
    std::vector<VertexId> removed;
    std::vector<VertexId> touched;
    /// Present iff the rule is a fusion and both sides carried parameters.
    std::optional<ParamMerge> param_merge;
    /// New phase of every parametrised spider whose phase changed, gained or lost
    /// parameters. A Clifford phase here means the spider no longer carries any.
    std::vector<std::pair<VertexId, Phase>> phase_updates;
    /// Parameters that were dropped together with a scalar subdiagram.
    std::vector<ParamId> eliminated;
    /// Parameter-dependent part of the global scalar the rule factored out:
    /// tensor(before) = c * e^{i * global_phase} * tensor(after) for a constant c.
    /// Only fusions with a pi-axis hub and removal of pi-axis scalar gadgets make
    /// this nonzero.
    Phase global_phase;

    friend bool operator==(const RewriteEvent&, const RewriteEvent&) = default;
};

// ---------------------------------------------------------------------------
// Individual rules. Each mutates `d` in place, or throws NotApplicable and
// leaves it unchanged.

/// Removes an internal unparametrised spider with phase +-pi/2, complementing the
/// edges among its neighbours and subtracting its phase from each of them.
RewriteEvent local_complement_simp(Diagram& d, VertexId v);

/// Removes two adjacent internal unparametrised spiders with phases in {0, pi}.
RewriteEvent pivot_simp(Diagram& d, VertexId u, VertexId v);

/// Pivots an internal 0/pi spider `u` with a boundary spider `b`.
///
/// `b`'s boundary wire is moved to a fresh 0-phase spider behind a Hadamard edge.
/// A non-Pauli phase on `b` is first lifted into a phase gadget; when that phase
/// is +-pi/2 the gadget is removed again by two local complementations, so only
/// a parametrised phase leaves a gadget behind.
RewriteEvent boundary_pivot(Diagram& d, VertexId u, VertexId b);

/// Turns the internal 0/pi spider `u` and its parametrised internal neighbour `w`
/// into a phase gadget over u's other neighbours.
RewriteEvent gadget_pivot(Diagram& d, VertexId u, VertexId w);

/// Fuses two gadgets with identical neighbourhoods into `g1`.
RewriteEvent gadget_fusion(Diagram& d, const GadgetView& g1, const GadgetView& g2);

/// Folds a gadget with exactly one neighbour into that neighbour's phase.
RewriteEvent gadget_id_fuse(Diagram& d, const GadgetView& g);

/// Removes degree-0 internal spiders and gadgets with an empty neighbourhood.
std::vector<RewriteEvent> remove_scalar_spiders(Diagram& d);

/// Removes the single scalar component containing `v`: a degree-0 spider or an
/// isolated gadget given by its axis.
RewriteEvent remove_scalar_component(Diagram& d, VertexId v);

/// Rewrites a boundary spider whose decoration is S^{+-1} followed by H into an
/// S^k decoration: the boundary wire is unfused and the spider removed by local
/// complementation. Reported as a LocalComp event.
RewriteEvent normalise_boundary_decoration(Diagram& d, VertexId w);

// ---------------------------------------------------------------------------
// Fixpoint driver.

using RewriteObserver =
    std::function<void(const Diagram& before, const RewriteEvent& event, const Diagram& after)>;

struct SimplifyOptions {
    /// Without a seed every choice takes the smallest vertex ids; with one,
    /// candidates within a rule class are chosen at random.
    std::optional<std::uint64_t> seed;
    std::size_t max_steps = 1'000'000;
    /// Called after every rule application with a snapshot of the diagram
    /// before it. Copies the diagram per step, so leave empty outside tests.
    RewriteObserver observer;
};

struct SimplifyResult {
    Diagram diagram;
    std::vector<RewriteEvent> events;
};

/// Rewrites to the terminal pseudo-normal form: graph state plus local Cliffords,
/// with parameters sitting on internal spiders or on gadgets whose neighbourhoods
/// have at least two elements and are pairwise distinct.
SimplifyResult simplify(Diagram d, const SimplifyOptions& options = {});

/// Structural reasons `d` is not in terminal form; empty when it is.
std::vector<std::string> terminal_form_violations(const Diagram& d);

}  // namespace zxparam

#endif  // ZXPARAM_REWRITE_HPP
