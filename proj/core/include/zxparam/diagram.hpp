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

#ifndef ZXPARAM_DIAGRAM_HPP
#define ZXPARAM_DIAGRAM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxparam/phase.hpp"

namespace zxparam {

using VertexId = std::int32_t;

enum class EdgeKind : std::uint8_t { Plain, Hadamard };

constexpr EdgeKind toggled(EdgeKind k) {
    return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain;
}

enum class BoundaryKind : std::uint8_t { Input, Output };

struct BoundaryInfo {
    BoundaryKind kind = BoundaryKind::Output;
    int position = 0;

    friend auto operator<=>(const BoundaryInfo&, const BoundaryInfo&) = default;
};

enum class VertexType : std::uint8_t { Boundary, ZSpider };

/// Raised when a parameter-id would be owned by two spiders.
class RepeatedParameter : public std::invalid_argument {
   public:
    explicit RepeatedParameter(ParamId id)
        : std::invalid_argument("parameter " + std::to_string(id) + " occurs on more than one spider"),
          param(id) {}
    ParamId param;
};

/// A ZX diagram made of Z-spiders and boundary nodes.
///
/// Edges are undirected, simple and typed (plain or Hadamard). The class does not
/// enforce graph-likeness on every mutation since rewrites pass through
/// intermediate states; `validate` reports the graph-like invariants. It does
/// enforce that each parameter is owned by at most one spider, and keeps the
/// parameter registry in sync with spider phases.
///
/// Vertex ids are never reused after removal.
class Diagram {
   public:
    VertexId add_boundary(BoundaryKind kind, int position);
    VertexId add_spider(Phase phase = {});
    /// Inserts a vertex with a caller-chosen id; used to keep ids stable across conversions.
    void add_boundary_at(VertexId id, BoundaryKind kind, int position);
    void add_spider_at(VertexId id, Phase phase = {});

    /// Adds an edge; throws if it already exists or would be a self-loop.
    void add_edge(VertexId u, VertexId v, EdgeKind kind);
    /// Hadamard-edge algebra mod 2: adds the edge when absent, removes it when present.
    /// Throws if a plain edge sits between u and v.
    void toggle_hadamard_edge(VertexId u, VertexId v);
    void set_edge_kind(VertexId u, VertexId v, EdgeKind kind);
    void remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);

    void set_phase(VertexId v, Phase phase);
    /// phase(v) += sign * delta.
    void add_to_phase(VertexId v, const Phase& delta, int sign = 1);

    bool contains(VertexId v) const { return vertices_.count(v) != 0; }
    VertexType type(VertexId v) const { return at(v).type; }
    bool is_boundary(VertexId v) const { return type(v) == VertexType::Boundary; }
    bool is_spider(VertexId v) const { return type(v) == VertexType::ZSpider; }
    const BoundaryInfo& boundary_info(VertexId v) const;
    const Phase& phase(VertexId v) const;

    std::optional<EdgeKind> edge(VertexId u, VertexId v) const;
    bool connected(VertexId u, VertexId v) const { return edge(u, v).has_value(); }
    const std::map<VertexId, EdgeKind>& neighbours(VertexId v) const { return at(v).nbrs; }
    std::size_t degree(VertexId v) const { return at(v).nbrs.size(); }

    /// Boundary node attached to spider v, if any (the smallest id when several).
    std::optional<VertexId> boundary_of(VertexId v) const;
    /// A spider with no boundary neighbour.
    bool is_internal(VertexId v) const { return is_spider(v) && !boundary_of(v).has_value(); }

    std::vector<VertexId> vertices() const;
    std::vector<VertexId> spiders() const;
    std::vector<VertexId> boundaries() const;
    /// Boundaries sorted inputs first, then outputs, each by position.
    std::vector<VertexId> wire_order() const;
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const;
    /// Sorted list of (u, v, kind) with u < v.
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges() const;

    const std::map<ParamId, VertexId>& param_registry() const { return registry_; }
    std::size_t num_params() const { return registry_.size(); }
    /// Spiders whose phase mentions at least one parameter.
    std::vector<VertexId> parametrised_spiders() const;

    VertexId next_id() const { return next_id_; }

    /// Low-level access for tooling that deliberately builds malformed diagrams.
    /// Bypasses every check; run `validate` afterwards.
    void insert_edge_unchecked(VertexId u, VertexId v, EdgeKind kind);
    std::map<ParamId, VertexId>& mutable_param_registry() { return registry_; }

    /// Structural equality: same vertices, phases, boundary data and edges.
    friend bool operator==(const Diagram& a, const Diagram& b);

   private:
    struct VertexData {
        VertexType type = VertexType::ZSpider;
        BoundaryInfo boundary;
        Phase phase;
        std::map<VertexId, EdgeKind> nbrs;
    };

    const VertexData& at(VertexId v) const;
    VertexData& at(VertexId v);
    void claim_params(VertexId v, const Phase& phase);
    void release_params(VertexId v, const Phase& phase);
    void bump_id(VertexId id);

    std::map<VertexId, VertexData> vertices_;
    std::map<ParamId, VertexId> registry_;
    VertexId next_id_ = 0;
};

// ---------------------------------------------------------------------------
// Raw spider networks.

enum class NodeKind : std::uint8_t { Boundary, Z, X, HBox };

struct NetworkNode {
    int id = 0;
    NodeKind kind = NodeKind::Z;
    BoundaryInfo boundary;
    Phase phase;
};

struct NetworkWire {
    int a = 0;
    int b = 0;
    EdgeKind kind = EdgeKind::Plain;
};

/// An arbitrary network of Z/X spiders, degree-2 Hadamard boxes and boundary
/// nodes. Parallel wires and self-loops are allowed.
struct SpiderNetwork {
    std::vector<NetworkNode> nodes;
    std::vector<NetworkWire> wires;

    int add_boundary(BoundaryKind kind, int position);
    int add_z(Phase phase = {});
    int add_x(Phase phase = {});
    int add_hbox();
    void connect(int a, int b, EdgeKind kind = EdgeKind::Plain);

    int next_id() const;
};

/// Converts any spider network into a graph-like diagram that is equal to it up
/// to a nonzero scalar. Spider ids are kept (a fused group keeps its smallest id).
/// Boundary edges are always plain and every spider touches at most one boundary.
///
/// Throws RepeatedParameter when a parameter occurs on two spiders, and
/// std::invalid_argument for Hadamard boxes that are not of degree 2 or boundary
/// nodes that are not of degree 1.
Diagram to_graph_like(const SpiderNetwork& raw);

/// Re-expresses a diagram as a raw network with identical ids.
SpiderNetwork to_network(const Diagram& d);

// ---------------------------------------------------------------------------
// Validation.

enum class ViolationKind : std::uint8_t {
    SelfLoop,
    AsymmetricEdge,
    PlainSpiderEdge,
    BoundaryDegree,
    HadamardBoundaryPair,
    MultipleBoundaries,
    RegistryMismatch,
};

std::string to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<VertexId> vertices;
    std::optional<ParamId> param;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const;
};

/// Reports every violated graph-like invariant. Parallel edges cannot be
/// represented by `Diagram`, so they never appear here.
ValidationReport validate(const Diagram& d);

// ---------------------------------------------------------------------------
// Phase gadgets.

/// A degree-1 parametrised spider hanging off a 0/pi hub.
struct GadgetView {
    VertexId axis_spider = 0;
    VertexId phase_spider = 0;
    std::set<VertexId> neighbourhood;

    friend bool operator==(const GadgetView&, const GadgetView&) = default;
};

/// The leaf of the gadget whose hub is `axis`, if `axis` is a gadget hub. When a
/// hub carries several candidate leaves the smallest id is the leaf.
std::optional<VertexId> gadget_leaf(const Diagram& d, VertexId axis);
bool is_gadget_axis(const Diagram& d, VertexId v);
/// True for the phase spider of some gadget.
bool is_gadget_leaf(const Diagram& d, VertexId v);
std::optional<GadgetView> gadget_at(const Diagram& d, VertexId axis);

/// Every gadget, sorted by axis id.
std::vector<GadgetView> find_gadgets(const Diagram& d);

}  // namespace zxparam

#endif  // ZXPARAM_DIAGRAM_HPP
