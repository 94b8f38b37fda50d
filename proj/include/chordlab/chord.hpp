#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordlab/fatgraph.hpp"

namespace chordlab {

enum class EdgeKind : std::uint8_t { circular = 0, ghost = 1 };

/// Unvalidated chord diagram. `marks` holds one half-edge per boundary
/// cycle, listed in boundary order: the marked half-edge both names the
/// cycle and is its parameterization start. The first `incoming` entries are
/// the incoming circles.
struct RawChord {
    FatGraph graph;
    std::vector<EdgeKind> edge_kind;  // indexed by edge id
    int incoming = 0;
    std::vector<int> marks;
};

/// A Sullivan chord diagram: p disjoint circles of circular edges, a forest
/// of ghost edges hanging off them, each circle an incoming boundary cycle,
/// every boundary cycle carrying a marked circular half-edge.
class ChordDiagram {
public:
    /// Throws chordlab::Error: ghost_cycle, circle_not_disjoint,
    /// incoming_not_boundary_cycle, no_circular_edge_on_cycle, bad_marking,
    /// inconsistent_tables.
    static ChordDiagram validate(const RawChord& raw);

    const FatGraph& graph() const noexcept { return graph_; }
    const TopType& type() const noexcept { return type_; }

    EdgeKind edge_kind(int e) const { return edge_kind_[e]; }
    EdgeKind kind_of(int h) const { return edge_kind_[graph_.edge_of(h)]; }
    bool is_circular(int h) const { return kind_of(h) == EdgeKind::circular; }
    bool is_circular_vertex(int v) const { return circular_vertex_[v] != 0; }
    /// Ghost forest component of vertex v, numbered by smallest vertex.
    int ghost_component(int v) const { return ghost_component_[v]; }

    int incoming_count() const noexcept { return type_.p; }
    int cycle_count() const noexcept { return static_cast<int>(cycles_.size()); }
    /// Boundary cycles in boundary order, each starting at its marking.
    const std::vector<BoundaryCycle>& cycles() const noexcept { return cycles_; }
    /// Position in boundary order of the cycle containing h.
    int cycle_of(int h) const { return cycle_of_[h]; }
    const std::vector<int>& marks() const noexcept { return marks_; }
    const std::vector<EdgeKind>& edge_kinds() const noexcept { return edge_kind_; }
    int circular_vertex_count() const;

    RawChord raw() const { return {graph_, edge_kind_, type_.p, marks_}; }

    bool operator==(const ChordDiagram& o) const {
        return graph_ == o.graph_ && edge_kind_ == o.edge_kind_ && type_.p == o.type_.p && marks_ == o.marks_;
    }

private:
    FatGraph graph_;
    std::vector<EdgeKind> edge_kind_;
    std::vector<int> marks_;
    std::vector<BoundaryCycle> cycles_;
    std::vector<int> cycle_of_;
    std::vector<char> circular_vertex_;
    std::vector<int> ghost_component_;
    TopType type_;
};

/// S(c): the fat graph obtained by contracting every ghost tree to a point.
struct CollapsedGraph {
    FatGraph s_graph;
    /// projection[v] = vertex of S(c) that vertex v of c collapses to.
    std::vector<int> projection;
    /// half_edge_map[h] = half-edge of S(c) for circular h, -1 for ghosts.
    std::vector<int> half_edge_map;
};

CollapsedGraph collapse_ghosts(const ChordDiagram& c);

/// Number of circular vertices of c over vertex v of S(c).
int multiplicity(const ChordDiagram& c, const CollapsedGraph& s, int v);
inline int multiplicity(const ChordDiagram& c, int v) { return multiplicity(c, collapse_ghosts(c), v); }

/// v(c) - sigma(c): circular vertices of c minus vertices of S(c).
int chi_defect(const ChordDiagram& c);

/// An edge is essential when no collapse may contract it: a circular edge
/// whose endpoints share a ghost tree (loops included), or a ghost edge
/// between two circular vertices.
bool is_essential(const ChordDiagram& c, int e);

/// Vertex split: the vertex holding `first` and `second` is cut into the arc
/// first..(before second) and the arc second..(before first), joined by a
/// new edge of the given kind. The new half-edges are appended: 2E on the
/// first arc, 2E+1 on the second.
struct Expansion {
    int first = 0;
    int second = 0;
    EdgeKind kind = EdgeKind::ghost;
    bool operator==(const Expansion&) const = default;
};

struct CollapseResult {
    ChordDiagram diagram;
    /// Split of `diagram` that restores an isomorphic copy of the input.
    Expansion inverse;
};

/// Contracts edge e. Throws essential_edge or loop_edge. A marking on the
/// contracted edge moves to the next circular half-edge of its cycle.
CollapseResult collapse_edge_detailed(const ChordDiagram& c, int e);
inline ChordDiagram collapse_edge(const ChordDiagram& c, int e) { return collapse_edge_detailed(c, e).diagram; }

/// Applies one split; throws if the split is malformed or the result is not a
/// chord diagram.
ChordDiagram expand(const ChordDiagram& c, const Expansion& split);

struct ExpansionResult {
    Expansion split;
    ChordDiagram diagram;
};

/// Every single-vertex split of c that is again a chord diagram of the same
/// type and whose new edge is collapsible. Listed per vertex, then per split,
/// ghost before circular. No isomorphism dedup.
std::vector<ExpansionResult> expansions(const ChordDiagram& c);

/// Like expansions() but without the type filter, so callers can audit type
/// preservation themselves.
std::vector<ExpansionResult> split_candidates(const ChordDiagram& c);

/// Base-point diagram of type (g; p, q). Throws unrepresentable_type for
/// (0; 1, 1) and for p < 1 or q < 1.
ChordDiagram canonical_gamma0(int g, int p, int q);

/// Placement of c2's incoming circles on c1's outgoing cycles. positions[j]
/// lists, for every vertex of c2's j-th incoming circle (starting at the
/// head of its marked half-edge and following the circle), an index into the
/// j-th outgoing cycle of c1 counted backwards from its marking (position 0
/// is the marked half-edge, 1 the half-edge before it in tracing order, ...).
/// Positions must be non-decreasing. An empty list selects the default
/// placement (every vertex on position 0).
struct GlueSchedule {
    std::vector<std::vector<int>> positions;
};

/// c1 # c2: c2's incoming circles are identified with c1's outgoing cycles.
/// Throws arity_mismatch, invalid_schedule, glue_validation_failed.
ChordDiagram glue(const ChordDiagram& c1, const ChordDiagram& c2, const std::optional<GlueSchedule>& schedule = {});

enum class Markings { ignore, include };

/// Per-half-edge colors: edge kind, boundary position and optionally the
/// marking flag.
std::vector<std::uint32_t> diagram_colors(const ChordDiagram& c, Markings markings);

/// Canonical code of the decorated graph (edge kinds, boundary order,
/// optionally markings).
std::string diagram_code(const ChordDiagram& c, Markings markings = Markings::ignore);
CanonicalForm diagram_canonical_form(const ChordDiagram& c, Markings markings = Markings::ignore);

/// Diagram with half-edge h renamed to perm[h].
ChordDiagram relabel(const ChordDiagram& c, std::span<const int> perm);

/// Half-edge bijection a -> b preserving the decorations, if any.
std::optional<std::vector<int>> find_isomorphism(const ChordDiagram& a, const ChordDiagram& b,
                                                 Markings markings = Markings::ignore);

/// Same diagram with a new marks list (boundary order and markings).
ChordDiagram with_marks(const ChordDiagram& c, std::vector<int> marks);

}  // namespace chordlab
