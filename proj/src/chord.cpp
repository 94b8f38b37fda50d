#include "chordlab/chord.hpp"

#include <algorithm>
#include <string>

#include "chordlab/error.hpp"
#include "union_find.hpp"

namespace chordlab {

namespace {

Error anchored(ErrorCode code, const std::string& what, int h) {
    Error e(code, what);
    e.at_half_edge(h);
    return e;
}

}  // namespace

ChordDiagram ChordDiagram::validate(const RawChord& raw) {
    const FatGraph& g = raw.graph;
    if (static_cast<int>(raw.edge_kind.size()) != g.edge_count())
        throw Error(ErrorCode::inconsistent_tables, "expected a label for each of the " +
                                                        std::to_string(g.edge_count()) + " edges, got " +
                                                        std::to_string(raw.edge_kind.size()));

    ChordDiagram c;
    c.graph_ = g;
    c.edge_kind_ = raw.edge_kind;
    auto circular = [&](int h) { return raw.edge_kind[g.edge_of(h)] == EdgeKind::circular; };

    c.circular_vertex_.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int count = 0;
        for (int h : g.rotation(v)) count += circular(h) ? 1 : 0;
        if (count != 0 && count != 2)
            throw anchored(ErrorCode::circle_not_disjoint,
                           "vertex " + std::to_string(v) + " carries " + std::to_string(count) +
                               " circular half-edges (0 or 2 allowed)",
                           g.vertex_half_edge(v));
        c.circular_vertex_[v] = count == 2;
    }

    detail::UnionFind ghosts(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (raw.edge_kind[e] != EdgeKind::ghost) continue;
        int h = g.edge_half_edge(e);
        if (!ghosts.unite(g.vertex_of(h), g.vertex_of(g.pair(h))))
            throw anchored(ErrorCode::ghost_cycle, "ghost edge " + std::to_string(e) + " closes a ghost cycle", h);
    }
    c.ghost_component_.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) c.ghost_component_[v] = ghosts.find(v);

    // Circles = components of the 2-regular circular subgraph.
    detail::UnionFind circles(g.vertex_count());
    int circle_count = c.circular_vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (raw.edge_kind[e] != EdgeKind::circular) continue;
        int h = g.edge_half_edge(e);
        if (circles.unite(g.vertex_of(h), g.vertex_of(g.pair(h)))) --circle_count;
    }
    if (circle_count == 0) throw Error(ErrorCode::incoming_not_boundary_cycle, "diagram has no circles");
    std::vector<char> reaches_circle(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.circular_vertex_[v]) reaches_circle[c.ghost_component_[v]] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!reaches_circle[c.ghost_component_[v]])
            throw anchored(ErrorCode::circle_not_disjoint,
                           "ghost tree at vertex " + std::to_string(v) + " does not reach a circle",
                           g.vertex_half_edge(v));
    }

    const auto all_cycles = boundary_cycles(g);
    const auto index = boundary_cycle_index(g);
    for (std::size_t k = 0; k < all_cycles.size(); ++k) {
        const auto& hs = all_cycles[k].half_edges;
        if (std::none_of(hs.begin(), hs.end(), circular))
            throw anchored(ErrorCode::no_circular_edge_on_cycle,
                           "boundary cycle " + std::to_string(k) + " contains no circular edge", hs.front());
    }

    if (raw.marks.size() != all_cycles.size())
        throw Error(ErrorCode::bad_marking, "expected " + std::to_string(all_cycles.size()) +
                                                " markings (one per boundary cycle), got " +
                                                std::to_string(raw.marks.size()));
    std::vector<char> used(all_cycles.size(), 0);
    for (int m : raw.marks) {
        if (m < 0 || m >= g.half_edge_count())
            throw Error(ErrorCode::bad_marking, "marking " + std::to_string(m) + " is not a half-edge");
        if (!circular(m))
            throw anchored(ErrorCode::bad_marking, "marking " + std::to_string(m) + " is not a circular half-edge", m);
        if (used[index[m]])
            throw anchored(ErrorCode::bad_marking, "boundary cycle " + std::to_string(index[m]) + " is marked twice",
                           m);
        used[index[m]] = 1;
    }

    const int p = raw.incoming;
    if (p < 1 || p >= static_cast<int>(all_cycles.size()))
        throw Error(ErrorCode::incoming_not_boundary_cycle,
                    "incoming count " + std::to_string(p) + " must lie in 1.." + std::to_string(all_cycles.size() - 1));
    for (int i = 0; i < p; ++i) {
        const auto& hs = all_cycles[index[raw.marks[i]]].half_edges;
        auto ghost = std::find_if_not(hs.begin(), hs.end(), circular);
        if (ghost != hs.end())
            throw anchored(
                ErrorCode::circle_not_disjoint,
                "incoming cycle " + std::to_string(i) + " traverses ghost half-edge " + std::to_string(*ghost), *ghost);
    }
    if (circle_count != p)
        throw Error(ErrorCode::incoming_not_boundary_cycle, "diagram has " + std::to_string(circle_count) +
                                                                " circles but " + std::to_string(p) +
                                                                " incoming boundary cycles");

    c.marks_ = raw.marks;
    c.cycle_of_.assign(g.half_edge_count(), -1);
    for (std::size_t pos = 0; pos < raw.marks.size(); ++pos) {
        BoundaryCycle cyc;
        int m = raw.marks[pos];
        int x = m;
        do {
            cyc.half_edges.push_back(x);
            c.cycle_of_[x] = static_cast<int>(pos);
            x = g.trace(x);
        } while (x != m);
        c.cycles_.push_back(std::move(cyc));
    }

    const SurfaceType st = topological_type(g);
    c.type_ = TopType{st.genus, p, st.boundaries - p};
    return c;
}

int ChordDiagram::circular_vertex_count() const {
    return static_cast<int>(std::count(circular_vertex_.begin(), circular_vertex_.end(), 1));
}

CollapsedGraph collapse_ghosts(const ChordDiagram& c) {
    const FatGraph& g = c.graph();
    CollapsedGraph out;
    out.half_edge_map.assign(g.half_edge_count(), -1);
    std::vector<int> kept;
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (c.is_circular(h)) {
            out.half_edge_map[h] = static_cast<int>(kept.size());
            kept.push_back(h);
        }
    }
    std::vector<int> pairing(kept.size()), next(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int h = kept[i];
        pairing[i] = out.half_edge_map[g.pair(h)];
        // Walk around the ghost tree until the next circular half-edge.
        int y = g.next(h);
        while (!c.is_circular(y)) y = g.next(g.pair(y));
        next[i] = out.half_edge_map[y];
    }
    out.s_graph = FatGraph::from_permutations(std::move(pairing), std::move(next));

    std::vector<int> component_vertex(g.vertex_count(), -1);
    for (int h : kept)
        component_vertex[c.ghost_component(g.vertex_of(h))] = out.s_graph.vertex_of(out.half_edge_map[h]);
    out.projection.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.projection[v] = component_vertex[c.ghost_component(v)];
    return out;
}

int multiplicity(const ChordDiagram& c, const CollapsedGraph& s, int v) {
    int count = 0;
    for (int u = 0; u < c.graph().vertex_count(); ++u)
        if (c.is_circular_vertex(u) && s.projection[u] == v) ++count;
    return count;
}

int chi_defect(const ChordDiagram& c) { return c.circular_vertex_count() - collapse_ghosts(c).s_graph.vertex_count(); }

bool is_essential(const ChordDiagram& c, int e) {
    const FatGraph& g = c.graph();
    const int h = g.edge_half_edge(e);
    const int u = g.vertex_of(h);
    const int v = g.vertex_of(g.pair(h));
    if (c.edge_kind(e) == EdgeKind::circular) return c.ghost_component(u) == c.ghost_component(v);
    return c.is_circular_vertex(u) && c.is_circular_vertex(v);
}

std::vector<std::uint32_t> diagram_colors(const ChordDiagram& c, Markings markings) {
    const FatGraph& g = c.graph();
    std::vector<std::uint32_t> colors(g.half_edge_count());
    std::vector<char> marked(g.half_edge_count(), 0);
    if (markings == Markings::include)
        for (int m : c.marks()) marked[m] = 1;
    for (int h = 0; h < g.half_edge_count(); ++h) {
        const auto kind = static_cast<std::uint32_t>(c.kind_of(h));
        colors[h] = ((static_cast<std::uint32_t>(c.cycle_of(h)) * 2 + kind) * 2) + marked[h];
    }
    return colors;
}

CanonicalForm diagram_canonical_form(const ChordDiagram& c, Markings markings) {
    const auto colors = diagram_colors(c, markings);
    return canonical_form(c.graph(), colors);
}

std::string diagram_code(const ChordDiagram& c, Markings markings) { return diagram_canonical_form(c, markings).code; }

ChordDiagram relabel(const ChordDiagram& c, std::span<const int> perm) {
    const FatGraph g2 = relabel(c.graph(), perm);
    RawChord raw;
    raw.graph = g2;
    raw.edge_kind.resize(g2.edge_count());
    for (int h = 0; h < c.graph().half_edge_count(); ++h) raw.edge_kind[g2.edge_of(perm[h])] = c.kind_of(h);
    raw.incoming = c.incoming_count();
    for (int m : c.marks()) raw.marks.push_back(perm[m]);
    return ChordDiagram::validate(raw);
}

std::optional<std::vector<int>> find_isomorphism(const ChordDiagram& a, const ChordDiagram& b, Markings markings) {
    if (a.graph().half_edge_count() != b.graph().half_edge_count()) return std::nullopt;
    const auto fa = diagram_canonical_form(a, markings);
    const auto fb = diagram_canonical_form(b, markings);
    if (fa.code != fb.code) return std::nullopt;
    std::vector<int> from_canon_b(fb.labeling.size());
    for (std::size_t h = 0; h < fb.labeling.size(); ++h) from_canon_b[fb.labeling[h]] = static_cast<int>(h);
    std::vector<int> iso(fa.labeling.size());
    for (std::size_t h = 0; h < fa.labeling.size(); ++h) iso[h] = from_canon_b[fa.labeling[h]];
    return iso;
}

ChordDiagram with_marks(const ChordDiagram& c, std::vector<int> marks) {
    RawChord raw = c.raw();
    raw.marks = std::move(marks);
    return ChordDiagram::validate(raw);
}

}  // namespace chordlab
