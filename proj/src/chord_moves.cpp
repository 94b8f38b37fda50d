#include <algorithm>
#include <string>

#include "chordlab/chord.hpp"
#include "chordlab/error.hpp"

namespace chordlab {

CollapseResult collapse_edge_detailed(const ChordDiagram& c, int e) {
    const FatGraph& g = c.graph();
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::inconsistent_tables, "no edge " + std::to_string(e));
    if (g.is_loop(e)) throw Error(ErrorCode::loop_edge, "edge " + std::to_string(e) + " is a loop");
    if (is_essential(c, e)) throw Error(ErrorCode::essential_edge, "edge " + std::to_string(e) + " is essential");

    const int h = g.edge_half_edge(e);
    const int hb = g.pair(h);
    const int count = g.half_edge_count();

    std::vector<int> renum(count, -1);
    int fresh = 0;
    for (int x = 0; x < count; ++x)
        if (x != h && x != hb) renum[x] = fresh++;

    std::vector<int> pairing(fresh), next(fresh);
    for (int x = 0; x < count; ++x) {
        if (renum[x] < 0) continue;
        int n = g.next(x);
        if (n == h)
            n = g.next(hb);
        else if (n == hb)
            n = g.next(h);
        pairing[renum[x]] = renum[g.pair(x)];
        next[renum[x]] = renum[n];
    }

    RawChord raw;
    raw.graph = FatGraph::from_permutations(std::move(pairing), std::move(next));
    raw.edge_kind.resize(raw.graph.edge_count());
    for (int x = 0; x < count; ++x)
        if (renum[x] >= 0) raw.edge_kind[raw.graph.edge_of(renum[x])] = c.kind_of(x);
    raw.incoming = c.incoming_count();
    for (const auto& cyc : c.cycles()) {
        int mark = -1;
        for (int x : cyc.half_edges) {
            if (x != h && x != hb && c.is_circular(x)) {
                mark = x;
                break;
            }
        }
        if (mark < 0) throw Error(ErrorCode::internal, "collapse would leave a cycle without circular edges");
        raw.marks.push_back(renum[mark]);
    }

    CollapseResult out{ChordDiagram::validate(raw), Expansion{renum[g.next(h)], renum[g.next(hb)], c.edge_kind(e)}};
    return out;
}

ChordDiagram expand(const ChordDiagram& c, const Expansion& split) {
    const FatGraph& g = c.graph();
    const int count = g.half_edge_count();
    if (split.first < 0 || split.first >= count || split.second < 0 || split.second >= count ||
        split.first == split.second || g.vertex_of(split.first) != g.vertex_of(split.second))
        throw Error(ErrorCode::inconsistent_tables, "split corners must be two half-edges at one vertex");
    const int valence = g.valence(g.vertex_of(split.first));
    int arc = 0;
    for (int x = split.first; x != split.second; x = g.next(x)) ++arc;
    if (arc < 2 || valence - arc < 2)
        throw Error(ErrorCode::inconsistent_tables, "each side of a split needs at least two half-edges");

    const int na = count;
    const int nb = count + 1;
    std::vector<int> pairing = g.pairing();
    std::vector<int> next = g.next_at_vertex();
    pairing.push_back(nb);
    pairing.push_back(na);
    next.push_back(split.first);
    next.push_back(split.second);
    next[g.prev(split.second)] = na;
    next[g.prev(split.first)] = nb;

    RawChord raw;
    raw.graph = FatGraph::from_permutations(std::move(pairing), std::move(next));
    raw.edge_kind.resize(raw.graph.edge_count());
    for (int x = 0; x < count; ++x) raw.edge_kind[raw.graph.edge_of(x)] = c.kind_of(x);
    raw.edge_kind[raw.graph.edge_of(na)] = split.kind;
    raw.incoming = c.incoming_count();
    raw.marks = c.marks();
    return ChordDiagram::validate(raw);
}

std::vector<ExpansionResult> split_candidates(const ChordDiagram& c) {
    const FatGraph& g = c.graph();
    std::vector<ExpansionResult> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto rot = g.rotation(v);
        const int d = static_cast<int>(rot.size());
        if (d < 4) continue;
        std::vector<int> circ_prefix(d + 1, 0);
        for (int i = 0; i < d; ++i) circ_prefix[i + 1] = circ_prefix[i] + (c.is_circular(rot[i]) ? 1 : 0);
        for (int i = 0; i < d; ++i) {
            for (int j = i + 2; j <= d - 2 + i && j < d; ++j) {
                const int in_arc = circ_prefix[j] - circ_prefix[i];
                const int total = circ_prefix[d];
                for (EdgeKind kind : {EdgeKind::ghost, EdgeKind::circular}) {
                    // Each new vertex must end up with 0 or 2 circular half-edges.
                    const bool plausible =
                        kind == EdgeKind::ghost ? (in_arc == 0 || in_arc == total) : (total == 2 && in_arc == 1);
                    if (!plausible) continue;
                    const Expansion split{rot[i], rot[j], kind};
                    try {
                        ChordDiagram d2 = expand(c, split);
                        const int new_edge = d2.graph().edge_of(g.half_edge_count());
                        if (is_essential(d2, new_edge)) continue;
                        out.push_back({split, std::move(d2)});
                    } catch (const Error&) {
                        // not a chord diagram
                    }
                }
            }
        }
    }
    return out;
}

std::vector<ExpansionResult> expansions(const ChordDiagram& c) {
    auto out = split_candidates(c);
    std::erase_if(out, [&](const ExpansionResult& r) { return r.diagram.type() != c.type(); });
    return out;
}

}  // namespace chordlab
