#include <map>
#include <string>

#include "chordlab/chord.hpp"
#include "chordlab/error.hpp"

namespace chordlab {

namespace {

// Ghost half-edges at circular vertex x of c in rotation order, starting
// right after the outgoing circular half-edge.
std::vector<int> ghost_block(const ChordDiagram& c, int x) {
    const FatGraph& g = c.graph();
    int out_edge = -1;
    for (int h : g.rotation(x)) {
        if (c.is_circular(h) && c.cycle_of(h) < c.incoming_count()) out_edge = h;
    }
    std::vector<int> block;
    for (int h = g.next(out_edge); !c.is_circular(h); h = g.next(h)) block.push_back(h);
    return block;
}

[[noreturn]] void glue_failure(const std::string& what) {
    throw Error(ErrorCode::glue_validation_failed, "glued diagram is invalid: " + what);
}

}  // namespace

ChordDiagram glue(const ChordDiagram& c1, const ChordDiagram& c2, const std::optional<GlueSchedule>& schedule) {
    const TopType t1 = c1.type();
    const TopType t2 = c2.type();
    if (t1.q != t2.p)
        throw Error(ErrorCode::arity_mismatch, "c1 has " + std::to_string(t1.q) + " outgoing cycles but c2 has " +
                                                   std::to_string(t2.p) + " incoming circles");
    const int q = t1.q;
    if (schedule && static_cast<int>(schedule->positions.size()) != q)
        throw Error(ErrorCode::invalid_schedule, "schedule must list " + std::to_string(q) + " circles");

    const FatGraph& g1 = c1.graph();
    const FatGraph& g2 = c2.graph();
    const int n1 = g1.half_edge_count();
    const int n2 = g2.half_edge_count();
    auto lift = [n1](int z) { return n1 + z; };

    // Working tables over c1's half-edges, then c2's, then new ones.
    std::vector<int> pairing(n1 + n2, -1), next(n1 + n2, -1);
    std::vector<EdgeKind> kind(n1 + n2, EdgeKind::ghost);
    std::vector<char> alive(n1 + n2, 1);
    for (int h = 0; h < n1; ++h) {
        pairing[h] = g1.pair(h);
        next[h] = g1.next(h);
        kind[h] = c1.kind_of(h);
    }
    for (int z = 0; z < n2; ++z) {
        if (c2.is_circular(z)) {
            alive[lift(z)] = 0;
            continue;
        }
        pairing[lift(z)] = lift(g2.pair(z));
        next[lift(z)] = lift(g2.next(z));
    }
    auto add_half_edge = [&]() {
        pairing.push_back(-1);
        next.push_back(-1);
        kind.push_back(EdgeKind::circular);
        alive.push_back(1);
        return static_cast<int>(pairing.size()) - 1;
    };
    auto link = [&](int a, int b) {
        pairing[a] = b;
        pairing[b] = a;
    };

    // backward_at[x] = new backward circular half-edge at c2 vertex x, when x
    // was placed by subdividing an edge of c1.
    std::map<int, int> backward_at;

    for (int j = 0; j < q; ++j) {
        const auto& in_circle = c2.cycles()[j].half_edges;
        const auto& out_cycle = c1.cycles()[t1.p + j].half_edges;
        const int len = static_cast<int>(out_cycle.size());
        const int m = static_cast<int>(in_circle.size());

        std::vector<int> verts;
        for (int i = 1; i <= m; ++i) verts.push_back(g2.vertex_of(in_circle[i % m]));

        std::vector<int> pos(m, 0);
        if (schedule && !schedule->positions[j].empty()) {
            pos = schedule->positions[j];
            if (static_cast<int>(pos.size()) != m)
                throw Error(ErrorCode::invalid_schedule, "circle " + std::to_string(j) + " has " + std::to_string(m) +
                                                             " vertices but the schedule lists " +
                                                             std::to_string(pos.size()));
            for (int i = 0; i < m; ++i) {
                if (pos[i] < 0 || pos[i] >= len)
                    throw Error(ErrorCode::invalid_schedule, "position " + std::to_string(pos[i]) +
                                                                 " is outside outgoing cycle " + std::to_string(j));
                if (i > 0 && pos[i] < pos[i - 1])
                    throw Error(ErrorCode::invalid_schedule,
                                "positions on circle " + std::to_string(j) + " must be non-decreasing");
            }
        }

        for (int start = 0; start < m;) {
            int stop = start;
            while (stop < m && pos[stop] == pos[start]) ++stop;
            const int y = out_cycle[(len - pos[start]) % len];

            if (c1.is_circular(y)) {
                // y runs backwards along a c1 circle; subdivide its edge.
                int prev_forward = g1.pair(y);
                for (int i = start; i < stop; ++i) {
                    const int back = add_half_edge();
                    const int fwd = add_half_edge();
                    link(prev_forward, back);
                    backward_at[verts[i]] = back;
                    const auto block = ghost_block(c2, verts[i]);
                    next[back] = fwd;
                    next[fwd] = lift(block.front());
                    for (std::size_t b = 0; b + 1 < block.size(); ++b) next[lift(block[b])] = lift(block[b + 1]);
                    next[lift(block.back())] = back;
                    prev_forward = fwd;
                }
                link(prev_forward, y);
            } else {
                // Ghost location: the vertices snap onto the source of y,
                // entering the corner the boundary cycle passes through.
                std::vector<int> seq;
                for (int i = stop - 1; i >= start; --i)
                    for (int z : ghost_block(c2, verts[i])) seq.push_back(lift(z));
                next[g1.prev(y)] = seq.front();
                for (std::size_t b = 0; b + 1 < seq.size(); ++b) next[seq[b]] = seq[b + 1];
                next[seq.back()] = y;
            }
            start = stop;
        }
    }

    std::vector<int> renum(pairing.size(), -1);
    int fresh = 0;
    for (std::size_t h = 0; h < pairing.size(); ++h)
        if (alive[h]) renum[h] = fresh++;
    std::vector<int> out_pairing(fresh), out_next(fresh);
    std::vector<EdgeKind> out_kind(fresh);
    for (std::size_t h = 0; h < pairing.size(); ++h) {
        if (!alive[h]) continue;
        if (pairing[h] < 0 || next[h] < 0 || !alive[pairing[h]] || !alive[next[h]])
            throw Error(ErrorCode::internal, "glue left a dangling half-edge");
        out_pairing[renum[h]] = renum[pairing[h]];
        out_next[renum[h]] = renum[next[h]];
        out_kind[renum[h]] = kind[h];
    }

    RawChord raw;
    try {
        raw.graph = FatGraph::from_permutations(std::move(out_pairing), std::move(out_next));
    } catch (const Error& e) {
        glue_failure(e.what());
    }
    raw.edge_kind.resize(raw.graph.edge_count());
    for (int h = 0; h < fresh; ++h) raw.edge_kind[raw.graph.edge_of(h)] = out_kind[h];
    raw.incoming = t1.p;
    for (int i = 0; i < t1.p; ++i) raw.marks.push_back(renum[c1.marks()[i]]);
    for (int i = t2.p; i < c2.cycle_count(); ++i) {
        int mark = -1;
        for (int z : c2.cycles()[i].half_edges) {
            if (!c2.is_circular(z)) continue;
            auto it = backward_at.find(g2.vertex_of(z));
            if (it != backward_at.end()) {
                mark = renum[it->second];
                break;
            }
        }
        if (mark < 0) glue_failure("outgoing cycle " + std::to_string(i - t2.p) + " lost all of its circular edges");
        raw.marks.push_back(mark);
    }

    ChordDiagram out;
    try {
        out = ChordDiagram::validate(raw);
    } catch (const Error& e) {
        glue_failure(std::string(error_code_name(e.code())) + ": " + e.what());
    }
    const TopType expected{t1.g + t2.g + q - 1, t1.p, t2.q};
    if (out.type() != expected)
        glue_failure("type " + out.type().to_string() + " differs from " + expected.to_string());
    return out;
}

}  // namespace chordlab
