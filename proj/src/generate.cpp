#include <algorithm>
#include <functional>
#include <numeric>

#include "chordlab/error.hpp"
#include "chordlab/moves.hpp"
#include "union_find.hpp"

namespace chordlab {

namespace {

// Non-increasing partitions of total into exactly parts positive summands.
void partitions(int total, int parts, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int first = std::min(cap, total - (parts - 1)); first >= 1; --first) {
        if (first * parts < total) break;
        cur.push_back(first);
        partitions(total - first, parts - 1, first, cur, out);
        cur.pop_back();
    }
}

// Builds every diagram over one circle layout and one ghost forest. Circular
// vertices are 0..C-1 (circle i occupying a consecutive block), ghost
// vertices C..V-1. Circular edge t runs from vertex t to its successor on
// the circle: half-edge 2t sits at t, 2t+1 at the successor. Ghost edge l
// has half-edges 2(C+l) at its first endpoint and 2(C+l)+1 at the second.
class LayoutBuilder {
public:
    LayoutBuilder(const TopType& type, const std::vector<int>& circle_sizes, int vertex_count,
                  const std::vector<std::pair<int, int>>& ghost_edges, std::map<std::string, ChordDiagram>& out)
        : type_(type), ghost_edges_(ghost_edges), out_(out) {
        for (int size : circle_sizes) {
            const int start = circular_count_;
            for (int i = 0; i < size; ++i) successor_.push_back(start + (i + 1) % size);
            circle_start_.push_back(start);
            circular_count_ += size;
        }
        predecessor_.resize(circular_count_);
        for (int t = 0; t < circular_count_; ++t) predecessor_[successor_[t]] = t;
        ghosts_at_.resize(vertex_count);
        for (std::size_t l = 0; l < ghost_edges.size(); ++l) {
            const int h = 2 * (circular_count_ + static_cast<int>(l));
            ghosts_at_[ghost_edges[l].first].push_back(h);
            ghosts_at_[ghost_edges[l].second].push_back(h + 1);
        }
        for (auto& hs : ghosts_at_) std::sort(hs.begin(), hs.end());
        rotations_.resize(vertex_count);
    }

    void run() { assign(0); }

private:
    // Chooses the ghost order at vertex v, then recurses.
    void assign(int v) {
        if (v == static_cast<int>(rotations_.size())) {
            emit();
            return;
        }
        std::vector<int> ghosts = ghosts_at_[v];
        if (v < circular_count_) {
            // Linear order after the outgoing circular half-edge.
            do {
                rotations_[v] = {2 * predecessor_[v] + 1, 2 * v};
                rotations_[v].insert(rotations_[v].end(), ghosts.begin(), ghosts.end());
                assign(v + 1);
            } while (std::next_permutation(ghosts.begin(), ghosts.end()));
        } else {
            // Cyclic order: fix the first half-edge.
            do {
                rotations_[v] = ghosts;
                assign(v + 1);
            } while (std::next_permutation(ghosts.begin() + 1, ghosts.end()));
        }
    }

    void emit() {
        const int edges = circular_count_ + static_cast<int>(ghost_edges_.size());
        RawFatGraph raw;
        raw.pairing.resize(2 * edges);
        for (int e = 0; e < edges; ++e) {
            raw.pairing[2 * e] = 2 * e + 1;
            raw.pairing[2 * e + 1] = 2 * e;
        }
        raw.vertices = rotations_;
        FatGraph graph;
        try {
            graph = FatGraph::validate(raw);
        } catch (const Error&) {
            return;
        }
        const auto cycles = boundary_cycles(graph);
        if (static_cast<int>(cycles.size()) != type_.p + type_.q) return;

        std::vector<EdgeKind> kinds(edges, EdgeKind::ghost);
        std::vector<char> circular_half(2 * edges, 0);
        for (int t = 0; t < circular_count_; ++t) {
            kinds[graph.edge_of(2 * t)] = EdgeKind::circular;
            circular_half[2 * t] = circular_half[2 * t + 1] = 1;
        }
        const auto index = boundary_cycle_index(graph);
        std::vector<int> incoming, outgoing;
        std::vector<char> taken(cycles.size(), 0);
        for (int start : circle_start_) {
            incoming.push_back(2 * start);
            taken[index[2 * start]] = 1;
        }
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            if (taken[k]) continue;
            const auto& hs = cycles[k].half_edges;
            auto it = std::find_if(hs.begin(), hs.end(), [&](int h) { return circular_half[h]; });
            if (it == hs.end()) return;
            outgoing.push_back(*it);
        }

        RawChord chord{graph, kinds, type_.p, incoming};
        chord.marks.insert(chord.marks.end(), outgoing.begin(), outgoing.end());
        ChordDiagram base;
        try {
            base = ChordDiagram::validate(chord);
        } catch (const Error&) {
            return;
        }
        if (base.type() != type_) return;

        // Every order of the incoming and of the outgoing cycles.
        std::sort(incoming.begin(), incoming.end());
        do {
            std::sort(outgoing.begin(), outgoing.end());
            do {
                std::vector<int> marks = incoming;
                marks.insert(marks.end(), outgoing.begin(), outgoing.end());
                ChordDiagram d = with_marks(base, marks);
                std::string code = diagram_code(d);
                out_.try_emplace(std::move(code), std::move(d));
            } while (std::next_permutation(outgoing.begin(), outgoing.end()));
        } while (std::next_permutation(incoming.begin(), incoming.end()));
    }

    TopType type_;
    const std::vector<std::pair<int, int>>& ghost_edges_;
    std::map<std::string, ChordDiagram>& out_;
    int circular_count_ = 0;
    std::vector<int> successor_;
    std::vector<int> predecessor_;
    std::vector<int> circle_start_;
    std::vector<std::vector<int>> ghosts_at_;
    std::vector<std::vector<int>> rotations_;
};

}  // namespace

std::map<std::string, ChordDiagram> generate_classes(const TopType& type, int max_edges) {
    std::map<std::string, ChordDiagram> out;
    const int chi = type.euler_characteristic();
    if (type.p < 1 || type.q < 1 || chi >= 1) return out;
    // Valence >= 3 gives 2E >= 3V = 3(E + chi), so E <= -3 chi.
    const int top = std::min(max_edges, -3 * chi);
    for (int edges = 1; edges <= top; ++edges) {
        const int vertices = edges + chi;
        if (vertices < 1) continue;
        for (int circular = type.p; circular <= vertices && circular <= edges; ++circular) {
            const int ghost_edge_count = edges - circular;
            std::vector<std::vector<int>> layouts;
            std::vector<int> cur;
            partitions(circular, type.p, circular, cur, layouts);

            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < vertices; ++u)
                for (int v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);

            // Forests with ghost_edge_count edges: every ghost vertex needs
            // degree >= 3 and every circular vertex degree >= 1.
            std::vector<std::pair<int, int>> chosen;
            std::vector<int> degree(vertices, 0);
            std::function<void(std::size_t, detail::UnionFind)> pick = [&](std::size_t from, detail::UnionFind uf) {
                if (static_cast<int>(chosen.size()) == ghost_edge_count) {
                    for (int v = 0; v < vertices; ++v)
                        if (degree[v] < (v < circular ? 1 : 3)) return;
                    for (const auto& sizes : layouts) LayoutBuilder(type, sizes, vertices, chosen, out).run();
                    return;
                }
                const int remaining = ghost_edge_count - static_cast<int>(chosen.size());
                if (static_cast<int>(pairs.size() - from) < remaining) return;
                for (std::size_t i = from; i < pairs.size(); ++i) {
                    auto [u, v] = pairs[i];
                    detail::UnionFind next = uf;
                    if (!next.unite(u, v)) continue;
                    chosen.push_back(pairs[i]);
                    ++degree[u];
                    ++degree[v];
                    pick(i + 1, next);
                    --degree[u];
                    --degree[v];
                    chosen.pop_back();
                }
            };
            pick(0, detail::UnionFind(vertices));
        }
    }
    return out;
}

ChordDiagram shuffle_marks(const ChordDiagram& c, std::mt19937_64& rng) {
    std::vector<int> marks;
    for (const auto& cyc : c.cycles()) {
        std::vector<int> circ;
        for (int h : cyc.half_edges)
            if (c.is_circular(h)) circ.push_back(h);
        std::uniform_int_distribution<std::size_t> pick(0, circ.size() - 1);
        marks.push_back(circ[pick(rng)]);
    }
    const int p = c.incoming_count();
    std::shuffle(marks.begin(), marks.begin() + p, rng);
    std::shuffle(marks.begin() + p, marks.end(), rng);
    return with_marks(c, marks);
}

ChordDiagram random_walk(const ChordDiagram& c, int steps, int max_edges, std::mt19937_64& rng) {
    ChordDiagram cur = c;
    for (int s = 0; s < steps; ++s) {
        const FatGraph& g = cur.graph();
        std::vector<Move> moves;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!g.is_loop(e) && !is_essential(cur, e)) moves.push_back(Move::collapse(g.edge_half_edge(e)));
        if (g.edge_count() < max_edges)
            for (const auto& r : expansions(cur)) moves.push_back(Move::expand(r.split));
        if (moves.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        cur = apply_move(cur, moves[pick(rng)]);
    }
    return cur;
}

ChordDiagram random_diagram(const TopType& type, int max_edges, std::mt19937_64& rng, int steps) {
    const ChordDiagram base = canonical_gamma0(type.g, type.p, type.q);
    return shuffle_marks(random_walk(base, steps, std::max(max_edges, base.graph().edge_count()), rng), rng);
}

}  // namespace chordlab
