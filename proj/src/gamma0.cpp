#include <algorithm>
#include <string>

#include "chordlab/chord.hpp"
#include "chordlab/error.hpp"

namespace chordlab {

// Layout of the base-point diagram:
//   * a big circle v0 = B0 -> B1 -> ... -> Bk -> v0 with k = q - 1 + 2g,
//   * one chord from v0 to each Bj; at v0 the first q - 1 chords appear in
//     circle order (each cuts off a small outgoing cycle) and the remaining
//     2g chords come in swapped pairs, which adds genus without adding
//     boundary,
//   * p - 1 one-vertex circles, each tied to v0 by a single ghost edge placed
//     just before the incoming circular edge of v0, i.e. inside the last
//     outgoing cycle.
// Every vertex except v0 is trivalent.
ChordDiagram canonical_gamma0(int g, int p, int q) {
    if (g < 0 || p < 1 || q < 1)
        throw Error(ErrorCode::unrepresentable_type,
                    "type " + TopType{g, p, q}.to_string() + " needs g >= 0, p >= 1, q >= 1");
    const int k = q - 1 + 2 * g;
    if (k == 0 && p == 1)
        throw Error(ErrorCode::unrepresentable_type,
                    "type (0;1,1) has no chord diagram with trivalent vertices; the cylinder acts as the identity");

    const int circle_edges = k + 1;
    const int edge_total = circle_edges + k + 2 * (p - 1);
    auto forward = [](int i) { return 2 * i; };
    auto backward = [](int i) { return 2 * i + 1; };
    auto chord_at_v0 = [&](int j) { return 2 * (k + j); };
    auto chord_at_circle = [&](int j) { return 2 * (k + j) + 1; };
    auto loop_edge = [&](int s) { return circle_edges + k + 2 * (s - 1); };

    RawFatGraph raw;
    raw.pairing.resize(2 * edge_total);
    for (int e = 0; e < edge_total; ++e) {
        raw.pairing[2 * e] = 2 * e + 1;
        raw.pairing[2 * e + 1] = 2 * e;
    }
    std::vector<EdgeKind> kinds(edge_total, EdgeKind::ghost);
    for (int i = 0; i < circle_edges; ++i) kinds[i] = EdgeKind::circular;
    for (int s = 1; s < p; ++s) kinds[loop_edge(s)] = EdgeKind::circular;

    std::vector<int> chord_order;
    for (int j = 1; j <= q - 1; ++j) chord_order.push_back(j);
    for (int t = 0; t < g; ++t) {
        chord_order.push_back(q + 2 * t + 1);
        chord_order.push_back(q + 2 * t);
    }

    std::vector<int> v0{backward(k), forward(0)};
    for (int j : chord_order) v0.push_back(chord_at_v0(j));
    for (int s = 1; s < p; ++s) v0.push_back(2 * (loop_edge(s) + 1));
    raw.vertices.push_back(v0);
    for (int j = 1; j <= k; ++j) raw.vertices.push_back({backward(j - 1), forward(j), chord_at_circle(j)});
    for (int s = 1; s < p; ++s) {
        const int a = 2 * loop_edge(s);
        raw.vertices.push_back({a + 1, a, 2 * (loop_edge(s) + 1) + 1});
    }

    const FatGraph graph = FatGraph::validate(raw);
    const auto index = boundary_cycle_index(graph);

    std::vector<int> marks{forward(0)};
    for (int s = 1; s < p; ++s) marks.push_back(2 * loop_edge(s));
    std::vector<char> taken(*std::max_element(index.begin(), index.end()) + 1, 0);
    for (int m : marks) taken[index[m]] = 1;

    auto first_circular = [&](int start) {
        int x = start;
        while (kinds[graph.edge_of(x)] != EdgeKind::circular) x = graph.trace(x);
        return x;
    };
    std::vector<int> outgoing;
    for (std::size_t i = 2; i < v0.size(); ++i) {
        if (taken[index[v0[i]]]) continue;
        taken[index[v0[i]]] = 1;
        outgoing.push_back(first_circular(v0[i]));
    }
    if (!taken[index[backward(k)]]) outgoing.push_back(backward(k));
    // The cycle through the incoming corner of v0 carries the genus; it goes last.
    auto last = std::find_if(outgoing.begin(), outgoing.end(), [&](int m) { return index[m] == index[backward(k)]; });
    std::rotate(last, last + 1, outgoing.end());
    marks.insert(marks.end(), outgoing.begin(), outgoing.end());

    return ChordDiagram::validate(RawChord{graph, kinds, p, marks});
}

}  // namespace chordlab
