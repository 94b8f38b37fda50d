#include "chordlab/fatgraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chordlab/error.hpp"

namespace chordlab {

namespace {

Error table_error(ErrorCode code, const std::string& what, int h) {
    Error e(code, what);
    e.at_half_edge(h);
    return e;
}

void check_connected(const std::vector<int>& pairing, const std::vector<int>& next) {
    const int n = static_cast<int>(pairing.size());
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int x : {pairing[h], next[h]}) {
            if (!seen[x]) {
                seen[x] = 1;
                ++reached;
                stack.push_back(x);
            }
        }
    }
    if (reached != n) {
        int h = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        throw table_error(
            ErrorCode::disconnected,
            "graph is disconnected: half-edge " + std::to_string(h) + " is not reachable from half-edge 0", h);
    }
}

}  // namespace

FatGraph FatGraph::validate(const RawFatGraph& raw, Connectivity connectivity) {
    const auto n = raw.pairing.size();
    if (n == 0) throw Error(ErrorCode::inconsistent_tables, "graph has no half-edges");
    if (n > (1u << 24)) throw Error(ErrorCode::inconsistent_tables, "too many half-edges");
    const int count = static_cast<int>(n);

    std::vector<int> next(count, -1);
    for (const auto& cyc : raw.vertices) {
        if (cyc.empty()) throw Error(ErrorCode::inconsistent_tables, "vertex with no half-edges");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int h = cyc[i];
            if (h < 0 || h >= count)
                throw table_error(
                    ErrorCode::inconsistent_tables,
                    "vertex lists half-edge " + std::to_string(h) + " outside 0.." + std::to_string(count - 1), -1);
            if (next[h] != -1)
                throw table_error(ErrorCode::inconsistent_tables,
                                  "half-edge " + std::to_string(h) + " appears at two vertex positions", h);
            next[h] = cyc[(i + 1) % cyc.size()];
        }
    }
    for (int h = 0; h < count; ++h) {
        if (next[h] == -1)
            throw table_error(ErrorCode::inconsistent_tables,
                              "half-edge " + std::to_string(h) + " is not at any vertex", h);
    }
    return from_permutations(raw.pairing, std::move(next), connectivity);
}

FatGraph FatGraph::from_permutations(std::vector<int> pairing, std::vector<int> next_at_vertex,
                                     Connectivity connectivity) {
    const int count = static_cast<int>(pairing.size());
    if (count == 0) throw Error(ErrorCode::inconsistent_tables, "graph has no half-edges");
    if (static_cast<int>(next_at_vertex.size()) != count)
        throw Error(ErrorCode::inconsistent_tables, "pairing and vertex tables differ in size");
    for (int h = 0; h < count; ++h) {
        int o = pairing[h];
        if (o < 0 || o >= count)
            throw table_error(ErrorCode::inconsistent_tables,
                              "pairing of half-edge " + std::to_string(h) + " is out of range", h);
        if (o == h)
            throw table_error(ErrorCode::fixed_point_in_pairing,
                              "half-edge " + std::to_string(h) + " is paired with itself", h);
    }
    for (int h = 0; h < count; ++h) {
        if (pairing[pairing[h]] != h)
            throw table_error(ErrorCode::inconsistent_tables,
                              "pairing is not an involution at half-edge " + std::to_string(h), h);
    }
    std::vector<char> hit(count, 0);
    for (int h = 0; h < count; ++h) {
        int x = next_at_vertex[h];
        if (x < 0 || x >= count || hit[x])
            throw table_error(ErrorCode::inconsistent_tables, "vertex table is not a permutation", h);
        hit[x] = 1;
    }

    FatGraph g;
    g.pairing_ = std::move(pairing);
    g.next_ = std::move(next_at_vertex);
    g.index();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.valence(v) < 3)
            throw table_error(ErrorCode::valence_too_low,
                              "vertex " + std::to_string(v) + " has valence " + std::to_string(g.valence(v)) +
                                  " (at least 3 required)",
                              g.vertex_first_[v]);
    }
    if (connectivity == Connectivity::required) check_connected(g.pairing_, g.next_);
    return g;
}

void FatGraph::index() {
    const int count = half_edge_count();
    prev_.assign(count, -1);
    for (int h = 0; h < count; ++h) prev_[next_[h]] = h;

    vertex_of_.assign(count, -1);
    vertex_first_.clear();
    for (int h = 0; h < count; ++h) {
        if (vertex_of_[h] != -1) continue;
        int v = static_cast<int>(vertex_first_.size());
        vertex_first_.push_back(h);
        int x = h;
        do {
            vertex_of_[x] = v;
            x = next_[x];
        } while (x != h);
    }

    edge_of_.assign(count, -1);
    edge_first_.clear();
    for (int h = 0; h < count; ++h) {
        if (edge_of_[h] != -1) continue;
        int e = static_cast<int>(edge_first_.size());
        edge_first_.push_back(h);
        edge_of_[h] = e;
        edge_of_[pairing_[h]] = e;
    }
}

int FatGraph::valence(int v) const {
    int h = vertex_first_[v];
    int x = h;
    int d = 0;
    do {
        ++d;
        x = next_[x];
    } while (x != h);
    return d;
}

std::vector<int> FatGraph::rotation(int v) const {
    std::vector<int> out;
    int h = vertex_first_[v];
    int x = h;
    do {
        out.push_back(x);
        x = next_[x];
    } while (x != h);
    return out;
}

RawFatGraph FatGraph::raw() const {
    RawFatGraph r;
    r.pairing = pairing_;
    for (int v = 0; v < vertex_count(); ++v) r.vertices.push_back(rotation(v));
    return r;
}

std::vector<BoundaryCycle> boundary_cycles(const FatGraph& g) {
    std::vector<BoundaryCycle> out;
    std::vector<char> seen(g.half_edge_count(), 0);
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (seen[h]) continue;
        BoundaryCycle c;
        int x = h;
        do {
            seen[x] = 1;
            c.half_edges.push_back(x);
            x = g.trace(x);
        } while (x != h);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> boundary_cycle_index(const FatGraph& g) {
    std::vector<int> index(g.half_edge_count(), -1);
    int id = 0;
    for (int h = 0; h < g.half_edge_count(); ++h) {
        if (index[h] != -1) continue;
        int x = h;
        do {
            index[x] = id;
            x = g.trace(x);
        } while (x != h);
        ++id;
    }
    return index;
}

int euler_characteristic(const FatGraph& g) { return g.vertex_count() - g.edge_count(); }

SurfaceType topological_type(const FatGraph& g) {
    const int n = static_cast<int>(boundary_cycles(g).size());
    const int twice_genus = 2 - euler_characteristic(g) - n;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw Error(ErrorCode::non_integer_genus,
                    "2 - chi - n = " + std::to_string(twice_genus) + " is not a non-negative even number");
    return {twice_genus / 2, n};
}

std::string TopType::to_string() const {
    return "(" + std::to_string(g) + ";" + std::to_string(p) + "," + std::to_string(q) + ")";
}

FatGraph relabel(const FatGraph& g, std::span<const int> perm) {
    const int count = g.half_edge_count();
    if (static_cast<int>(perm.size()) != count) throw Error(ErrorCode::internal, "relabeling has the wrong size");
    std::vector<int> pairing(count), next(count);
    for (int h = 0; h < count; ++h) {
        pairing[perm[h]] = perm[g.pair(h)];
        next[perm[h]] = perm[g.next(h)];
    }
    return FatGraph::from_permutations(std::move(pairing), std::move(next), Connectivity::allow_disjoint);
}

std::string to_hex(const std::string& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace chordlab
