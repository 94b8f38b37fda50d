#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chordlab {

/// Unvalidated rotation-system tables. `pairing[h]` is the opposite
/// half-edge of h; each entry of `vertices` lists the half-edges at one
/// vertex in cyclic order.
struct RawFatGraph {
    std::vector<int> pairing;
    std::vector<std::vector<int>> vertices;
};

enum class Connectivity { required, allow_disjoint };

/// A fat graph (ribbon graph) stored as two permutations on the dense
/// half-edge set 0..2E-1: the pairing involution and the successor in the
/// cyclic order at each vertex. A half-edge h stands for its edge oriented
/// away from vertex_of(h).
///
/// Vertices are numbered by their smallest half-edge and edges by their
/// smallest half-edge, so the numbering is a function of the two
/// permutations alone.
class FatGraph {
public:
    FatGraph() = default;

    /// Checks the tables and builds the graph. Throws chordlab::Error with
    /// fixed_point_in_pairing, valence_too_low, disconnected or
    /// inconsistent_tables.
    static FatGraph validate(const RawFatGraph& raw, Connectivity connectivity = Connectivity::required);

    /// Same checks, starting from the two permutations.
    static FatGraph from_permutations(std::vector<int> pairing, std::vector<int> next_at_vertex,
                                      Connectivity connectivity = Connectivity::required);

    int half_edge_count() const noexcept { return static_cast<int>(pairing_.size()); }
    int edge_count() const noexcept { return half_edge_count() / 2; }
    int vertex_count() const noexcept { return static_cast<int>(vertex_first_.size()); }

    int pair(int h) const { return pairing_[h]; }
    int next(int h) const { return next_[h]; }
    int prev(int h) const { return prev_[h]; }
    /// Boundary tracing permutation t = next_at_vertex . pairing.
    int trace(int h) const { return next_[pairing_[h]]; }

    int vertex_of(int h) const { return vertex_of_[h]; }
    int edge_of(int h) const { return edge_of_[h]; }
    /// Smallest half-edge of edge e.
    int edge_half_edge(int e) const { return edge_first_[e]; }
    /// Smallest half-edge of vertex v.
    int vertex_half_edge(int v) const { return vertex_first_[v]; }
    int valence(int v) const;
    /// Half-edges at v in cyclic order, starting at the smallest.
    std::vector<int> rotation(int v) const;
    bool is_loop(int e) const { return vertex_of_[edge_first_[e]] == vertex_of_[pairing_[edge_first_[e]]]; }

    const std::vector<int>& pairing() const noexcept { return pairing_; }
    const std::vector<int>& next_at_vertex() const noexcept { return next_; }
    RawFatGraph raw() const;

    bool operator==(const FatGraph& other) const { return pairing_ == other.pairing_ && next_ == other.next_; }

private:
    void index();

    std::vector<int> pairing_;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> vertex_of_;
    std::vector<int> edge_of_;
    std::vector<int> vertex_first_;
    std::vector<int> edge_first_;
};

/// One orbit of the tracing permutation, listed in tracing order.
struct BoundaryCycle {
    std::vector<int> half_edges;

    int size() const noexcept { return static_cast<int>(half_edges.size()); }
    bool operator==(const BoundaryCycle&) const = default;
};

/// Orbits of t = next . pair, ordered by smallest half-edge, each starting at
/// its smallest half-edge. The position in this list is the cycle id used by
/// the document formats.
std::vector<BoundaryCycle> boundary_cycles(const FatGraph& g);

/// cycle_index[h] = id of the boundary cycle containing h.
std::vector<int> boundary_cycle_index(const FatGraph& g);

int euler_characteristic(const FatGraph& g);

struct SurfaceType {
    int genus = 0;
    int boundaries = 0;
    bool operator==(const SurfaceType&) const = default;
};

/// Genus and boundary count of the thickened surface of a connected graph.
SurfaceType topological_type(const FatGraph& g);

/// Genus g, p incoming and q outgoing boundary circles.
struct TopType {
    int g = 0;
    int p = 0;
    int q = 0;

    int euler_characteristic() const noexcept { return 2 - 2 * g - p - q; }
    std::string to_string() const;
    auto operator<=>(const TopType&) const = default;
};

/// Result of canonical relabeling. `code` is a byte string; `labeling[h]`
/// is the canonical label of half-edge h.
struct CanonicalForm {
    std::string code;
    std::vector<int> labeling;
};

/// Canonical form of a connected fat graph whose half-edges carry colors
/// (pass an empty span for an uncolored graph). Two colored graphs receive
/// equal codes iff some bijection of half-edges commutes with pairing and
/// next_at_vertex and preserves colors.
///
/// Each start half-edge seeds a breadth-first relabeling along pair and
/// next; the lexicographically smallest serialization wins. Only starts
/// with the smallest local invariant are tried. `steps`, when non-null,
/// receives the number of traversal steps taken.
CanonicalForm canonical_form(const FatGraph& g, std::span<const std::uint32_t> colors = {},
                             std::uint64_t* steps = nullptr);

inline std::string canonical_code(const FatGraph& g) { return canonical_form(g).code; }

/// Graph with half-edge h renamed to perm[h].
FatGraph relabel(const FatGraph& g, std::span<const int> perm);

std::string to_hex(const std::string& bytes);

}  // namespace chordlab
