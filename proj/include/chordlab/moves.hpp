#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chordlab/chord.hpp"

namespace chordlab {

enum class MoveKind : std::uint8_t { collapse, expand };

/// One elementary move on a concrete diagram. A collapse names the edge by
/// any of its half-edges, so moves can be transported along half-edge
/// bijections.
struct Move {
    MoveKind kind = MoveKind::collapse;
    int half_edge = -1;
    Expansion split{};

    static Move collapse(int h) { return {MoveKind::collapse, h, {}}; }
    static Move expand(const Expansion& s) { return {MoveKind::expand, -1, s}; }
    bool operator==(const Move&) const = default;
};

ChordDiagram apply_move(const ChordDiagram& c, const Move& m);

/// The same move on an isomorphic copy; iso maps c's half-edges to the copy's.
Move transport(const Move& m, std::span<const int> iso);

std::string to_string(const Move& m);

struct Neighbor {
    Move move;
    /// Move on `diagram` leading back to an isomorphic copy of the source.
    Move inverse;
    ChordDiagram diagram;
    std::string code;
};

/// Tallies of raw moves inspected and of moves whose result changed type.
struct MoveStats {
    std::uint64_t moves_checked = 0;
    std::uint64_t type_violations = 0;
    MoveStats& operator+=(const MoveStats& o) {
        moves_checked += o.moves_checked;
        type_violations += o.type_violations;
        return *this;
    }
};

/// All collapses of non-essential edges and all valid expansions of c,
/// deduplicated by unmarked code (first occurrence wins; collapses come
/// first, by edge id). Expansions producing more than max_edges edges are
/// skipped. Type-changing results are counted in stats and dropped.
std::vector<Neighbor> neighbors(const ChordDiagram& c, int max_edges = 1 << 20, MoveStats* stats = nullptr);

struct MoveGraphReport {
    TopType type;
    int edge_bound = 0;
    int class_count = 0;
    int component_count = 0;
    std::string gamma0_code;
    /// Unmarked codes of every class seen, sorted.
    std::vector<std::string> classes;
    /// Classes found by direct generation but not reached from the base point.
    std::vector<std::string> unreached;
    /// Classes reached from the base point but missed by direct generation.
    /// Nonempty only if the generator is incomplete.
    std::vector<std::string> ungenerated;
    int generated_count = 0;
    /// For each reached class: moves from its representative to a diagram
    /// isomorphic to the base point.
    std::map<std::string, std::vector<Move>> witness_paths;
    std::map<std::string, ChordDiagram> representatives;
    MoveStats stats;
    /// Longest witness path.
    int max_depth = 0;
};

struct ExploreOptions {
    int jobs = 1;
    /// Materialize and replay-check every witness path.
    bool witnesses = true;
};

/// Breadth-first search of the move graph from the base point of `type`,
/// restricted to diagrams with at most edge_bound edges, cross-checked
/// against direct generation. Throws unrepresentable_type, bound_too_small.
MoveGraphReport explore(const TopType& type, int edge_bound, const ExploreOptions& options = {});

/// JSON report with sorted keys; identical for any worker count.
std::string report_json(const MoveGraphReport& report);

/// Moves from c to a diagram whose unmarked code equals the base point's,
/// found by bidirectional search with edge ceiling
/// max(edges(c), edges(base point)) + slack and replayed before returning.
/// Throws search_exhausted when the ceiling stops the search.
std::vector<Move> path_to_canonical(const ChordDiagram& c, int slack = 4);

/// Applies moves in order; throws if any move is invalid.
ChordDiagram replay(const ChordDiagram& c, const std::vector<Move>& moves);

/// Every isomorphism class (unmarked code) of chord diagrams of the given
/// type with at most max_edges edges, built from circle sizes, ghost forests,
/// rotations and boundary orders without using moves. Values are
/// representatives.
std::map<std::string, ChordDiagram> generate_classes(const TopType& type, int max_edges);

/// Random walk of `steps` moves from c staying within max_edges edges.
ChordDiagram random_walk(const ChordDiagram& c, int steps, int max_edges, std::mt19937_64& rng);

/// Random diagram of the given type: a walk from the base point followed by
/// random markings and a random order within the incoming and the outgoing
/// cycles.
ChordDiagram random_diagram(const TopType& type, int max_edges, std::mt19937_64& rng, int steps = 12);

/// Same diagram with a uniformly random circular half-edge marked on each
/// cycle and random orders within incoming and outgoing cycles.
ChordDiagram shuffle_marks(const ChordDiagram& c, std::mt19937_64& rng);

}  // namespace chordlab
