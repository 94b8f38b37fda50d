#include <doctest.h>

#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "chordlab/error.hpp"
#include "chordlab/moves.hpp"
#include "oracles.hpp"

using namespace chordlab;

namespace {

int base_edges(const TopType& t) { return canonical_gamma0(t.g, t.p, t.q).graph().edge_count(); }

std::vector<int> unmarked_colors(const ChordDiagram& c) {
    std::vector<int> out(c.graph().half_edge_count());
    for (int h = 0; h < c.graph().half_edge_count(); ++h) out[h] = c.cycle_of(h) * 2 + (c.is_circular(h) ? 0 : 1);
    return out;
}

/// Number of isomorphism classes among the diagrams, by pairwise brute force.
int brute_force_classes(const std::vector<ChordDiagram>& diagrams) {
    std::vector<const ChordDiagram*> reps;
    for (const ChordDiagram& c : diagrams) {
        bool seen = false;
        for (const ChordDiagram* r : reps) {
            if (oracle::isomorphic(oracle::perms(c.graph()), oracle::perms(r->graph()), unmarked_colors(c),
                                   unmarked_colors(*r))) {
                seen = true;
                break;
            }
        }
        if (!seen) reps.push_back(&c);
    }
    return static_cast<int>(reps.size());
}

}  // namespace

TEST_CASE("move application and transport") {
    const ChordDiagram c = canonical_gamma0(0, 2, 2);
    for (const Neighbor& n : neighbors(c)) {
        CHECK(n.diagram.type() == c.type());
        CHECK(diagram_code(apply_move(c, n.move)) == n.code);
        CHECK(diagram_code(apply_move(n.diagram, n.inverse)) == diagram_code(c));
    }
    CHECK(to_string(Move::collapse(3)) == "collapse 3");
    const Move m = Move::expand({1, 2, EdgeKind::ghost});
    std::vector<int> iso{5, 4, 3, 2, 1, 0};
    const Move moved = transport(m, iso);
    CHECK(moved.split.first == 4);
    CHECK(moved.split.second == 3);
}

TEST_CASE("neighbor enumeration counts moves and never changes type") {
    std::mt19937_64 rng(2);
    for (const TopType& t : {TopType{0, 1, 2}, TopType{1, 1, 1}, TopType{0, 2, 2}, TopType{1, 2, 1}}) {
        const ChordDiagram c = random_diagram(t, base_edges(t) + 3, rng);
        MoveStats stats;
        const auto ns = neighbors(c, base_edges(t) + 3, &stats);
        CHECK(stats.type_violations == 0);
        CHECK(stats.moves_checked >= ns.size());
        std::set<std::string> codes;
        for (const auto& n : ns) {
            CHECK(n.diagram.type() == t);
            CHECK(n.diagram.graph().edge_count() <= base_edges(t) + 3);
            codes.insert(n.code);
        }
        CHECK(codes.size() == ns.size());
    }
}

TEST_CASE("explore connects small types and agrees with a brute-force class count") {
    for (const TopType& t : {TopType{0, 1, 2}, TopType{0, 2, 1}, TopType{1, 1, 1}, TopType{0, 2, 2}}) {
        CAPTURE(t.to_string());
        const int bound = base_edges(t) + 4;
        const MoveGraphReport r = explore(t, bound);
        CHECK(r.component_count == 1);
        CHECK(r.unreached.empty());
        CHECK(r.ungenerated.empty());
        CHECK(r.stats.type_violations == 0);
        CHECK(r.class_count == static_cast<int>(r.classes.size()));
        CHECK(r.generated_count == r.class_count);

        std::vector<ChordDiagram> reps;
        for (const auto& [code, c] : r.representatives) reps.push_back(c);
        CHECK(brute_force_classes(reps) == r.class_count);

        std::mt19937_64 rng(17);
        std::vector<ChordDiagram> sample;
        for (int i = 0; i < 60; ++i) sample.push_back(random_diagram(t, bound, rng));
        for (const ChordDiagram& c : sample) {
            const std::string code = to_hex(diagram_code(c));
            CHECK(std::binary_search(r.classes.begin(), r.classes.end(), code));
        }
    }
}

TEST_CASE("witness paths replay onto the base point") {
    const TopType t{1, 1, 2};
    const MoveGraphReport r = explore(t, base_edges(t) + 2);
    const std::string target = diagram_code(canonical_gamma0(t.g, t.p, t.q));
    CHECK(r.witness_paths.size() == r.representatives.size());
    for (const auto& [code, path] : r.witness_paths) {
        const ChordDiagram end = replay(r.representatives.at(code), path);
        CHECK(diagram_code(end) == target);
    }
}

TEST_CASE("report is identical for any worker count") {
    const TopType t{0, 2, 2};
    const std::string one = report_json(explore(t, base_edges(t) + 3, {1, true}));
    const std::string three = report_json(explore(t, base_edges(t) + 3, {3, true}));
    CHECK(one == three);
    const auto j = nlohmann::json::parse(one);
    CHECK(j["components"] == 1);
    CHECK(j["type"]["g"] == 0);
    CHECK(j["bound"] == base_edges(t) + 3);
}

TEST_CASE("explore rejects a bound below the base point") {
    try {
        explore({1, 1, 1}, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bound_too_small);
    }
}

TEST_CASE("path to the base point from random diagrams") {
    std::mt19937_64 rng(99);
    for (const TopType& t : {TopType{0, 2, 2}, TopType{1, 1, 2}, TopType{0, 3, 1}}) {
        for (int i = 0; i < 5; ++i) {
            const ChordDiagram c = shuffle_marks(random_diagram(t, base_edges(t) + 4, rng), rng);
            const auto path = path_to_canonical(c);
            CHECK(diagram_code(replay(c, path)) == diagram_code(canonical_gamma0(t.g, t.p, t.q)));
        }
    }
}

TEST_CASE("generated classes carry the type and stay in the edge bound") {
    const TopType t{1, 1, 1};
    const auto classes = generate_classes(t, base_edges(t) + 2);
    CHECK(!classes.empty());
    for (const auto& [code, c] : classes) {
        CHECK(c.type() == t);
        CHECK(c.graph().edge_count() <= base_edges(t) + 2);
        CHECK(diagram_code(c) == code);
    }
}
