// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance FIXTURE_DIR

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "chordlab/error.hpp"
#include "chordlab/io.hpp"
#include "chordlab/moves.hpp"
#include "chordlab/tqft.hpp"
#include "fuzz.hpp"
#include "oracles.hpp"

using namespace chordlab;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string fixture_dir;

int base_edges(const TopType& t) { return canonical_gamma0(t.g, t.p, t.q).graph().edge_count(); }

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

const std::vector<Field>& fields() {
    static const std::vector<Field> all{Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
    return all;
}

Outcome boundary_partition() {
    std::mt19937_64 rng(1001);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const int edges = std::uniform_int_distribution<int>(2, 12)(rng);
        const oracle::Perms p = oracle::random_fat_graph(rng, edges);
        const FatGraph g = FatGraph::from_permutations(p.pairing, p.next);
        std::vector<int> hits(g.half_edge_count(), 0);
        const auto cycles = boundary_cycles(g);
        for (const auto& c : cycles)
            for (int h : c.half_edges) ++hits[h];
        const bool partition = std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; });
        const SurfaceType s = topological_type(g);
        const oracle::Surface ref = oracle::surface(p);
        const bool euler = 2 - 2 * s.genus - s.boundaries == g.vertex_count() - g.edge_count() && s.genus >= 0;
        const bool agrees = ref.twice_genus == 2 * s.genus && ref.boundaries == s.boundaries &&
                            static_cast<int>(cycles.size()) == s.boundaries;
        if (!partition || !euler || !agrees) ++bad;
    }
    return {bad == 0, "1000 random fat graphs with at most 12 edges, " + std::to_string(bad) + " failures"};
}

std::vector<TopType> types_up_to(int gmax, int pmax, int qmax) {
    std::vector<TopType> out;
    for (int g = 0; g <= gmax; ++g)
        for (int p = 1; p <= pmax; ++p)
            for (int q = 1; q <= qmax; ++q)
                if (!(g == 0 && p == 1 && q == 1)) out.push_back({g, p, q});
    return out;
}

Outcome euler_identity() {
    std::mt19937_64 rng(2002);
    int checked = 0, bad = 0;
    const auto types = types_up_to(2, 3, 3);
    for (const TopType& t : types) {
        const int bound = base_edges(t) + 4;
        for (int i = 0; i < 20; ++i) {
            const ChordDiagram c = random_diagram(t, bound, rng, 6 + i);
            const oracle::Surface s = oracle::surface(oracle::perms(c.graph()));
            const int chi = 2 - s.twice_genus - s.boundaries;
            if (chi_defect(c) != -chi || oracle::chord_type(c) != t) ++bad;
            ++checked;
        }
    }
    return {bad == 0 && checked >= 500, std::to_string(checked) + " diagrams over " + std::to_string(types.size()) +
                                            " types, " + std::to_string(bad) + " failures"};
}

Outcome base_points() {
    int checked = 0, bad = 0;
    for (const TopType& t : types_up_to(3, 4, 4)) {
        const ChordDiagram c = canonical_gamma0(t.g, t.p, t.q);
        const ChordDiagram again = ChordDiagram::validate(c.raw());
        if (again.type() != t || oracle::chord_type(c) != t) ++bad;
        ++checked;
    }
    bool rejected = false;
    try {
        canonical_gamma0(0, 1, 1);
    } catch (const Error& e) {
        rejected = e.code() == ErrorCode::unrepresentable_type;
    }
    return {bad == 0 && rejected && checked == 63, std::to_string(checked) + " types, " + std::to_string(bad) +
                                                       " mismatches, cylinder " +
                                                       (rejected ? "rejected" : "NOT rejected")};
}

Outcome gluing_types() {
    std::mt19937_64 rng(4004);
    int checked = 0, bad = 0;
    std::vector<std::pair<TopType, TopType>> shapes;
    for (int g1 = 0; g1 <= 1; ++g1)
        for (int g2 = 0; g2 <= 1; ++g2)
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q)
                    for (int r = 1; r <= 3; ++r) {
                        const TopType t1{g1, p, q}, t2{g2, q, r};
                        if ((g1 == 0 && p == 1 && q == 1) || (g2 == 0 && q == 1 && r == 1)) continue;
                        shapes.push_back({t1, t2});
                    }
    while (checked < 200) {
        for (const auto& [t1, t2] : shapes) {
            const ChordDiagram c1 = random_diagram(t1, base_edges(t1) + 3, rng);
            const ChordDiagram c2 = random_diagram(t2, base_edges(t2) + 3, rng);
            const ChordDiagram glued = glue(c1, c2);
            const TopType expected{t1.g + t2.g + t1.q - 1, t1.p, t2.q};
            if (glued.type() != expected || oracle::chord_type(glued) != expected) ++bad;
            ++checked;
        }
    }
    const ChordDiagram f1 = parse_chord(read_file(fixture_dir + "/glue_left.chord"));
    const ChordDiagram f2 = parse_chord(read_file(fixture_dir + "/glue_right.chord"));
    const TopType fixture_type = glue(f1, f2).type();
    const bool instance =
        f1.type() == TopType{0, 1, 2} && f2.type() == TopType{0, 2, 2} && fixture_type == TopType{1, 1, 2};
    return {bad == 0 && instance, std::to_string(checked) + " pairs, " + std::to_string(bad) +
                                      " mismatches; fixture pair glues to " + fixture_type.to_string()};
}

const std::vector<TopType> kConnectivityTypes{{0, 1, 2}, {0, 2, 1}, {0, 2, 2}, {1, 1, 1}, {1, 1, 2}};

struct ConnectivityRun {
    bool connected = true;
    bool identical = true;
    std::uint64_t moves = 0;
    std::uint64_t violations = 0;
    std::string summary;
};

const ConnectivityRun& connectivity_runs() {
    static const ConnectivityRun run = [] {
        ConnectivityRun r;
        for (const TopType& t : kConnectivityTypes) {
            const int bound = base_edges(t) + 4;
            const MoveGraphReport one = explore(t, bound, {1, true});
            const MoveGraphReport eight = explore(t, bound, {8, true});
            const bool ok = one.component_count == 1 && one.unreached.empty() && one.ungenerated.empty();
            r.connected = r.connected && ok;
            r.identical = r.identical && report_json(one) == report_json(eight);
            r.moves += one.stats.moves_checked + eight.stats.moves_checked;
            r.violations += one.stats.type_violations + eight.stats.type_violations;
            if (!r.summary.empty()) r.summary += ", ";
            r.summary +=
                t.to_string() + ":" + std::to_string(one.class_count) + "/" + std::to_string(one.component_count);
        }
        return r;
    }();
    return run;
}

Outcome connectivity() {
    const ConnectivityRun& r = connectivity_runs();
    return {r.connected && r.identical, "classes/components " + r.summary + "; reports for 1 and 8 workers " +
                                            (r.identical ? "identical" : "DIFFER")};
}

Outcome move_invariance() {
    const ConnectivityRun& r = connectivity_runs();
    return {r.violations == 0 && r.moves > 0,
            std::to_string(r.moves) + " moves checked, " + std::to_string(r.violations) + " type violations"};
}

Outcome sewing() {
    int checks = 0, bad = 0;
    for (const char* name : {"pd2", "st2"})
        for (const Field& f : fields()) {
            const FrobeniusAlgebra a = builtin_algebra(name, f);
            for (int p = 1; p <= 3; ++p)
                for (int q = 1; q <= 3; ++q)
                    for (int r = 1; r <= 3; ++r)
                        for (int g1 = 0; g1 <= 2; ++g1)
                            for (int g2 = 0; g2 <= 2; ++g2) {
                                ++checks;
                                if (!verify_gluing(a, p, q, r, g1, g2).equal) ++bad;
                            }
        }
    return {bad == 0 && checks == 1944, std::to_string(checks) + " identities, " + std::to_string(bad) + " failures"};
}

Outcome degree_shifts() {
    // Every operator that appears in the sewing sweep: arities up to 3 and
    // genus up to g1 + g2 + q - 1 = 6.
    int ops = 0, bad = 0;
    for (const Field& f : fields()) {
        const FrobeniusAlgebra a = builtin_algebra("st2", f);
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q)
                for (int g = 0; g <= 6; ++g) {
                    ++ops;
                    const OperationMatrix op = mu(a, p, q, g);
                    if (!graded_consistent(a, op) || op.degree_shift != degree_shift(p, q, g, a.ambient)) ++bad;
                }
    }
    return {bad == 0, std::to_string(ops) + " operators, " + std::to_string(bad) + " inconsistent"};
}

Outcome counits() {
    const auto pd2 = counit_solve(builtin_algebra("pd2"));
    const bool pd2_ok =
        pd2 && pd2->theta.size() == 2 && pd2->theta[0].value() == 0 && pd2->theta[1].value() == 1 && pd2->nondegenerate;
    const bool st2_none = !counit_solve(builtin_algebra("st2"));
    const bool zero_none = !counit_solve(builtin_algebra("zero-delta"));
    std::string detail = "pd2 ";
    detail += pd2 ? "theta=(" + pd2->theta[0].to_string() + "," + pd2->theta[1].to_string() + ")" +
                        (pd2->nondegenerate ? " nondegenerate" : " degenerate")
                  : "none";
    detail += st2_none ? "; st2 none" : "; st2 HAS a counit";
    detail += zero_none ? "; zero-delta none" : "; zero-delta HAS a counit";
    return {pd2_ok && st2_none && zero_none, detail};
}

Outcome diagram_coherence() {
    std::mt19937_64 rng(1010);
    const std::vector<std::pair<TopType, TopType>> shapes{
        {{0, 1, 2}, {0, 2, 1}}, {{0, 1, 2}, {0, 2, 2}}, {{1, 1, 1}, {0, 1, 2}}, {{0, 2, 1}, {1, 1, 1}},
        {{0, 2, 2}, {0, 2, 1}}, {{1, 1, 2}, {0, 2, 1}}, {{0, 1, 3}, {0, 3, 1}}, {{0, 3, 1}, {0, 1, 2}},
        {{1, 2, 1}, {1, 1, 1}}, {{0, 1, 2}, {1, 2, 2}}};
    int pairs = 0, bad = 0;
    const FrobeniusAlgebra algebras[] = {builtin_algebra("pd2"), builtin_algebra("st2")};
    for (int i = 0; i < 50; ++i) {
        const auto& [t1, t2] = shapes[i % shapes.size()];
        const ChordDiagram c1 = random_diagram(t1, base_edges(t1) + 3, rng);
        const ChordDiagram c2 = random_diagram(t2, base_edges(t2) + 3, rng);
        const ChordDiagram glued = glue(c1, c2);
        for (const FrobeniusAlgebra& a : algebras) {
            ++pairs;
            const Matrix lhs = operation_from_diagram(glued, a).matrix;
            const Matrix rhs = operation_from_diagram(c2, a).matrix * operation_from_diagram(c1, a).matrix;
            if (!(lhs == rhs)) ++bad;
        }
    }
    return {bad == 0 && pairs == 100, "50 glued pairs x 2 algebras, " + std::to_string(bad) + " mismatches"};
}

Outcome round_trips() {
    int fixtures = 0, values = 0, bad = 0;
    namespace fs = std::filesystem;
    std::vector<std::string> seeds;
    for (const auto& entry : fs::directory_iterator(fixture_dir)) {
        const std::string text = read_file(entry.path().string());
        seeds.push_back(text);
        try {
            switch (detect_kind(text)) {
                case DocumentKind::fatgraph: {
                    const FatGraph g = parse_fatgraph(text);
                    if (!(parse_fatgraph(serialize(g)) == g)) ++bad;
                    break;
                }
                case DocumentKind::chord: {
                    const ChordDiagram c = parse_chord(text);
                    const ChordDiagram back = parse_chord(serialize(c));
                    if (!(back == c) || diagram_code(back, Markings::include) != diagram_code(c, Markings::include))
                        ++bad;
                    break;
                }
                case DocumentKind::frob: {
                    const FrobeniusAlgebra a = parse_algebra(text);
                    if (serialize(parse_algebra(serialize(a))) != serialize(a)) ++bad;
                    break;
                }
                case DocumentKind::schedule: {
                    const GlueSchedule s = parse_schedule(text);
                    if (parse_schedule(serialize(s)).positions != s.positions) ++bad;
                    break;
                }
            }
            ++fixtures;
        } catch (const Error&) {
            // Deliberately invalid fixtures are covered by the unit tests.
        }
    }

    std::mt19937_64 rng(1111);
    const auto types = types_up_to(1, 3, 3);
    while (values < 500) {
        const TopType t = types[values % types.size()];
        const ChordDiagram c = shuffle_marks(random_diagram(t, base_edges(t) + 4, rng), rng);
        const ChordDiagram back = parse_chord(serialize(c));
        if (!(back == c) || diagram_code(back, Markings::include) != diagram_code(c, Markings::include)) ++bad;

        const oracle::Perms p = oracle::random_fat_graph(rng, 2 + values % 11);
        const FatGraph g = FatGraph::from_permutations(p.pairing, p.next);
        if (!(parse_fatgraph(serialize(g)) == g)) ++bad;

        const auto names = builtin_algebra_names();
        const FrobeniusAlgebra a = builtin_algebra(names[values % names.size()], fields()[values % fields().size()]);
        if (serialize(parse_algebra(serialize(a))) != serialize(a)) ++bad;

        GlueSchedule s;
        for (int j = 0; j < 1 + values % 3; ++j) {
            std::vector<int> pos(values % 4);
            for (int& x : pos) x = std::uniform_int_distribution<int>(0, 5)(rng);
            std::sort(pos.begin(), pos.end());
            s.positions.push_back(pos);
        }
        if (parse_schedule(serialize(s)).positions != s.positions) ++bad;
        values += 4;
    }

    int crashes = 0, accepted = 0;
    std::mt19937_64 fuzz_rng(99);
    for (int i = 0; i < 100000; ++i) {
        const std::string input = fuzz::random_input(fuzz_rng, seeds);
        try {
            switch (detect_kind(input)) {
                case DocumentKind::fatgraph:
                    parse_fatgraph(input);
                    break;
                case DocumentKind::chord:
                    parse_chord(input);
                    break;
                case DocumentKind::frob:
                    parse_algebra(input);
                    break;
                case DocumentKind::schedule:
                    parse_schedule(input);
                    break;
            }
            ++accepted;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::syntax_error && e.code() != ErrorCode::validation_error) ++crashes;
        } catch (...) {
            ++crashes;
        }
    }
    return {bad == 0 && crashes == 0 && fixtures > 0,
            std::to_string(fixtures) + " fixtures and " + std::to_string(values) + " random values, " +
                std::to_string(bad) + " mismatches; 100000 fuzz inputs, " + std::to_string(accepted) + " accepted, " +
                std::to_string(crashes) + " unexpected failures"};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 for no runtime limit
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " FIXTURE_DIR\n";
        return 2;
    }
    fixture_dir = argv[1];

    const std::vector<Criterion> criteria{
        {1, "boundary tracing", 10, boundary_partition},
        {2, "Euler characteristic identity", 0, euler_identity},
        {3, "base-point diagrams", 1, base_points},
        {4, "gluing types", 10, gluing_types},
        {5, "move-graph connectivity", 300, connectivity},
        {6, "moves preserve type", 0, move_invariance},
        {7, "sewing identity", 30, sewing},
        {8, "graded degree shift", 0, degree_shifts},
        {9, "counit obstruction", 0, counits},
        {10, "diagram and algebra coherence", 0, diagram_coherence},
        {11, "format round trips and fuzzing", 0, round_trips},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || elapsed < c.limit_seconds;
        const bool passed = o.passed && in_time;
        if (!passed) ++failures;
        std::string timing = seconds(elapsed);
        if (c.limit_seconds > 0) timing += " (limit " + seconds(c.limit_seconds) + ")";
        std::printf("%s  %2d  %-31s %s; %s\n", passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    timing.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
