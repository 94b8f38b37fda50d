#include "chordlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "chordlab/error.hpp"

namespace chordlab {

namespace {

constexpr std::size_t kMaxInputBytes = std::size_t{1} << 24;
constexpr long long kMaxIndex = 1 << 22;
constexpr long long kMaxCircles = 4096;

struct Token {
    std::string text;
    int column = 0;
};

struct Record {
    int line = 0;
    std::vector<Token> tokens;

    const std::string& key() const { return tokens.front().text; }
    int end_column() const {
        const Token& t = tokens.back();
        return t.column + static_cast<int>(t.text.size());
    }
};

std::vector<Record> tokenize(std::string_view text) {
    if (text.size() > kMaxInputBytes) throw Error(ErrorCode::syntax_error, "input exceeds 16 MiB", 1, 1);
    std::vector<Record> out;
    int line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view body = text.substr(pos, end - pos);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        Record rec{line, {}};
        std::size_t i = 0;
        while (i < body.size()) {
            while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == '\r')) ++i;
            const std::size_t start = i;
            while (i < body.size() && body[i] != ' ' && body[i] != '\t' && body[i] != '\r') ++i;
            if (i > start)
                rec.tokens.push_back({std::string(body.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (!rec.tokens.empty()) out.push_back(std::move(rec));
        ++line;
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void syntax(int line, int column, const std::string& what) {
    throw Error(ErrorCode::syntax_error, what, line, column);
}

[[noreturn]] void invalid(ErrorCode inner, const std::string& what, int line, int column) {
    throw Error::wrap(Error(inner, what), line, column);
}

void expect_header(const std::vector<Record>& records, const std::string& kind) {
    const std::string want = "'" + kind + " v1'";
    if (records.empty()) syntax(1, 1, "empty document, expected " + want);
    const Record& r = records.front();
    if (r.key() != kind) syntax(r.line, r.tokens[0].column, "expected header " + want + ", got '" + r.key() + "'");
    if (r.tokens.size() < 2 || r.tokens[1].text != "v1")
        syntax(r.line, r.tokens.size() < 2 ? r.end_column() : r.tokens[1].column, "expected version 'v1'");
    if (r.tokens.size() > 2) syntax(r.line, r.tokens[2].column, "unexpected token after the header");
}

long long integer(const Record& r, std::size_t i, long long lo, long long hi, const std::string& what) {
    if (i >= r.tokens.size()) syntax(r.line, r.end_column(), "missing " + what);
    const Token& t = r.tokens[i];
    std::size_t k = 0;
    bool negative = false;
    if (lo < 0 && !t.text.empty() && t.text[0] == '-') {
        negative = true;
        k = 1;
    }
    if (k == t.text.size() || t.text.size() - k > 12 ||
        !std::all_of(t.text.begin() + static_cast<long>(k), t.text.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
        syntax(r.line, t.column, "expected " + what + ", got '" + t.text + "'");
    long long v = std::stoll(t.text.substr(k));
    if (negative) v = -v;
    if (v < lo || v > hi)
        syntax(r.line, t.column, what + " " + t.text + " is outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return v;
}

void expect_arity(const Record& r, std::size_t count) {
    if (r.tokens.size() < count) syntax(r.line, r.end_column(), "'" + r.key() + "' record is incomplete");
    if (r.tokens.size() > count) syntax(r.line, r.tokens[count].column, "unexpected token in '" + r.key() + "' record");
}

struct Position {
    int line = 0;
    int column = 0;
};

// pair and vertex records shared by the graph and chord formats.
struct GraphSection {
    int header_line = 1;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Position> pair_pos;
    std::vector<std::pair<Position, Position>> pair_token_pos;
    std::vector<std::vector<int>> vertices;
    std::vector<std::vector<Position>> vertex_token_pos;

    // Per half-edge locations, filled by build().
    std::vector<Position> in_pair;
    std::vector<Position> in_vertex;

    bool consume(const Record& r) {
        if (r.key() == "pair") {
            expect_arity(r, 3);
            const int a = static_cast<int>(integer(r, 1, 0, kMaxIndex, "half-edge"));
            const int b = static_cast<int>(integer(r, 2, 0, kMaxIndex, "half-edge"));
            pairs.emplace_back(a, b);
            pair_pos.push_back({r.line, r.tokens[0].column});
            pair_token_pos.push_back({{r.line, r.tokens[1].column}, {r.line, r.tokens[2].column}});
            return true;
        }
        if (r.key() == "vertex") {
            if (r.tokens.size() < 2) syntax(r.line, r.end_column(), "vertex record lists no half-edges");
            std::vector<int> hs;
            std::vector<Position> ps;
            for (std::size_t i = 1; i < r.tokens.size(); ++i) {
                hs.push_back(static_cast<int>(integer(r, i, 0, kMaxIndex, "half-edge")));
                ps.push_back({r.line, r.tokens[i].column});
            }
            vertices.push_back(std::move(hs));
            vertex_token_pos.push_back(std::move(ps));
            return true;
        }
        return false;
    }

    Position locate(const Error& e) const {
        const int h = e.half_edge();
        if (h < 0 || h >= static_cast<int>(in_pair.size())) return {header_line, 1};
        const bool pairing_error = e.code() == ErrorCode::fixed_point_in_pairing ||
                                   (e.code() == ErrorCode::inconsistent_tables && in_vertex[h].line == 0);
        if (!pairing_error && in_vertex[h].line > 0) return in_vertex[h];
        return in_pair[h];
    }

    FatGraph build() {
        if (pairs.empty()) invalid(ErrorCode::inconsistent_tables, "document has no pair records", header_line, 1);
        const int n = 2 * static_cast<int>(pairs.size());
        in_pair.assign(n, {});
        in_vertex.assign(n, {});
        RawFatGraph raw;
        raw.pairing.assign(n, -1);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto [a, b] = pairs[k];
            const auto [pa, pb] = pair_token_pos[k];
            for (auto [h, p] : {std::pair{a, pa}, std::pair{b, pb}}) {
                if (h >= n)
                    invalid(ErrorCode::inconsistent_tables,
                            "half-edge " + std::to_string(h) + " is outside 0.." + std::to_string(n - 1) +
                                " (two per pair record)",
                            p.line, p.column);
            }
            if (a == b)
                invalid(ErrorCode::fixed_point_in_pairing, "half-edge " + std::to_string(a) + " is paired with itself",
                        pair_pos[k].line, pair_pos[k].column);
            for (auto [h, p] : {std::pair{a, pa}, std::pair{b, pb}}) {
                if (raw.pairing[h] != -1)
                    invalid(ErrorCode::inconsistent_tables,
                            "half-edge " + std::to_string(h) + " appears in two pair records", p.line, p.column);
                in_pair[h] = pair_pos[k];
            }
            raw.pairing[a] = b;
            raw.pairing[b] = a;
        }
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            for (std::size_t i = 0; i < vertices[v].size(); ++i) {
                const int h = vertices[v][i];
                const Position p = vertex_token_pos[v][i];
                if (h >= n)
                    invalid(ErrorCode::inconsistent_tables, "half-edge " + std::to_string(h) + " has no pair record",
                            p.line, p.column);
                if (in_vertex[h].line > 0)
                    invalid(ErrorCode::inconsistent_tables,
                            "half-edge " + std::to_string(h) + " appears at two vertex positions", p.line, p.column);
                in_vertex[h] = p;
            }
        }
        raw.vertices = vertices;
        try {
            return FatGraph::validate(raw);
        } catch (const Error& e) {
            const Position p = locate(e);
            throw Error::wrap(e, p.line, p.column);
        }
    }
};

void write_graph_records(std::ostringstream& out, const FatGraph& g) {
    for (int h = 0; h < g.half_edge_count(); ++h)
        if (h < g.pair(h)) out << "pair " << h << ' ' << g.pair(h) << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "vertex";
        for (int h : g.rotation(v)) out << ' ' << h;
        out << '\n';
    }
}

std::string coefficient_text(const Scalar& s) {
    if (!s.field().is_rational()) return s.to_string();
    const Rational v = s.value();
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return s.to_string();
}

}  // namespace

DocumentKind detect_kind(std::string_view text) {
    const auto records = tokenize(text);
    if (records.empty()) syntax(1, 1, "empty document");
    const Record& r = records.front();
    static const std::map<std::string, DocumentKind> kinds{{"fatgraph", DocumentKind::fatgraph},
                                                           {"chord", DocumentKind::chord},
                                                           {"frob", DocumentKind::frob},
                                                           {"schedule", DocumentKind::schedule}};
    auto it = kinds.find(r.key());
    if (it == kinds.end())
        syntax(r.line, r.tokens[0].column,
               "unknown document kind '" + r.key() + "' (expected fatgraph, chord, frob or schedule)");
    expect_header(records, r.key());
    return it->second;
}

FatGraph parse_fatgraph(std::string_view text) {
    const auto records = tokenize(text);
    expect_header(records, "fatgraph");
    GraphSection graph;
    graph.header_line = records.front().line;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Record& r = records[i];
        if (!graph.consume(r)) syntax(r.line, r.tokens[0].column, "unknown record '" + r.key() + "'");
    }
    return graph.build();
}

ChordDiagram parse_chord(std::string_view text) {
    const auto records = tokenize(text);
    expect_header(records, "chord");
    GraphSection graph;
    graph.header_line = records.front().line;

    struct EdgeRecord {
        long long id;
        EdgeKind kind;
        Position pos;
    };
    struct MarkRecord {
        long long cycle;
        long long half_edge;
        Position pos;
        Position half_edge_pos;
    };
    std::vector<EdgeRecord> edges;
    std::vector<MarkRecord> marks;
    const Record* incoming = nullptr;
    const Record* order = nullptr;

    for (std::size_t i = 1; i < records.size(); ++i) {
        const Record& r = records[i];
        if (graph.consume(r)) continue;
        if (r.key() == "edge") {
            expect_arity(r, 3);
            const long long id = integer(r, 1, 0, kMaxIndex, "edge id");
            const std::string& k = r.tokens[2].text;
            if (k != "C" && k != "G") syntax(r.line, r.tokens[2].column, "edge kind must be C or G, got '" + k + "'");
            edges.push_back({id, k == "C" ? EdgeKind::circular : EdgeKind::ghost, {r.line, r.tokens[0].column}});
        } else if (r.key() == "incoming") {
            expect_arity(r, 2);
            if (incoming) syntax(r.line, r.tokens[0].column, "duplicate 'incoming' record");
            integer(r, 1, 0, kMaxIndex, "incoming count");
            incoming = &r;
        } else if (r.key() == "order") {
            if (order) syntax(r.line, r.tokens[0].column, "duplicate 'order' record");
            for (std::size_t k = 1; k < r.tokens.size(); ++k) integer(r, k, 0, kMaxIndex, "cycle id");
            order = &r;
        } else if (r.key() == "mark") {
            expect_arity(r, 3);
            marks.push_back({integer(r, 1, 0, kMaxIndex, "cycle id"),
                             integer(r, 2, 0, kMaxIndex, "half-edge"),
                             {r.line, r.tokens[0].column},
                             {r.line, r.tokens[2].column}});
        } else {
            syntax(r.line, r.tokens[0].column, "unknown record '" + r.key() + "'");
        }
    }
    const int header = graph.header_line;
    if (!incoming) syntax(header, 1, "missing 'incoming' record");
    if (!order) syntax(header, 1, "missing 'order' record");

    const FatGraph g = graph.build();
    const int edge_count = g.edge_count();
    RawChord raw;
    raw.graph = g;
    raw.edge_kind.assign(edge_count, EdgeKind::ghost);
    std::vector<Position> edge_pos(edge_count);
    for (const auto& e : edges) {
        if (e.id >= edge_count)
            invalid(ErrorCode::inconsistent_tables,
                    "edge " + std::to_string(e.id) + " does not exist (edges are 0.." + std::to_string(edge_count - 1) +
                        ")",
                    e.pos.line, e.pos.column);
        if (edge_pos[e.id].line > 0)
            invalid(ErrorCode::inconsistent_tables, "edge " + std::to_string(e.id) + " has two edge records",
                    e.pos.line, e.pos.column);
        edge_pos[e.id] = e.pos;
        raw.edge_kind[e.id] = e.kind;
    }
    for (int e = 0; e < edge_count; ++e)
        if (edge_pos[e].line == 0)
            invalid(ErrorCode::inconsistent_tables, "edge " + std::to_string(e) + " has no edge record", header, 1);

    raw.incoming = static_cast<int>(std::stoll(incoming->tokens[1].text));

    const auto index = boundary_cycle_index(g);
    const int cycles = *std::max_element(index.begin(), index.end()) + 1;
    std::vector<int> mark_of(cycles, -1);
    std::vector<Position> mark_pos(cycles);
    for (const auto& m : marks) {
        if (m.cycle >= cycles)
            invalid(ErrorCode::bad_marking, "cycle " + std::to_string(m.cycle) + " does not exist", m.pos.line,
                    m.pos.column);
        if (m.half_edge >= g.half_edge_count())
            invalid(ErrorCode::bad_marking, "half-edge " + std::to_string(m.half_edge) + " does not exist",
                    m.half_edge_pos.line, m.half_edge_pos.column);
        if (index[m.half_edge] != m.cycle)
            invalid(ErrorCode::bad_marking,
                    "half-edge " + std::to_string(m.half_edge) + " lies on cycle " +
                        std::to_string(index[m.half_edge]) + ", not on cycle " + std::to_string(m.cycle),
                    m.half_edge_pos.line, m.half_edge_pos.column);
        if (mark_of[m.cycle] >= 0)
            invalid(ErrorCode::bad_marking, "cycle " + std::to_string(m.cycle) + " is marked twice", m.pos.line,
                    m.pos.column);
        mark_of[m.cycle] = static_cast<int>(m.half_edge);
        mark_pos[m.cycle] = m.pos;
    }
    std::vector<char> listed(cycles, 0);
    for (std::size_t k = 1; k < order->tokens.size(); ++k) {
        const long long id = std::stoll(order->tokens[k].text);
        const Position p{order->line, order->tokens[k].column};
        if (id >= cycles)
            invalid(ErrorCode::bad_marking, "cycle " + std::to_string(id) + " does not exist", p.line, p.column);
        if (listed[id])
            invalid(ErrorCode::bad_marking, "cycle " + std::to_string(id) + " is listed twice", p.line, p.column);
        if (mark_of[id] < 0)
            invalid(ErrorCode::bad_marking, "cycle " + std::to_string(id) + " has no mark record", p.line, p.column);
        listed[id] = 1;
        raw.marks.push_back(mark_of[id]);
    }

    try {
        return ChordDiagram::validate(raw);
    } catch (const Error& e) {
        Position p{order->line, order->tokens[0].column};
        const int h = e.half_edge();
        if (h >= 0 && h < g.half_edge_count()) {
            if (e.code() == ErrorCode::bad_marking && mark_pos[index[h]].line > 0)
                p = mark_pos[index[h]];
            else if (e.code() == ErrorCode::ghost_cycle)
                p = edge_pos[g.edge_of(h)];
            else
                p = graph.in_vertex[h];
        } else if (e.code() == ErrorCode::incoming_not_boundary_cycle) {
            p = {incoming->line, incoming->tokens[0].column};
        }
        throw Error::wrap(e, p.line, p.column);
    }
}

FrobeniusAlgebra parse_algebra(std::string_view text) {
    const auto records = tokenize(text);
    expect_header(records, "frob");
    const int header = records.front().line;

    const Record* field_rec = nullptr;
    const Record* basis_rec = nullptr;
    const Record* unit_rec = nullptr;
    const Record* ambient_rec = nullptr;
    std::vector<const Record*> products, coproducts;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Record& r = records[i];
        auto once = [&](const Record*& slot) {
            if (slot) syntax(r.line, r.tokens[0].column, "duplicate '" + r.key() + "' record");
            slot = &r;
        };
        if (r.key() == "field") {
            once(field_rec);
        } else if (r.key() == "basis") {
            once(basis_rec);
        } else if (r.key() == "unit") {
            once(unit_rec);
        } else if (r.key() == "ambient") {
            once(ambient_rec);
            expect_arity(r, 2);
        } else if (r.key() == "m") {
            expect_arity(r, 6);
            products.push_back(&r);
        } else if (r.key() == "Delta") {
            expect_arity(r, 6);
            coproducts.push_back(&r);
        } else {
            syntax(r.line, r.tokens[0].column, "unknown record '" + r.key() + "'");
        }
    }
    if (!field_rec) syntax(header, 1, "missing 'field' record");
    if (!basis_rec) syntax(header, 1, "missing 'basis' record");
    if (!unit_rec) syntax(header, 1, "missing 'unit' record");

    FrobeniusAlgebra a;
    {
        const Record& r = *field_rec;
        if (r.tokens.size() == 2 && r.tokens[1].text == "Q") {
            a.field = Field::rationals();
        } else if (r.tokens.size() == 3 && r.tokens[1].text == "Fp") {
            const long long p = integer(r, 2, 0, (1LL << 31) - 1, "prime");
            try {
                a.field = Field::prime(p);
            } catch (const Error& e) {
                throw Error::wrap(e, r.line, r.tokens[2].column);
            }
        } else {
            syntax(r.line, r.tokens.size() > 1 ? r.tokens[1].column : r.end_column(),
                   "expected 'field Q' or 'field Fp <prime>'");
        }
    }
    {
        const Record& r = *basis_rec;
        if (r.tokens.size() < 2) syntax(r.line, r.end_column(), "basis record lists no elements");
        if (r.tokens.size() > 17)
            invalid(ErrorCode::size_limit, "at most 16 basis elements are supported", r.line, r.tokens[17].column);
        int graded = 0;
        for (std::size_t k = 1; k < r.tokens.size(); ++k) {
            const Token& t = r.tokens[k];
            const auto colon = t.text.rfind(':');
            std::string name = t.text.substr(0, colon);
            if (name.empty()) syntax(r.line, t.column, "basis element needs a name");
            if (std::find(a.basis.begin(), a.basis.end(), name) != a.basis.end())
                invalid(ErrorCode::invalid_algebra, "basis element '" + name + "' is listed twice", r.line, t.column);
            a.basis.push_back(name);
            if (colon != std::string::npos) {
                Record single{r.line, {{t.text.substr(colon + 1), t.column + static_cast<int>(colon) + 1}}};
                a.degrees.push_back(static_cast<int>(integer(single, 0, -1000000, 1000000, "degree")));
                ++graded;
            }
        }
        if (graded != 0 && graded != a.dimension())
            invalid(ErrorCode::invalid_algebra, "either every basis element has a degree or none does", r.line,
                    r.tokens[0].column);
    }
    if (ambient_rec) {
        if (!a.graded())
            invalid(ErrorCode::invalid_algebra, "'ambient' needs degrees on the basis", ambient_rec->line,
                    ambient_rec->tokens[0].column);
        a.ambient = static_cast<int>(integer(*ambient_rec, 1, -1000000, 1000000, "ambient dimension"));
    }

    const int d = a.dimension();
    a.product = Matrix(a.field, d, d * d);
    a.coproduct = Matrix(a.field, d * d, d);
    a.unit = Matrix(a.field, d, 1);
    auto coefficient = [&](const Record& r, std::size_t k) {
        try {
            return Scalar(a.field, parse_rational(r.tokens[k].text));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::syntax_error) syntax(r.line, r.tokens[k].column, e.what());
            throw Error::wrap(e, r.line, r.tokens[k].column);
        }
    };
    auto arrow = [&](const Record& r, std::size_t k) {
        if (r.tokens[k].text != "->") syntax(r.line, r.tokens[k].column, "expected '->'");
    };
    auto index = [&](const Record& r, std::size_t k) {
        return static_cast<int>(integer(r, k, 0, d - 1, "basis index"));
    };
    std::vector<char> seen_m(static_cast<std::size_t>(d) * d * d, 0),
        seen_delta(static_cast<std::size_t>(d) * d * d, 0);
    for (const Record* rp : products) {
        const Record& r = *rp;
        const int i = index(r, 1), j = index(r, 2);
        arrow(r, 3);
        const int k = index(r, 4);
        const std::size_t key = (static_cast<std::size_t>(i) * d + j) * d + k;
        if (seen_m[key]) invalid(ErrorCode::invalid_algebra, "duplicate product record", r.line, r.tokens[0].column);
        seen_m[key] = 1;
        a.product.at(k, i * d + j) = coefficient(r, 5);
    }
    for (const Record* rp : coproducts) {
        const Record& r = *rp;
        const int i = index(r, 1);
        arrow(r, 2);
        const int j = index(r, 3), k = index(r, 4);
        const std::size_t key = (static_cast<std::size_t>(i) * d + j) * d + k;
        if (seen_delta[key])
            invalid(ErrorCode::invalid_algebra, "duplicate coproduct record", r.line, r.tokens[0].column);
        seen_delta[key] = 1;
        a.coproduct.at(j * d + k, i) = coefficient(r, 5);
    }
    {
        const Record& r = *unit_rec;
        expect_arity(r, static_cast<std::size_t>(d) + 1);
        for (int k = 0; k < d; ++k) a.unit.at(k, 0) = coefficient(r, static_cast<std::size_t>(k) + 1);
    }
    return a;
}

GlueSchedule parse_schedule(std::string_view text) {
    const auto records = tokenize(text);
    expect_header(records, "schedule");
    GlueSchedule s;
    std::vector<char> seen;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const Record& r = records[i];
        if (r.key() != "place") syntax(r.line, r.tokens[0].column, "unknown record '" + r.key() + "'");
        const auto j = static_cast<std::size_t>(integer(r, 1, 0, kMaxCircles - 1, "circle index"));
        if (j >= s.positions.size()) {
            s.positions.resize(j + 1);
            seen.resize(j + 1, 0);
        }
        if (seen[j])
            invalid(ErrorCode::invalid_schedule, "circle " + std::to_string(j) + " is placed twice", r.line,
                    r.tokens[1].column);
        seen[j] = 1;
        for (std::size_t k = 2; k < r.tokens.size(); ++k)
            s.positions[j].push_back(static_cast<int>(integer(r, k, 0, kMaxIndex, "position")));
    }
    return s;
}

std::string serialize(const FatGraph& g) {
    std::ostringstream out;
    out << "fatgraph v1\n";
    write_graph_records(out, g);
    return out.str();
}

std::string serialize(const ChordDiagram& c) {
    const FatGraph& g = c.graph();
    std::ostringstream out;
    out << "chord v1\n";
    write_graph_records(out, g);
    for (int e = 0; e < g.edge_count(); ++e)
        out << "edge " << e << ' ' << (c.edge_kind(e) == EdgeKind::circular ? 'C' : 'G') << '\n';
    out << "incoming " << c.incoming_count() << '\n';
    const auto index = boundary_cycle_index(g);
    out << "order";
    for (int m : c.marks()) out << ' ' << index[m];
    out << '\n';
    std::vector<std::pair<int, int>> marks;
    for (int m : c.marks()) marks.emplace_back(index[m], m);
    std::sort(marks.begin(), marks.end());
    for (auto [cycle, h] : marks) out << "mark " << cycle << ' ' << h << '\n';
    return out.str();
}

std::string serialize(const FrobeniusAlgebra& a) {
    const int d = a.dimension();
    std::ostringstream out;
    out << "frob v1\n";
    out << "field " << (a.field.is_rational() ? std::string("Q") : "Fp " + std::to_string(a.field.characteristic()))
        << '\n';
    if (a.graded()) out << "ambient " << a.ambient << '\n';
    out << "basis";
    for (int i = 0; i < d; ++i) {
        out << ' ' << a.basis[i];
        if (a.graded()) out << ':' << a.degrees[i];
    }
    out << '\n';
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Scalar& s = a.product.at(k, i * d + j);
                if (!s.is_zero()) out << "m " << i << ' ' << j << " -> " << k << ' ' << coefficient_text(s) << '\n';
            }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Scalar& s = a.coproduct.at(j * d + k, i);
                if (!s.is_zero()) out << "Delta " << i << " -> " << j << ' ' << k << ' ' << coefficient_text(s) << '\n';
            }
    out << "unit";
    for (int k = 0; k < d; ++k) out << ' ' << coefficient_text(a.unit.at(k, 0));
    out << '\n';
    return out.str();
}

std::string serialize(const GlueSchedule& s) {
    std::ostringstream out;
    out << "schedule v1\n";
    for (std::size_t j = 0; j < s.positions.size(); ++j) {
        out << "place " << j;
        for (int p : s.positions[j]) out << ' ' << p;
        out << '\n';
    }
    return out.str();
}

std::string emit_dot(const ChordDiagram& input, bool canonical) {
    ChordDiagram c = input;
    if (canonical) c = relabel(input, diagram_canonical_form(input, Markings::include).labeling);
    const FatGraph& g = c.graph();
    const int p = c.incoming_count();

    std::ostringstream out;
    out << "digraph chord {\n";
    out << "  // type " << c.type().to_string() << '\n';
    out << "  node [shape=circle, fontsize=10, width=0.3];\n";
    std::vector<char> placed(g.vertex_count(), 0);
    for (int i = 0; i < p; ++i) {
        out << "  subgraph cluster_in" << i << " {\n";
        out << "    label=\"in " << i << "\";\n";
        for (int h : c.cycles()[i].half_edges) {
            const int v = g.vertex_of(h);
            if (placed[v]) continue;
            placed[v] = 1;
            out << "    v" << v << ";\n";
        }
        out << "  }\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!placed[v]) out << "  v" << v << " [shape=point, width=0.08];\n";

    // Marking labels keyed by the marked half-edge.
    std::map<int, std::string> mark_label;
    for (int i = 0; i < c.cycle_count(); ++i)
        mark_label[c.marks()[i]] = i < p ? "in" + std::to_string(i) : "out" + std::to_string(i - p);

    for (int e = 0; e < g.edge_count(); ++e) {
        int h = g.edge_half_edge(e);
        const bool circular = c.edge_kind(e) == EdgeKind::circular;
        if (circular && c.cycle_of(h) >= p) h = g.pair(h);
        const int hb = g.pair(h);
        out << "  v" << g.vertex_of(h) << " -> v" << g.vertex_of(hb) << " [label=\"e" << e << "\"";
        if (!circular) out << ", style=bold, dir=none";
        if (auto it = mark_label.find(h); it != mark_label.end()) out << ", taillabel=\"" << it->second << "\"";
        if (auto it = mark_label.find(hb); it != mark_label.end()) out << ", headlabel=\"" << it->second << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
    out << contents;
    if (!out) throw Error(ErrorCode::io_error, "failed writing '" + path + "'");
}

}  // namespace chordlab
