#include "chordlab/chordlab.h"

#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "chordlab/error.hpp"
#include "chordlab/io.hpp"
#include "chordlab/moves.hpp"
#include "chordlab/tqft.hpp"

struct chordlab_doc {
    std::variant<chordlab::FatGraph, chordlab::ChordDiagram> value;
};

struct chordlab_algebra {
    chordlab::FrobeniusAlgebra value;
};

namespace {

using chordlab::Error;
using chordlab::ErrorCode;
using nlohmann::json;

struct LastError {
    std::string message;
    int line = 0;
    int column = 0;
    chordlab_status cause = CHORDLAB_OK;
};

thread_local LastError last_error;

chordlab_status status_of(ErrorCode code) { return static_cast<chordlab_status>(static_cast<int>(code) + 1); }

chordlab_status fail(chordlab_status status, const std::string& message, int line = 0, int column = 0,
                     chordlab_status cause = CHORDLAB_OK) {
    last_error = {message, line, column, cause == CHORDLAB_OK ? status : cause};
    return status;
}

// Misuse of the API by the caller rather than a domain failure.
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void bad_argument(const std::string& what) { throw ArgumentError(what); }

template <class F>
chordlab_status api(F&& body) {
    try {
        body();
        return CHORDLAB_OK;
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what(), e.line(), e.column(), status_of(e.cause()));
    } catch (const ArgumentError& e) {
        return fail(CHORDLAB_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CHORDLAB_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CHORDLAB_INTERNAL, e.what());
    } catch (...) {
        return fail(CHORDLAB_INTERNAL, "unexpected failure");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    s.copy(out, s.size());
    out[s.size()] = '\0';
    return out;
}

void require(const void* p, const char* name) {
    if (!p) bad_argument(std::string(name) + " is null");
}

const chordlab::ChordDiagram& chord_of(const chordlab_doc* doc) {
    require(doc, "document");
    if (!std::holds_alternative<chordlab::ChordDiagram>(doc->value)) bad_argument("document is not a chord diagram");
    return std::get<chordlab::ChordDiagram>(doc->value);
}

const chordlab::FatGraph& graph_of(const chordlab_doc* doc) {
    require(doc, "document");
    if (auto* c = std::get_if<chordlab::ChordDiagram>(&doc->value)) return c->graph();
    return std::get<chordlab::FatGraph>(doc->value);
}

chordlab_doc* parse_document(std::string_view text) {
    const auto kind = chordlab::detect_kind(text);
    if (kind == chordlab::DocumentKind::fatgraph) return new chordlab_doc{chordlab::parse_fatgraph(text)};
    if (kind == chordlab::DocumentKind::chord) return new chordlab_doc{chordlab::parse_chord(text)};
    throw Error(ErrorCode::syntax_error, "expected a fatgraph or chord document", 1, 1);
}

json scalar_json(const chordlab::Scalar& s) {
    if (s.field().is_rational()) return s.to_string();
    return boost::multiprecision::numerator(s.value()).convert_to<long long>();
}

json operation_json(const chordlab::FrobeniusAlgebra& a, const chordlab::OperationMatrix& op) {
    json rows = json::array();
    for (int r = 0; r < op.matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < op.matrix.cols(); ++c) row.push_back(scalar_json(op.matrix.at(r, c)));
        rows.push_back(row);
    }
    json j;
    j["p"] = op.p;
    j["q"] = op.q;
    j["g"] = op.g;
    j["field"] = a.field.to_string();
    j["basis"] = a.basis;
    j["rows"] = op.matrix.rows();
    j["cols"] = op.matrix.cols();
    j["matrix"] = rows;
    j["degree_shift"] = op.degree_shift ? json(*op.degree_shift) : json(nullptr);
    return j;
}

const chordlab::FrobeniusAlgebra& algebra_of(const chordlab_algebra* a) {
    require(a, "algebra");
    return a->value;
}

}  // namespace

extern "C" {

const char* chordlab_version(void) { return "0.1.0"; }

const char* chordlab_status_name(chordlab_status status) {
    if (status == CHORDLAB_OK) return "Ok";
    if (status == CHORDLAB_INVALID_ARGUMENT) return "InvalidArgument";
    if (status < CHORDLAB_OK || status > CHORDLAB_INVALID_ARGUMENT) return "Unknown";
    return chordlab::error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
}

const char* chordlab_last_error(void) { return last_error.message.c_str(); }
int chordlab_last_error_line(void) { return last_error.line; }
int chordlab_last_error_column(void) { return last_error.column; }
chordlab_status chordlab_last_error_cause(void) { return last_error.cause; }

void chordlab_string_free(char* s) { delete[] s; }

chordlab_status chordlab_doc_parse(const char* text, size_t length, chordlab_doc** out) {
    if (!text || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "text and out must not be null");
    return api([&] { *out = parse_document(std::string_view(text, length)); });
}

chordlab_status chordlab_doc_load(const char* path, chordlab_doc** out) {
    if (!path || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "path and out must not be null");
    return api([&] { *out = parse_document(chordlab::read_file(path)); });
}

void chordlab_doc_free(chordlab_doc* doc) { delete doc; }

int chordlab_doc_is_chord(const chordlab_doc* doc) {
    return doc && std::holds_alternative<chordlab::ChordDiagram>(doc->value) ? 1 : 0;
}

chordlab_status chordlab_doc_serialize(const chordlab_doc* doc, char** out) {
    if (!doc || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "document and out must not be null");
    return api(
        [&] { *out = copy_string(std::visit([](const auto& v) { return chordlab::serialize(v); }, doc->value)); });
}

chordlab_status chordlab_doc_save(const chordlab_doc* doc, const char* path) {
    if (!doc || !path) return fail(CHORDLAB_INVALID_ARGUMENT, "document and path must not be null");
    return api([&] {
        chordlab::write_file(path, std::visit([](const auto& v) { return chordlab::serialize(v); }, doc->value));
    });
}

chordlab_status chordlab_doc_counts(const chordlab_doc* doc, int* vertices, int* edges) {
    if (!doc || !vertices || !edges) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] {
        const auto& g = graph_of(doc);
        *vertices = g.vertex_count();
        *edges = g.edge_count();
    });
}

chordlab_status chordlab_doc_surface(const chordlab_doc* doc, int* genus, int* boundaries) {
    if (!doc || !genus || !boundaries) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] {
        const auto st = chordlab::topological_type(graph_of(doc));
        *genus = st.genus;
        *boundaries = st.boundaries;
    });
}

chordlab_status chordlab_doc_type(const chordlab_doc* doc, int* g, int* p, int* q) {
    if (!doc || !g || !p || !q) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    if (!chordlab_doc_is_chord(doc)) return fail(CHORDLAB_INVALID_ARGUMENT, "document is not a chord diagram");
    return api([&] {
        const auto t = chord_of(doc).type();
        *g = t.g;
        *p = t.p;
        *q = t.q;
    });
}

chordlab_status chordlab_doc_boundaries_json(const chordlab_doc* doc, char** out) {
    if (!doc || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "document and out must not be null");
    return api([&] {
        const auto& g = graph_of(doc);
        const auto cycles = chordlab::boundary_cycles(g);
        json arr = json::array();
        const auto* c = std::get_if<chordlab::ChordDiagram>(&doc->value);
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            json item;
            item["id"] = k;
            item["half_edges"] = cycles[k].half_edges;
            if (c) {
                const int pos = c->cycle_of(cycles[k].half_edges.front());
                const bool in = pos < c->incoming_count();
                item["role"] = in ? "in" : "out";
                item["position"] = in ? pos : pos - c->incoming_count();
                item["mark"] = c->marks()[pos];
            } else {
                item["role"] = nullptr;
                item["position"] = nullptr;
                item["mark"] = nullptr;
            }
            arr.push_back(item);
        }
        *out = copy_string(arr.dump());
    });
}

chordlab_status chordlab_doc_code(const chordlab_doc* doc, int include_marks, char** out) {
    if (!doc || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "document and out must not be null");
    return api([&] {
        std::string code;
        if (const auto* c = std::get_if<chordlab::ChordDiagram>(&doc->value))
            code = chordlab::diagram_code(*c, include_marks ? chordlab::Markings::include : chordlab::Markings::ignore);
        else
            code = chordlab::canonical_code(std::get<chordlab::FatGraph>(doc->value));
        *out = copy_string(chordlab::to_hex(code));
    });
}

chordlab_status chordlab_doc_isomorphic(const chordlab_doc* a, const chordlab_doc* b, int include_marks, int* result) {
    if (!a || !b || !result) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    if (chordlab_doc_is_chord(a) != chordlab_doc_is_chord(b)) {
        *result = 0;
        return CHORDLAB_OK;
    }
    return api([&] {
        if (chordlab_doc_is_chord(a)) {
            const auto m = include_marks ? chordlab::Markings::include : chordlab::Markings::ignore;
            *result = chordlab::find_isomorphism(chord_of(a), chord_of(b), m).has_value() ? 1 : 0;
        } else {
            *result = chordlab::canonical_code(graph_of(a)) == chordlab::canonical_code(graph_of(b)) ? 1 : 0;
        }
    });
}

chordlab_status chordlab_doc_dot(const chordlab_doc* doc, int canonical, char** out) {
    if (!doc || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "document and out must not be null");
    if (!chordlab_doc_is_chord(doc)) return fail(CHORDLAB_INVALID_ARGUMENT, "DOT output needs a chord diagram");
    return api([&] { *out = copy_string(chordlab::emit_dot(chord_of(doc), canonical != 0)); });
}

chordlab_status chordlab_gamma0(int g, int p, int q, chordlab_doc** out) {
    if (!out) return fail(CHORDLAB_INVALID_ARGUMENT, "out must not be null");
    return api([&] { *out = new chordlab_doc{chordlab::canonical_gamma0(g, p, q)}; });
}

chordlab_status chordlab_glue(const chordlab_doc* c1, const chordlab_doc* c2, const char* schedule_text,
                              chordlab_doc** out) {
    if (!out) return fail(CHORDLAB_INVALID_ARGUMENT, "out must not be null");
    if (!chordlab_doc_is_chord(c1) || !chordlab_doc_is_chord(c2))
        return fail(CHORDLAB_INVALID_ARGUMENT, "gluing needs two chord diagrams");
    return api([&] {
        std::optional<chordlab::GlueSchedule> schedule;
        if (schedule_text) schedule = chordlab::parse_schedule(schedule_text);
        *out = new chordlab_doc{chordlab::glue(chord_of(c1), chord_of(c2), schedule)};
    });
}

chordlab_status chordlab_connect(int g, int p, int q, int max_edges, int jobs, char** report_json, int* components) {
    if (!report_json || !components) return fail(CHORDLAB_INVALID_ARGUMENT, "out parameters must not be null");
    return api([&] {
        chordlab::ExploreOptions options;
        options.jobs = jobs;
        const auto report = chordlab::explore({g, p, q}, max_edges, options);
        *components = report.component_count;
        *report_json = copy_string(chordlab::report_json(report));
    });
}

chordlab_status chordlab_path_to_canonical(const chordlab_doc* doc, int slack, char** out) {
    if (!out) return fail(CHORDLAB_INVALID_ARGUMENT, "out must not be null");
    if (!chordlab_doc_is_chord(doc)) return fail(CHORDLAB_INVALID_ARGUMENT, "path search needs a chord diagram");
    return api([&] {
        json arr = json::array();
        for (const auto& m : chordlab::path_to_canonical(chord_of(doc), slack)) arr.push_back(chordlab::to_string(m));
        *out = copy_string(arr.dump());
    });
}

chordlab_status chordlab_algebra_builtin(const char* name, const char* field, chordlab_algebra** out) {
    if (!name || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "name and out must not be null");
    return api([&] {
        const auto f = field ? chordlab::Field::parse(field) : chordlab::Field::rationals();
        *out = new chordlab_algebra{chordlab::builtin_algebra(name, f)};
    });
}

chordlab_status chordlab_algebra_parse(const char* text, size_t length, chordlab_algebra** out) {
    if (!text || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "text and out must not be null");
    return api([&] { *out = new chordlab_algebra{chordlab::parse_algebra(std::string_view(text, length))}; });
}

chordlab_status chordlab_algebra_load(const char* path, chordlab_algebra** out) {
    if (!path || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "path and out must not be null");
    return api([&] { *out = new chordlab_algebra{chordlab::parse_algebra(chordlab::read_file(path))}; });
}

chordlab_status chordlab_algebra_in_field(const chordlab_algebra* a, const char* field, chordlab_algebra** out) {
    if (!a || !field || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] { *out = new chordlab_algebra{a->value.in_field(chordlab::Field::parse(field))}; });
}

void chordlab_algebra_free(chordlab_algebra* a) { delete a; }

chordlab_status chordlab_algebra_serialize(const chordlab_algebra* a, char** out) {
    if (!a || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "algebra and out must not be null");
    return api([&] { *out = copy_string(chordlab::serialize(a->value)); });
}

chordlab_status chordlab_tqft_op_json(const chordlab_algebra* a, int p, int q, int g, char** out) {
    if (!a || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "algebra and out must not be null");
    return api([&] {
        const auto& alg = algebra_of(a);
        *out = copy_string(operation_json(alg, chordlab::mu(alg, p, q, g)).dump());
    });
}

chordlab_status chordlab_tqft_diagram_op_json(const chordlab_algebra* a, const chordlab_doc* c, char** out) {
    if (!a || !out) return fail(CHORDLAB_INVALID_ARGUMENT, "algebra and out must not be null");
    if (!chordlab_doc_is_chord(c)) return fail(CHORDLAB_INVALID_ARGUMENT, "operations need a chord diagram");
    return api([&] {
        const auto& alg = algebra_of(a);
        *out = copy_string(operation_json(alg, chordlab::operation_from_diagram(chord_of(c), alg)).dump());
    });
}

chordlab_status chordlab_tqft_verify_json(const chordlab_algebra* a, int p_max, int q_max, int r_max, int g1_max,
                                          int g2_max, char** out, int* all_passed) {
    if (!a || !out || !all_passed) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] {
        const auto& alg = algebra_of(a);
        json failures = json::array();
        json graded_failures = json::array();
        int checks = 0;
        for (int p = 1; p <= p_max; ++p)
            for (int q = 1; q <= q_max; ++q) {
                for (int g1 = 0; g1 <= g1_max; ++g1)
                    if (!chordlab::graded_consistent(alg, chordlab::mu(alg, p, q, g1)))
                        graded_failures.push_back({{"p", p}, {"q", q}, {"g", g1}});
                for (int r = 1; r <= r_max; ++r)
                    for (int g1 = 0; g1 <= g1_max; ++g1)
                        for (int g2 = 0; g2 <= g2_max; ++g2) {
                            ++checks;
                            if (!chordlab::verify_gluing(alg, p, q, r, g1, g2).equal)
                                failures.push_back({{"p", p}, {"q", q}, {"r", r}, {"g1", g1}, {"g2", g2}});
                        }
            }
        json j;
        j["field"] = alg.field.to_string();
        j["range"] = {{"p", p_max}, {"q", q_max}, {"r", r_max}, {"g1", g1_max}, {"g2", g2_max}};
        j["checks"] = checks;
        j["failures"] = failures;
        j["graded"] = alg.graded();
        j["graded_failures"] = graded_failures;
        j["all_passed"] = failures.empty() && graded_failures.empty();
        *all_passed = j["all_passed"].get<bool>() ? 1 : 0;
        *out = copy_string(j.dump());
    });
}

chordlab_status chordlab_tqft_counit_json(const chordlab_algebra* a, char** out, int* exists) {
    if (!a || !out || !exists) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] {
        const auto& alg = algebra_of(a);
        const auto counit = chordlab::counit_solve(alg);
        json j;
        j["field"] = alg.field.to_string();
        j["exists"] = counit.has_value();
        if (counit) {
            json theta = json::array();
            for (const auto& s : counit->theta) theta.push_back(scalar_json(s));
            j["theta"] = theta;
            j["nondegenerate"] = counit->nondegenerate;
        } else {
            j["theta"] = nullptr;
            j["nondegenerate"] = nullptr;
        }
        *exists = counit ? 1 : 0;
        *out = copy_string(j.dump());
    });
}

chordlab_status chordlab_tqft_axioms_json(const chordlab_algebra* a, char** out, int* all_passed) {
    if (!a || !out || !all_passed) return fail(CHORDLAB_INVALID_ARGUMENT, "arguments must not be null");
    return api([&] {
        const auto& alg = algebra_of(a);
        const auto report = chordlab::check_axioms(alg);
        json axioms = json::array();
        for (const auto& r : report.results) {
            json item{{"name", r.name}, {"passed", r.passed}};
            item["witness"] = r.passed ? json(nullptr) : json(r.witness);
            if (!r.passed) item["detail"] = r.detail;
            axioms.push_back(item);
        }
        json j{{"field", alg.field.to_string()}, {"axioms", axioms}, {"all_passed", report.all_passed()}};
        *all_passed = report.all_passed() ? 1 : 0;
        *out = copy_string(j.dump());
    });
}

}  // extern "C"
