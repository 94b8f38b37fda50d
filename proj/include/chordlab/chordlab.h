/* C interface to chordlab: fat graphs, chord diagrams and their move graph,
 * gluing, and exact Frobenius-algebra operations.
 *
 * Every fallible call returns a chordlab_status. On failure the message and
 * source location of the error are available from chordlab_last_error*()
 * on the calling thread until the next failing call there. Strings returned
 * through char** parameters are owned by the caller and released with
 * chordlab_string_free(). */
#ifndef CHORDLAB_H
#define CHORDLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define CHORDLAB_API __declspec(dllexport)
#else
#define CHORDLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chordlab_status {
    CHORDLAB_OK = 0,
    CHORDLAB_FIXED_POINT_IN_PAIRING,
    CHORDLAB_VALENCE_TOO_LOW,
    CHORDLAB_DISCONNECTED,
    CHORDLAB_INCONSISTENT_TABLES,
    CHORDLAB_NON_INTEGER_GENUS,
    CHORDLAB_GHOST_CYCLE,
    CHORDLAB_CIRCLE_NOT_DISJOINT,
    CHORDLAB_INCOMING_NOT_BOUNDARY_CYCLE,
    CHORDLAB_NO_CIRCULAR_EDGE_ON_CYCLE,
    CHORDLAB_BAD_MARKING,
    CHORDLAB_ESSENTIAL_EDGE,
    CHORDLAB_LOOP_EDGE,
    CHORDLAB_UNREPRESENTABLE_TYPE,
    CHORDLAB_ARITY_MISMATCH,
    CHORDLAB_INVALID_SCHEDULE,
    CHORDLAB_GLUE_VALIDATION_FAILED,
    CHORDLAB_BOUND_TOO_SMALL,
    CHORDLAB_SEARCH_EXHAUSTED,
    CHORDLAB_NO_OUTGOING,
    CHORDLAB_FIELD_MISMATCH,
    CHORDLAB_SIZE_LIMIT,
    CHORDLAB_INVALID_ALGEBRA,
    CHORDLAB_SYNTAX_ERROR,
    CHORDLAB_VALIDATION_ERROR,
    CHORDLAB_IO_ERROR,
    CHORDLAB_INTERNAL,
    /* A null handle or out-parameter, or a document of the wrong kind. */
    CHORDLAB_INVALID_ARGUMENT
} chordlab_status;

/* A fat graph or a chord diagram. */
typedef struct chordlab_doc chordlab_doc;
typedef struct chordlab_algebra chordlab_algebra;

CHORDLAB_API const char* chordlab_version(void);
/* CamelCase name, e.g. "GhostCycle". */
CHORDLAB_API const char* chordlab_status_name(chordlab_status status);

CHORDLAB_API const char* chordlab_last_error(void);
/* 1-based; 0 when the last error has no document location. */
CHORDLAB_API int chordlab_last_error_line(void);
CHORDLAB_API int chordlab_last_error_column(void);
/* For CHORDLAB_VALIDATION_ERROR, the wrapped module error; otherwise the
 * last status itself. */
CHORDLAB_API chordlab_status chordlab_last_error_cause(void);

CHORDLAB_API void chordlab_string_free(char* s);

/* ---- documents ---------------------------------------------------------- */

/* Parses a `fatgraph v1` or `chord v1` document. */
CHORDLAB_API chordlab_status chordlab_doc_parse(const char* text, size_t length, chordlab_doc** out);
CHORDLAB_API chordlab_status chordlab_doc_load(const char* path, chordlab_doc** out);
CHORDLAB_API void chordlab_doc_free(chordlab_doc* doc);

CHORDLAB_API int chordlab_doc_is_chord(const chordlab_doc* doc);
CHORDLAB_API chordlab_status chordlab_doc_serialize(const chordlab_doc* doc, char** out);
CHORDLAB_API chordlab_status chordlab_doc_save(const chordlab_doc* doc, const char* path);

CHORDLAB_API chordlab_status chordlab_doc_counts(const chordlab_doc* doc, int* vertices, int* edges);
/* Genus and number of boundary cycles of the thickened surface. */
CHORDLAB_API chordlab_status chordlab_doc_surface(const chordlab_doc* doc, int* genus, int* boundaries);
/* Chord diagrams only. */
CHORDLAB_API chordlab_status chordlab_doc_type(const chordlab_doc* doc, int* g, int* p, int* q);
/* JSON array of boundary cycles, each {"id", "half_edges", "role",
 * "position", "mark"}. role is "in" or "out" and position counts within the
 * role; all three are null for a plain fat graph. */
CHORDLAB_API chordlab_status chordlab_doc_boundaries_json(const chordlab_doc* doc, char** out);
/* Hex canonical code. include_marks only matters for chord diagrams. */
CHORDLAB_API chordlab_status chordlab_doc_code(const chordlab_doc* doc, int include_marks, char** out);
CHORDLAB_API chordlab_status chordlab_doc_isomorphic(const chordlab_doc* a, const chordlab_doc* b, int include_marks,
                                                     int* result);
CHORDLAB_API chordlab_status chordlab_doc_dot(const chordlab_doc* doc, int canonical, char** out);

/* ---- chord diagram constructions ---------------------------------------- */

CHORDLAB_API chordlab_status chordlab_gamma0(int g, int p, int q, chordlab_doc** out);
/* schedule_text may be NULL for the default placement; otherwise a
 * `schedule v1` document. */
CHORDLAB_API chordlab_status chordlab_glue(const chordlab_doc* c1, const chordlab_doc* c2, const char* schedule_text,
                                           chordlab_doc** out);
/* Explores the move graph of type (g;p,q). report_json receives the
 * connectivity report; components the component count. */
CHORDLAB_API chordlab_status chordlab_connect(int g, int p, int q, int max_edges, int jobs, char** report_json,
                                              int* components);
/* JSON array of moves leading from the diagram to the base point of its type. */
CHORDLAB_API chordlab_status chordlab_path_to_canonical(const chordlab_doc* doc, int slack, char** out);

/* ---- algebras ----------------------------------------------------------- */

/* name: "pd2", "st2" or "zero-delta"; field: "Q", "F<p>" or NULL for Q. */
CHORDLAB_API chordlab_status chordlab_algebra_builtin(const char* name, const char* field, chordlab_algebra** out);
CHORDLAB_API chordlab_status chordlab_algebra_parse(const char* text, size_t length, chordlab_algebra** out);
CHORDLAB_API chordlab_status chordlab_algebra_load(const char* path, chordlab_algebra** out);
/* Same structure constants over another field. */
CHORDLAB_API chordlab_status chordlab_algebra_in_field(const chordlab_algebra* a, const char* field,
                                                       chordlab_algebra** out);
CHORDLAB_API void chordlab_algebra_free(chordlab_algebra* a);
CHORDLAB_API chordlab_status chordlab_algebra_serialize(const chordlab_algebra* a, char** out);

/* Operation matrix of the genus-g surface from p to q circles, as JSON. */
CHORDLAB_API chordlab_status chordlab_tqft_op_json(const chordlab_algebra* a, int p, int q, int g, char** out);
/* Operation of a chord diagram, as JSON. */
CHORDLAB_API chordlab_status chordlab_tqft_diagram_op_json(const chordlab_algebra* a, const chordlab_doc* c,
                                                           char** out);
/* Sewing identity for 1 <= p <= p_max, 1 <= q <= q_max, 1 <= r <= r_max,
 * 0 <= g1 <= g1_max, 0 <= g2 <= g2_max. */
CHORDLAB_API chordlab_status chordlab_tqft_verify_json(const chordlab_algebra* a, int p_max, int q_max, int r_max,
                                                       int g1_max, int g2_max, char** out, int* all_passed);
CHORDLAB_API chordlab_status chordlab_tqft_counit_json(const chordlab_algebra* a, char** out, int* exists);
CHORDLAB_API chordlab_status chordlab_tqft_axioms_json(const chordlab_algebra* a, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
