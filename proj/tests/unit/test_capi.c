/* Exercises the shared library from C through the public header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "chordlab/chordlab.h"

static int failures = 0;

#define EXPECT(cond)                                                                       \
    do {                                                                                   \
        if (!(cond)) {                                                                     \
            fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                                    \
        }                                                                                  \
    } while (0)

static void test_documents(const char* fixtures) {
    char path[1024];
    chordlab_doc* c1 = NULL;
    chordlab_doc* c2 = NULL;
    chordlab_doc* glued = NULL;
    int g = -1, p = -1, q = -1, v = 0, e = 0, same = 0;
    char* text = NULL;

    snprintf(path, sizeof path, "%s/glue_left.chord", fixtures);
    EXPECT(chordlab_doc_load(path, &c1) == CHORDLAB_OK);
    snprintf(path, sizeof path, "%s/glue_right.chord", fixtures);
    EXPECT(chordlab_doc_load(path, &c2) == CHORDLAB_OK);
    EXPECT(chordlab_doc_is_chord(c1));
    EXPECT(chordlab_glue(c1, c2, NULL, &glued) == CHORDLAB_OK);
    EXPECT(chordlab_doc_type(glued, &g, &p, &q) == CHORDLAB_OK);
    EXPECT(g == 1 && p == 1 && q == 2);
    EXPECT(chordlab_doc_counts(c1, &v, &e) == CHORDLAB_OK);
    EXPECT(v == 2 && e == 3);

    EXPECT(chordlab_doc_serialize(c1, &text) == CHORDLAB_OK);
    EXPECT(strncmp(text, "chord v1\n", 9) == 0);
    {
        chordlab_doc* again = NULL;
        EXPECT(chordlab_doc_parse(text, strlen(text), &again) == CHORDLAB_OK);
        EXPECT(chordlab_doc_isomorphic(c1, again, 1, &same) == CHORDLAB_OK);
        EXPECT(same == 1);
        chordlab_doc_free(again);
    }
    chordlab_string_free(text);

    EXPECT(chordlab_doc_isomorphic(c1, c2, 0, &same) == CHORDLAB_OK);
    EXPECT(same == 0);
    EXPECT(chordlab_doc_boundaries_json(c1, &text) == CHORDLAB_OK);
    EXPECT(strstr(text, "\"role\"") != NULL);
    chordlab_string_free(text);
    EXPECT(chordlab_doc_dot(c1, 1, &text) == CHORDLAB_OK);
    EXPECT(strstr(text, "digraph") != NULL);
    chordlab_string_free(text);
    EXPECT(chordlab_path_to_canonical(glued, 4, &text) == CHORDLAB_OK);
    EXPECT(text[0] == '[');
    chordlab_string_free(text);

    /* Wrong direction: c2 has two outgoing circles but c1 has one incoming. */
    EXPECT(chordlab_glue(c2, c1, NULL, &glued) == CHORDLAB_ARITY_MISMATCH);

    chordlab_doc_free(glued);
    chordlab_doc_free(c1);
    chordlab_doc_free(c2);
}

static void test_errors(const char* fixtures) {
    char path[1024];
    chordlab_doc* d = NULL;
    const char* bad = "chord v1\npair 0 1\nbogus\n";

    snprintf(path, sizeof path, "%s/pair_self.fatgraph", fixtures);
    EXPECT(chordlab_doc_load(path, &d) == CHORDLAB_VALIDATION_ERROR);
    EXPECT(d == NULL);
    EXPECT(chordlab_last_error_cause() == CHORDLAB_FIXED_POINT_IN_PAIRING);
    EXPECT(chordlab_last_error_line() == 2);
    EXPECT(strcmp(chordlab_status_name(CHORDLAB_FIXED_POINT_IN_PAIRING), "FixedPointInPairing") == 0);

    EXPECT(chordlab_doc_parse(bad, strlen(bad), &d) == CHORDLAB_SYNTAX_ERROR);
    EXPECT(chordlab_last_error_line() == 3);
    EXPECT(strlen(chordlab_last_error()) > 0);

    EXPECT(chordlab_doc_load("/nonexistent/x.chord", &d) == CHORDLAB_IO_ERROR);
    EXPECT(chordlab_gamma0(0, 1, 1, &d) == CHORDLAB_UNREPRESENTABLE_TYPE);
    EXPECT(chordlab_doc_parse(NULL, 0, &d) == CHORDLAB_INVALID_ARGUMENT);
    EXPECT(chordlab_doc_type(NULL, NULL, NULL, NULL) == CHORDLAB_INVALID_ARGUMENT);
    chordlab_doc_free(NULL);
    chordlab_string_free(NULL);
}

static void test_algebras(const char* fixtures) {
    char path[1024];
    chordlab_algebra* a = NULL;
    chordlab_algebra* f3 = NULL;
    char* json = NULL;
    int flag = 0;
    chordlab_doc* c = NULL;

    EXPECT(chordlab_algebra_builtin("pd2", NULL, &a) == CHORDLAB_OK);
    EXPECT(chordlab_tqft_counit_json(a, &json, &flag) == CHORDLAB_OK);
    EXPECT(flag == 1);
    EXPECT(strstr(json, "\"nondegenerate\":true") != NULL);
    chordlab_string_free(json);
    EXPECT(chordlab_tqft_axioms_json(a, &json, &flag) == CHORDLAB_OK);
    EXPECT(flag == 1);
    chordlab_string_free(json);
    EXPECT(chordlab_tqft_verify_json(a, 2, 2, 2, 1, 1, &json, &flag) == CHORDLAB_OK);
    EXPECT(flag == 1);
    chordlab_string_free(json);
    EXPECT(chordlab_tqft_op_json(a, 1, 1, 1, &json) == CHORDLAB_OK);
    EXPECT(strstr(json, "\"2/1\"") != NULL);
    chordlab_string_free(json);
    EXPECT(chordlab_tqft_op_json(a, 1, 0, 1, &json) == CHORDLAB_NO_OUTGOING);

    EXPECT(chordlab_algebra_in_field(a, "F3", &f3) == CHORDLAB_OK);
    EXPECT(chordlab_tqft_op_json(f3, 1, 1, 1, &json) == CHORDLAB_OK);
    EXPECT(strstr(json, "\"field\":\"F3\"") != NULL);
    chordlab_string_free(json);

    EXPECT(chordlab_gamma0(1, 1, 1, &c) == CHORDLAB_OK);
    EXPECT(chordlab_tqft_diagram_op_json(a, c, &json) == CHORDLAB_OK);
    EXPECT(strstr(json, "\"g\":1") != NULL);
    chordlab_string_free(json);
    chordlab_doc_free(c);

    chordlab_algebra_free(f3);
    chordlab_algebra_free(a);

    snprintf(path, sizeof path, "%s/st2.frob", fixtures);
    EXPECT(chordlab_algebra_load(path, &a) == CHORDLAB_OK);
    EXPECT(chordlab_tqft_counit_json(a, &json, &flag) == CHORDLAB_OK);
    EXPECT(flag == 0);
    chordlab_string_free(json);
    EXPECT(chordlab_algebra_serialize(a, &json) == CHORDLAB_OK);
    EXPECT(strncmp(json, "frob v1\n", 8) == 0);
    chordlab_string_free(json);
    chordlab_algebra_free(a);

    EXPECT(chordlab_algebra_builtin("nope", NULL, &a) == CHORDLAB_INVALID_ALGEBRA);
}

static void test_connect(void) {
    char* report = NULL;
    int components = 0;
    EXPECT(chordlab_connect(1, 1, 1, 7, 2, &report, &components) == CHORDLAB_OK);
    EXPECT(components == 1);
    EXPECT(strstr(report, "\"classes\"") != NULL);
    chordlab_string_free(report);
    EXPECT(chordlab_connect(1, 1, 1, 2, 1, &report, &components) == CHORDLAB_BOUND_TOO_SMALL);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: %s FIXTURE_DIR\n", argv[0]);
        return 2;
    }
    EXPECT(strlen(chordlab_version()) > 0);
    test_documents(argv[1]);
    test_errors(argv[1]);
    test_algebras(argv[1]);
    test_connect();
    if (failures) fprintf(stderr, "%d expectation(s) failed\n", failures);
    return failures ? 1 : 0;
}
