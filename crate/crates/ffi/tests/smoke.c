#include <stdio.h>
#include <string.h>
#include "fltl.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    FltlFormula *f = NULL;
    CHECK(fltl_formula_parse("a U b", &f) == FLTL_STATUS_OK);

    FltlNfa *nfa = NULL;
    CHECK(fltl_nfa_build(f, FLTL_MODE_RELAXED, &nfa) == FLTL_STATUS_OK);
    CHECK(fltl_nfa_state_count(nfa) == 2);
    CHECK(fltl_nfa_edge_count(nfa) == 3);

    bool accepted = false;
    CHECK(fltl_nfa_accepts(nfa, "a; a; b", &accepted) == FLTL_STATUS_OK && accepted);
    CHECK(fltl_nfa_accepts(nfa, "<eps>", &accepted) == FLTL_STATUS_OK && !accepted);
    CHECK(fltl_nfa_accepts(nfa, "c", &accepted) == FLTL_STATUS_ALPHABET_MISMATCH);

    char *dot = NULL;
    CHECK(fltl_nfa_export(nfa, "dot", &dot) == FLTL_STATUS_OK);
    CHECK(strncmp(dot, "digraph", 7) == 0);
    fltl_string_free(dot);

    bool sat = false;
    char *witness = NULL;
    CHECK(fltl_formula_sat(f, &sat, &witness) == FLTL_STATUS_OK && sat);
    CHECK(strcmp(witness, "b") == 0);
    fltl_string_free(witness);

    FltlFormula *bad = NULL;
    CHECK(fltl_formula_parse("a &", &bad) == FLTL_STATUS_PARSE_ERROR);
    CHECK(bad == NULL && fltl_last_error() != NULL);

    fltl_nfa_free(nfa);
    fltl_formula_free(f);
    puts("ok");
    return 0;
}
