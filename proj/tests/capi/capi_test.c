/* Exercises the C API as a C client: handles, status codes, error text and
 * string ownership. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mobiuslab/mobiuslab.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* part) { return s != NULL && strstr(s, part) != NULL; }

static void test_poset(void) {
  mobiuslab_poset* p = NULL;
  char* out = NULL;
  EXPECT(mobiuslab_poset_named("boolean:3", &p) == MOBIUSLAB_OK);
  EXPECT(mobiuslab_poset_size(p) == 8);
  EXPECT(mobiuslab_mobius(p, "", "123", &out) == MOBIUSLAB_OK);
  EXPECT(out != NULL && strcmp(out, "-1") == 0);
  mobiuslab_string_free(out);

  EXPECT(mobiuslab_mobius(p, "", "nope", &out) == MOBIUSLAB_UNKNOWN_LABEL);
  EXPECT(contains(mobiuslab_last_error(), "nope"));

  EXPECT(mobiuslab_whitney(p, &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"W\":[1,3,3,1]"));
  mobiuslab_string_free(out);

  EXPECT(mobiuslab_charpoly(p, &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "x^3 - 3x^2 + 3x - 1"));
  mobiuslab_string_free(out);

  EXPECT(mobiuslab_weisner(p, NULL, &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"pass\":true"));
  mobiuslab_string_free(out);

  EXPECT(mobiuslab_invert(p, "{\"\": 1}", "sideways", 0, &out) == MOBIUSLAB_INVALID_ARGUMENT);
  mobiuslab_poset_free(p);
}

static void test_parse_errors(void) {
  mobiuslab_poset* p = NULL;
  EXPECT(mobiuslab_poset_from_json("{\"elements\": [\"a\"", &p) == MOBIUSLAB_PARSE);
  EXPECT(p == NULL);
  EXPECT(contains(mobiuslab_last_error(), "line 1"));
  EXPECT(mobiuslab_poset_from_json("{\"elements\": [\"a\", \"b\"], \"covers\": [[\"a\", \"b\"], [\"b\", \"a\"]]}", &p) ==
         MOBIUSLAB_CYCLE);
  EXPECT(mobiuslab_poset_from_json("{\"elements\": [\"a\", \"a\"], \"covers\": []}", &p) == MOBIUSLAB_DUPLICATE_LABEL);
  EXPECT(mobiuslab_poset_named("nonsense:1", &p) != MOBIUSLAB_OK);
  EXPECT(mobiuslab_poset_named("boolean:3", NULL) == MOBIUSLAB_INVALID_ARGUMENT);
  EXPECT(strcmp(mobiuslab_status_name(MOBIUSLAB_NOT_A_LATTICE), "not_a_lattice") == 0);
}

static void test_lattice_errors(void) {
  mobiuslab_poset* p = NULL;
  char* out = NULL;
  EXPECT(mobiuslab_poset_named("antichain:2", &p) == MOBIUSLAB_OK);
  EXPECT(mobiuslab_whitney(p, &out) == MOBIUSLAB_NOT_A_LATTICE);
  EXPECT(mobiuslab_lattice_check(p, &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"lattice\":false"));
  mobiuslab_string_free(out);
  mobiuslab_poset_free(p);
}

static void test_graph_and_tree(void) {
  mobiuslab_graph* g = NULL;
  mobiuslab_tree* t = NULL;
  char* out = NULL;
  EXPECT(mobiuslab_graph_from_edge_list("0 1\n1 2\n2 0\n", &g) == MOBIUSLAB_OK);
  EXPECT(mobiuslab_chromatic(g, 3, &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "x^3 - 3x^2 + 2x"));
  EXPECT(contains(out, "\"values\":[0,0,0,6]"));
  mobiuslab_string_free(out);
  mobiuslab_graph_free(g);

  EXPECT(mobiuslab_graph_from_edge_list("0 1\nx\n", &g) == MOBIUSLAB_PARSE);
  EXPECT(contains(mobiuslab_last_error(), "line 2"));

  EXPECT(mobiuslab_tree_random(6, 1, &t) == MOBIUSLAB_OK);
  EXPECT(mobiuslab_tree_report(t, "det", &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"det\":-80"));
  mobiuslab_string_free(out);
  EXPECT(mobiuslab_tree_report(t, "check", &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"pass\":true"));
  mobiuslab_string_free(out);
  EXPECT(mobiuslab_tree_report(t, "bogus", &out) == MOBIUSLAB_INVALID_ARGUMENT);
  mobiuslab_tree_free(t);
}

static void test_verify(void) {
  char* out = NULL;
  EXPECT(mobiuslab_verify("small", 0, "[2, 4]", &out) == MOBIUSLAB_OK);
  EXPECT(contains(out, "\"passed\":2"));
  mobiuslab_string_free(out);
  EXPECT(mobiuslab_verify("huge", 0, NULL, &out) == MOBIUSLAB_INVALID_ARGUMENT);
}

int main(void) {
  EXPECT(mobiuslab_version() != NULL);
  test_poset();
  test_parse_errors();
  test_lattice_errors();
  test_graph_and_tree();
  test_verify();
  mobiuslab_poset_free(NULL);
  mobiuslab_string_free(NULL);
  if (failures != 0) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
