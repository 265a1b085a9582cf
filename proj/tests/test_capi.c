/* Exercises the C interface from plain C. */
#include "shintani/shintani.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

static int starts_with(const char* s, const char* prefix) { return strncmp(s, prefix, strlen(prefix)) == 0; }

int main(void) {
    shz_session* s = NULL;
    shz_result* r = NULL;
    EXPECT(shz_session_new(&s) == SHZ_OK);
    EXPECT(strcmp(shz_last_error(s), "") == 0);
    EXPECT(shz_degree(s) == 1);

    EXPECT(shz_set_conductor(s, "2") == SHZ_OK);
    EXPECT(shz_lerch(s, 1, 0, 1, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"-1/4\"]"));
    EXPECT(shz_result_passed(r) == 1);
    EXPECT(strstr(shz_result_text(r), "-1/4") != NULL);
    shz_result_free(r);

    /* trivial xi is rejected with a message */
    EXPECT(shz_lerch(s, 0, 0, 0, &r) == SHZ_E_INVALID_ARGUMENT);
    EXPECT(strlen(shz_last_error(s)) > 0);

    EXPECT(shz_set_disc(s, 7) == SHZ_E_INVALID_ARGUMENT);
    EXPECT(shz_set_disc(s, 5) == SHZ_OK);
    EXPECT(shz_degree(s) == 2);
    EXPECT(shz_set_conductor(s, "[[2,1],[0,2]]") == SHZ_E_INVALID_ARGUMENT);
    EXPECT(shz_set_conductor(s, "2") == SHZ_OK);
    EXPECT(shz_lerch(s, 0, 1, 1, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"1/2\"]"));
    shz_result_free(r);

    /* single-cone values: pole at a generator in ker(xi) unless adapted */
    {
        int k[2] = {0, 0};
        EXPECT(shz_shintani(s, 0, 1, k, 2, 0, &r) == SHZ_E_POLE);
        EXPECT(shz_shintani(s, 0, 1, k, 2, 1, &r) == SHZ_OK);
        EXPECT(strstr(shz_result_json(r), "\"cones\"") != NULL);
        shz_result_free(r);
        EXPECT(shz_shintani(s, 0, 1, k, 1, 1, &r) == SHZ_E_INVALID_ARGUMENT);
    }

    /* fan override */
    EXPECT(shz_set_fan_json(s, "{\"cones\":[[[1,0],[2,1]],[[2,1],[1,1]]]}") == SHZ_OK);
    EXPECT(shz_lerch(s, 0, 1, 1, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"1/2\"]"));
    shz_result_free(r);
    EXPECT(shz_set_fan_json(s, "{\"cones\":[[[1,0],[2,1]]]}") == SHZ_E_INVALID_ARGUMENT);
    EXPECT(shz_set_fan_json(s, "{not json") == SHZ_E_PARSE);
    EXPECT(shz_set_fan_json(s, NULL) == SHZ_OK);

    /* Hecke values */
    EXPECT(shz_set_character_norm(s, 3, 1) == SHZ_OK);
    EXPECT(shz_hecke(s, 0, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"2/3\"]"));
    shz_result_free(r);
    EXPECT(shz_set_character_json(s, "{\"norm_character\":{\"q\":7,\"j\":3}}") == SHZ_OK);
    EXPECT(shz_hecke(s, 2, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"1728/7\"]"));
    shz_result_free(r);
    EXPECT(shz_set_character_norm(s, 5, 2) == SHZ_OK);
    EXPECT(shz_hecke(s, 0, &r) == SHZ_E_INVALID_ARGUMENT);

    /* verification reports, deterministic under a seed */
    EXPECT(shz_set_seed(s, 7) == SHZ_OK);
    {
        shz_result* a = NULL;
        shz_result* b = NULL;
        EXPECT(shz_verify(s, "cocycle", 0, 20, &a) == SHZ_OK);
        EXPECT(shz_verify(s, "cocycle", 0, 20, &b) == SHZ_OK);
        EXPECT(strcmp(shz_result_json(a), shz_result_json(b)) == 0);
        EXPECT(shz_result_passed(a) == 1);
        EXPECT(strstr(shz_result_json(a), "\"seed\":7") != NULL);
        shz_result_free(a);
        shz_result_free(b);
    }
    EXPECT(shz_verify(s, "homology", 0, 0, &r) == SHZ_OK);
    EXPECT(shz_result_passed(r) == 1);
    EXPECT(strstr(shz_result_json(r), "\"fan_hash\"") != NULL);
    shz_result_free(r);
    EXPECT(shz_verify(s, "coboundary", 0, 10, &r) == SHZ_OK);
    EXPECT(shz_result_passed(r) == 1);
    shz_result_free(r);
    EXPECT(shz_verify(s, "nonsense", 0, 0, &r) == SHZ_E_INVALID_ARGUMENT);

    /* swapping embeddings keeps diagonal values */
    EXPECT(shz_set_swap_embeddings(s, 1) == SHZ_OK);
    EXPECT(shz_lerch(s, 0, 1, 1, &r) == SHZ_OK);
    EXPECT(starts_with(shz_result_json(r), "{\"level\":1,\"coeffs\":[\"1/2\"]"));
    EXPECT(strstr(shz_result_json(r), "\"swapped\"") != NULL);
    shz_result_free(r);

    EXPECT(shz_set_disc(s, 12) == SHZ_OK);
    EXPECT(shz_set_character_norm(s, 5, 2) == SHZ_OK);
    EXPECT(shz_hecke(s, 0, &r) == SHZ_E_UNSUPPORTED_FIELD);

    EXPECT(shz_lerch(NULL, 1, 0, 0, &r) == SHZ_E_INVALID_ARGUMENT);
    EXPECT(strcmp(shz_status_name(SHZ_E_POLE), "pole") == 0);
    EXPECT(strlen(shz_version()) > 0);
    shz_session_free(s);

    if (failures) fprintf(stderr, "%d failures\n", failures);
    else printf("C API: all checks passed\n");
    return failures ? 1 : 0;
}
