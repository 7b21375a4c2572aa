#include <stdio.h>
#include <string.h>
#include "resmatch.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "failed: %s (%s)\n", #cond, rm_last_error()); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    size_t p5[] = {1, 2, 2, 3, 3, 4, 4, 5};
    RmGraph *g = NULL;
    CHECK(rm_graph_from_edges(5, p5, 4, &g) == RM_STATUS_OK);

    RmSpectrum s;
    CHECK(rm_graph_spectrum(g, 1000, &s) == RM_STATUS_OK);
    CHECK(s.nu == 2 && s.ell == 1 && s.big_l == 2 && !s.truncated);

    size_t nu2 = 0;
    CHECK(rm_graph_nu2(g, &nu2) == RM_STATUS_OK && nu2 == 4);
    rm_graph_free(g);

    RmArtifact *a = NULL;
    CHECK(rm_reduce("p cnf 3 1\n1 2 3 0\n", RM_VARIANT_L, &a) == RM_STATUS_OK);
    char *cert = NULL;
    bool passed = false;
    CHECK(rm_artifact_certify(a, 16, &cert, &passed) == RM_STATUS_OK && passed);
    CHECK(strstr(cert, "\"k_param\":10") != NULL);
    rm_string_free(cert);
    rm_artifact_free(a);

    CHECK(rm_reduce("p cnf 2 1\n1 1 2 0\n", RM_VARIANT_L, &a) == RM_STATUS_PARSE_ERROR);
    CHECK(a == NULL);

    char *delta = NULL;
    CHECK(rm_calibration(RM_VARIANT_L, "1/176", &delta) == RM_STATUS_OK);
    CHECK(strcmp(delta, "1/16") == 0);
    rm_string_free(delta);

    puts("ok");
    return 0;
}
