#include <stdio.h>
#include <string.h>

#include "hitclique.h"

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            const char *msg = hc_last_error_message();                     \
            fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,         \
                    msg ? msg : "no message");                             \
            return 1;                                                      \
        }                                                                  \
    } while (0)

int main(void) {
    HcGraph *c5 = NULL, *k3 = NULL, *product = NULL;
    CHECK(hc_graph_parse("p 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n",
                         HC_FORMAT_EDGE_LIST, &c5) == HC_STATUS_OK);
    size_t tri[] = {0, 1, 1, 2, 0, 2};
    CHECK(hc_graph_new(3, tri, 3, &k3) == HC_STATUS_OK);
    CHECK(hc_graph_strong_product(c5, k3, &product) == HC_STATUS_OK);
    CHECK(hc_graph_vertex_count(product) == 15);
    CHECK(hc_graph_max_degree(product) == 8);

    HcCertificate *cert = NULL;
    HcCertificateKind kind;
    size_t k = 0, m = 0;
    CHECK(hc_solve(product, &cert) == HC_STATUS_OK);
    CHECK(hc_certificate_kind(cert, &kind) == HC_STATUS_OK);
    CHECK(kind == HC_CERTIFICATE_KIND_ODD_HOLE_PRODUCT);
    CHECK(hc_certificate_hole(cert, &k, &m) == HC_STATUS_OK);
    CHECK(k == 5 && m == 3);

    char *json = NULL;
    bool valid = false;
    CHECK(hc_certificate_to_json(cert, &json) == HC_STATUS_OK);
    CHECK(strstr(json, "odd_hole_product") != NULL);
    CHECK(hc_verify_json(product, json, &valid) == HC_STATUS_OK && valid);
    hc_string_free(json);
    hc_certificate_free(cert);

    HcGraph *bad = NULL;
    CHECK(hc_graph_new(2, tri, 3, &bad) == HC_STATUS_INVALID_ARGUMENT);
    CHECK(hc_last_error_message() != NULL);

    hc_graph_free(product);
    hc_graph_free(k3);
    hc_graph_free(c5);
    puts("ok");
    return 0;
}
