#ifndef HITCLIQUE_H
#define HITCLIQUE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcCertificateKind {
  HC_CERTIFICATE_KIND_STABLE_SET = 0,
  HC_CERTIFICATE_KIND_ODD_HOLE_PRODUCT = 1,
} HcCertificateKind;

typedef enum HcFormat {
  HC_FORMAT_EDGE_LIST = 0,
  HC_FORMAT_GRAPH6 = 1,
  HC_FORMAT_JSON = 2,
} HcFormat;

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_ARGUMENT = 2,
  HC_STATUS_PARSE = 3,
  /**
   * The input is outside the solver's hypothesis.
   */
  HC_STATUS_PRECONDITION = 4,
  HC_STATUS_LIMIT_EXCEEDED = 5,
  /**
   * A result failed its own verification; indicates a bug.
   */
  HC_STATUS_INTERNAL = 6,
  HC_STATUS_BUFFER_TOO_SMALL = 7,
  HC_STATUS_PANIC = 8,
} HcStatus;

/**
 * Opaque solver result.
 */
typedef struct HcCertificate HcCertificate;

/**
 * Opaque graph handle.
 */
typedef struct HcGraph HcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *hc_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`edges[2i]`, `edges[2i+1]`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be NULL
 * when `edge_count` is 0). `out` must be writable.
 */
enum HcStatus hc_graph_new(size_t n, const size_t *edges, size_t edge_count, struct HcGraph **out);

/**
 * Parses a NUL-terminated graph description.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum HcStatus hc_graph_parse(const char *text, enum HcFormat format, struct HcGraph **out);

/**
 * Strong product `a ⊠ b`; vertex `(u, x)` is numbered `u * n(b) + x`.
 *
 * # Safety
 * `a` and `b` must be live graph handles; `out` must be writable.
 */
enum HcStatus hc_graph_strong_product(const struct HcGraph *a,
                                      const struct HcGraph *b,
                                      struct HcGraph **out);

/**
 * Serialises a graph; free the result with [`hc_string_free`].
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum HcStatus hc_graph_write(const struct HcGraph *g, enum HcFormat format, char **out);

/**
 * # Safety
 * `g` must be NULL or a handle not yet freed.
 */
void hc_graph_free(struct HcGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t hc_graph_vertex_count(const struct HcGraph *g);

/**
 * Maximum degree, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t hc_graph_max_degree(const struct HcGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum HcStatus hc_graph_clique_number(const struct HcGraph *g, size_t *out);

/**
 * Runs the hitting-set solver with default limits.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum HcStatus hc_solve(const struct HcGraph *g, struct HcCertificate **out);

/**
 * # Safety
 * `c` must be NULL or a certificate handle not yet freed.
 */
void hc_certificate_free(struct HcCertificate *c);

/**
 * # Safety
 * `c` must be a live certificate handle; `out` must be writable.
 */
enum HcStatus hc_certificate_kind(const struct HcCertificate *c, enum HcCertificateKind *out);

/**
 * Copies the certificate's vertex list into `buf`: the stable set, or the
 * vertices of the odd hole product. `*len` receives the full length even
 * when `HC_STATUS_BUFFER_TOO_SMALL` is returned; `buf` may then be NULL.
 *
 * # Safety
 * `c` must be a live certificate handle, `buf` must have room for `cap`
 * values, and `len` must be writable.
 */
enum HcStatus hc_certificate_vertices(const struct HcCertificate *c,
                                      size_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * Hole length `k` and clique size `m` of an odd-hole-product certificate.
 *
 * # Safety
 * `c` must be a live certificate handle; `k` and `m` must be writable.
 */
enum HcStatus hc_certificate_hole(const struct HcCertificate *c, size_t *k, size_t *m);

/**
 * JSON form of the certificate, as written by `hitclique solve`. Free
 * with [`hc_string_free`].
 *
 * # Safety
 * `c` must be a live certificate handle; `out` must be writable.
 */
enum HcStatus hc_certificate_to_json(const struct HcCertificate *c, char **out);

/**
 * Re-checks a JSON certificate against `g`; `*valid` is set to 1 or 0.
 *
 * # Safety
 * `g` must be a live graph handle, `json` a valid C string, and `valid`
 * writable.
 */
enum HcStatus hc_verify_json(const struct HcGraph *g, const char *json, bool *valid);

/**
 * Builds the `(k, t)` counterexample graph for `ε = eps_num / eps_den`.
 * When `hitting_set_exists` is non-NULL the instance is also verified and
 * the flag receives the outcome (0 on every correct instance).
 *
 * # Safety
 * `out` must be writable; `hitting_set_exists` must be NULL or writable.
 */
enum HcStatus hc_counterexample(size_t k,
                                size_t t,
                                int64_t eps_num,
                                int64_t eps_den,
                                struct HcGraph **out,
                                bool *hitting_set_exists);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void hc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HITCLIQUE_H */
