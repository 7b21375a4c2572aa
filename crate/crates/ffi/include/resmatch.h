#ifndef RESMATCH_H
#define RESMATCH_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  RM_STATUS_OK = 0,
  RM_STATUS_NULL_POINTER = 1,
  RM_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed graph, DIMACS or rational text.
   */
  RM_STATUS_PARSE_ERROR = 3,
  /**
   * Well-formed input outside an operation's domain.
   */
  RM_STATUS_INVALID_ARGUMENT = 4,
  /**
   * An enumeration or brute-force search hit its cap.
   */
  RM_STATUS_LIMIT_EXCEEDED = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  RM_STATUS_INTERNAL = 6,
} RmStatus;

typedef enum {
  /**
   * Maximum degree four, tracks `L`.
   */
  RM_VARIANT_L = 0,
  /**
   * Maximum degree three, tracks `ell`.
   */
  RM_VARIANT_ELL = 1,
} RmVariant;

/**
 * Opaque reduction artifact handle.
 */
typedef struct RmArtifact RmArtifact;

/**
 * Opaque graph handle.
 */
typedef struct RmGraph RmGraph;

/**
 * Summary of the residual spectrum of a graph.
 */
typedef struct {
  size_t nu;
  size_t ell;
  size_t big_l;
  size_t matchings_enumerated;
  bool truncated;
} RmSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *rm_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void rm_string_free(char *s);

/**
 * Parses a graph in the `p mg` text format.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out_graph` must be writable.
 */
RmStatus rm_graph_parse(const char *source, RmGraph **out_graph);

/**
 * Builds a graph on vertices `1..=vertex_count` from `edge_count` pairs
 * stored flat in `endpoints` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` readable values.
 */
RmStatus rm_graph_from_edges(size_t vertex_count,
                             const size_t *endpoints,
                             size_t edge_count,
                             RmGraph **out_graph);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void rm_graph_free(RmGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t rm_graph_vertex_count(const RmGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t rm_graph_edge_count(const RmGraph *g);

/**
 * Canonical text of the graph.
 *
 * # Safety
 * `g` must be a live handle; `out_text` must be writable.
 */
RmStatus rm_graph_to_text(const RmGraph *g, char **out_text);

/**
 * Matching number.
 *
 * # Safety
 * `g` must be a live handle; `out_nu` must be writable.
 */
RmStatus rm_graph_nu(const RmGraph *g, size_t *out_nu);

/**
 * Largest 2-edge-colourable subgraph of a bipartite graph.
 * Fails with `InvalidArgument` when `g` is not bipartite.
 *
 * # Safety
 * `g` must be a live handle; `out_nu2` must be writable.
 */
RmStatus rm_graph_nu2(const RmGraph *g, size_t *out_nu2);

/**
 * Enumerates up to `cap` maximum matchings. A truncated result is still
 * returned (with `truncated` set) and the call reports `LimitExceeded`.
 *
 * # Safety
 * `g` must be a live handle; `out_spectrum` must be writable.
 */
RmStatus rm_graph_spectrum(const RmGraph *g, size_t cap, RmSpectrum *out_spectrum);

/**
 * Compiles DIMACS CNF text into a reduction artifact.
 *
 * # Safety
 * `dimacs` must be a NUL-terminated string; `out_artifact` must be writable.
 */
RmStatus rm_reduce(const char *dimacs, RmVariant variant, RmArtifact **out_artifact);

/**
 * # Safety
 * `a` must be null or a handle from this library not yet freed.
 */
void rm_artifact_free(RmArtifact *a);

/**
 * Copies the artifact's graph into a new handle.
 *
 * # Safety
 * `a` must be a live handle; `out_graph` must be writable.
 */
RmStatus rm_artifact_graph(const RmArtifact *a, RmGraph **out_graph);

/**
 * Certifies the artifact. `exhaustive_vars` bounds the number of variables
 * for the per-assignment sweep (0 disables it). Writes the certificate as
 * JSON and whether every check passed.
 *
 * # Safety
 * `a` must be a live handle; the out-pointers must be writable.
 */
RmStatus rm_artifact_certify(const RmArtifact *a,
                             size_t exhaustive_vars,
                             char **out_json,
                             bool *out_passed);

/**
 * `delta` for the given `epsilon`, both as `p/q` strings.
 *
 * # Safety
 * `epsilon` must be a NUL-terminated string; `out_delta` must be writable.
 */
RmStatus rm_calibration(RmVariant variant, const char *epsilon, char **out_delta);

/**
 * Whether `c < 1/256 - epsilon/32`.
 *
 * # Safety
 * `c` and `epsilon` must be NUL-terminated strings; `out_result` writable.
 */
RmStatus rm_additive_threshold(const char *c, const char *epsilon, bool *out_result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RESMATCH_H */
