#ifndef LTC_H
#define LTC_H

/* C interface to the list-colouring toolkit. All functions return an error
 * code; results come back through out-parameters. Strings produced by the
 * library are heap-allocated JSON documents released with ltc_string_free.
 * On any failure ltc_last_error() describes what went wrong. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum ltc_status {
    LTC_OK = 0,
    LTC_EINVAL = 1,  /* bad argument or parameter combination */
    LTC_EPARSE = 2,  /* malformed JSON input */
    LTC_ERROR = 3    /* runtime failure; see ltc_last_error() */
};

/* Message describing the most recent failure on this thread; never NULL. */
const char *ltc_last_error(void);

/* Frees any string returned by this library. NULL is a no-op. */
void ltc_string_free(char *s);

/* ---- graphs -------------------------------------------------------------- */

typedef struct ltc_graph ltc_graph;

/* Parses canonical graph JSON {"n": ..., "edges": [[u,v], ...]}. */
enum ltc_status ltc_graph_from_json(const char *json, ltc_graph **out);

/* Families: "necklace" (needs t and n), "sp" and "planar" (n, seed),
 * "wagner-sum" (n = approximate total size, seed), "v8" (no knobs). */
enum ltc_status ltc_graph_generate(const char *family, int n, int t, uint64_t seed,
                                   ltc_graph **out);

void ltc_graph_free(ltc_graph *g);

enum ltc_status ltc_graph_to_json(const ltc_graph *g, char **json_out);

/* Vertex count, or -1 for NULL. */
int ltc_graph_order(const ltc_graph *g);

/* Random lists of the given size over {0..universe-1}, as lists JSON. */
enum ltc_status ltc_random_lists(const ltc_graph *g, int size, int universe, uint64_t seed,
                                 char **lists_json_out);

/* ---- minor checks -------------------------------------------------------- */

/* verdict_out: 0 = K_t-minor-free, 1 = has a K_t minor, 2 = unknown within
 * budget. report_json_out (optional) carries the verdict plus a validated
 * branch-set witness when one exists. budget 0 selects the default. */
enum ltc_status ltc_check_minor_free(const ltc_graph *g, int t, uint64_t budget,
                                     int *verdict_out, char **report_json_out);

/* Same verdict scheme for radius-bounded balls; the report names the first
 * vertex whose ball fails (or where the budget ran out). */
enum ltc_status ltc_check_local(const ltc_graph *g, int t, int radius, uint64_t budget,
                                int *verdict_out, char **report_json_out);

/* ---- colouring ----------------------------------------------------------- */

/* Runs the distributed list-colouring algorithm under the LOCAL-model
 * simulator, re-verifies the result, and returns the colouring plus run
 * statistics (rounds, per-level progress, verified flag) as JSON. k_base <= 0
 * selects the default. */
enum ltc_status ltc_colour(const ltc_graph *g, const char *lists_json, int c, int cap,
                           int size_cap, int k_base, char **colouring_json_out,
                           char **stats_json_out);

/* Independent verification. ok_out: 1 proper (and list-respecting when lists
 * given), 0 otherwise; report_json_out (optional) pinpoints the first
 * violation. lists_json may be NULL to skip list membership. */
enum ltc_status ltc_verify(const ltc_graph *g, const char *lists_json,
                           const char *colouring_json, int *ok_out, char **report_json_out);

#ifdef __cplusplus
}
#endif

#endif
