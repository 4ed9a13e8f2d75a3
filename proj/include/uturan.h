/* uturan — C API for the uniform Turan density certificate toolkit.
 *
 * All functions return a ut_status; payloads travel as JSON strings
 * allocated by the library (release them with ut_string_free). Graphs and
 * reduced 3-graphs are opaque handles. Status values match the CLI exit
 * codes: 0 for a positive answer (sat / accept / pass / witness found),
 * 1 for a definitive negative (unsat / reject / fail / absent), 2 for
 * malformed input, 3 for a guard or timeout.
 */
#ifndef UTURAN_H
#define UTURAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ut_status {
  UT_OK = 0,
  UT_NO = 1,
  UT_EINVAL = 2,
  UT_ELIMIT = 3
} ut_status;

typedef struct ut_graph ut_graph;
typedef struct ut_reduced ut_reduced;

const char* ut_version(void);
void ut_string_free(char* s);
void ut_graph_free(ut_graph* g);
void ut_reduced_free(ut_reduced* a);

/* Graphs. graph spec strings are either graph JSON or "name:..." catalog
 * references; ut_graph_from_name also accepts the bare "wheel:6" form. */
ut_status ut_graph_from_json(const char* json, ut_graph** out, char** err);
ut_status ut_graph_from_name(const char* name, ut_graph** out, char** err);
ut_status ut_graph_to_json(const ut_graph* g, char** json_out);
int ut_graph_vertex_count(const ut_graph* g);
int ut_graph_edge_count(const ut_graph* g);
ut_status ut_catalog_names(char** json_out);

typedef struct ut_solve_options {
  int max_vertices;  /* default 10 */
  long timeout_ms;   /* default 60000 */
  int threads;       /* default 1 */
} ut_solve_options;

void ut_solve_options_init(ut_solve_options* opt);

/* property is one of vanishing, clubs, spades, spades-star, five-color.
 * UT_OK: *result_json holds the certificate. UT_NO: search exhausted.
 * UT_ELIMIT: guard or timeout (err says which). */
ut_status ut_solve(const ut_graph* g, const char* property,
                   const ut_solve_options* opt, char** result_json, char** err);

/* UT_OK accept; UT_NO reject with the violation in *result_json;
 * UT_EINVAL when the certificate does not fit the graph structurally. */
ut_status ut_verify(const ut_graph* g, const char* certificate_json,
                    char** result_json, char** err);

/* Runs every family and combines the implied bounds. UT_OK on a completed
 * report (regardless of the memberships found). */
ut_status ut_classify(const ut_graph* g, const ut_solve_options* opt,
                      char** report_json, char** err);

ut_status ut_d_star(char** json_out);

/* Quarter-density construction and its audits. */
ut_status ut_construct_random(int n, uint64_t seed, ut_graph** out, char** err);
ut_status ut_inherited_certificate(int n, uint64_t seed, const int* subset,
                                   int subset_len, char** cert_json, char** err);
/* UT_OK pass, UT_NO fail; audit details in *audit_json either way. */
ut_status ut_density_audit(const ut_graph* g, double d, double mu,
                           const int* sizes, int n_sizes, int samples,
                           uint64_t seed, char** audit_json, char** err);

/* Reduced 3-graphs. */
ut_status ut_reduced_from_json(const char* json, ut_reduced** out, char** err);
ut_status ut_reduced_random(int index_count, int class_size, double edge_prob,
                            uint64_t seed, ut_reduced** out, char** err);
ut_status ut_reduced_to_json(const ut_reduced* a, char** json_out);
/* UT_OK with the witness in *result_json, UT_NO when no embedding exists. */
ut_status ut_embed(const ut_reduced* a, const ut_graph* f, int all_orderings,
                   char** result_json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* UTURAN_H */
