#ifndef INTRINSIC_METRICS_H
#define INTRINSIC_METRICS_H

/* C interface to the intrinsic-volume metric library.
 *
 * Every function that can fail returns a status code and writes its output
 * through a pointer.  On failure the output is untouched and a message is
 * available from ivm_last_error() (thread-local, overwritten by the next
 * failing call on the same thread).
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    IVM_OK = 0,
    IVM_ERR_PARAM = 2,   /* bad arguments, unknown keys/commands */
    IVM_ERR_IO = 3,      /* reserved for callers doing file I/O */
    IVM_ERR_NUMERIC = 4  /* non-convergence or internal numeric failure */
};

const char* ivm_version(void);
const char* ivm_last_error(void);

/* ---- closed-form quantities ---------------------------------------- */

int ivm_flag_coefficient(int n, int j, double* out);
int ivm_chern_constant(int n, int j, int ell, double* out);
int ivm_cap_constant(int n, double beta, double* out);
int ivm_annulus_constant(int n, double beta, double* out);
int ivm_cap_probability(int n, double beta, double h, double* out);
int ivm_ball_intrinsic_volume(int n, int j, double* out);
int ivm_simplex_second_moment(int n, double beta, double* out);
int ivm_hull_length_expectation(long N, double beta, double* out);
int ivm_hull_length_quadrature(long N, double beta, double* out);

/* ---- Monte Carlo estimators on vertex-list polytopes ---------------- */

/* vertices: row-major count x n array. */
int ivm_intrinsic_volume(int n, int j, const double* vertices, size_t count,
                         int subspace_samples, long volume_samples,
                         uint64_t seed, double* value, double* std_error);

int ivm_delta_j(int n, int j, const double* p_vertices, size_t p_count,
                const double* q_vertices, size_t q_count,
                int subspace_samples, long volume_samples, uint64_t seed,
                double* value, double* std_error);

/* ---- command runner -------------------------------------------------- */

/* command: validate | theorem1 | rate | optimize | constants | appendixB.
 * config_text: "key=value" lines ('#' comments allowed); NULL means empty. */
typedef struct ivm_table ivm_table;

int ivm_run_command(const char* command, const char* config_text,
                    ivm_table** out);

size_t ivm_table_rows(const ivm_table* t);
size_t ivm_table_cols(const ivm_table* t);
const char* ivm_table_column_name(const ivm_table* t, size_t col);
double ivm_table_cell(const ivm_table* t, size_t row, size_t col);
/* NULL when the table has no label column. */
const char* ivm_table_label(const ivm_table* t, size_t row);

/* Rendered documents; free with ivm_string_free. */
char* ivm_table_csv(const ivm_table* t);
char* ivm_table_meta_json(const ivm_table* t);
char* ivm_table_doc_json(const ivm_table* t);

void ivm_string_free(char* s);
void ivm_table_free(ivm_table* t);

#ifdef __cplusplus
}
#endif

#endif /* INTRINSIC_METRICS_H */
