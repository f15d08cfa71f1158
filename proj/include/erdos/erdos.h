/* C API for the Erdos matrix library.
 *
 * All objects are opaque handles created and destroyed through this
 * interface. Functions return ERDOS_OK (0) on success or a negative error
 * code; erdos_error_string() names the code and erdos_last_error() carries
 * the detail message of the most recent failure on the calling thread.
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with erdos_string_free().
 */
#ifndef ERDOS_H
#define ERDOS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct erdos_matrix erdos_matrix;
typedef struct erdos_report erdos_report;

enum {
    ERDOS_OK = 0,
    ERDOS_ERR_PARSE = -1,
    ERDOS_ERR_DIMENSION = -2,
    ERDOS_ERR_SINGULAR = -3,
    ERDOS_ERR_NOT_BISTOCHASTIC = -4,
    ERDOS_ERR_NOT_INNER = -5,
    ERDOS_ERR_NOT_ADMISSIBLE = -6,
    ERDOS_ERR_NOT_RCDS = -7,
    ERDOS_ERR_INVALID_SPEC = -8,
    ERDOS_ERR_EMPTY_REPORT = -9,
    ERDOS_ERR_CHECKPOINT = -10,
    ERDOS_ERR_IO = -11,
    ERDOS_ERR_INTERNAL = -12,
    ERDOS_ERR_NULL_ARGUMENT = -13
};

const char* erdos_version(void);
const char* erdos_error_string(int code);
const char* erdos_last_error(void);
void erdos_string_free(char* s);

/* --- matrices (text grid: rows of whitespace-separated "p/q" tokens) --- */
int erdos_matrix_parse(const char* text, erdos_matrix** out);
void erdos_matrix_free(erdos_matrix* m);
int erdos_matrix_format(const erdos_matrix* m, char** out);
int erdos_matrix_dimension(const erdos_matrix* m, int* out);

int erdos_matrix_is_bistochastic(const erdos_matrix* m, int* result);
int erdos_matrix_is_rcds(const erdos_matrix* m, int* result);
int erdos_matrix_is_erdos(const erdos_matrix* m, int* result);

/* maxtrace value as "p/q" and the lexicographically least maximizer as
 * one-line notation "[...]" */
int erdos_matrix_maxtrace(const erdos_matrix* m, char** value, char** argmax);
int erdos_matrix_frobenius_sq(const erdos_matrix* m, char** value);
/* distinct inner-trace values, comma-separated */
int erdos_matrix_inner_trace_set(const erdos_matrix* m, char** values);
/* approximate decimal rendering of an exact "p/q" token */
int erdos_rational_approx(const char* token, char** out);

/* u, v, and criterion verdicts for a bistochastic RCDS matrix;
 * JSON {u, v, skeleton_hex} plus the two boolean tests */
int erdos_matrix_rcds_decompose(const erdos_matrix* m, char** uv_json, int* criterion,
                                int* sufficient);

/* --- families ("xrsn:...", "zigzag:...", "alpha:...") --- */
int erdos_family_make(const char* spec, erdos_matrix** out);

/* --- skeletons (text: n lines over {0,1}) --- */
int erdos_skeleton_canonical(const char* text, char** canonical_text, char** hex);

/* --- enumeration --- */
int erdos_enumerate(int n, int fix_identity, int workers, const char* checkpoint_path_or_null,
                    int allow_n6, erdos_report** out);
void erdos_report_free(erdos_report* r);
int erdos_report_summary(const erdos_report* r, char** line);
int erdos_report_stats(const erdos_report* r, char** table);
int erdos_report_summary_json(const erdos_report* r, char** json);
int erdos_report_csv_row(const erdos_report* r, char** row);
int erdos_report_record_count(const erdos_report* r, long* count);
int erdos_report_write_jsonl(const erdos_report* r, const char* path);
int erdos_report_load_jsonl(const char* path, erdos_report** out);
int erdos_report_dimension(const erdos_report* r, int* n);
/* JSON-lines of the matching records */
int erdos_report_query_distinct(const erdos_report* r, char** jsonl);
int erdos_report_query_max_denominator(const erdos_report* r, char** json);

#ifdef __cplusplus
}
#endif

#endif /* ERDOS_H */
