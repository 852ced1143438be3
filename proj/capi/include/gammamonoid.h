/* C interface to the Gamma-monoid engine: opaque instance handles, status
 * codes, and report renderers. All returned strings are heap-allocated and
 * must be released with gma_str_free. */

#ifndef GAMMAMONOID_H
#define GAMMAMONOID_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gma_instance gma_instance;

typedef enum {
  GMA_OK = 0,        /* success, or a verdict of "true" */
  GMA_FALSE = 1,     /* the queried property is false */
  GMA_INVALID = 2,   /* invalid input: parse or validation failure */
  GMA_IO_ERROR = 3,  /* file could not be read or written */
  GMA_BAD_ARGUMENT = 4,
  GMA_INTERNAL = 5   /* an internal consistency check fired */
} gma_status;

const char* gma_status_name(gma_status s);

/* Construction. On failure *out is set to NULL and, when err is non-NULL,
 * *err receives a message (free with gma_str_free). */
gma_status gma_parse(const char* text, gma_instance** out, char** err);
gma_status gma_parse_file(const char* path, gma_instance** out, char** err);
gma_status gma_builtin(const char* spec, gma_instance** out, char** err);

/* Replaces a trivial action by the cyclic action generated by a monoid
 * automorphism, given as a permutation of element indices of length n. */
gma_status gma_with_generator(const gma_instance* in, const int* perm, int len,
                              gma_instance** out, char** err);

void gma_free(gma_instance* h);
void gma_str_free(char* s);

/* Accessors; element and group indices are 0-based, identity at 0. */
int gma_size(const gma_instance* h);
int gma_group_order(const gma_instance* h);
int gma_add(const gma_instance* h, int a, int b);
int gma_act(const gma_instance* h, int alpha, int a);
int gma_group_abelian(const gma_instance* h); /* 1 or 0 */

/* Canonical text rendering of the instance. */
gma_status gma_print(const gma_instance* h, char** out);

/* Reports. as_json selects the JSON rendering; the returned status follows
 * the exit-code contract (GMA_OK / GMA_FALSE / GMA_INVALID). */
gma_status gma_report_validate(const gma_instance* h, int as_json, char** out,
                               char** err);
gma_status gma_report_props(const gma_instance* h, int as_json, char** out,
                            char** err);
gma_status gma_report_ideals(const gma_instance* h, int as_json, char** out,
                             char** err);
/* ideal_csv: comma-separated element names or indices. */
gma_status gma_report_quotient(const gma_instance* h, const char* ideal_csv,
                               int as_json, char** out, char** err);
gma_status gma_report_series(const gma_instance* h, int as_json, char** out,
                             char** err);
/* Each series is given by its intermediate terms (endpoints implied), one
 * csv element set per term. Returns GMA_OK iff the series are equivalent. */
gma_status gma_report_jh(const gma_instance* h, const char* const* series1,
                         int n1, const char* const* series2, int n2,
                         int as_json, char** out, char** err);
gma_status gma_report_demo(const char* name, int as_json, char** out,
                           char** err);

/* Writes instance files plus MANIFEST.txt into out_dir. filters_csv is a
 * comma-separated subset of refinement,conical,cancellative (may be NULL);
 * action_source is trivial, all-cyclic-subgroups or
 * full-automorphism-subgroups. */
gma_status gma_corpus_emit(int max_size, const char* filters_csv,
                           const char* action_source, const char* out_dir,
                           int as_json, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* GAMMAMONOID_H */
