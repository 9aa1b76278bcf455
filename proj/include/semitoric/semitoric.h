#ifndef SEMITORIC_H
#define SEMITORIC_H

/*
 * C interface to the semitoric fan library.  All inputs and outputs are
 * JSON or CSV strings; objects parsed from JSON live behind opaque handles.
 *
 * Every function that can fail returns a status code:
 *   ST_OK      success / object valid
 *   ST_INVALID domain error (invalid object, inapplicable move, mismatch)
 *   ST_PARSE   malformed input text
 * On failure the char** outputs are left untouched and st_last_error()
 * returns a message for the calling thread.  Strings returned through
 * char** are owned by the caller and released with st_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

#define ST_OK 0
#define ST_INVALID 1
#define ST_PARSE 2

#define ST_KIND_TORIC_FAN 1
#define ST_KIND_SEMITORIC_FAN 2
#define ST_KIND_POLYGON 3
#define ST_KIND_INGREDIENTS 4

typedef struct st_object st_object;

/* Parses JSON, deciding the kind from its shape: "vectors" (+ "labels")
 * for fans, "vertices" for polygons, "polygon" for ingredient lists. */
int st_parse(const char* json, st_object** out);
int st_object_kind(const st_object* obj);
void st_object_free(st_object* obj);

/* Canonical JSON for the object. */
int st_object_to_json(const st_object* obj, char** out);

/* ST_OK when the object satisfies its invariants; otherwise ST_INVALID
 * with the failed invariant in *report (empty string when valid). */
int st_validate(const st_object* obj, char** report);

/* Toric fan -> minimal model.  Result JSON carries the model tag, the
 * reduced fan, and the removal trace; verify != 0 replays the trace and
 * requires it to reproduce the input exactly. */
int st_reduce(const st_object* fan, int verify, char** result);

/* Semitoric fan -> standard fan of the same complexity.  Result JSON
 * carries the standard fan, complexity, net T power, and the move trace;
 * verify != 0 replays the trace with every intermediate revalidated. */
int st_normalize(const st_object* fan, int verify, char** result);

/* CSV census of kernel words with length <= max_length, |a_i| <= bound. */
int st_enumerate(int max_length, long long coeff_bound, char** csv);

/* Distance between two polygons (family metric) or two ingredient lists
 * (full metric).  measure is "lebesgue" or "expabsx"; caps are geometric,
 * b_n = cap_b0 * cap_ratio^n.  Result JSON carries the value and the
 * series-truncation tail bound. */
int st_distance(const st_object* a, const st_object* b, const char* measure,
                double cap_b0, double cap_ratio, char** result);

/* Connectivity path between two ingredient lists: steps+1 samples with
 * exact endpoints, as a JSON array of ingredient lists. */
int st_path(const st_object* a, const st_object* b, int steps, char** result);

/* Deterministic SVG rendering of any object kind. */
int st_render(const st_object* obj, char** svg);

const char* st_last_error(void);
void st_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SEMITORIC_H */
