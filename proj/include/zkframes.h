#ifndef ZKFRAMES_H
#define ZKFRAMES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ZKF_API __declspec(dllexport)
#else
#define ZKF_API __attribute__((visibility("default")))
#endif

/* Every call returns a status. On failure the message is available from
 * zkf_last_error() until the next call on the same thread. Strings handed
 * out through char** are owned by the caller: release with zkf_string_free. */
typedef enum zkf_status {
  ZKF_OK = 0,
  ZKF_ERR_INVALID_ARGUMENT = 1,
  ZKF_ERR_PARSE = 2,
  ZKF_ERR_BUDGET_EXCEEDED = 3,
  ZKF_ERR_NOT_SELF_DUAL = 4,
  ZKF_ERR_SKEW_VIOLATION = 5,
  ZKF_ERR_CONGRUENCE_VIOLATION = 6,
  ZKF_ERR_MEMBERSHIP_VIOLATION = 7,
  ZKF_ERR_NOT_ODD = 8,
  ZKF_ERR_BAD_DIMENSION = 9,
  ZKF_ERR_PRECONDITION = 10,
  ZKF_ERR_UNKNOWN_ID = 11,
  ZKF_ERR_UNKNOWN_LATTICE = 12,
  ZKF_ERR_OUT_OF_RANGE = 13,
  ZKF_ERR_INTERNAL = 14,
  ZKF_ERR_NULL_POINTER = 15
} zkf_status;

typedef enum zkf_code_type { ZKF_TYPE_ANY = 0, ZKF_TYPE_I = 1, ZKF_TYPE_II = 2 } zkf_code_type;
typedef enum zkf_extremality {
  ZKF_EXTREMAL = 0,
  ZKF_NEAR_EXTREMAL = 1,
  ZKF_NEITHER = 2
} zkf_extremality;
typedef enum zkf_verdict { ZKF_YES = 0, ZKF_NO = 1, ZKF_UNKNOWN = 2 } zkf_verdict;

typedef struct zkf_code zkf_code;
typedef struct zkf_lattice zkf_lattice;
typedef struct zkf_seed zkf_seed;
typedef struct zkf_frame zkf_frame;

ZKF_API const char* zkf_last_error(void);
ZKF_API const char* zkf_status_name(zkf_status status);
ZKF_API void zkf_string_free(char* s);
ZKF_API const char* zkf_version(void);

/* Codes over Z_k. */
ZKF_API zkf_status zkf_code_from_catalog(const char* id, zkf_code** out);
/* rows: row-major nrows x length generator entries. */
ZKF_API zkf_status zkf_code_from_rows(int64_t modulus, const int64_t* rows, size_t nrows,
                                      size_t length, zkf_code** out);
ZKF_API zkf_status zkf_code_parse(const char* text, zkf_code** out);
ZKF_API zkf_status zkf_code_format(const zkf_code* code, char** out);
ZKF_API void zkf_code_free(zkf_code* code);
ZKF_API zkf_status zkf_code_info(const zkf_code* code, int64_t* modulus, size_t* length);
ZKF_API zkf_status zkf_code_is_self_dual(const zkf_code* code, int* out);
ZKF_API zkf_status zkf_code_is_type_ii(const zkf_code* code, int* out);
/* Exhaustive; ZKF_ERR_BUDGET_EXCEEDED when the code has more than
 * `codeword_budget` codewords (0 means the default 2^31). */
ZKF_API zkf_status zkf_code_min_euclidean_weight(const zkf_code* code, uint64_t codeword_budget,
                                                 int64_t* out);
/* Enumeration when small enough, otherwise via the minimum of A_k(C).
 * *exact is 1 when lower == upper is the true value. *method may be NULL. */
ZKF_API zkf_status zkf_code_certify_weight(const zkf_code* code, uint64_t codeword_budget,
                                           uint64_t node_budget, int64_t* lower, int64_t* upper,
                                           int* exact, char** method);

/* Lattices: an integer basis B and a scale s, the lattice being B / sqrt(s).
 * Vectors passed in and out are in these scaled coordinates. */
ZKF_API zkf_status zkf_lattice_from_catalog(const char* id, zkf_lattice** out);
ZKF_API zkf_status zkf_lattice_construction_a(const zkf_code* code, zkf_lattice** out);
ZKF_API zkf_status zkf_lattice_parse(const char* text, zkf_lattice** out);
ZKF_API zkf_status zkf_lattice_format(const zkf_lattice* lattice, char** out);
ZKF_API void zkf_lattice_free(zkf_lattice* lattice);
ZKF_API zkf_status zkf_lattice_info(const zkf_lattice* lattice, size_t* dimension, int64_t* scale,
                                    int* unimodular, int* even);
/* node_budget 0 means the library default. */
ZKF_API zkf_status zkf_lattice_min_norm(const zkf_lattice* lattice, uint64_t node_budget,
                                        int64_t* num, int64_t* den);
/* "norm count" lines for all norms <= max_num / max_den. */
ZKF_API zkf_status zkf_lattice_theta(const zkf_lattice* lattice, int64_t max_num, int64_t max_den,
                                     uint64_t node_budget, char** out);
/* Coset representatives of the even sublattice in its dual (scale 4s), and
 * the theta prefix of each coset up to max_num / max_den. */
ZKF_API zkf_status zkf_lattice_shadow(const zkf_lattice* lattice, int64_t max_num, int64_t max_den,
                                      uint64_t node_budget, char** out);
ZKF_API zkf_status zkf_lattice_neighbors(const zkf_lattice* lattice, zkf_lattice** first,
                                         zkf_lattice** second);
ZKF_API zkf_status zkf_lattice_two_neighbor(const zkf_lattice* lattice, const int64_t* x,
                                            const int64_t* y, size_t n, zkf_lattice** out);
/* *out is NULL when the search proved there is no k-frame. */
ZKF_API zkf_status zkf_lattice_find_frame(const zkf_lattice* lattice, int64_t k,
                                          uint64_t node_budget, zkf_frame** out);
ZKF_API zkf_status zkf_lattice_contains_frame(const zkf_lattice* lattice, const zkf_frame* frame,
                                              int* out);

/* Skew seeds and frames. */
ZKF_API zkf_status zkf_seed_from_catalog(const char* id, zkf_seed** out);
ZKF_API zkf_status zkf_seed_parse(const char* text, zkf_seed** out);
ZKF_API zkf_status zkf_seed_format(const zkf_seed* seed, char** out);
ZKF_API void zkf_seed_free(zkf_seed* seed);
ZKF_API zkf_status zkf_seed_info(const zkf_seed* seed, int64_t* k, int64_t* m, int64_t* ell,
                                 size_t* order);
ZKF_API zkf_status zkf_seed_code(const zkf_seed* seed, zkf_code** out);
/* abcd[4] receives a quadruple when *found is 1. */
ZKF_API zkf_status zkf_seed_find_quadruple(const zkf_seed* seed, int64_t target, int* found,
                                           int64_t abcd[4]);
ZKF_API zkf_status zkf_seed_frame(const zkf_seed* seed, const int64_t abcd[4], zkf_frame** out);

ZKF_API zkf_status zkf_frame_parse(const char* text, zkf_frame** out);
ZKF_API zkf_status zkf_frame_format(const zkf_frame* frame, int verified, char** out);
ZKF_API void zkf_frame_free(zkf_frame* frame);
ZKF_API zkf_status zkf_frame_info(const zkf_frame* frame, size_t* size, int64_t* norm,
                                  int64_t* scale);
ZKF_API zkf_status zkf_frame_is_orthogonal(const zkf_frame* frame, int* out);
ZKF_API zkf_status zkf_frame_scale(const zkf_frame* frame, int64_t m, zkf_frame** out);

/* Arithmetic. */
ZKF_API zkf_status zkf_representation_search(char case_label, int64_t p, int* found,
                                             int64_t abcd[4]);
ZKF_API zkf_status zkf_four_square(int64_t m, int64_t out[4]);
/* Star condition attached to a lattice alias or skew seed id. */
ZKF_API zkf_status zkf_star_check(const char* id, int64_t k, int* out);

/* Bounds. `rule` may be NULL. */
ZKF_API zkf_status zkf_bound(int64_t n, int64_t k, zkf_code_type type, int64_t* bound, char** rule);
ZKF_API zkf_status zkf_classify(int64_t n, int64_t k, int64_t d_e, zkf_code_type type,
                                zkf_extremality* label, int* side_condition_unchecked);
ZKF_API zkf_status zkf_unimodular_min_norm_bound(int64_t n, int64_t* out);

/* Catalog, reports, reproduction. */
ZKF_API zkf_status zkf_catalog_list(char** out);
ZKF_API zkf_status zkf_catalog_verify(const char* id, int* ok, char** out);
/* Frame existence for a catalog lattice. `text` gets the certificate chain,
 * `frame` (may be NULL) the verified frame for a "yes", and `frame_lattice`
 * (may be NULL) the id whose coordinates the frame is given in. */
ZKF_API zkf_status zkf_report(const char* lattice_id, int64_t k, uint64_t node_budget,
                              zkf_verdict* verdict, char** text, zkf_frame** frame,
                              char** frame_lattice);
ZKF_API zkf_status zkf_reproduce_targets(char** out);
ZKF_API zkf_status zkf_reproduce(const char* target, int slow, uint64_t node_budget,
                                 uint64_t codeword_budget, int* failures, int* unknowns,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif
