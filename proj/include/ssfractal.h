/* ssfractal: exact multifractal analysis of modular subset sum functions.
 *
 * C interface over the analysis library.  All objects are opaque handles
 * created and destroyed here; every fallible call returns an ssf_status and
 * writes results through out parameters.  On failure ssf_last_error() gives
 * a thread-local diagnostic for the most recent failing call.  Strings
 * returned through char** are owned by the caller and must be released with
 * ssf_free_string(); strings returned as const char* stay valid until their
 * owning handle is freed.
 */
#ifndef SSFRACTAL_H
#define SSFRACTAL_H

#include <stddef.h>
#include <stdint.h>

#ifndef SSF_API
#if defined(_WIN32)
#define SSF_API __declspec(dllexport)
#else
#define SSF_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssf_status {
  SSF_OK = 0,
  SSF_ERR_INVALID_ARGUMENT,
  SSF_ERR_EMPTY_WEIGHTS,
  SSF_ERR_WEIGHT_OUT_OF_RANGE,
  SSF_ERR_DENSITY_OVERFLOW,
  SSF_ERR_PARSE,
  SSF_ERR_MODULUS_TOO_LARGE,
  SSF_ERR_INSTANCE_TOO_LARGE,
  SSF_ERR_DEGENERATE_MODULUS,
  SSF_ERR_DEGENERATE_DENOMINATOR,
  SSF_ERR_SOLUTION_INSTANCE_MISMATCH,
  SSF_ERR_NOT_A_COLLISION,
  SSF_ERR_HYPOTHESIS_VIOLATED,
  SSF_ERR_SETS_NOT_FREE,
  SSF_ERR_NOT_INJECTIVE,
  SSF_ERR_SURJECTIVE,
  SSF_ERR_NO_BOUNDARY_GAP,
  SSF_ERR_OUTPUT_TOO_LARGE,
  SSF_ERR_IO,
  SSF_ERR_NO_MEMORY,
  SSF_ERR_INTERNAL
} ssf_status;

SSF_API const char* ssf_status_name(ssf_status status);
SSF_API const char* ssf_last_error(void);
SSF_API const char* ssf_version(void);
SSF_API void ssf_free_string(char* str);

/* ---- resource caps ---- */

typedef struct ssf_caps {
  uint64_t brute_force;       /* max s for 2^s enumeration */
  uint64_t ternary;           /* max s for 3^s enumeration */
  uint64_t modulus;           /* largest addressable modulus */
  uint64_t attractor_outputs; /* max strings from attractor digit listing */
} ssf_caps;

SSF_API void ssf_caps_defaults(ssf_caps* caps);
/* Applies "key=value,..." overrides (keys brute, ternary, modulus,
 * attractor) on top of the values already in caps. */
SSF_API ssf_status ssf_caps_parse(const char* spec, ssf_caps* caps);

/* ---- instances ---- */

typedef struct ssf_instance ssf_instance;

SSF_API ssf_status ssf_instance_new(const uint64_t* weights, size_t count,
                                    uint64_t modulus, ssf_instance** out);
SSF_API ssf_status ssf_instance_arithmetic(uint64_t s, uint64_t a,
                                           ssf_instance** out);
SSF_API ssf_status ssf_instance_random_density(uint64_t s, double rho,
                                               uint64_t seed,
                                               const ssf_caps* caps,
                                               ssf_instance** out);
SSF_API ssf_status ssf_instance_superincreasing(uint64_t s, uint64_t seed,
                                                const ssf_caps* caps,
                                                ssf_instance** out);
SSF_API ssf_status ssf_instance_from_json(const char* text, ssf_instance** out);
SSF_API ssf_status ssf_instance_load(const char* path, ssf_instance** out);
SSF_API ssf_status ssf_instance_save(const ssf_instance* inst, const char* path);
SSF_API ssf_status ssf_instance_json(const ssf_instance* inst, char** out);
SSF_API void ssf_instance_free(ssf_instance* inst);

SSF_API uint64_t ssf_instance_s(const ssf_instance* inst);
SSF_API uint64_t ssf_instance_modulus(const ssf_instance* inst);
SSF_API uint64_t ssf_instance_weight(const ssf_instance* inst, size_t index);
SSF_API ssf_status ssf_instance_density(const ssf_instance* inst, double* out);
SSF_API ssf_status ssf_instance_nonmodular_density(const ssf_instance* inst,
                                                   double* out);

/* ---- multiplicity vectors ---- */

typedef struct ssf_multiplicity ssf_multiplicity;

SSF_API ssf_status ssf_multiplicity_dp(const ssf_instance* inst,
                                       const ssf_caps* caps,
                                       ssf_multiplicity** out);
SSF_API ssf_status ssf_multiplicity_bruteforce(const ssf_instance* inst,
                                               const ssf_caps* caps,
                                               ssf_multiplicity** out);
SSF_API void ssf_multiplicity_free(ssf_multiplicity* mv);

SSF_API uint64_t ssf_multiplicity_modulus(const ssf_multiplicity* mv);
SSF_API uint32_t ssf_multiplicity_s(const ssf_multiplicity* mv);
SSF_API uint64_t ssf_multiplicity_support_size(const ssf_multiplicity* mv);
/* 1 when the smallest nonzero multiplicity is exactly 1. */
SSF_API int ssf_multiplicity_unit_min(const ssf_multiplicity* mv);
/* Exact count of one residue as a decimal string. */
SSF_API ssf_status ssf_multiplicity_count(const ssf_multiplicity* mv,
                                          uint64_t residue, char** out);
SSF_API ssf_status ssf_multiplicity_csv(const ssf_multiplicity* mv, char** out);
SSF_API ssf_status ssf_multiplicity_json(const ssf_multiplicity* mv, char** out);

/* ---- collision classes ---- */

typedef struct ssf_collisions ssf_collisions;

SSF_API ssf_status ssf_collision_classes(const ssf_instance* inst,
                                         uint64_t min_size,
                                         const ssf_caps* caps,
                                         ssf_collisions** out);
SSF_API void ssf_collisions_free(ssf_collisions* cls);
SSF_API size_t ssf_collisions_count(const ssf_collisions* cls);
SSF_API uint64_t ssf_collisions_residue(const ssf_collisions* cls, size_t i);
SSF_API size_t ssf_collisions_size(const ssf_collisions* cls, size_t i);
/* Member j of class i as a 0/1 string of length s. */
SSF_API const char* ssf_collisions_member(const ssf_collisions* cls, size_t i,
                                          size_t j);
SSF_API ssf_status ssf_collisions_csv(const ssf_collisions* cls, char** out);
SSF_API ssf_status ssf_collisions_json(const ssf_collisions* cls, char** out);

/* ---- dimension spectrum ---- */

/* q may be any finite double, +-HUGE_VAL for the limits, or 1 for the
 * entropy limit; the dispatch picks the matching formula. */
SSF_API ssf_status ssf_dimension(const ssf_multiplicity* mv, double q,
                                 double* out);
SSF_API ssf_status ssf_dimension_extremes(const ssf_multiplicity* mv,
                                          double* d_neg_inf, double* d_pos_inf);

typedef struct ssf_spectrum ssf_spectrum;

SSF_API ssf_status ssf_spectrum_eval(const ssf_multiplicity* mv,
                                     const double* qs, size_t count,
                                     ssf_spectrum** out);
SSF_API void ssf_spectrum_free(ssf_spectrum* sp);
SSF_API size_t ssf_spectrum_size(const ssf_spectrum* sp);
/* q of point i; infinite limits come back as +-HUGE_VAL. */
SSF_API ssf_status ssf_spectrum_point(const ssf_spectrum* sp, size_t i,
                                      double* q, double* value);
SSF_API ssf_status ssf_spectrum_csv(const ssf_spectrum* sp, char** out);
SSF_API ssf_status ssf_spectrum_json(const ssf_spectrum* sp, char** out);

typedef struct ssf_singularity ssf_singularity;

SSF_API ssf_status ssf_singularity_eval(const ssf_multiplicity* mv,
                                        ssf_singularity** out);
SSF_API void ssf_singularity_free(ssf_singularity* sg);
SSF_API size_t ssf_singularity_count(const ssf_singularity* sg);
/* Row i: multiplicity value l (decimal string valid until the handle dies),
 * its strength alpha and the residue count N_l. */
SSF_API ssf_status ssf_singularity_row(const ssf_singularity* sg, size_t i,
                                       const char** l, double* alpha,
                                       uint64_t* count);
SSF_API ssf_status ssf_singularity_csv(const ssf_singularity* sg, char** out);
SSF_API ssf_status ssf_singularity_json(const ssf_singularity* sg, char** out);

/* ---- families ---- */

typedef struct ssf_family ssf_family;

SSF_API ssf_status ssf_family_arithmetic(uint64_t a, const uint64_t* sizes,
                                         size_t count, ssf_family** out);
SSF_API ssf_status ssf_family_random_density(double rho, uint64_t seed,
                                             const uint64_t* sizes, size_t count,
                                             const ssf_caps* caps,
                                             ssf_family** out);
SSF_API ssf_status ssf_family_superincreasing(uint64_t seed,
                                              const uint64_t* sizes,
                                              size_t count,
                                              const ssf_caps* caps,
                                              ssf_family** out);
SSF_API ssf_status ssf_family_explicit(const ssf_instance* const* members,
                                       size_t count, ssf_family** out);
SSF_API void ssf_family_free(ssf_family* fam);
SSF_API size_t ssf_family_size(const ssf_family* fam);

typedef struct ssf_family_estimate ssf_family_estimate;

/* method: 0 = last sample, 1 = linear extrapolation in 1/s. */
SSF_API ssf_status ssf_family_dimension(const ssf_family* fam, double q,
                                        int method, const ssf_caps* caps,
                                        ssf_family_estimate** out);
SSF_API void ssf_family_estimate_free(ssf_family_estimate* est);
SSF_API double ssf_family_estimate_value(const ssf_family_estimate* est);
SSF_API size_t ssf_family_estimate_samples(const ssf_family_estimate* est);
SSF_API ssf_status ssf_family_estimate_sample(const ssf_family_estimate* est,
                                              size_t i, uint32_t* s,
                                              double* value);
SSF_API size_t ssf_family_estimate_warnings(const ssf_family_estimate* est);
SSF_API const char* ssf_family_estimate_warning(const ssf_family_estimate* est,
                                                size_t i);
SSF_API ssf_status ssf_family_estimate_csv(const ssf_family_estimate* est,
                                           char** out);
SSF_API ssf_status ssf_family_estimate_json(const ssf_family_estimate* est,
                                            char** out);

/* ---- weak partitions and collisions ---- */

typedef struct ssf_strings ssf_strings;

SSF_API void ssf_strings_free(ssf_strings* list);
SSF_API size_t ssf_strings_count(const ssf_strings* list);
SSF_API const char* ssf_strings_item(const ssf_strings* list, size_t i);

/* Canonical weak partition solutions as signed-digit strings over +, 0, -. */
SSF_API ssf_status ssf_weak_partition(const ssf_instance* inst,
                                      const ssf_caps* caps, ssf_strings** out);
SSF_API ssf_status ssf_weak_partition_json(const ssf_instance* inst,
                                           const ssf_caps* caps, char** out);
/* Exact sum of 2^(zeros of y) over canonical solutions, as a decimal
 * string, computed without enumeration. */
SSF_API ssf_status ssf_weighted_zero_count(const ssf_instance* inst,
                                           const ssf_caps* caps, char** out);
SSF_API ssf_status ssf_has_collision(const ssf_instance* inst,
                                     const ssf_caps* caps, int* out);

typedef struct ssf_lower_bound ssf_lower_bound;

SSF_API ssf_status ssf_lower_bound_eval(const ssf_instance* inst,
                                        const ssf_caps* caps,
                                        ssf_lower_bound** out);
SSF_API void ssf_lower_bound_free(ssf_lower_bound* rep);
SSF_API const char* ssf_lower_bound_total(const ssf_lower_bound* rep);
SSF_API const char* ssf_lower_bound_rhs(const ssf_lower_bound* rep);
SSF_API int ssf_lower_bound_has_d0(const ssf_lower_bound* rep);
SSF_API double ssf_lower_bound_d0(const ssf_lower_bound* rep);
SSF_API int ssf_lower_bound_has_image_size(const ssf_lower_bound* rep);
SSF_API uint64_t ssf_lower_bound_image_size(const ssf_lower_bound* rep);
SSF_API ssf_status ssf_lower_bound_json(const ssf_lower_bound* rep, char** out);

typedef struct ssf_pairs ssf_pairs;

/* All collision pairs induced by one solution (given as its signed-digit
 * string); pair members are 0/1 strings. */
SSF_API ssf_status ssf_expand_collisions(const ssf_instance* inst,
                                         const char* solution,
                                         ssf_pairs** out);
SSF_API void ssf_pairs_free(ssf_pairs* pairs);
SSF_API size_t ssf_pairs_count(const ssf_pairs* pairs);
SSF_API const char* ssf_pairs_x1(const ssf_pairs* pairs, size_t i);
SSF_API const char* ssf_pairs_x2(const ssf_pairs* pairs, size_t i);

/* The canonical solution x1 - x2 of a collision given as 0/1 strings. */
SSF_API ssf_status ssf_collision_to_partition(const ssf_instance* inst,
                                              const char* x1, const char* x2,
                                              char** out);

/* Four distinct vectors in one preimage from a solution and two subsets of
 * its free positions with equal weight sums.  The derived solution comes
 * back as a signed-digit string, the witness as a one-class handle. */
SSF_API ssf_status ssf_four_collision(const ssf_instance* inst,
                                      const char* solution,
                                      const uint64_t* t1, size_t n1,
                                      const uint64_t* t2, size_t n2,
                                      char** derived, ssf_collisions** witness);

/* ---- image sets and the self-similar attractor ---- */

typedef struct ssf_image ssf_image;

/* lenient = 0 requires two consecutive absent residues to anchor; 1 falls
 * back to a single absent residue and raises the boundary warning flag. */
SSF_API ssf_status ssf_image_set(const ssf_instance* inst, int lenient,
                                 const ssf_caps* caps, ssf_image** out);
SSF_API ssf_status ssf_image_set_explicit(const uint64_t* residues,
                                          size_t count, uint64_t modulus,
                                          int lenient, ssf_image** out);
SSF_API void ssf_image_free(ssf_image* img);
SSF_API uint64_t ssf_image_modulus(const ssf_image* img);
SSF_API uint64_t ssf_image_c_min(const ssf_image* img);
SSF_API int ssf_image_boundary_warning(const ssf_image* img);
SSF_API size_t ssf_image_size(const ssf_image* img);
SSF_API uint64_t ssf_image_residue(const ssf_image* img, size_t i);

typedef struct ssf_components ssf_components;

SSF_API ssf_status ssf_image_components(const ssf_image* img,
                                        ssf_components** out);
SSF_API void ssf_components_free(ssf_components* dec);
SSF_API uint64_t ssf_components_n(const ssf_components* dec);
SSF_API uint64_t ssf_components_n_prime(const ssf_components* dec);
SSF_API ssf_status ssf_components_at(const ssf_components* dec, size_t i,
                                     uint64_t* start, uint64_t* size);

typedef struct ssf_dimension_report {
  double t;
  double lower;
  double upper;
  double residual;
  uint32_t iterations;
} ssf_dimension_report;

SSF_API ssf_status ssf_similarity_dimension(const ssf_components* dec,
                                            uint64_t modulus,
                                            ssf_dimension_report* out);
SSF_API ssf_status ssf_hausdorff_json(const ssf_image* img, char** out);
SSF_API ssf_status ssf_attractor_digits(const ssf_image* img, uint32_t depth,
                                        const ssf_caps* caps,
                                        ssf_strings** out);

#ifdef __cplusplus
}
#endif

#endif /* SSFRACTAL_H */
