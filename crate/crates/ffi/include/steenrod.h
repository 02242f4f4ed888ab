#ifndef STEENROD_H
#define STEENROD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SteenrodStatus {
  STEENROD_STATUS_OK = 0,
  STEENROD_STATUS_NULL_POINTER = 1,
  STEENROD_STATUS_INVALID_UTF8 = 2,
  STEENROD_STATUS_PARSE = 3,
  STEENROD_STATUS_BUDGET_EXCEEDED = 4,
  STEENROD_STATUS_INHOMOGENEOUS = 5,
  STEENROD_STATUS_INVALID_MODULE = 6,
  STEENROD_STATUS_PANIC = 7,
} SteenrodStatus;

/**
 * An element of the mod-2 Steenrod algebra.
 */
typedef struct SteenrodElement SteenrodElement;

/**
 * A finite graded module.
 */
typedef struct SteenrodModule SteenrodModule;

/**
 * A polynomial in F2[t1, t2, ...].
 */
typedef struct SteenrodPoly SteenrodPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *steenrod_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void steenrod_string_free(char *s);

/**
 * Parses `Sq3 Sq1 + Sq4` style text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SteenrodStatus steenrod_element_parse(const char *text, struct SteenrodElement **out);

/**
 * # Safety
 * `e` must be NULL or a handle from this library, not yet freed.
 */
void steenrod_element_free(struct SteenrodElement *e);

/**
 * Admissible form of `e`; `budget` of 0 selects the default.
 *
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SteenrodStatus steenrod_element_normalize(const struct SteenrodElement *e,
                                               uint64_t budget,
                                               struct SteenrodElement **out);

/**
 * Normalized composite `lhs ∘ rhs`.
 *
 * # Safety
 * `lhs`, `rhs` must be live handles; `out` must be writable.
 */
enum SteenrodStatus steenrod_element_product(const struct SteenrodElement *lhs,
                                             const struct SteenrodElement *rhs,
                                             struct SteenrodElement **out);

/**
 * # Safety
 * `e` must be a live handle; `out` must be writable.
 */
enum SteenrodStatus steenrod_element_to_string(const struct SteenrodElement *e, char **out);

/**
 * Parses `t1^3*t2 + t2^4` style text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SteenrodStatus steenrod_poly_parse(const char *text, struct SteenrodPoly **out);

/**
 * # Safety
 * `p` must be NULL or a handle from this library, not yet freed.
 */
void steenrod_poly_free(struct SteenrodPoly *p);

/**
 * # Safety
 * `e`, `p` must be live handles; `out` must be writable.
 */
enum SteenrodStatus steenrod_poly_act(const struct SteenrodElement *e,
                                      const struct SteenrodPoly *p,
                                      struct SteenrodPoly **out);

/**
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SteenrodStatus steenrod_poly_to_string(const struct SteenrodPoly *p, char **out);

/**
 * Builds `s<n>`, `rp<n>`, `cp<n>`, `wedge(a,b)`, `susp(a)` or `pt`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum SteenrodStatus steenrod_module_builtin(const char *name, struct SteenrodModule **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SteenrodStatus steenrod_module_from_json(const char *json, struct SteenrodModule **out);

/**
 * # Safety
 * `m` must be NULL or a handle from this library, not yet freed.
 */
void steenrod_module_free(struct SteenrodModule *m);

/**
 * Runs the axiom checks through `max_degree`; `*passed` receives the verdict
 * and `*failures` (if not NULL) the number of failed instances.
 *
 * # Safety
 * `m` must be a live handle; `passed` must be writable; `failures` may be NULL.
 */
enum SteenrodStatus steenrod_module_verify(const struct SteenrodModule *m,
                                           uint32_t max_degree,
                                           bool *passed,
                                           size_t *failures);

/**
 * Rank of `Sq^i` from degree `d` to `d + i`.
 *
 * # Safety
 * `m` must be a live handle; `rank` must be writable.
 */
enum SteenrodStatus steenrod_module_sq_rank(const struct SteenrodModule *m,
                                            uint32_t i,
                                            uint32_t d,
                                            size_t *rank);

/**
 * Number of admissible monomials of degree `d`.
 */
size_t steenrod_basis_size(uint32_t d);

/**
 * Rank of the action of the degree-`d` admissible basis on `t1 ... td`.
 */
size_t steenrod_faithful_rank(uint32_t d);

/**
 * JSON report separating ΣCP² from S⁵ ∨ S³.
 *
 * # Safety
 * `out` must be writable.
 */
enum SteenrodStatus steenrod_distinguish_pi4_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STEENROD_H */
