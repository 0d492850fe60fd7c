#ifndef YANGIAN_H
#define YANGIAN_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum YangianStatus {
  YANGIAN_STATUS_OK = 0,
  YANGIAN_STATUS_NULL_POINTER = 1,
  YANGIAN_STATUS_INVALID_ARGUMENT = 2,
  YANGIAN_STATUS_PARSE = 3,
  YANGIAN_STATUS_PRECONDITION = 4,
  YANGIAN_STATUS_SIZE_LIMIT = 5,
  YANGIAN_STATUS_NOT_STABILIZED = 6,
  YANGIAN_STATUS_FAILED = 7,
  YANGIAN_STATUS_PANIC = 8,
} YangianStatus;

/*
 `U(gl(N, Ω))` for a fixed algebra and `N`.
 */
typedef struct YangianAlgebra YangianAlgebra;

/*
 An element of some `U(gl(N, Ω))`.
 */
typedef struct YangianElement YangianElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the most recent failure on this thread, or null. The pointer
 stays valid until the next call into this library on the same thread.
 */
const char *yangian_last_error(void);

/*
 Releases a string returned by this library.

 # Safety
 `s` must be null or a string obtained from this library, not yet freed.
 */
void yangian_string_free(char *s);

/*
 Builds `U(gl(n, Ω))`. `omega` is a builtin name such as `"C"` or
 `"matrix(2)"`, or the path of a JSON specification.

 # Safety
 `omega` must be a nul-terminated string; `out` must be writable.
 */
enum YangianStatus yangian_algebra_new(const char *omega, uintptr_t n, struct YangianAlgebra **out);

/*
 # Safety
 `alg` must be null or a handle from [`yangian_algebra_new`], not yet freed.
 */
void yangian_algebra_free(struct YangianAlgebra *alg);

/*
 `N` of the algebra, or 0 for a null handle.

 # Safety
 `alg` must be null or a live handle.
 */
uintptr_t yangian_algebra_rank(const struct YangianAlgebra *alg);

/*
 The element `t_ij(w; N; s)` with `s = s_num / s_den`. Indices `i, j` are
 1-based; the letters of `w` are 0-based basis positions of `Ω`.

 # Safety
 `alg` must be live; `letters` must point to `len` values; `out` writable.
 */
enum YangianStatus yangian_t_elem(const struct YangianAlgebra *alg,
                                  uintptr_t i,
                                  uintptr_t j,
                                  const uintptr_t *letters,
                                  uintptr_t len,
                                  int64_t s_num,
                                  int64_t s_den,
                                  struct YangianElement **out);

/*
 Projects `elem`, an element of `from`, into `to`, which must have rank one
 less over the same algebra.

 # Safety
 All handles must be live; `out` writable.
 */
enum YangianStatus yangian_project_down(const struct YangianAlgebra *from,
                                        const struct YangianElement *elem,
                                        const struct YangianAlgebra *to,
                                        struct YangianElement **out);

/*
 Whether two elements are equal. Writes 1 or 0 to `out`.

 # Safety
 Handles must be live; `out` writable.
 */
enum YangianStatus yangian_element_equal(const struct YangianElement *a,
                                         const struct YangianElement *b,
                                         int32_t *out);

/*
 Text form of `elem` using the basis labels of `alg`.

 # Safety
 Handles must be live; `out` writable. Free the result with
 [`yangian_string_free`].
 */
enum YangianStatus yangian_element_text(const struct YangianAlgebra *alg,
                                        const struct YangianElement *elem,
                                        char **out);

/*
 # Safety
 `elem` must be null or a live element handle.
 */
void yangian_element_free(struct YangianElement *elem);

/*
 Dimension `d²·L^(n+1)` of grade `n` of `gl_d` over the current algebra of
 an `L`-dimensional `Ω`. Fails with `INVALID_ARGUMENT` on overflow.

 # Safety
 `out` must be writable.
 */
enum YangianStatus yangian_graded_dim(uintptr_t dim, uintptr_t d, uintptr_t n, uint64_t *out);

/*
 Runs a named suite with default bounds and writes the JSON report to
 `out`. `omega` may be null to use each suite's default algebras. The
 status is `OK` when the suite ran, even if checks failed; `passed`
 receives 1 when no check failed.

 # Safety
 `suite` must be a nul-terminated string, `omega` null or one; `out` and
 `passed` writable.
 */
enum YangianStatus yangian_run_suite(const char *suite,
                                     const char *omega,
                                     char **out,
                                     int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YANGIAN_H */
