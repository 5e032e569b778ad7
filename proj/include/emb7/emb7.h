/*
Copyright 2026 The emb7 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#ifndef EMB7_EMB7_H
#define EMB7_EMB7_H

/*
 * C interface to the emb7 library: classification of smooth embeddings of
 * closed orientable 4-manifolds with torsion-free H_1 into S^7 modulo knots,
 * plus numerical linking numbers of the knotted tori tau(l, b).
 *
 * Conventions:
 *  - Every function returning emb7_status writes its result only on EMB7_OK,
 *    except where noted. On failure emb7_last_error() describes the problem.
 *  - Vectors, matrices and classes are passed as JSON text; integers inside
 *    may be decimal strings or JSON integers. Outputs are JSON documents with
 *    integers written as decimal strings, allocated by the library and
 *    released with emb7_string_free().
 *  - Handles are immutable after creation and may be shared between threads.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EMB7_BUILDING_LIBRARY)
#    define EMB7_API __declspec(dllexport)
#  else
#    define EMB7_API __declspec(dllimport)
#  endif
#else
#  define EMB7_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emb7_status {
  EMB7_OK = 0,
  /* Well-formed input failing a mathematical condition (inadmissible u,
     non-symmetric pair, unknown beta, infinite fiber, unconverged integral). */
  EMB7_DOMAIN_ERROR = 1,
  /* Malformed input: bad JSON, wrong dimensions, unknown names or values. */
  EMB7_USAGE_ERROR = 2,
  EMB7_INTERNAL_ERROR = 3,
  /* Returned by emb7_fiber_iter_next when the walk is complete. */
  EMB7_END = 4
} emb7_status;

typedef struct emb7_manifold emb7_manifold;
typedef struct emb7_fiber_iter emb7_fiber_iter;

EMB7_API const char* emb7_version(void);

/* Message for the most recent failure on the calling thread. */
EMB7_API const char* emb7_last_error(void);

EMB7_API void emb7_string_free(char* s);

/* ---- manifold data ---- */

/* name is one of s4, s1xs3, cp2, s2xs2, t2xs2. */
EMB7_API emb7_status emb7_manifold_builtin(const char* name, emb7_manifold** out);

/* Parses manifold JSON without validating it. */
EMB7_API emb7_status emb7_manifold_from_json(const char* json, emb7_manifold** out);

EMB7_API void emb7_manifold_free(emb7_manifold* m);

EMB7_API emb7_status emb7_manifold_to_json(const emb7_manifold* m, char** out);

/* Writes {"valid": bool, "violations": [...]} in every case where the
   handle is usable; returns EMB7_OK when valid, EMB7_DOMAIN_ERROR otherwise. */
EMB7_API emb7_status emb7_manifold_validate(const emb7_manifold* m, char** report);

/* The operations below require manifold data that passes validation. */

/* ---- exact linear algebra ---- */

EMB7_API emb7_status emb7_snf(const char* matrix_json, char** out);

/* Z^ambient_rank modulo the columns of relations_json. */
EMB7_API emb7_status emb7_cokernel(size_t ambient_rank, const char* relations_json, char** out);

/* ---- invariants ---- */

EMB7_API emb7_status emb7_kappa_check(const emb7_manifold* m, const char* u_json, char** out);

/* cap == 0 selects the default cap (10^7 box points). */
EMB7_API emb7_status emb7_kappa_enum(const emb7_manifold* m, long bound, uint64_t cap,
                                     char** out);

EMB7_API emb7_status emb7_sym_check(const emb7_manifold* m, const char* u_json,
                                    const char* l_json, char** out);

EMB7_API emb7_status emb7_base_lambda(const emb7_manifold* m, const char* u_json, char** out);

EMB7_API emb7_status emb7_k_group(const emb7_manifold* m, const char* u_json,
                                  const char* l_json, char** out);

EMB7_API emb7_status emb7_whitney(const emb7_manifold* m, const char* l_json, char** out);

EMB7_API emb7_status emb7_reghom(const char* l0_json, const char* l1_json, char** out);

EMB7_API emb7_status emb7_compress_check(const char* u_json, const char* l_json, char** out);

/* ---- moves ---- */

EMB7_API emb7_status emb7_move_apply(const emb7_manifold* m, const char* class_json,
                                     const char* move_json, char** out);

EMB7_API emb7_status emb7_decompose(const emb7_manifold* m, const char* form_json, char** out);

/* l and b are decimal strings. */
EMB7_API emb7_status emb7_tau_normal_form(const char* l, const char* b, char** out);
EMB7_API emb7_status emb7_tau_equal(const char* l, const char* b, const char* l2,
                                    const char* b2, char** out);
EMB7_API emb7_status emb7_tau_compose(const char* l, const char* b, const char* l2,
                                      const char* b2, char** out);

/* ---- classification ---- */

EMB7_API emb7_status emb7_classify_equal(const emb7_manifold* m, const char* class1_json,
                                         const char* class2_json, char** out);

/* Fiber group and size over (u, L). With enumerate != 0 the representatives
   are listed too; cap < 0 means no cap, which fails for infinite fibers. */
EMB7_API emb7_status emb7_fiber(const emb7_manifold* m, const char* u_json, const char* l_json,
                                int enumerate, long long cap, char** out);

EMB7_API emb7_status emb7_fiber_iter_new(const emb7_manifold* m, const char* u_json,
                                         const char* l_json, emb7_fiber_iter** out);

/* Next representative as a JSON array, or EMB7_END. */
EMB7_API emb7_status emb7_fiber_iter_next(emb7_fiber_iter* it, char** out);

EMB7_API void emb7_fiber_iter_free(emb7_fiber_iter* it);

/* ---- numerical linking ---- */

/* Linking number of the fibers over (1, 0) and (-1, 0) of tau(l, b). On
   EMB7_DOMAIN_ERROR from an unconverged integral nothing is written. */
EMB7_API emb7_status emb7_link_tau(long l, long b, int resolution, char** out);

#ifdef __cplusplus
}
#endif

#endif
