/*
 * Copyright 2026 The latkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to latkit. Every function returns a latkit_status; on
 * failure the message is available from latkit_last_error() on the same
 * thread until the next call. Strings handed out by the library are owned
 * by the caller and released with latkit_string_free(). */

#ifndef LATKIT_LATKIT_H_
#define LATKIT_LATKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LATKIT_API __declspec(dllexport)
#else
#define LATKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latkit_status {
  LATKIT_OK = 0,
  LATKIT_ERR_NOT_A_PARTIAL_ORDER = 1,
  LATKIT_ERR_NOT_A_LATTICE = 2,
  LATKIT_ERR_INVALID_PARAMETER = 3,
  LATKIT_ERR_SIZE_LIMIT = 4,
  LATKIT_ERR_GROUND_MISMATCH = 5,
  LATKIT_ERR_EMPTY_SUBSET = 6,
  LATKIT_ERR_SUBSET_TOO_SMALL = 7,
  LATKIT_ERR_PARSE = 8,
  LATKIT_ERR_NULL_ARGUMENT = 20,
  LATKIT_ERR_INTERNAL = 21
} latkit_status;

typedef struct latkit_budgets {
  size_t lattice_elements;
  size_t search_target;
  size_t rank_elements;
  size_t birkhoff_irreducibles;
  size_t cpp_ground;
  size_t iso_ground;
  size_t power_ground;
  size_t carrier;
  size_t reasonable_elements;
  size_t partitions;
  size_t search_tables;
} latkit_budgets;

typedef struct latkit_lattice latkit_lattice;
typedef struct latkit_rep latkit_rep;
typedef struct latkit_algebra latkit_algebra;
typedef struct latkit_elattice latkit_elattice;

LATKIT_API const char* latkit_version(void);
LATKIT_API const char* latkit_last_error(void);
LATKIT_API const char* latkit_status_name(latkit_status status);
LATKIT_API void latkit_string_free(char* s);
LATKIT_API void latkit_budgets_default(latkit_budgets* out);

/* Lattices. A NULL budgets pointer means the defaults. */
LATKIT_API latkit_status latkit_lattice_from_json(const char* json,
                                                  latkit_lattice** out);
LATKIT_API latkit_status latkit_lattice_standard(const char* name,
                                                 latkit_lattice** out);
LATKIT_API latkit_status latkit_lattice_to_json(const latkit_lattice* l,
                                                char** out);
LATKIT_API latkit_status latkit_lattice_size(const latkit_lattice* l,
                                             size_t* out);
LATKIT_API latkit_status latkit_lattice_meet(const latkit_lattice* l, uint32_t x,
                                             uint32_t y, uint32_t* out);
LATKIT_API latkit_status latkit_lattice_join(const latkit_lattice* l, uint32_t x,
                                             uint32_t y, uint32_t* out);
LATKIT_API latkit_status latkit_lattice_is_distributive(
    const latkit_lattice* l, const latkit_budgets* budgets, int* out);
LATKIT_API latkit_status latkit_lattice_dot(const latkit_lattice* l,
                                            char** out);
LATKIT_API void latkit_lattice_free(latkit_lattice* l);

/* Representations. */
LATKIT_API latkit_status latkit_rep_from_json(const char* json, latkit_rep** out);
LATKIT_API latkit_status latkit_rep_to_json(const latkit_rep* rep, char** out);
LATKIT_API latkit_status latkit_rep_is_ncpp(const latkit_rep* rep, size_t depth,
                                            const latkit_budgets* budgets,
                                            int* out);
LATKIT_API void latkit_rep_free(latkit_rep* rep);

/* Finite algebras. */
LATKIT_API latkit_status latkit_algebra_from_json(const char* json,
                                                  latkit_algebra** out);
LATKIT_API latkit_status latkit_algebra_to_json(const latkit_algebra* a,
                                                char** out);
LATKIT_API latkit_status latkit_algebra_congruence_lattice(
    const latkit_algebra* a, const latkit_budgets* budgets,
    latkit_lattice** out);
LATKIT_API void latkit_algebra_free(latkit_algebra* a);

/* Equivalenced lattices. */
LATKIT_API latkit_status latkit_elattice_from_json(const char* json,
                                                   latkit_elattice** out);
LATKIT_API latkit_status latkit_elattice_is_reasonable(
    const latkit_elattice* el, const latkit_budgets* budgets, int* out);
LATKIT_API void latkit_elattice_free(latkit_elattice* el);

/* Runs one analysis described by a JSON request and returns its JSON
 * report. `artifact` (may be NULL) receives CSV or DOT output when the
 * command produces one, otherwise NULL. `verdict` receives 1 or 0, or -1
 * for commands without a verdict. On failure `report` receives an error
 * report when possible. */
LATKIT_API latkit_status latkit_run(const char* request_json, char** report,
                                    char** artifact, int* verdict);

#ifdef __cplusplus
}
#endif

#endif /* LATKIT_LATKIT_H_ */
