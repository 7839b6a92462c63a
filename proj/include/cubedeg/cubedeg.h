/*
 * Copyright 2026 The cubedeg Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/*
 * C interface of the cubedeg shared library: topological degree of an
 * interval-computable f: R^n -> R^n on a box.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a cubedeg_status;
 * the detail message of the last failure on the calling thread is available
 * through cubedeg_last_error().
 */

#ifndef CUBEDEG_CUBEDEG_H
#define CUBEDEG_CUBEDEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef CUBEDEG_BUILDING_LIBRARY
#    define CUBEDEG_API __declspec(dllexport)
#  else
#    define CUBEDEG_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && __GNUC__ >= 4
#  define CUBEDEG_API __attribute__((visibility("default")))
#else
#  define CUBEDEG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cubedeg_problem cubedeg_problem;
typedef struct cubedeg_result cubedeg_result;

typedef enum cubedeg_status {
    CUBEDEG_OK = 0,
    CUBEDEG_ERR_INVALID_ARGUMENT = 1, /* malformed box/point/pivot, null handle, bad dimension */
    CUBEDEG_ERR_SYNTAX = 2,           /* expression text does not parse */
    CUBEDEG_ERR_DOMAIN = 3,           /* evaluation left the domain of ln/sqrt */
    CUBEDEG_ERR_UNDECIDABLE = 4,      /* no sufficient sign covering within the limits */
    CUBEDEG_ERR_ORACLE = 5,           /* reference oracle could not resolve the degree */
    CUBEDEG_ERR_BUFFER_TOO_SMALL = 6,
    CUBEDEG_ERR_INTERNAL = 99
} cubedeg_status;

typedef enum cubedeg_family {
    CUBEDEG_FAMILY_IDENTITY = 0,
    CUBEDEG_FAMILY_SADDLE = 1,   /* x1^2 - x2^2 - ... - xn^2, 2 x1 xi */
    CUBEDEG_FAMILY_CUBE_ROOT = 2 /* componentwise cbrt of the saddle family */
} cubedeg_family;

/* Statistics of one recursion level of the degree reduction. */
typedef struct cubedeg_level {
    size_t dim;
    size_t entries;
    size_t selected;
    size_t nonselected;
    size_t faces;
    size_t pivot_position;    /* 1-based; 0 when no pivot was taken */
    int pivot_sign;           /* +1 or -1; 0 when no pivot was taken */
    size_t dropped_component; /* 1-based original component; 0 when none */
} cubedeg_level;

CUBEDEG_API const char* cubedeg_version(void);
CUBEDEG_API const char* cubedeg_status_name(cubedeg_status status);
/* Message of the last failing call on this thread; "" if none. */
CUBEDEG_API const char* cubedeg_last_error(void);

/*
 * functions: n expressions over x1..xn separated by ';'.
 * box:       "[a,b]x[c,d]x..." (a factor may be written "[a,b]^k").
 * dim:       0 to infer from the box.
 */
CUBEDEG_API cubedeg_status cubedeg_problem_create(const char* functions, const char* box, size_t dim,
                                                  cubedeg_problem** out);
CUBEDEG_API void cubedeg_problem_destroy(cubedeg_problem* problem);
CUBEDEG_API size_t cubedeg_problem_dim(const cubedeg_problem* problem);

/* Target point "a,b,..."; NULL or "" resets to the origin. */
CUBEDEG_API cubedeg_status cubedeg_problem_set_point(cubedeg_problem* problem, const char* point);
CUBEDEG_API cubedeg_status cubedeg_problem_set_limits(cubedeg_problem* problem, unsigned max_depth,
                                                      size_t max_boxes);
CUBEDEG_API cubedeg_status cubedeg_problem_set_workers(cubedeg_problem* problem, unsigned workers);
/* Forces the first-level pivot; position 0 restores the automatic choice. */
CUBEDEG_API cubedeg_status cubedeg_problem_set_pivot(cubedeg_problem* problem, size_t position, int sign);

/*
 * Runs the computation. *out receives a result handle whenever the problem
 * handle is valid, including for Undecidable and input errors, so that the
 * machine-readable document can always be produced. The return value is the
 * status of the computation.
 */
CUBEDEG_API cubedeg_status cubedeg_compute(const cubedeg_problem* problem, cubedeg_result** out);
CUBEDEG_API void cubedeg_result_destroy(cubedeg_result* result);

CUBEDEG_API cubedeg_status cubedeg_result_status(const cubedeg_result* result);
CUBEDEG_API const char* cubedeg_result_message(const cubedeg_result* result);
CUBEDEG_API cubedeg_status cubedeg_result_degree(const cubedeg_result* result, int64_t* degree);
CUBEDEG_API size_t cubedeg_result_level_count(const cubedeg_result* result);
CUBEDEG_API cubedeg_status cubedeg_result_level(const cubedeg_result* result, size_t index, cubedeg_level* out);
CUBEDEG_API cubedeg_status cubedeg_result_refinement(const cubedeg_result* result, size_t* boundary_entries,
                                                     size_t* boxes_created, unsigned* max_depth_used);
CUBEDEG_API cubedeg_status cubedeg_result_timings(const cubedeg_result* result, double* refine_ms,
                                                  double* deg_ms);

/*
 * JSON document of the run. Writes at most `capacity` bytes including the
 * terminating NUL; *required (if not NULL) receives the needed capacity.
 * Returns CUBEDEG_ERR_BUFFER_TOO_SMALL when the buffer is too short.
 */
CUBEDEG_API cubedeg_status cubedeg_result_json(const cubedeg_result* result, int include_timings, char* buffer,
                                               size_t capacity, size_t* required);

/* Reference degree by point sampling; dimension 1 or 2 only. */
CUBEDEG_API cubedeg_status cubedeg_oracle_degree(const cubedeg_problem* problem, int64_t* degree);

/* Expression text of a built-in family in dimension n; buffer rules as above. */
CUBEDEG_API cubedeg_status cubedeg_family_expression(cubedeg_family family, size_t n, char* buffer,
                                                     size_t capacity, size_t* required);

#ifdef __cplusplus
}
#endif

#endif
