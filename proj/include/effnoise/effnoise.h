/*
 * Copyright 2026 The effnoise Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the effnoise library.
 *
 * Every fallible call returns an effnoise_status. On failure the message of
 * the most recent error on the calling thread is available from
 * effnoise_last_error() until the next failing call on that thread. Objects
 * are opaque handles released with the matching *_free function; freeing
 * NULL is a no-op. Pauli channels travel as double[4] in the order
 * (I, X, Y, Z). Handles are immutable after creation and may be shared
 * between threads.
 */

#ifndef EFFNOISE_EFFNOISE_H
#define EFFNOISE_EFFNOISE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) && defined(EFFNOISE_BUILDING)
#define EFFNOISE_API __declspec(dllexport)
#elif defined(_WIN32)
#define EFFNOISE_API __declspec(dllimport)
#else
#define EFFNOISE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum effnoise_status {
    EFFNOISE_OK = 0,
    EFFNOISE_INVALID_ARGUMENT = 1,
    EFFNOISE_UNSUPPORTED_PARAMETER = 2,
    EFFNOISE_RESOURCE_LIMIT = 3,
    EFFNOISE_CONSTRUCTION_FAILURE = 4,
    EFFNOISE_PARSE_ERROR = 5,
    EFFNOISE_INTERNAL_ERROR = 6
} effnoise_status;

typedef enum effnoise_noise {
    EFFNOISE_NOISE_WHITE = 0,
    EFFNOISE_NOISE_PHASE = 1
} effnoise_noise;

typedef enum effnoise_mode {
    EFFNOISE_MODE_MEAN = 0,
    EFFNOISE_MODE_PROJECTED_0 = 1
} effnoise_mode;

typedef enum effnoise_lifetime_status {
    EFFNOISE_LIFETIME_CROSSING = 0,
    EFFNOISE_LIFETIME_ENTANGLED_EVERYWHERE = 1,
    EFFNOISE_LIFETIME_NEVER_ENTANGLED = 2
} effnoise_lifetime_status;

typedef struct effnoise_code effnoise_code;
typedef struct effnoise_effective effnoise_effective;
typedef struct effnoise_report effnoise_report;

typedef struct effnoise_lifetime_result {
    double p_crit;
    double residual;
    int iterations;
    effnoise_lifetime_status status;
    /* 0 when the coarse pre-scan saw more than one sign change. */
    int monotone;
} effnoise_lifetime_result;

typedef struct effnoise_critical_rate_result {
    int has_p_c;
    double p_c;
    int grid_checked;
    int iterations;
    size_t num_brackets;
} effnoise_critical_rate_result;

EFFNOISE_API const char *effnoise_version(void);
EFFNOISE_API const char *effnoise_last_error(void);
EFFNOISE_API const char *effnoise_status_name(effnoise_status status);

/* Channels. */
EFFNOISE_API effnoise_status effnoise_white_noise(double p, double out[4]);
EFFNOISE_API effnoise_status effnoise_phase_noise(double p, double out[4]);
EFFNOISE_API effnoise_status effnoise_noise_channel(effnoise_noise noise, double p, double out[4]);
EFFNOISE_API effnoise_status effnoise_check_channel(const double lambda[4]);
EFFNOISE_API effnoise_status effnoise_p_eff_estimate(double p, double *out);
EFFNOISE_API effnoise_status effnoise_cluster_ring_p0(double p, double *out);

/* Codes. `family` is one of "trivial", "repetition", "ghz", "cluster_ring";
 * m = 1 gives the trivial (unencoded) code for every family. */
EFFNOISE_API effnoise_status effnoise_code_builtin(const char *family, size_t m, effnoise_code **out);
/* Parses a JSON code definition; parse errors carry the line number. */
EFFNOISE_API effnoise_status effnoise_code_from_json(const char *text, effnoise_code **out);
EFFNOISE_API void effnoise_code_free(effnoise_code *code);
/* The returned string lives as long as the handle. */
EFFNOISE_API const char *effnoise_code_label(const effnoise_code *code);
EFFNOISE_API size_t effnoise_code_size(const effnoise_code *code);
EFFNOISE_API size_t effnoise_code_num_syndromes(const effnoise_code *code);
/* Syndrome and residual logical Pauli ('I', 'X', 'Y' or 'Z') of an error in
 * letter notation. */
EFFNOISE_API effnoise_status effnoise_code_classify(const effnoise_code *code, const char *error, uint64_t *syndrome,
                                                    char *logical);
/* Recovery operator for a syndrome, written into buf (letter notation). */
EFFNOISE_API effnoise_status effnoise_code_recovery(const effnoise_code *code, uint64_t syndrome, char *buf,
                                                    size_t buf_size);

/* Validation reports. */
EFFNOISE_API effnoise_status effnoise_code_validate(const effnoise_code *code, effnoise_report **out);
EFFNOISE_API void effnoise_report_free(effnoise_report *report);
EFFNOISE_API size_t effnoise_report_size(const effnoise_report *report);
EFFNOISE_API int effnoise_report_all_passed(const effnoise_report *report);
/* Strings stay valid for the lifetime of the report. */
EFFNOISE_API effnoise_status effnoise_report_check(const effnoise_report *report, size_t index, const char **name,
                                                   int *passed, const char **detail);

/* Effective channels. max_qubits = 0 selects the default enumeration cap;
 * jobs = 0 uses every hardware thread. Results do not depend on jobs. */
EFFNOISE_API effnoise_status effnoise_derive(const effnoise_code *code, const double lambda[4], size_t max_qubits,
                                             unsigned jobs, effnoise_effective **out);
/* Two-level code: ghz(m1) inside repetition(m2), size 1 meaning no encoding. */
EFFNOISE_API effnoise_status effnoise_concat_shor(size_t m1, size_t m2, effnoise_mode mode, const double lambda[4],
                                                  size_t max_qubits, unsigned jobs, effnoise_effective **out);
EFFNOISE_API void effnoise_effective_free(effnoise_effective *eff);
EFFNOISE_API size_t effnoise_effective_num_syndromes(const effnoise_effective *eff);
EFFNOISE_API effnoise_status effnoise_effective_syndrome(const effnoise_effective *eff, uint64_t syndrome,
                                                         double *probability, double lambda[4], int *reachable);
EFFNOISE_API effnoise_status effnoise_effective_mean(const effnoise_effective *eff, double out[4]);

/* Negativity of the 1 : N-1 split of GHZ(n) with `lambda` on every qubit. */
EFFNOISE_API effnoise_status effnoise_ghz_negativity(size_t n, const double lambda[4], double *out);

/* Lifetime of GHZ(n) whose members are encoded in `code` (NULL: unencoded)
 * under physical noise of the given kind, using the projected channel. */
EFFNOISE_API effnoise_status effnoise_lifetime(const effnoise_code *code, effnoise_noise noise, size_t n, double tol,
                                               effnoise_lifetime_result *out);
EFFNOISE_API effnoise_status effnoise_lifetime_concat_compare(size_t n, size_t m1, size_t m2, double tol,
                                                              effnoise_lifetime_result *one_level,
                                                              effnoise_lifetime_result *two_level);

/* Critical rate of the (m1, m2) code. Up to bracket_capacity sign-change
 * brackets are written to brackets as (lo, hi) pairs; num_brackets reports
 * how many exist. */
EFFNOISE_API effnoise_status effnoise_critical_rate(size_t m1, size_t m2, double tol, size_t max_qubits, unsigned jobs,
                                                    effnoise_critical_rate_result *out, double *brackets,
                                                    size_t bracket_capacity);

#ifdef __cplusplus
}
#endif

#endif
