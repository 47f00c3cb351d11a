/* rissec - secrecy-outage analysis of RIS-aided links under co-channel
 * interference. C façade over the C++ core: opaque handles, status codes.
 */
#ifndef RISSEC_RISSEC_H
#define RISSEC_RISSEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RISSEC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RISSEC_API __attribute__((visibility("default")))
#else
#define RISSEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rissec_status {
    RISSEC_OK = 0,
    RISSEC_ERR_INVALID_ARGUMENT = 1,  /* bad key, value out of domain, null handle */
    RISSEC_ERR_MODE = 2,              /* closed form unavailable for these parameters */
    RISSEC_ERR_CONVERGENCE = 3,       /* numerical evaluation failed */
    RISSEC_ERR_CAPACITY = 4,          /* combinatorial expansion too large */
    RISSEC_ERR_PARSE = 5,             /* malformed JSON configuration */
    RISSEC_ERR_INTERNAL = 6
} rissec_status;

typedef enum rissec_method {
    RISSEC_METHOD_MONTE_CARLO = 0,
    RISSEC_METHOD_QUADRATURE = 1,
    RISSEC_METHOD_CLOSED_FORM = 2,
    RISSEC_METHOD_ASYMPTOTIC = 3
} rissec_method;

typedef struct rissec_config rissec_config;   /* opaque */

typedef struct rissec_sop_estimate {
    double value;
    double uncertainty;     /* MC Wilson half-width / quadrature or contour bound */
    rissec_method method;
    rissec_status status;   /* per-point status when evaluated in a batch */
    char diagnostics[160];
} rissec_sop_estimate;

RISSEC_API const char* rissec_version(void);
RISSEC_API const char* rissec_status_str(rissec_status s);

/* Configuration: created with the default parameter set (2x2 RIS, two
 * colluding direct eavesdroppers, two interferers at 100 dB, tau0 = 0.1). */
RISSEC_API rissec_config* rissec_config_create(void);
RISSEC_API rissec_config* rissec_config_clone(const rissec_config* cfg);
RISSEC_API void rissec_config_destroy(rissec_config* cfg);

/* Merge a JSON document into the configuration. Unknown keys are an error;
 * on failure the config is unchanged and `err` (if non-NULL) receives a
 * message. SNR keys carry a _db suffix and are converted once, here. */
RISSEC_API rissec_status rissec_config_from_json(rissec_config* cfg, const char* json_text,
                                                 char* err, size_t err_len);

/* Scalar fields by key. Numeric keys: n_d, n_e, l_eves, m_interferers,
 * avg_snr_d_db, avg_snr_i_db, avg_snr_e_db, avg_snr_e_ris_db, beta_d, beta_e,
 * tau0, trials, seed, hop_sr.alpha, hop_sr.mu, hop_sr.omega, hop_rd.*,
 * eve_hop_si.*, eve_hop_ie.*, interferer.alpha, interferer.mu,
 * eve_direct.alpha, eve_direct.mu.
 * String keys: scenario = direct|own_ris|shared_ris,
 * eve_case = colluding|non_colluding, mc_channel = model|exact. */
RISSEC_API rissec_status rissec_config_set(rissec_config* cfg, const char* key, double value);
RISSEC_API rissec_status rissec_config_get(const rissec_config* cfg, const char* key,
                                           double* out);
RISSEC_API rissec_status rissec_config_set_string(rissec_config* cfg, const char* key,
                                                  const char* value);
RISSEC_API rissec_status rissec_config_get_string(const rissec_config* cfg, const char* key,
                                                  char* out, size_t out_len);

/* Secrecy outage probability (lower bound) by the chosen method. */
RISSEC_API rissec_status rissec_sop_eval(const rissec_config* cfg, rissec_method method,
                                         rissec_sop_estimate* out);

/* Sweep one numeric key over `n` values; points are evaluated in parallel and
 * written in order. Per-point failures are reported in out[i].status; returns
 * RISSEC_OK if at least one point succeeded. */
RISSEC_API rissec_status rissec_sop_eval_many(const rissec_config* cfg, rissec_method method,
                                              const char* axis_key, const double* values,
                                              size_t n, rissec_sop_estimate* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RISSEC_RISSEC_H */
