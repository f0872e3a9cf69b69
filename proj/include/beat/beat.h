/* C interface to the BEAT forecasting library.
 *
 * Handles are opaque. Every call returns a beat_status; on failure the
 * message is available from beat_last_error() on the same thread until the
 * next call. Text outputs are written into caller buffers: `needed` receives
 * the size including the terminating NUL, and BEAT_ERR_BUFFER_TOO_SMALL is
 * returned when `capacity` is short (nothing is written then).
 */
#ifndef BEAT_BEAT_H
#define BEAT_BEAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BEAT_API __declspec(dllexport)
#else
#define BEAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum beat_status {
  BEAT_OK = 0,
  BEAT_ERR_INVALID_ARGUMENT = 1,
  BEAT_ERR_CONFIG = 2,
  BEAT_ERR_DATA = 3,
  BEAT_ERR_NUMERIC = 4,
  BEAT_ERR_SHAPE = 5,
  BEAT_ERR_IO = 6,
  BEAT_ERR_BUFFER_TOO_SMALL = 7,
  BEAT_ERR_INTERNAL = 8
} beat_status;

typedef enum beat_log_level {
  BEAT_LOG_DEBUG = 0,
  BEAT_LOG_INFO = 1,
  BEAT_LOG_WARN = 2,
  BEAT_LOG_ERROR = 3
} beat_log_level;

typedef struct beat_config beat_config;
typedef struct beat_model beat_model;

BEAT_API const char* beat_version(void);
BEAT_API const char* beat_status_name(beat_status status);
/* Message of the last failure on this thread ("" if none). */
BEAT_API const char* beat_last_error(void);

/* Log messages go to stderr unless a callback is installed; NULL restores it. */
typedef void (*beat_log_fn)(beat_log_level level, const char* message, void* user);
BEAT_API void beat_set_log_callback(beat_log_fn fn, void* user);
BEAT_API void beat_set_log_level(beat_log_level level);

/* ---- configuration ---- */
BEAT_API beat_status beat_config_create(beat_config** out);
BEAT_API beat_status beat_config_load(const char* path, beat_config** out);
BEAT_API beat_status beat_config_parse(const char* text, beat_config** out);
BEAT_API void beat_config_destroy(beat_config* config);
/* Keys may be given by a unique suffix ("horizon" for "task.horizon"). */
BEAT_API beat_status beat_config_set(beat_config* config, const char* key, const char* value);
BEAT_API beat_status beat_config_get(const beat_config* config, const char* key, char* buffer, size_t capacity,
                                     size_t* needed);
/* Resolved "key = value" lines, the same text the run snapshot holds. */
BEAT_API beat_status beat_config_text(const beat_config* config, char* buffer, size_t capacity, size_t* needed);
BEAT_API beat_status beat_config_hash(const beat_config* config, char* buffer, size_t capacity, size_t* needed);
/* Directory beat_train will write for this configuration. */
BEAT_API beat_status beat_config_run_dir(const beat_config* config, char* buffer, size_t capacity, size_t* needed);
/* Documented keys: index 0.. until BEAT_ERR_INVALID_ARGUMENT. Pointers stay valid. */
BEAT_API beat_status beat_config_key_info(size_t index, const char** key, const char** default_value,
                                          const char** doc);

/* ---- runs ---- */
typedef struct beat_train_summary {
  double test_mse;
  double test_mae;
  double best_val_mse;
  size_t epochs;
  size_t best_epoch;
  size_t steps;
  int stopped_early;
  double predict_windows_per_second;
  double seconds;
} beat_train_summary;

typedef struct beat_metrics {
  size_t horizon;
  double mse;
  double mae;
  size_t windows;
  uint64_t seed;
} beat_metrics;

BEAT_API beat_status beat_train(const beat_config* config, beat_train_summary* summary);

/* `run` is a run directory or checkpoint file. `dataset` may be NULL; when
 * given it must name the data the checkpoint was trained on. */
BEAT_API beat_status beat_evaluate(const char* run, const char* dataset, const char* const* overrides,
                                   size_t override_count, beat_metrics* out);

/* Four-horizon table with an Avg row; as_json selects the records form. */
BEAT_API beat_status beat_report_table(const char* const* runs, size_t run_count, int as_json, char* buffer,
                                       size_t capacity, size_t* needed);

BEAT_API beat_status beat_decompose_csv(const char* csv_path, const char* wavelet, int level, const char* out_dir,
                                        double* max_error, size_t* bands);

typedef struct beat_balance_summary {
  size_t batches;
  int level;
  size_t degenerate;
  double max_detail_mean_error;
} beat_balance_summary;

/* export_csv may be NULL. The human summary goes to buffer (may be NULL with
 * capacity 0 when only the struct is wanted). */
BEAT_API beat_status beat_inspect_balance(const char* run_dir, const char* export_csv, beat_balance_summary* out,
                                          char* buffer, size_t capacity, size_t* needed);

/* ---- trained models ---- */
BEAT_API beat_status beat_model_load(const char* run, beat_model** out);
BEAT_API void beat_model_destroy(beat_model* model);
BEAT_API beat_status beat_model_shape(const beat_model* model, size_t* variates, size_t* lookback, size_t* horizon);
/* x: batch*variates*lookback values, [batch][variate][time] row-major.
 * y: batch*variates*horizon values in the same layout. */
BEAT_API beat_status beat_model_predict(beat_model* model, const double* x, size_t batch, double* y);

/* ---- wavelet helpers (periodized, single series) ---- */
/* Coefficients are written D1..Df then A. */
BEAT_API beat_status beat_dwt(const double* signal, size_t length, const char* wavelet, int level, double* coeffs,
                              size_t capacity, size_t* needed);
BEAT_API beat_status beat_idwt(const double* coeffs, size_t coeff_count, size_t length, const char* wavelet, int level,
                               double* signal);

#ifdef __cplusplus
}
#endif

#endif
