/*
 * retrolab C API.
 *
 * A thin, stable shell around the C++ core: opaque handles, integer status
 * codes, and accessors for run reports. Memory returned through an out
 * parameter is owned by the caller and released with the matching _free.
 * Error messages are thread-local and valid until the next API call on the
 * same thread.
 */
#ifndef RETROLAB_H
#define RETROLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define RLAB_API __declspec(dllexport)
#else
#define RLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rlab_status {
  RLAB_OK = 0,
  RLAB_ERR_INVALID_ARGUMENT = 1,
  RLAB_ERR_CONFIG = 2,
  RLAB_ERR_IO = 3,
  RLAB_ERR_DEGENERATE_CHANNEL = 4,
  RLAB_ERR_CAUSAL = 5,
  RLAB_ERR_INTERNAL = 6
} rlab_status;

typedef struct rlab_config rlab_config;
typedef struct rlab_report rlab_report;

RLAB_API const char* rlab_version(void);

/* Last error message on this thread; empty string when the last call
 * succeeded. */
RLAB_API const char* rlab_last_error(void);

/* Parse a flat `key = value` config from a file or from text. */
RLAB_API rlab_status rlab_config_load(const char* path, rlab_config** out);
RLAB_API rlab_status rlab_config_parse(const char* text, rlab_config** out);
RLAB_API void rlab_config_free(rlab_config* config);

/*
 * Run one workload. Outputs (CSV files plus manifest.txt) are written under
 * out_dir; pass NULL to use the configured/environment output directory.
 * On success *report (when non-NULL) receives the executed checks; a run
 * whose checks fail still returns RLAB_OK -- inspect the report.
 */
RLAB_API rlab_status rlab_run_evolve(const rlab_config* config,
                                     const char* out_dir,
                                     rlab_report** report);
RLAB_API rlab_status rlab_run_guide(const rlab_config* config,
                                    const char* out_dir, rlab_report** report);
RLAB_API rlab_status rlab_run_weak(const rlab_config* config,
                                   const char* out_dir, rlab_report** report);
RLAB_API rlab_status rlab_run_retro(const rlab_config* config,
                                    const char* out_dir, rlab_report** report);
RLAB_API rlab_status rlab_run_boost_check(const rlab_config* config,
                                          const char* out_dir,
                                          rlab_report** report);
RLAB_API rlab_status rlab_run_verify(const rlab_config* config,
                                     const char* out_dir,
                                     rlab_report** report);

RLAB_API size_t rlab_report_check_count(const rlab_report* report);
RLAB_API const char* rlab_report_check_name(const rlab_report* report,
                                            size_t index);
RLAB_API int rlab_report_check_passed(const rlab_report* report, size_t index);
RLAB_API double rlab_report_check_value(const rlab_report* report,
                                        size_t index);
RLAB_API double rlab_report_check_tolerance(const rlab_report* report,
                                            size_t index);
RLAB_API int rlab_report_all_passed(const rlab_report* report);
RLAB_API void rlab_report_free(rlab_report* report);

#ifdef __cplusplus
}
#endif

#endif /* RETROLAB_H */
