#ifndef G2RMT_H
#define G2RMT_H

/* C interface to the g2rmt library. A run takes a command name and a JSON
 * configuration string and yields an opaque report: a JSON payload, an
 * overall pass flag, an exit class, and zero or more named CSV artifacts. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct g2rmt_report g2rmt_report;

/* exit classes, also used as process exit codes by the CLI */
enum {
  G2RMT_OK = 0,
  G2RMT_CHECK_FAILED = 1,
  G2RMT_USAGE_ERROR = 2,
  G2RMT_RESOURCE_CAP = 3
};

const char* g2rmt_version(void);

/* Runs a command ("moments", "ct_verify", "density", "hist", "zeta",
 * "gauss", "kloosterman", "hk", "nmk", "equidist", "family") with a JSON
 * object as configuration (NULL or "" means all defaults). Returns NULL
 * only on allocation failure; every other problem, including bad configs,
 * is reported inside the returned report. Free with g2rmt_report_free. */
g2rmt_report* g2rmt_run(const char* command, const char* config_json);
void g2rmt_report_free(g2rmt_report* r);

/* Serialized JSON payload; caller frees with g2rmt_string_free. */
char* g2rmt_report_json(const g2rmt_report* r);

/* 1 if every internal check passed, else 0. */
int g2rmt_report_ok(const g2rmt_report* r);

/* One of the exit classes above. */
int g2rmt_report_exit_class(const g2rmt_report* r);

/* CSV artifacts produced by the run. Returned pointers are owned by the
 * report and stay valid until g2rmt_report_free. */
size_t g2rmt_report_artifact_count(const g2rmt_report* r);
const char* g2rmt_report_artifact_name(const g2rmt_report* r, size_t i);
const char* g2rmt_report_artifact_data(const g2rmt_report* r, size_t i);

void g2rmt_string_free(char* s);

/* Message for the most recent failed call on this thread, or NULL. */
const char* g2rmt_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* G2RMT_H */
