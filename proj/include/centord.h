#ifndef CENTORD_H
#define CENTORD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CENTORD_API __declspec(dllexport)
#else
#define CENTORD_API __attribute__((visibility("default")))
#endif

typedef enum centord_status {
  CENTORD_OK = 0,
  CENTORD_ERR_INPUT = 1,     /* malformed document or report records */
  CENTORD_ERR_USAGE = 2,     /* bad argument, flag value or pattern */
  CENTORD_ERR_LEXICON = 3,   /* unreadable or malformed lexicon file */
  CENTORD_ERR_SEQUENCE = 4,  /* calls made out of order */
  CENTORD_ERR_INTERNAL = 5
} centord_status;

typedef enum centord_report_kind {
  CENTORD_REPORT_ANALYZE = 0,
  CENTORD_REPORT_ORDER = 1,
  CENTORD_REPORT_TRACE = 2
} centord_report_kind;

typedef enum centord_format {
  CENTORD_FORMAT_TABLE = 0,
  CENTORD_FORMAT_RECORDS = 1
} centord_format;

typedef struct centord_config {
  int distance_factor;        /* > 0 */
  int use_target_lengths;     /* nonzero: prefer annotated target lengths */
  const char *lexicon_path;   /* NULL: built-in word lists only */
} centord_config;

typedef struct centord_engine centord_engine;
typedef struct centord_document centord_document;
typedef struct centord_analysis centord_analysis;

/* Defaults: distance factor 2, word-count lengths, no lexicon file. */
CENTORD_API void centord_config_init(centord_config *config);

CENTORD_API centord_status centord_engine_create(const centord_config *config,
                                                 centord_engine **out);
CENTORD_API void centord_engine_destroy(centord_engine *engine);

/* Parses line-delimited document records. |strict| rejects unknown fields;
 * otherwise they are skipped and listed by centord_document_warnings. */
CENTORD_API centord_status centord_document_read(const char *data, size_t size, int strict,
                                                 centord_document **out);
/* Demo annotator over plain text, one clause per line. */
CENTORD_API centord_status centord_document_annotate(const centord_engine *engine,
                                                     const char *text, size_t size,
                                                     centord_document **out);
/* Names the document in reports, e.g. after its file. */
CENTORD_API centord_status centord_document_set_id(centord_document *doc, const char *id);
CENTORD_API size_t centord_document_size(const centord_document *doc);
/* Newline-separated warnings; release with centord_free. */
CENTORD_API centord_status centord_document_warnings(const centord_document *doc, char **out);
/* Serializes the document records; release with centord_free. */
CENTORD_API centord_status centord_document_write(const centord_document *doc, char **out);
CENTORD_API void centord_document_destroy(centord_document *doc);

/* Scores every utterance and plans its constituent orders. */
CENTORD_API centord_status centord_analyze(const centord_engine *engine,
                                           const centord_document *doc,
                                           centord_analysis **out);
CENTORD_API void centord_analysis_destroy(centord_analysis *analysis);

CENTORD_API size_t centord_analysis_size(const centord_analysis *analysis);
/* Center value of the noun phrase with annotation id |np_id|. */
CENTORD_API centord_status centord_np_value(const centord_analysis *analysis, size_t utterance,
                                            const char *np_id, int *value);
/* Label of the utterance's discrete center, e.g. "they = results". Empty when
 * the utterance has no noun phrase. Release with centord_free. */
CENTORD_API centord_status centord_center_label(const centord_analysis *analysis,
                                                size_t utterance, char **out);
/* Space-separated final orders, e.g. "V[S]X". Release with centord_free. */
CENTORD_API centord_status centord_final_orders(const centord_analysis *analysis,
                                                size_t utterance, char **out);
CENTORD_API centord_status centord_report(const centord_analysis *analysis,
                                          centord_report_kind kind, centord_format format,
                                          char **out);

CENTORD_API void centord_free(char *text);

/* Message for the last failed call on this thread; never NULL. */
CENTORD_API const char *centord_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CENTORD_H */
