#include "centord.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "center_scorer.hpp"
#include "errors.hpp"
#include "ingest.hpp"
#include "lexicon.hpp"
#include "ordering_engine.hpp"
#include "report.hpp"

struct centord_engine {
  centord::Config config;
  centord::Lexicon lexicon;
};

struct centord_document {
  centord::Document document;
  std::vector<std::string> warnings;
};

struct centord_analysis {
  std::string document;
  std::vector<centord::ScoredUtterance> scored;
  std::vector<centord::OrderPlan> plans;
};

namespace {

thread_local std::string last_error;

centord_status Fail(centord_status status, const std::string &message) {
  last_error = message;
  return status;
}

centord_status StatusOf(centord::Error::Kind kind) {
  switch (kind) {
    case centord::Error::Kind::kInput: return CENTORD_ERR_INPUT;
    case centord::Error::Kind::kUsage: return CENTORD_ERR_USAGE;
    case centord::Error::Kind::kLexicon: return CENTORD_ERR_LEXICON;
    case centord::Error::Kind::kSequencing: return CENTORD_ERR_SEQUENCE;
    case centord::Error::Kind::kContract: return CENTORD_ERR_INTERNAL;
  }
  return CENTORD_ERR_INTERNAL;
}

// Runs |body|, translating exceptions into status codes.
template <typename Body>
centord_status Guard(Body &&body) {
  try {
    body();
    last_error.clear();
    return CENTORD_OK;
  } catch (const centord::Error &e) {
    return Fail(StatusOf(e.kind()), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(CENTORD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(CENTORD_ERR_INTERNAL, e.what());
  }
}

char *Copy(const std::string &text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

const centord::ScoredUtterance &At(const centord_analysis *analysis, size_t utterance) {
  if (utterance >= analysis->scored.size()) {
    throw centord::UsageError("no utterance " + std::to_string(utterance));
  }
  return analysis->scored[utterance];
}

}  // namespace

extern "C" {

void centord_config_init(centord_config *config) {
  if (!config) return;
  config->distance_factor = 2;
  config->use_target_lengths = 0;
  config->lexicon_path = nullptr;
}

centord_status centord_engine_create(const centord_config *config, centord_engine **out) {
  if (!config || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  *out = nullptr;
  return Guard([&] {
    if (config->distance_factor <= 0) {
      throw centord::UsageError("distance factor must be positive");
    }
    auto engine = std::make_unique<centord_engine>();
    engine->config.distance_factor = config->distance_factor;
    engine->config.use_target_lengths = config->use_target_lengths != 0;
    if (config->lexicon_path) engine->config.lexicon_path = config->lexicon_path;
    engine->lexicon = centord::LoadLexicon(engine->config.lexicon_path);
    *out = engine.release();
  });
}

void centord_engine_destroy(centord_engine *engine) { delete engine; }

centord_status centord_document_read(const char *data, size_t size, int strict,
                                     centord_document **out) {
  if ((!data && size) || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  *out = nullptr;
  return Guard([&] {
    centord::ReadOptions options;
    options.strict = strict != 0;
    centord::ReadResult result =
        centord::ReadDocument(std::string_view(data ? data : "", size), options);
    auto doc = std::make_unique<centord_document>();
    doc->document = std::move(result.document);
    doc->warnings = std::move(result.warnings);
    *out = doc.release();
  });
}

centord_status centord_document_annotate(const centord_engine *engine, const char *text,
                                         size_t size, centord_document **out) {
  if (!engine || (!text && size) || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  *out = nullptr;
  return Guard([&] {
    auto doc = std::make_unique<centord_document>();
    doc->document =
        centord::AnnotateDemo(std::string_view(text ? text : "", size), engine->lexicon);
    *out = doc.release();
  });
}

centord_status centord_document_set_id(centord_document *doc, const char *id) {
  if (!doc || !id) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] { doc->document.id = id; });
}

size_t centord_document_size(const centord_document *doc) {
  return doc ? doc->document.utterances.size() : 0;
}

centord_status centord_document_warnings(const centord_document *doc, char **out) {
  if (!doc || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] {
    std::string text;
    for (const std::string &w : doc->warnings) text += w + "\n";
    *out = Copy(text);
  });
}

centord_status centord_document_write(const centord_document *doc, char **out) {
  if (!doc || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] { *out = Copy(centord::WriteDocument(doc->document)); });
}

void centord_document_destroy(centord_document *doc) { delete doc; }

centord_status centord_analyze(const centord_engine *engine, const centord_document *doc,
                               centord_analysis **out) {
  if (!engine || !doc || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  *out = nullptr;
  return Guard([&] {
    auto analysis = std::make_unique<centord_analysis>();
    analysis->document = doc->document.id;
    analysis->scored = centord::ScoreDocument(doc->document, engine->lexicon, engine->config);
    analysis->plans = centord::PlanOrders(analysis->scored, engine->config);
    *out = analysis.release();
  });
}

void centord_analysis_destroy(centord_analysis *analysis) { delete analysis; }

size_t centord_analysis_size(const centord_analysis *analysis) {
  return analysis ? analysis->scored.size() : 0;
}

centord_status centord_np_value(const centord_analysis *analysis, size_t utterance,
                                const char *np_id, int *value) {
  if (!analysis || !np_id || !value) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] {
    for (const centord::ScoredNP &np : At(analysis, utterance).scored) {
      if (np.np_id == np_id) {
        *value = np.value;
        return;
      }
    }
    throw centord::UsageError("no noun phrase \"" + std::string(np_id) + "\" in utterance " +
                              std::to_string(utterance));
  });
}

centord_status centord_center_label(const centord_analysis *analysis, size_t utterance,
                                    char **out) {
  if (!analysis || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] {
    const centord::ScoredUtterance &utt = At(analysis, utterance);
    std::string label;
    if (utt.discrete_center) {
      if (const centord::ScoredNP *np = utt.ForConstituent(*utt.discrete_center)) {
        label = centord::CenterLabel(utt, *np, analysis->scored);
      }
    }
    *out = Copy(label);
  });
}

centord_status centord_final_orders(const centord_analysis *analysis, size_t utterance,
                                    char **out) {
  if (!analysis || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] {
    At(analysis, utterance);
    const centord::OrderPlan &plan = analysis->plans[utterance];
    std::string text;
    for (const centord::RoleSequence &order : plan.final_orders) {
      if (!text.empty()) text += " ";
      text += centord::RenderOrder(order, plan.omitted);
    }
    *out = Copy(text);
  });
}

centord_status centord_report(const centord_analysis *analysis, centord_report_kind kind,
                              centord_format format, char **out) {
  if (!analysis || !out) return Fail(CENTORD_ERR_USAGE, "null argument");
  return Guard([&] {
    centord::ReportKind k;
    switch (kind) {
      case CENTORD_REPORT_ANALYZE: k = centord::ReportKind::kAnalyze; break;
      case CENTORD_REPORT_ORDER: k = centord::ReportKind::kOrder; break;
      case CENTORD_REPORT_TRACE: k = centord::ReportKind::kTrace; break;
      default: throw centord::UsageError("unknown report kind");
    }
    centord::RunReport report =
        centord::BuildReport(analysis->document, analysis->scored, analysis->plans, k);
    switch (format) {
      case CENTORD_FORMAT_TABLE: *out = Copy(centord::RenderTable(report, k)); break;
      case CENTORD_FORMAT_RECORDS: *out = Copy(centord::RenderRecords(report)); break;
      default: throw centord::UsageError("unknown report format");
    }
  });
}

void centord_free(char *text) { std::free(text); }

const char *centord_last_error(void) { return last_error.c_str(); }

}  // extern "C"
