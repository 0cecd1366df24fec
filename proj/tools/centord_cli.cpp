#include <centord.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string lexicon;
  int distance_factor = 2;
  bool use_target_lengths = false;
  std::string format = "table";
  bool strict = false;
};

struct EngineDeleter {
  void operator()(centord_engine *e) const { centord_engine_destroy(e); }
};
struct DocumentDeleter {
  void operator()(centord_document *d) const { centord_document_destroy(d); }
};
struct AnalysisDeleter {
  void operator()(centord_analysis *a) const { centord_analysis_destroy(a); }
};
struct TextDeleter {
  void operator()(char *t) const { centord_free(t); }
};

using Engine = std::unique_ptr<centord_engine, EngineDeleter>;
using Document = std::unique_ptr<centord_document, DocumentDeleter>;
using Analysis = std::unique_ptr<centord_analysis, AnalysisDeleter>;
using Text = std::unique_ptr<char, TextDeleter>;

int ExitFor(centord_status status) {
  return status == CENTORD_ERR_USAGE ? kExitUsage : kExitInput;
}

// Reports a failed call and returns the process exit status for it.
int Report(centord_status status, const std::string &source) {
  std::cerr << "centord: " << source << ": " << centord_last_error() << "\n";
  return ExitFor(status);
}

bool ReadInput(const std::string &path, std::string *out) {
  if (path == "-") {
    out->assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

int Run(const std::string &command, const Options &options) {
  centord_config config;
  centord_config_init(&config);
  config.distance_factor = options.distance_factor;
  config.use_target_lengths = options.use_target_lengths ? 1 : 0;
  if (!options.lexicon.empty()) config.lexicon_path = options.lexicon.c_str();

  centord_engine *raw_engine = nullptr;
  centord_status status = centord_engine_create(&config, &raw_engine);
  if (status != CENTORD_OK) {
    return Report(status, options.lexicon.empty() ? "configuration" : options.lexicon);
  }
  Engine engine(raw_engine);

  std::vector<std::string> inputs = options.inputs;
  if (inputs.empty()) inputs.push_back("-");
  centord_format format =
      options.format == "records" ? CENTORD_FORMAT_RECORDS : CENTORD_FORMAT_TABLE;

  for (const std::string &path : inputs) {
    const std::string source = path == "-" ? "<stdin>" : path;
    std::string data;
    if (!ReadInput(path, &data)) {
      std::cerr << "centord: " << source << ": cannot open file\n";
      return kExitInput;
    }

    centord_document *raw_doc = nullptr;
    status = command == "annotate"
                 ? centord_document_annotate(engine.get(), data.data(), data.size(), &raw_doc)
                 : centord_document_read(data.data(), data.size(), options.strict, &raw_doc);
    if (status != CENTORD_OK) return Report(status, source);
    Document doc(raw_doc);
    centord_document_set_id(doc.get(), source.c_str());

    char *raw_text = nullptr;
    if (centord_document_warnings(doc.get(), &raw_text) == CENTORD_OK) {
      Text warnings(raw_text);
      if (*warnings) std::cerr << warnings.get();
    }

    if (command == "annotate") {
      status = centord_document_write(doc.get(), &raw_text);
      if (status != CENTORD_OK) return Report(status, source);
      std::cout << Text(raw_text).get();
      continue;
    }

    centord_analysis *raw_analysis = nullptr;
    status = centord_analyze(engine.get(), doc.get(), &raw_analysis);
    if (status != CENTORD_OK) return Report(status, source);
    Analysis analysis(raw_analysis);

    centord_report_kind kind = command == "analyze" ? CENTORD_REPORT_ANALYZE
                               : command == "order" ? CENTORD_REPORT_ORDER
                                                    : CENTORD_REPORT_TRACE;
    status = centord_report(analysis.get(), kind, format, &raw_text);
    if (status != CENTORD_OK) return Report(status, source);
    std::cout << Text(raw_text).get();
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Scores centers of attention in annotated clauses and plans constituent orders."};
  app.require_subcommand(1, 1);

  Options options;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "Center values, centers and transitions per utterance"},
      {"order", "Resulting constituent orders per utterance"},
      {"trace", "Full derivation of center values and orders"},
      {"annotate", "Annotate plain text, one clause per line, as document records"}};
  for (const auto &[name, description] : commands) {
    CLI::App *sub = app.add_subcommand(name, description);
    sub->add_option("inputs", options.inputs, "Input files; standard input when omitted or -");
    sub->add_option("--lexicon", options.lexicon, "Synonym lexicon file");
    sub->add_option("--distance-factor", options.distance_factor,
                    "Referential distance per word of a constituent")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    sub->add_flag("--use-target-lengths", options.use_target_lengths,
                  "Use annotated target lengths where present");
    sub->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"table", "records"}));
    sub->add_flag("--strict", options.strict, "Reject unknown fields in document records");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "centord: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  return Run(command, options);
}
