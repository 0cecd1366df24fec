#include <doctest.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "centord.h"

namespace {

std::string Fixture(const std::string &name) {
  std::ifstream in(std::string(CENTORD_FIXTURES) + "/" + name, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Take(char *text) {
  std::string out = text ? text : "";
  centord_free(text);
  return out;
}

struct Session {
  centord_engine *engine = nullptr;
  centord_document *doc = nullptr;
  centord_analysis *analysis = nullptr;

  explicit Session(const std::string &data, int factor = 2) {
    centord_config cfg;
    centord_config_init(&cfg);
    cfg.distance_factor = factor;
    REQUIRE(centord_engine_create(&cfg, &engine) == CENTORD_OK);
    REQUIRE(centord_document_read(data.data(), data.size(), 1, &doc) == CENTORD_OK);
    REQUIRE(centord_analyze(engine, doc, &analysis) == CENTORD_OK);
  }
  ~Session() {
    centord_analysis_destroy(analysis);
    centord_document_destroy(doc);
    centord_engine_destroy(engine);
  }
};

}  // namespace

TEST_CASE("full lifecycle over the example document") {
  Session s(Fixture("example.jsonl"));
  CHECK(centord_document_size(s.doc) == 5);
  CHECK(centord_analysis_size(s.analysis) == 5);
  int value = -9;
  CHECK(centord_np_value(s.analysis, 3, "they4", &value) == CENTORD_OK);
  CHECK(value == 3);
  CHECK(centord_np_value(s.analysis, 4, "tests5", &value) == CENTORD_OK);
  CHECK(value == 2);
  char *text = nullptr;
  REQUIRE(centord_center_label(s.analysis, 3, &text) == CENTORD_OK);
  CHECK(Take(text) == "they = results");
  REQUIRE(centord_final_orders(s.analysis, 3, &text) == CENTORD_OK);
  CHECK(Take(text) == "V[S]X");
  REQUIRE(centord_report(s.analysis, CENTORD_REPORT_ORDER, CENTORD_FORMAT_TABLE, &text) ==
          CENTORD_OK);
  CHECK(Take(text) == "1 SVO\n2 SVX\n3 OVS\n4 V[S]X\n5 SVO\n");
  REQUIRE(centord_report(s.analysis, CENTORD_REPORT_TRACE, CENTORD_FORMAT_RECORDS, &text) ==
          CENTORD_OK);
  CHECK(Take(text).find("\"Pref.iiib\"") != std::string::npos);
}

TEST_CASE("distance factor reaches the scorer") {
  Session s(Fixture("example.jsonl"), 1);
  int value = -9;
  CHECK(centord_np_value(s.analysis, 4, "tests5", &value) == CENTORD_OK);
  CHECK(value == 1);
}

TEST_CASE("status codes and last error") {
  centord_document *doc = nullptr;
  std::string bad = Fixture("malformed.jsonl");
  CHECK(centord_document_read(bad.data(), bad.size(), 0, &doc) == CENTORD_ERR_INPUT);
  CHECK(doc == nullptr);
  CHECK(std::string(centord_last_error()).find("constituents[0].role") != std::string::npos);

  centord_config cfg;
  centord_config_init(&cfg);
  cfg.distance_factor = 0;
  centord_engine *engine = nullptr;
  CHECK(centord_engine_create(&cfg, &engine) == CENTORD_ERR_USAGE);
  CHECK(engine == nullptr);

  centord_config_init(&cfg);
  cfg.lexicon_path = "/nonexistent/lexicon.txt";
  CHECK(centord_engine_create(&cfg, &engine) == CENTORD_ERR_LEXICON);

  Session s(Fixture("example.jsonl"));
  int value = 0;
  CHECK(centord_np_value(s.analysis, 0, "nobody", &value) == CENTORD_ERR_USAGE);
  CHECK(centord_np_value(s.analysis, 9, "they4", &value) == CENTORD_ERR_USAGE);
  char *text = nullptr;
  CHECK(centord_report(s.analysis, static_cast<centord_report_kind>(7), CENTORD_FORMAT_TABLE,
                       &text) == CENTORD_ERR_USAGE);
  CHECK(text == nullptr);
}

TEST_CASE("lenient reads collect warnings") {
  std::string data = R"({"text":"Go.","mood":"x","constituents":[{"role":"V","words":["Go"]}]})";
  centord_document *doc = nullptr;
  REQUIRE(centord_document_read(data.data(), data.size(), 0, &doc) == CENTORD_OK);
  char *text = nullptr;
  REQUIRE(centord_document_warnings(doc, &text) == CENTORD_OK);
  CHECK(Take(text).find("mood") != std::string::npos);
  CHECK(centord_document_read(data.data(), data.size(), 1, &doc) == CENTORD_ERR_INPUT);
  centord_document_destroy(doc);
}

TEST_CASE("annotated documents write records that read back") {
  centord_config cfg;
  centord_config_init(&cfg);
  centord_engine *engine = nullptr;
  REQUIRE(centord_engine_create(&cfg, &engine) == CENTORD_OK);
  std::string text = "The scientists conducted many tests.\nThe tests were thorough.\n";
  centord_document *doc = nullptr;
  REQUIRE(centord_document_annotate(engine, text.data(), text.size(), &doc) == CENTORD_OK);
  CHECK(centord_document_set_id(doc, "demo") == CENTORD_OK);
  char *records = nullptr;
  REQUIRE(centord_document_write(doc, &records) == CENTORD_OK);
  std::string written = Take(records);
  centord_document *again = nullptr;
  REQUIRE(centord_document_read(written.data(), written.size(), 1, &again) == CENTORD_OK);
  CHECK(centord_document_size(again) == 2);
  centord_document_destroy(again);
  centord_document_destroy(doc);

  std::string verbless = "the the\n";
  CHECK(centord_document_annotate(engine, verbless.data(), verbless.size(), &doc) ==
        CENTORD_ERR_INPUT);
  centord_engine_destroy(engine);
}

TEST_CASE("destroy functions accept null") {
  centord_engine_destroy(nullptr);
  centord_document_destroy(nullptr);
  centord_analysis_destroy(nullptr);
  centord_free(nullptr);
}
