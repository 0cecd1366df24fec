#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "ingest.hpp"
#include "test_support.hpp"

using namespace centord;
using namespace testing_support;

namespace {

ParseError ReadError(const std::string &data, bool strict = false) {
  try {
    ReadDocument(data, {strict, "t"});
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, "", "");
}

const Constituent &RoleIn(const Utterance &u, Role role) {
  for (const Constituent &c : u.constituents) {
    if (c.role == role) return c;
  }
  throw std::runtime_error("role missing");
}

}  // namespace

TEST_CASE("example fixture reads five utterances") {
  ReadResult r = ReadDocument(ReadFile("example.jsonl"), {true, "example"});
  CHECK(r.document.utterances.size() == 5);
  CHECK(r.warnings.empty());
  CHECK(r.document.id == "example");
  const NounPhrase &np = *r.document.utterances[4].constituents[0].np;
  REQUIRE(np.is_genitive());
  CHECK(np.genitive->possessor.head_lemma == "scientists");
}

TEST_CASE("empty input is an empty document") {
  CHECK(ReadDocument(std::string_view(""), {}).document.utterances.empty());
  CHECK(ReadDocument(ReadFile("empty.jsonl"), {}).document.utterances.empty());
  CHECK(ReadDocument(std::string_view("\n  \n"), {}).document.utterances.empty());
}

TEST_CASE("unknown role names line and field") {
  ParseError e = ReadError(ReadFile("malformed.jsonl"));
  CHECK(e.line() == 1);
  CHECK(e.field() == "constituents[0].role");
}

TEST_CASE("errors report the right line") {
  std::string good = R"({"text":"Go.","constituents":[{"role":"V","words":["Go"]}]})";
  ParseError e = ReadError(good + "\n\n" + R"({"text":"x","constituents":[{"role":"X"}]})");
  CHECK(e.line() == 3);
  CHECK(e.field() == "constituents[0].words");
  CHECK(ReadError(good + "\n{not json").line() == 2);
  e = ReadError(R"({"text":"x","constituents":[{"role":"S","words":["a"],"head_lemma":"a","determiner":"some"}]})");
  CHECK(e.field() == "constituents[0].determiner");
}

TEST_CASE("unknown fields warn, or fail when strict") {
  std::string data = R"({"text":"Go.","mood":"x","constituents":[{"role":"V","words":["Go"]}]})";
  ReadResult r = ReadDocument(data, {false, "t"});
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("mood") != std::string::npos);
  CHECK(ReadError(data, true).field() == "mood");
}

TEST_CASE("antecedent must name an earlier noun phrase") {
  std::string data =
      R"({"text":"It fell.","constituents":[{"role":"S","words":["It"],"head_lemma":"it","pronoun":"personal","antecedent_id":"box"},{"role":"V","words":["fell"]}]})";
  CHECK(ReadError(data).field() == "constituents[0].antecedent_id");
}

TEST_CASE("structural violations surface as parse errors") {
  std::string data =
      R"({"text":"x","constituents":[{"role":"S","words":["a"],"head_lemma":"a"},{"role":"S","words":["b"],"head_lemma":"b"}]})";
  ParseError e = ReadError(data);
  CHECK(e.line() == 1);
  CHECK(std::string(e.what()).find("duplicate role S") != std::string::npos);
}

TEST_CASE("write then read is the identity on the fixture") {
  Document doc = LoadFixture("example.jsonl");
  std::string text = WriteDocument(doc);
  Document back = ReadDocument(text, {true, doc.id}).document;
  CHECK(back == doc);
  CHECK(WriteDocument(back) == text);
}

namespace {

Document RandomDocument(std::mt19937 &rng) {
  std::vector<std::vector<Constituent>> clauses;
  std::size_t n = rng() % 4;
  std::vector<std::string> ids;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Constituent> cs;
    std::vector<Role> roles{Role::kS, Role::kV, Role::kO, Role::kX, Role::kX};
    std::shuffle(roles.begin(), roles.end(), rng);
    roles.resize(1 + rng() % roles.size());
    std::vector<std::string> declared;
    for (std::size_t i = 0; i < roles.size(); ++i) {
      Role r = roles[i];
      std::string id = "n" + std::to_string(u) + "_" + std::to_string(i);
      if (r == Role::kV || rng() % 4 == 0) {
        Constituent c = Plain(r, {"w" + std::to_string(rng() % 9)});
        if (rng() % 3 == 0) c.target_length = 1 + static_cast<int>(rng() % 5);
        cs.push_back(c);
        continue;
      }
      NounPhrase np;
      if (rng() % 3 == 0) {
        np = Pronoun(id, "they", rng() % 2 ? PronounClass::kPersonal : PronounClass::kDemonstrative,
                     rng() % 2 ? Number::kPlural : Number::kSingular);
        if (!ids.empty() && rng() % 2) np.antecedent = ids[rng() % ids.size()];
      } else {
        np = Np(id, {"the", "thing"}, "thing",
                std::array{Determiner::kDefinite, Determiner::kBare,
                           Determiner::kIndefinite}[rng() % 3]);
        np.construction = std::array{Construction::kNone, Construction::kCleft,
                                     Construction::kFronted, Construction::kPrompted}[rng() % 4];
        if (rng() % 4 == 0) {
          auto parts = std::make_shared<GenitiveParts>();
          parts->possessor = Np(id + ".possessor", {"owner"}, "owner");
          parts->possessed = Np(id + ".possessed", {"thing"}, "thing");
          np.genitive = std::move(parts);
          declared.push_back(id + ".possessor");
        }
      }
      declared.push_back(id);
      Constituent c = Nominal(r, np);
      if (rng() % 4 == 0) c.target_role = r;
      cs.push_back(c);
    }
    ids.insert(ids.end(), declared.begin(), declared.end());
    clauses.push_back(std::move(cs));
  }
  Document doc = MakeDocument(std::move(clauses));
  doc.id = "random";
  return doc;
}

}  // namespace

TEST_CASE("write then read is the identity on random documents") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    Document doc = RandomDocument(rng);
    auto violations = ValidateDocument(doc);
    REQUIRE_MESSAGE(violations.empty(), Describe(violations.front()));
    Document back = ReadDocument(WriteDocument(doc), {true, "random"}).document;
    CHECK(back == doc);
  }
}

TEST_CASE("annotator examples") {
  Lexicon lex;
  Document doc = AnnotateDemo("The scientists conducted many tests.", lex);
  REQUIRE(doc.utterances.size() == 1);
  const Utterance &u = doc.utterances[0];
  CHECK(RoleIn(u, Role::kS).np->determiner == Determiner::kDefinite);
  CHECK(RoleIn(u, Role::kS).np->head_lemma == "scientists");
  CHECK(RoleIn(u, Role::kO).np->determiner == Determiner::kQuantifier);
  CHECK(RoleIn(u, Role::kV).words == std::vector<std::string>{"conducted"});

  Document cleft = AnnotateDemo("It was John who came.", lex);
  CHECK(RoleIn(cleft.utterances[0], Role::kS).np->construction == Construction::kCleft);

  Document prompted = AnnotateDemo("As for Adam, he left.", lex);
  const Constituent &x = RoleIn(prompted.utterances[0], Role::kX);
  CHECK(x.np->construction == Construction::kPrompted);
  CHECK(x.np->head_lemma == "adam");
  CHECK(RoleIn(prompted.utterances[0], Role::kS).np->is_pronoun());

  Document genitive = AnnotateDemo("The scientists' colleagues confirmed the results.", lex);
  const NounPhrase &g = *RoleIn(genitive.utterances[0], Role::kS).np;
  REQUIRE(g.is_genitive());
  CHECK(g.genitive->possessor.head_lemma == "scientists");
  CHECK(g.genitive->possessed.head_lemma == "colleagues");
}

TEST_CASE("annotator output always validates") {
  const char *text =
      "The scientists conducted many tests.\n"
      "The tests were thorough.\n"
      "Their colleagues confirmed the results.\n"
      "They were judged by their colleagues.\n"
      "It was the tests that mattered.\n"
      "Concerning the outcome, we remained cautious.\n"
      "The results, the committee accepted.\n"
      "A report of the committee was published yesterday.\n";
  Document doc = AnnotateDemo(text, Lexicon());
  CHECK(doc.utterances.size() == 8);
  CHECK(ValidateDocument(doc).empty());
  Document back = ReadDocument(WriteDocument(doc), {true, doc.id}).document;
  CHECK(back == doc);
}

TEST_CASE("annotator rejects a line without a verb") {
  try {
    AnnotateDemo("The tests ran.\nthe the the\n", Lexicon());
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}
