#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "center_scorer.hpp"
#include "discourse_model.hpp"
#include "ingest.hpp"

namespace testing_support {

inline std::string ReadFile(const std::string &name) {
  std::ifstream in(std::string(CENTORD_FIXTURES) + "/" + name, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline centord::Document LoadFixture(const std::string &name) {
  return centord::ReadDocument(ReadFile(name), {true, name}).document;
}

inline centord::NounPhrase Np(const std::string &id, std::vector<std::string> words,
                              const std::string &head,
                              centord::Determiner det = centord::Determiner::kBare,
                              centord::Number number = centord::Number::kSingular) {
  centord::NounPhrase np;
  np.id = id;
  np.words = std::move(words);
  np.head_lemma = head;
  np.determiner = det;
  np.number = number;
  return np;
}

inline centord::NounPhrase Pronoun(const std::string &id, const std::string &word,
                                   centord::PronounClass cls = centord::PronounClass::kPersonal,
                                   centord::Number number = centord::Number::kSingular) {
  centord::NounPhrase np;
  np.id = id;
  np.words = {word};
  np.head_lemma = word;
  np.pronoun = cls;
  np.number = number;
  return np;
}

inline centord::Constituent Nominal(centord::Role role, centord::NounPhrase np) {
  centord::Constituent c;
  c.role = role;
  c.words = np.words;
  c.np = std::move(np);
  return c;
}

inline centord::Constituent Plain(centord::Role role, std::vector<std::string> words) {
  centord::Constituent c;
  c.role = role;
  c.words = std::move(words);
  return c;
}

// Assigns indices and source positions in list order.
inline centord::Document MakeDocument(std::vector<std::vector<centord::Constituent>> clauses) {
  centord::Document doc;
  doc.id = "test";
  for (std::size_t u = 0; u < clauses.size(); ++u) {
    centord::Utterance utt;
    utt.index = u;
    utt.constituents = std::move(clauses[u]);
    for (std::size_t i = 0; i < utt.constituents.size(); ++i) {
      utt.constituents[i].source_position = i;
      utt.text += (i ? " " : "");
      for (const std::string &w : utt.constituents[i].words) utt.text += w + " ";
    }
    doc.utterances.push_back(std::move(utt));
  }
  return doc;
}

inline const centord::ScoredNP &ById(const centord::ScoredUtterance &utt, const std::string &id) {
  for (const centord::ScoredNP &np : utt.scored) {
    if (np.np_id == id) return np;
  }
  throw std::runtime_error("no scored NP " + id);
}

}  // namespace testing_support
