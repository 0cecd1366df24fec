#include "lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "errors.hpp"

namespace centord {

namespace {

std::string Trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

}  // namespace

std::string Lowercase(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Lexicon::Lexicon()
    : personal_{"i", "you", "it", "he", "she", "we", "they"},
      demonstrative_{"this", "that", "these", "those"},
      definite_{"the", "such", "this", "that", "these", "those"},
      indefinite_{"a", "an", "another", "other"},
      possessive_{"its", "his", "her", "our", "your", "their"},
      prompts_{"with regard to", "concerning", "as for"} {}

void Lexicon::AddSynset(const std::vector<std::string> &lemmas) {
  std::set<std::string> merged;
  std::set<std::size_t> absorbed;
  for (const std::string &raw : lemmas) {
    std::string lemma = Lowercase(raw);
    merged.insert(lemma);
    auto it = synset_of_.find(lemma);
    if (it != synset_of_.end()) absorbed.insert(it->second);
  }
  if (merged.empty()) return;

  // Union with every existing set sharing a lemma, then rebuild the index so
  // synset ids stay dense and in first-seen order.
  std::vector<std::set<std::string>> kept;
  std::optional<std::size_t> target;
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    if (absorbed.count(i)) {
      if (!target) {
        target = kept.size();
        kept.push_back(synsets_[i]);
      } else {
        kept[*target].insert(synsets_[i].begin(), synsets_[i].end());
      }
    } else {
      kept.push_back(synsets_[i]);
    }
  }
  if (target) {
    kept[*target].insert(merged.begin(), merged.end());
  } else {
    kept.push_back(merged);
  }
  synsets_ = std::move(kept);
  synset_of_.clear();
  for (std::size_t i = 0; i < synsets_.size(); ++i) {
    for (const std::string &lemma : synsets_[i]) synset_of_[lemma] = i;
  }
}

std::set<std::string> Lexicon::Synonyms(std::string_view lemma) const {
  std::string key = Lowercase(lemma);
  auto it = synset_of_.find(key);
  if (it == synset_of_.end()) return {key};
  return synsets_[it->second];
}

bool Lexicon::SameLexeme(std::string_view a, std::string_view b) const {
  std::string la = Lowercase(a);
  std::string lb = Lowercase(b);
  if (la == lb) return true;
  auto ia = synset_of_.find(la);
  auto ib = synset_of_.find(lb);
  return ia != synset_of_.end() && ib != synset_of_.end() && ia->second == ib->second;
}

Lexicon ReadLexicon(std::istream &in) {
  Lexicon lex;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    std::vector<std::string> lemmas;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = trimmed.find(',', start);
      std::string lemma = Trim(std::string_view(trimmed).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start));
      if (lemma.empty()) throw LexiconError(number, "empty lemma in synset");
      lemmas.push_back(lemma);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    lex.AddSynset(lemmas);
  }
  if (in.bad()) throw LexiconError(number, "read failure");
  return lex;
}

Lexicon LoadLexicon(const std::optional<std::string> &path) {
  if (!path) return Lexicon();
  std::ifstream in(*path);
  if (!in) throw LexiconError(0, "cannot open " + *path);
  return ReadLexicon(in);
}

bool SameLexeme(std::string_view a, std::string_view b, const Lexicon &lex) {
  return lex.SameLexeme(a, b);
}

}  // namespace centord
