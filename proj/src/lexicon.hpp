#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace centord {

// Closed-class word lists plus synonym sets. Immutable once built.
class Lexicon {
 public:
  // Built-in word lists, no synonyms.
  Lexicon();

  // Merges one synset into the lexicon; overlapping sets are unioned.
  void AddSynset(const std::vector<std::string> &lemmas);

  // Lowercased lemmas related to |lemma| by a synset, including itself.
  std::set<std::string> Synonyms(std::string_view lemma) const;

  bool SameLexeme(std::string_view a, std::string_view b) const;

  const std::vector<std::set<std::string>> &synsets() const { return synsets_; }

  const std::set<std::string> &personal_pronouns() const { return personal_; }
  const std::set<std::string> &demonstrative_pronouns() const { return demonstrative_; }
  const std::set<std::string> &definite_markers() const { return definite_; }
  const std::set<std::string> &indefinite_markers() const { return indefinite_; }
  const std::set<std::string> &possessive_markers() const { return possessive_; }
  // Prompt phrases, lowercase, longest first.
  const std::vector<std::string> &prompts() const { return prompts_; }

 private:
  std::vector<std::set<std::string>> synsets_;
  std::map<std::string, std::size_t> synset_of_;

  std::set<std::string> personal_;
  std::set<std::string> demonstrative_;
  std::set<std::string> definite_;
  std::set<std::string> indefinite_;
  std::set<std::string> possessive_;
  std::vector<std::string> prompts_;
};

// Reads synsets from a stream: one comma-separated synset per line, '#'
// comment lines, blank lines ignored. Throws LexiconError naming the line.
Lexicon ReadLexicon(std::istream &in);

// Defaults when |path| is empty, otherwise defaults merged with the file.
Lexicon LoadLexicon(const std::optional<std::string> &path);

bool SameLexeme(std::string_view a, std::string_view b, const Lexicon &lex);

std::string Lowercase(std::string_view text);

}  // namespace centord
