#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace centord {

// Clause roles: subject, verb, object, adjunct.
enum class Role { kS, kV, kO, kX };

enum class Number { kSingular, kPlural };

enum class Determiner { kDefinite, kIndefinite, kDemonstrative, kPossessive, kQuantifier, kBare };

enum class PronounClass { kPersonal, kDemonstrative, kNone };

enum class Construction { kCleft, kFronted, kPrompted, kNone };

char RoleLetter(Role role);
std::optional<Role> RoleFromLetter(char letter);

std::string_view ToString(Number number);
std::string_view ToString(Determiner determiner);
std::string_view ToString(PronounClass pronoun);
std::string_view ToString(Construction construction);

std::optional<Number> ParseNumber(std::string_view text);
std::optional<Determiner> ParseDeterminer(std::string_view text);
std::optional<PronounClass> ParsePronounClass(std::string_view text);
std::optional<Construction> ParseConstruction(std::string_view text);

struct GenitiveParts;

// An annotated noun phrase. Genitives ("N_o's N_p", "N_p of N_o") carry their
// two parts; parts never nest further.
struct NounPhrase {
  std::string id;
  std::vector<std::string> words;
  std::string head_lemma;
  Number number = Number::kSingular;
  Determiner determiner = Determiner::kBare;
  PronounClass pronoun = PronounClass::kNone;
  Construction construction = Construction::kNone;
  std::shared_ptr<const GenitiveParts> genitive;
  std::optional<std::string> antecedent;

  bool is_pronoun() const { return pronoun != PronounClass::kNone; }
  bool is_genitive() const { return genitive != nullptr; }
};

struct GenitiveParts {
  NounPhrase possessor;
  NounPhrase possessed;
};

bool operator==(const NounPhrase &a, const NounPhrase &b);
inline bool operator==(const GenitiveParts &a, const GenitiveParts &b) {
  return a.possessor == b.possessor && a.possessed == b.possessed;
}

struct Constituent {
  // Role in the English source clause. Centering ranks on this role.
  Role role = Role::kX;
  // Role in the target clause, when it differs from the source (passives).
  std::optional<Role> target_role;
  // Surface words of the whole constituent (including a governing preposition).
  std::vector<std::string> words;
  std::optional<NounPhrase> np;
  std::size_t source_position = 0;
  std::optional<int> target_length;
  bool omitted = false;

  Role ordering_role() const { return target_role.value_or(role); }
  // Word count of the NP, or of the constituent when it is non-nominal.
  int word_count() const;

  friend bool operator==(const Constituent &, const Constituent &) = default;
};

struct Utterance {
  std::size_t index = 0;
  std::vector<Constituent> constituents;
  std::string text;

  friend bool operator==(const Utterance &, const Utterance &) = default;
};

struct Document {
  std::string id;
  std::vector<Utterance> utterances;

  friend bool operator==(const Document &, const Document &) = default;
};

struct Config {
  int distance_factor = 2;
  bool use_target_lengths = false;
  std::optional<std::string> lexicon_path;
};

struct Violation {
  std::size_t utterance = 0;
  std::optional<std::size_t> constituent;
  std::string message;

  friend bool operator==(const Violation &, const Violation &) = default;
};

// Checks every structural invariant of the data model. Violations are data:
// an empty result means the document is well formed.
std::vector<Violation> ValidateDocument(const Document &doc);

std::string Describe(const Violation &violation);

// Forward-looking center rank. Lower keys rank higher: subjects before
// objects before adjuncts, then by source position.
struct CfRank {
  int role_class = 0;
  std::size_t position = 0;

  auto operator<=>(const CfRank &) const = default;
};

// Throws ContractError for constituents that carry no noun phrase.
CfRank CfRankOf(const Constituent &constituent);

}  // namespace centord
