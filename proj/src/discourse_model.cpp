#include "discourse_model.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "errors.hpp"

namespace centord {

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::array<std::pair<std::string_view, Enum>, N> &table,
                           std::string_view text) {
  for (const auto &[name, value] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view Name(const std::array<std::pair<std::string_view, Enum>, N> &table,
                      Enum value) {
  for (const auto &[name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

constexpr std::array<std::pair<std::string_view, Number>, 2> kNumbers{{
    {"singular", Number::kSingular},
    {"plural", Number::kPlural},
}};

constexpr std::array<std::pair<std::string_view, Determiner>, 6> kDeterminers{{
    {"definite", Determiner::kDefinite},
    {"indefinite", Determiner::kIndefinite},
    {"demonstrative", Determiner::kDemonstrative},
    {"possessive", Determiner::kPossessive},
    {"quantifier", Determiner::kQuantifier},
    {"bare", Determiner::kBare},
}};

constexpr std::array<std::pair<std::string_view, PronounClass>, 3> kPronouns{{
    {"personal", PronounClass::kPersonal},
    {"demonstrative", PronounClass::kDemonstrative},
    {"none", PronounClass::kNone},
}};

constexpr std::array<std::pair<std::string_view, Construction>, 4> kConstructions{{
    {"cleft", Construction::kCleft},
    {"fronted", Construction::kFronted},
    {"prompted", Construction::kPrompted},
    {"none", Construction::kNone},
}};

void CheckNounPhrase(const NounPhrase &np, bool nested, std::size_t utt, std::size_t pos,
                     const std::string &where, std::vector<Violation> *out) {
  auto add = [&](const std::string &msg) {
    out->push_back({utt, pos, where + msg});
  };
  if (np.words.empty()) add("noun phrase has no words");
  if (np.head_lemma.empty()) add("noun phrase has no head lemma");
  if (np.is_pronoun()) {
    if (np.determiner != Determiner::kBare) add("pronoun with a determiner other than bare");
    if (np.is_genitive()) add("pronoun with genitive parts");
  }
  if (np.is_genitive()) {
    if (nested) {
      add("genitive part is itself genitive");
    } else {
      CheckNounPhrase(np.genitive->possessor, true, utt, pos, where + "possessor: ", out);
      CheckNounPhrase(np.genitive->possessed, true, utt, pos, where + "possessed: ", out);
    }
  }
}

}  // namespace

char RoleLetter(Role role) {
  switch (role) {
    case Role::kS: return 'S';
    case Role::kV: return 'V';
    case Role::kO: return 'O';
    case Role::kX: return 'X';
  }
  return '?';
}

std::optional<Role> RoleFromLetter(char letter) {
  switch (letter) {
    case 'S': return Role::kS;
    case 'V': return Role::kV;
    case 'O': return Role::kO;
    case 'X': return Role::kX;
    default: return std::nullopt;
  }
}

std::string_view ToString(Number number) { return Name(kNumbers, number); }
std::string_view ToString(Determiner determiner) { return Name(kDeterminers, determiner); }
std::string_view ToString(PronounClass pronoun) { return Name(kPronouns, pronoun); }
std::string_view ToString(Construction construction) {
  return Name(kConstructions, construction);
}

std::optional<Number> ParseNumber(std::string_view text) { return Lookup(kNumbers, text); }
std::optional<Determiner> ParseDeterminer(std::string_view text) {
  return Lookup(kDeterminers, text);
}
std::optional<PronounClass> ParsePronounClass(std::string_view text) {
  return Lookup(kPronouns, text);
}
std::optional<Construction> ParseConstruction(std::string_view text) {
  return Lookup(kConstructions, text);
}

bool operator==(const NounPhrase &a, const NounPhrase &b) {
  if (a.id != b.id || a.words != b.words || a.head_lemma != b.head_lemma ||
      a.number != b.number || a.determiner != b.determiner || a.pronoun != b.pronoun ||
      a.construction != b.construction || a.antecedent != b.antecedent) {
    return false;
  }
  if (a.is_genitive() != b.is_genitive()) return false;
  return !a.is_genitive() || *a.genitive == *b.genitive;
}

int Constituent::word_count() const {
  return static_cast<int>(np ? np->words.size() : words.size());
}

std::vector<Violation> ValidateDocument(const Document &doc) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  for (std::size_t u = 0; u < doc.utterances.size(); ++u) {
    const Utterance &utt = doc.utterances[u];
    if (utt.index != u) {
      out.push_back({u, std::nullopt,
                     "utterance index " + std::to_string(utt.index) + " out of order"});
    }

    std::array<int, 4> source_roles{};
    std::array<int, 4> target_roles{};
    std::vector<bool> seen(utt.constituents.size(), false);
    for (std::size_t c = 0; c < utt.constituents.size(); ++c) {
      const Constituent &con = utt.constituents[c];
      auto add = [&](const std::string &msg) { out.push_back({u, c, msg}); };

      ++source_roles[static_cast<int>(con.role)];
      ++target_roles[static_cast<int>(con.ordering_role())];
      if (con.source_position < seen.size() && !seen[con.source_position]) {
        seen[con.source_position] = true;
      } else {
        add("source position " + std::to_string(con.source_position) +
            " duplicated or out of range");
      }
      if (con.role == Role::kV && con.np) add("verb constituent carries a noun phrase");
      if (con.target_role == Role::kV && con.np) {
        add("target role V on a nominal constituent");
      }
      if (con.target_length && *con.target_length <= 0) add("target length must be positive");
      if (con.omitted) add("constituent marked omitted on ingest");
      if (con.words.empty()) add("constituent has no words");
      if (con.np) {
        CheckNounPhrase(*con.np, false, u, c, "", &out);
        if (!ids.insert(con.np->id).second) add("duplicate noun phrase id " + con.np->id);
      }
    }
    for (Role role : {Role::kS, Role::kV, Role::kO}) {
      int idx = static_cast<int>(role);
      if (source_roles[idx] > 1) {
        out.push_back({u, std::nullopt, std::string("duplicate role ") + RoleLetter(role)});
      }
      if (target_roles[idx] > 1 && source_roles[idx] <= 1) {
        out.push_back({u, std::nullopt,
                       std::string("duplicate target role ") + RoleLetter(role)});
      }
    }
  }
  return out;
}

std::string Describe(const Violation &violation) {
  std::string msg = "utterance " + std::to_string(violation.utterance);
  if (violation.constituent) msg += ", constituent " + std::to_string(*violation.constituent);
  return msg + ": " + violation.message;
}

CfRank CfRankOf(const Constituent &constituent) {
  if (!constituent.np) {
    throw ContractError("constituent at position " +
                        std::to_string(constituent.source_position) +
                        " has no noun phrase and no Cf rank");
  }
  int role_class = 2;
  if (constituent.role == Role::kS) role_class = 0;
  if (constituent.role == Role::kO) role_class = 1;
  return {role_class, constituent.source_position};
}

}  // namespace centord
