#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "discourse_model.hpp"
#include "lexicon.hpp"

namespace centord {

enum class Transition { kInitial, kContinuing, kShifting };

std::string_view ToString(Transition transition);
std::optional<Transition> ParseTransition(std::string_view text);

// Which part of a genitive a contribution was computed for.
enum class DerivationPart { kPhrase, kPossessor, kPossessed };

std::string_view ToString(DerivationPart part);
std::optional<DerivationPart> ParseDerivationPart(std::string_view text);

// One applied rule of the center-value table, e.g. {"Comp.2", +1}.
struct RuleContribution {
  std::string rule;
  int amount = 0;
  DerivationPart part = DerivationPart::kPhrase;

  friend bool operator==(const RuleContribution &, const RuleContribution &) = default;
};

struct AntecedentRef {
  std::string entity;
  std::string np_id;
  std::size_t utterance = 0;

  friend bool operator==(const AntecedentRef &, const AntecedentRef &) = default;
};

struct ReiterationMatch {
  std::string entity;
  std::string np_id;
  std::size_t utterance = 0;
  std::size_t distance = 0;

  friend bool operator==(const ReiterationMatch &, const ReiterationMatch &) = default;
};

struct ScoredNP {
  std::size_t constituent = 0;  // index into the utterance's constituents
  std::string np_id;
  int value = 0;
  // Part of the value backed by backward-linking evidence: Point.*, Pron.*,
  // Comp.1 and Comp.2.
  int anchored_value = 0;
  std::vector<RuleContribution> derivation;
  std::optional<AntecedentRef> resolved_antecedent;
  // Canonical discourse entity after resolution and reiteration linking.
  std::string entity;
  std::optional<std::string> possessor_entity;
};

struct ScoredUtterance {
  Utterance utterance;
  std::vector<ScoredNP> scored;  // NP-bearing constituents, in constituent order
  std::vector<std::size_t> cf;   // indices into |scored|, highest rank first
  std::optional<std::string> cb;
  std::optional<std::size_t> discrete_center;  // constituent index
  Transition transition = Transition::kInitial;

  const ScoredNP *ForConstituent(std::size_t constituent) const;
  const ScoredNP *ForRole(Role source_role) const;
  // Entities mentioned anywhere in the utterance, genitive parts included.
  std::set<std::string> RealizedEntities() const;
};

using History = std::span<const ScoredUtterance>;

// Clauses scanned back for antecedents: factor times the constituent length.
int ReferentialLimit(const NounPhrase &np, const Config &cfg, const Constituent &constituent);

// Nearest earlier NP (or genitive part) whose head is the same lexeme, no
// more than |limit| clauses back. Pronouns never count as reiterations.
std::optional<ReiterationMatch> FindReiteration(std::string_view head_lemma,
                                                std::size_t utt_index, History history,
                                                const Lexicon &lex, int limit);

std::optional<ReiterationMatch> FindReiteration(const NounPhrase &np, std::size_t utt_index,
                                                History history, const Lexicon &lex,
                                                const Config &cfg,
                                                const Constituent &constituent);

std::optional<AntecedentRef> ResolvePronoun(const NounPhrase &np, std::size_t utt_index,
                                            History history, const Config &cfg,
                                            const Constituent &constituent);

// Scores constituent |index| of an utterance at position |utt_index|.
// The value is the maximum over every derivation the rules license.
ScoredNP CenterValue(const Constituent &constituent, std::size_t index,
                     std::size_t utt_index, History history, const Lexicon &lex,
                     const Config &cfg);

ScoredUtterance ScoreUtterance(const Utterance &utt, History history, const Lexicon &lex,
                               const Config &cfg);

std::vector<ScoredUtterance> ScoreDocument(const Document &doc, const Lexicon &lex,
                                           const Config &cfg);

// "Comp.1,2,4" style summary of the rules behind a value.
std::string RulesLabel(const ScoredNP &np);
// "3 = 1+1+1+0+0" style decomposition, or just the value.
std::string ValuesLabel(const ScoredNP &np);
// Display label for an NP: its head, and "they = results" for resolved pronouns.
std::string CenterLabel(const ScoredUtterance &utt, const ScoredNP &np,
                        History history);

}  // namespace centord
