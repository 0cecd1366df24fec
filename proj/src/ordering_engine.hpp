#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "center_scorer.hpp"
#include "discourse_model.hpp"
#include "order_patterns.hpp"

namespace centord {

// What the ordering tables know about one constituent of the target clause.
struct ClauseSlot {
  Role role = Role::kX;         // target-clause role
  Role source_role = Role::kX;  // English role
  std::size_t position = 0;     // source position
  bool nominal = false;
  int center = 0;  // 0 for non-nominal constituents
  int anchored = 0;
  int length = 1;
  bool pronoun = false;
  bool we = false;  // the pronoun "we"
  bool omitted = false;

  friend bool operator==(const ClauseSlot &, const ClauseSlot &) = default;
};

struct ClauseFacts {
  std::size_t index = 0;
  Transition transition = Transition::kInitial;
  std::vector<ClauseSlot> slots;  // source order
  bool source_subject_pronoun = false;
  // The English subject corefers with the previous utterance's English subject.
  bool same_subject_as_previous = false;
  // "only" immediately precedes the subject.
  bool focus_only = false;

  const ClauseSlot *Find(Role role) const;
  RoleSequence SourceOrder() const;
};

ClauseFacts FactsFor(const ScoredUtterance &utt, const ScoredUtterance *prev, const Config &cfg);

enum class EffectKind { kOmitSubject, kForceOrder, kFocusBinding };

std::string_view ToString(EffectKind kind);
std::optional<EffectKind> ParseEffectKind(std::string_view text);

struct PreprocessingEffect {
  std::string rule;  // "Pre.iii"
  EffectKind kind = EffectKind::kOmitSubject;
  std::string pattern;  // order constraint, empty for omissions

  friend bool operator==(const PreprocessingEffect &, const PreprocessingEffect &) = default;
};

struct FiredPreference {
  std::string rule;  // "Pref.iiib"
  std::string pattern;
  std::optional<Role> prim_binding;
  bool suppressed = false;

  friend bool operator==(const FiredPreference &, const FiredPreference &) = default;
};

struct Exclusion {
  RoleSequence order;
  std::string rule;  // first failing discrimination row

  friend bool operator==(const Exclusion &, const Exclusion &) = default;
};

struct OrderPlan {
  std::size_t utterance = 0;
  std::vector<PreprocessingEffect> preprocessing;
  std::vector<FiredPreference> preferences;
  std::vector<RoleSequence> candidates;
  std::vector<Exclusion> exclusions;
  std::vector<RoleSequence> final_orders;
  std::vector<Role> omitted;
  // No order satisfied the fired preferences; every permutation was tried.
  bool all_orders_fallback = false;
  // Discrimination refused every candidate; the source order was kept.
  bool fallback_used = false;

  friend bool operator==(const OrderPlan &, const OrderPlan &) = default;
};

// "V[S]X": omitted constituents in brackets.
std::string RenderOrder(std::span<const Role> order, std::span<const Role> omitted);

// Rules to leave out of every table, by id. Used to check that each traced
// rule matters.
struct PlanOptions {
  std::set<std::string, std::less<>> disabled_rules;

  bool Enabled(std::string_view rule) const { return !disabled_rules.contains(rule); }
};

// Runs the preprocessing table. Each utterance may be preprocessed once;
// a second call for the same index throws ContractError.
class Preprocessor {
 public:
  explicit Preprocessor(PlanOptions options = {}) : options_(std::move(options)) {}

  std::vector<PreprocessingEffect> Run(const ClauseFacts &facts);

 private:
  PlanOptions options_;
  std::set<std::size_t> done_;
};

std::vector<PreprocessingEffect> Preprocess(const ScoredUtterance &utt,
                                            const ScoredUtterance *prev, const Config &cfg,
                                            Preprocessor &preprocessor);

ClauseFacts ApplyEffects(const ClauseFacts &facts,
                         std::span<const PreprocessingEffect> effects);

// Preference table over preprocessed facts, defaults included. Planning
// decides whether a default constrains, refines or is suppressed.
std::vector<FiredPreference> FirePreferences(const ClauseFacts &facts,
                                             const PlanOptions &options = {});

struct Discrimination {
  bool pass = true;
  std::vector<std::string> failing;  // table order
};

// Checks |order| against every discrimination row whose pattern it matches.
// |next| is the following utterance, if any.
Discrimination Discriminate(std::span<const Role> order, const ClauseFacts &facts,
                            const ClauseFacts *next, const PlanOptions &options = {});

// True when some discrimination row's order pattern matches |order|.
bool HasDiscriminationRow(std::span<const Role> order);

OrderPlan PlanClause(const ClauseFacts &facts, const ClauseFacts *next,
                     Preprocessor &preprocessor, const PlanOptions &options = {});

// Plans every utterance of a scored document, in order.
std::vector<OrderPlan> PlanOrders(std::span<const ScoredUtterance> scored, const Config &cfg,
                                  const PlanOptions &options = {});

// Plans pre-built facts; used by property tests that bypass scoring.
std::vector<OrderPlan> PlanOrders(std::span<const ClauseFacts> clauses,
                                  const PlanOptions &options = {});

struct RuleIds {
  std::vector<std::string> preprocessing;
  std::vector<std::string> preference;
  std::vector<std::string> discrimination;
};

// Every rule id the engine knows, in table order.
const RuleIds &KnownRuleIds();

}  // namespace centord
