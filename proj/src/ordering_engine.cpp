#include "ordering_engine.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "errors.hpp"

namespace centord {

namespace {

constexpr std::array<std::pair<std::string_view, EffectKind>, 3> kEffectKinds{{
    {"omit_subject", EffectKind::kOmitSubject},
    {"force_order", EffectKind::kForceOrder},
    {"focus_binding", EffectKind::kFocusBinding},
}};

// Statistical positioning rows: a conjunction of patterns over the source
// order, and the preferred target pattern.
struct StatisticalRow {
  const char *id;
  std::array<const char *, 2> condition;
  const char *preference;
};

constexpr std::array<StatisticalRow, 7> kStatisticalRows{{
    {"Pref.iv", {"-V-S-O-", "-X-"}, "XV-S-O-"},
    {"Pref.v", {"-O-S-", "X-"}, "XV-O-S-"},
    {"Pref.vi", {"-V-O-S-", "-X-"}, "XV-O-S-"},
    {"Pref.vii", {"-S-V-O-", "-X-"}, "XS-V-O-"},
    {"Pref.viii", {"-S-V-O-", "-X-"}, "S-V-OX"},
    {"Pref.ix", {"-O-V-S-", "-X-"}, "O-V-SX"},
    {"Pref.x", {"-O-V-S-", "-X-"}, "O-VXS"},
}};

// Defaults, weakest last.
constexpr std::array<std::pair<const char *, const char *>, 2> kDefaultRows{{
    {"Pref.xii", "-V-O-"},
    {"Pref.xiii", "-S-O-"},
}};

bool IsDefaultRule(std::string_view rule) {
  return std::any_of(kDefaultRows.begin(), kDefaultRows.end(),
                     [&](const auto &row) { return row.first == rule; });
}

enum class Check {
  kSubjectNotLonger,    // length(S) <= length(O)
  kObjectNotLonger,     // length(O) <= length(S)
  kObjectNotShorter,    // length(O) >= length(S)
  kOrderMatches,        // the order also matches |pattern|
  kSubjectPronoun,      // Pron(S)
  kNextSubjectCentered, // center(S, U_n+1) > 0
};

struct DiscriminationRow {
  const char *id;
  const char *order;
  Check check;
  const char *pattern;
};

constexpr std::array<DiscriminationRow, 10> kDiscriminationRows{{
    {"Discr.i", "-V-S-O-", Check::kSubjectNotLonger, nullptr},
    {"Discr.ii", "-V-S-O-", Check::kOrderMatches, "-V-S-O"},
    {"Discr.iii", "-V-S-O-", Check::kSubjectPronoun, nullptr},
    {"Discr.iv", "-V-O-S-", Check::kObjectNotLonger, nullptr},
    {"Discr.v", "-V-O-S-", Check::kOrderMatches, "-X-"},
    {"Discr.vi", "-S-O-V-", Check::kOrderMatches, "SOV"},
    {"Discr.vii", "-S-O-V-", Check::kNextSubjectCentered, nullptr},
    {"Discr.viii", "-O-S-V-", Check::kOrderMatches, "OSVX"},
    {"Discr.ix", "-O-S-V-", Check::kObjectNotShorter, nullptr},
    {"Discr.x", "-O-V-S", Check::kObjectNotShorter, nullptr},
}};

const OrderPattern &Cached(std::string_view text) {
  // Table patterns are parsed once; the tables are static so the set is bounded.
  static std::vector<std::pair<const char *, OrderPattern>> cache = [] {
    std::vector<std::pair<const char *, OrderPattern>> out;
    auto add = [&](const char *p) {
      if (p) out.emplace_back(p, ParsePattern(p));
    };
    for (const auto &row : kStatisticalRows) {
      add(row.condition[0]);
      add(row.condition[1]);
      add(row.preference);
    }
    for (const auto &row : kDiscriminationRows) {
      add(row.order);
      add(row.pattern);
    }
    for (const auto &row : kDefaultRows) add(row.second);
    return out;
  }();
  for (const auto &[key, pattern] : cache) {
    if (key == text) return pattern;
  }
  throw ContractError("pattern not in rule tables: " + std::string(text));
}

std::vector<std::string> Tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

RoleSequence RolesOf(const ClauseFacts &facts) {
  RoleSequence out;
  for (const ClauseSlot &s : facts.slots) out.push_back(s.role);
  return out;
}

std::vector<std::size_t> Positions(std::span<const Role> order, Role role) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == role) out.push_back(i);
  }
  return out;
}

bool Holds(const DiscriminationRow &row, std::span<const Role> order, const ClauseFacts &facts,
           const ClauseFacts *next) {
  const ClauseSlot *s = facts.Find(Role::kS);
  const ClauseSlot *o = facts.Find(Role::kO);
  int ls = s ? s->length : 0;
  int lo = o ? o->length : 0;
  switch (row.check) {
    case Check::kSubjectNotLonger: return ls <= lo;
    case Check::kObjectNotLonger: return lo <= ls;
    case Check::kObjectNotShorter: return lo >= ls;
    case Check::kOrderMatches: return Matches(Cached(row.pattern), order);
    case Check::kSubjectPronoun: return s && s->pronoun;
    case Check::kNextSubjectCentered: {
      if (!next) return false;
      const ClauseSlot *ns = next->Find(Role::kS);
      return ns && ns->center > 0;
    }
  }
  return false;
}

}  // namespace

const ClauseSlot *ClauseFacts::Find(Role role) const {
  for (const ClauseSlot &s : slots) {
    if (s.role == role) return &s;
  }
  return nullptr;
}

RoleSequence ClauseFacts::SourceOrder() const { return RolesOf(*this); }

ClauseFacts FactsFor(const ScoredUtterance &utt, const ScoredUtterance *prev,
                     const Config &cfg) {
  ClauseFacts facts;
  facts.index = utt.utterance.index;
  facts.transition = utt.transition;

  std::vector<const Constituent *> ordered;
  for (const Constituent &c : utt.utterance.constituents) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(), [](const Constituent *a, const Constituent *b) {
    return a->source_position < b->source_position;
  });

  for (const Constituent *c : ordered) {
    ClauseSlot slot;
    slot.role = c->ordering_role();
    slot.source_role = c->role;
    slot.position = c->source_position;
    slot.nominal = c->np.has_value();
    slot.length = cfg.use_target_lengths && c->target_length ? *c->target_length
                                                             : c->word_count();
    if (c->np) {
      std::size_t index = static_cast<std::size_t>(c - utt.utterance.constituents.data());
      const ScoredNP *scored = utt.ForConstituent(index);
      if (scored) {
        slot.center = scored->value;
        slot.anchored = scored->anchored_value;
      }
      slot.pronoun = c->np->is_pronoun();
      slot.we = slot.pronoun && Lowercase(c->np->words.front()) == "we";
    }
    facts.slots.push_back(slot);
  }

  const ScoredNP *subject = utt.ForRole(Role::kS);
  if (subject) {
    const Constituent &c = utt.utterance.constituents[subject->constituent];
    facts.source_subject_pronoun = c.np->is_pronoun();
    if (prev) {
      const ScoredNP *prev_subject = prev->ForRole(Role::kS);
      facts.same_subject_as_previous = prev_subject && prev_subject->entity == subject->entity;
    }
  }

  for (const Constituent &c : utt.utterance.constituents) {
    if (c.ordering_role() != Role::kS || c.words.empty()) continue;
    std::vector<std::string> tokens = Tokens(utt.utterance.text);
    std::string first = Lowercase(c.words.front());
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i] == "only" && tokens[i + 1] == first) facts.focus_only = true;
    }
  }
  return facts;
}

std::string_view ToString(EffectKind kind) {
  for (const auto &[name, value] : kEffectKinds) {
    if (value == kind) return name;
  }
  return "?";
}

std::optional<EffectKind> ParseEffectKind(std::string_view text) {
  for (const auto &[name, value] : kEffectKinds) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::string RenderOrder(std::span<const Role> order, std::span<const Role> omitted) {
  std::string out;
  std::vector<Role> pending(omitted.begin(), omitted.end());
  for (Role r : order) {
    auto it = std::find(pending.begin(), pending.end(), r);
    if (it != pending.end()) {
      pending.erase(it);
      out += '[';
      out += RoleLetter(r);
      out += ']';
    } else {
      out += RoleLetter(r);
    }
  }
  return out;
}

std::vector<PreprocessingEffect> Preprocessor::Run(const ClauseFacts &facts) {
  if (!done_.insert(facts.index).second) {
    throw ContractError("utterance " + std::to_string(facts.index) +
                        " already preprocessed");
  }
  std::vector<PreprocessingEffect> effects;
  const ClauseSlot *s = facts.Find(Role::kS);
  const ClauseSlot *v = facts.Find(Role::kV);
  const ClauseSlot *o = facts.Find(Role::kO);
  const ClauseSlot *x = facts.Find(Role::kX);

  // 0-anaphora rows: first match only.
  auto on = [&](const char *rule) { return options_.Enabled(rule); };
  if (s) {
    const char *rule = nullptr;
    if (s->we && on("Pre.i")) {
      rule = "Pre.i";
    } else if (o && o->pronoun && s->pronoun && on("Pre.ii")) {
      rule = "Pre.ii";
    } else if (facts.same_subject_as_previous && facts.source_subject_pronoun && on("Pre.iii")) {
      rule = "Pre.iii";
    } else if (facts.transition == Transition::kContinuing && on("Pre.iv")) {
      rule = "Pre.iv";
    }
    if (rule) effects.push_back({rule, EffectKind::kOmitSubject, ""});
  }

  // Special constructions: first match only.
  if (s && v && facts.focus_only && s->pronoun && on("Pre.v")) {
    effects.push_back({"Pre.v", EffectKind::kFocusBinding, "-SV-"});
  } else if (s && v && o && !x && o->pronoun && on("Pre.vi")) {
    effects.push_back({"Pre.vi", EffectKind::kForceOrder, "SOV"});
  }
  return effects;
}

std::vector<PreprocessingEffect> Preprocess(const ScoredUtterance &utt,
                                            const ScoredUtterance *prev, const Config &cfg,
                                            Preprocessor &preprocessor) {
  return preprocessor.Run(FactsFor(utt, prev, cfg));
}

ClauseFacts ApplyEffects(const ClauseFacts &facts,
                         std::span<const PreprocessingEffect> effects) {
  ClauseFacts out = facts;
  for (const PreprocessingEffect &e : effects) {
    if (e.kind != EffectKind::kOmitSubject) continue;
    for (ClauseSlot &slot : out.slots) {
      if (slot.role == Role::kS) {
        slot.omitted = true;
        slot.length = 0;
      }
    }
  }
  return out;
}

std::vector<FiredPreference> FirePreferences(const ClauseFacts &facts,
                                             const PlanOptions &options) {
  std::vector<FiredPreference> fired;
  RoleSequence roles = RolesOf(facts);
  auto fire = [&](const char *rule, std::string pattern, std::optional<Role> prim = {}) {
    if (!options.Enabled(rule)) return;
    OrderConstraint constraint{ParsePattern(pattern), prim};
    if (ConstraintApplies(constraint, roles)) {
      fired.push_back({rule, std::move(pattern), prim, false});
    }
  };
  auto letter = [](Role r) { return std::string(1, RoleLetter(r)); };

  // Orderings implied by center information.
  for (const ClauseSlot &slot : facts.slots) {
    if (slot.nominal && slot.center < 0) fire("Pref.i", "-" + letter(slot.role));
  }
  for (const ClauseSlot &a : facts.slots) {
    for (const ClauseSlot &b : facts.slots) {
      if (!a.nominal || !b.nominal || a.role == b.role) continue;
      if (a.center - b.center >= 2) {
        fire("Pref.ii", "-" + letter(a.role) + "-" + letter(b.role) + "-");
      }
    }
  }
  for (const ClauseSlot &slot : facts.slots) {
    if (slot.role == Role::kX && slot.nominal && slot.center > 1) {
      fire("Pref.iii", "X-");
      break;
    }
  }
  const ClauseSlot *s = facts.Find(Role::kS);
  const ClauseSlot *o = facts.Find(Role::kO);
  if (facts.index > 0 && s && o && !s->omitted && !o->omitted) {
    int top = std::max(s->anchored, o->anchored);
    if (top >= 1 && s->anchored != o->anchored) {
      fire("Pref.iiib", "(X-)(V-)Prim-", s->anchored > o->anchored ? Role::kS : Role::kO);
    }
  }

  // Statistical positioning, conditioned on the source order.
  for (const StatisticalRow &row : kStatisticalRows) {
    if (Matches(Cached(row.condition[0]), roles) && Matches(Cached(row.condition[1]), roles)) {
      fire(row.id, row.preference);
    }
  }
  if (s && s->pronoun) fire("Pref.xi", "-VS-");

  for (const auto &[rule, pattern] : kDefaultRows) fire(rule, pattern);
  return fired;
}

Discrimination Discriminate(std::span<const Role> order, const ClauseFacts &facts,
                            const ClauseFacts *next, const PlanOptions &options) {
  Discrimination out;
  for (const DiscriminationRow &row : kDiscriminationRows) {
    if (!options.Enabled(row.id) || !Matches(Cached(row.order), order)) continue;
    if (!Holds(row, order, facts, next)) {
      out.pass = false;
      out.failing.push_back(row.id);
    }
  }
  return out;
}

bool HasDiscriminationRow(std::span<const Role> order) {
  return std::any_of(kDiscriminationRows.begin(), kDiscriminationRows.end(),
                     [&](const DiscriminationRow &row) {
                       return Matches(Cached(row.order), order);
                     });
}

OrderPlan PlanClause(const ClauseFacts &input, const ClauseFacts *next,
                     Preprocessor &preprocessor, const PlanOptions &options) {
  OrderPlan plan;
  plan.utterance = input.index;
  plan.preprocessing = preprocessor.Run(input);
  ClauseFacts facts = ApplyEffects(input, plan.preprocessing);
  for (const ClauseSlot &slot : facts.slots) {
    if (slot.omitted) plan.omitted.push_back(slot.role);
  }
  plan.preferences = FirePreferences(facts, options);

  RoleSequence roles = RolesOf(facts);
  RoleSequence source = facts.SourceOrder();
  std::vector<OrderConstraint> constraints;
  std::vector<FiredPreference *> defaults;
  for (FiredPreference &p : plan.preferences) {
    if (IsDefaultRule(p.rule)) {
      defaults.push_back(&p);
    } else {
      constraints.push_back({ParsePattern(p.pattern), p.prim_binding});
    }
  }
  for (const PreprocessingEffect &e : plan.preprocessing) {
    if (e.pattern.empty()) continue;
    OrderConstraint c{ParsePattern(e.pattern), std::nullopt};
    if (ConstraintApplies(c, roles)) constraints.push_back(std::move(c));
  }
  // With nothing else to go on, the defaults are the constraints.
  bool refine = !constraints.empty();
  if (!refine) {
    for (const FiredPreference *p : defaults) constraints.push_back({ParsePattern(p->pattern), {}});
  }

  if (constraints.empty()) {
    plan.candidates = {source};
  } else {
    plan.candidates = SatisfyingOrders(constraints, roles);
    // Adjuncts no fired rule positions keep their source slots.
    bool x_named = std::any_of(constraints.begin(), constraints.end(),
                               [](const OrderConstraint &c) {
                                 return c.pattern.NamedRoles()[static_cast<int>(Role::kX)];
                               });
    if (!x_named) {
      std::vector<std::size_t> slots = Positions(source, Role::kX);
      std::erase_if(plan.candidates, [&](const RoleSequence &order) {
        return Positions(order, Role::kX) != slots;
      });
    }
    if (plan.candidates.empty()) {
      plan.all_orders_fallback = true;
      plan.candidates = AllOrders(roles);
    }
  }

  // Defaults are weaker than any other preference: each narrows the
  // candidates only if some narrowed order survives discrimination.
  if (refine) {
    for (FiredPreference *p : defaults) {
      const OrderPattern &pattern = Cached(p->pattern);
      std::vector<RoleSequence> narrowed;
      for (const RoleSequence &order : plan.candidates) {
        if (Matches(pattern, order)) narrowed.push_back(order);
      }
      bool survives = std::any_of(narrowed.begin(), narrowed.end(), [&](const RoleSequence &o) {
        return Discriminate(o, facts, next, options).pass;
      });
      // A default that narrows nothing, or would leave nothing, has no say.
      if (survives && narrowed.size() < plan.candidates.size()) {
        plan.candidates = std::move(narrowed);
      } else {
        p->suppressed = true;
      }
    }
  }

  for (const RoleSequence &order : plan.candidates) {
    Discrimination d = Discriminate(order, facts, next, options);
    if (d.pass) {
      plan.final_orders.push_back(order);
    } else {
      plan.exclusions.push_back({order, d.failing.front()});
    }
  }
  if (plan.final_orders.empty()) {
    plan.final_orders = {source};
    plan.fallback_used = true;
  }
  std::stable_sort(plan.final_orders.begin(), plan.final_orders.end(),
                   [](const RoleSequence &a, const RoleSequence &b) {
                     bool ra = HasDiscriminationRow(a);
                     bool rb = HasDiscriminationRow(b);
                     if (ra != rb) return !ra;
                     return RenderSequence(a) < RenderSequence(b);
                   });
  return plan;
}

std::vector<OrderPlan> PlanOrders(std::span<const ClauseFacts> clauses,
                                  const PlanOptions &options) {
  std::vector<OrderPlan> plans;
  Preprocessor preprocessor(options);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].index != i) {
      throw SequencingError("clause " + std::to_string(i) + " carries index " +
                            std::to_string(clauses[i].index));
    }
    const ClauseFacts *next = i + 1 < clauses.size() ? &clauses[i + 1] : nullptr;
    plans.push_back(PlanClause(clauses[i], next, preprocessor, options));
  }
  return plans;
}

std::vector<OrderPlan> PlanOrders(std::span<const ScoredUtterance> scored, const Config &cfg,
                                  const PlanOptions &options) {
  std::vector<ClauseFacts> clauses;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (scored[i].utterance.index != i) {
      throw SequencingError("utterance " + std::to_string(i) + " has not been scored in order");
    }
    clauses.push_back(FactsFor(scored[i], i > 0 ? &scored[i - 1] : nullptr, cfg));
  }
  return PlanOrders(clauses, options);
}

const RuleIds &KnownRuleIds() {
  static const RuleIds ids = [] {
    RuleIds out;
    out.preprocessing = {"Pre.i", "Pre.ii", "Pre.iii", "Pre.iv", "Pre.v", "Pre.vi"};
    out.preference = {"Pref.i", "Pref.ii", "Pref.iii", "Pref.iiib"};
    for (const auto &row : kStatisticalRows) out.preference.push_back(row.id);
    for (const char *id : {"Pref.xi", "Pref.xii", "Pref.xiii"}) out.preference.push_back(id);
    for (const auto &row : kDiscriminationRows) out.discrimination.push_back(row.id);
    return out;
  }();
  return ids;
}

}  // namespace centord
