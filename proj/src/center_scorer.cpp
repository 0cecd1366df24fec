#include "center_scorer.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "errors.hpp"

namespace centord {

namespace {

constexpr std::array<std::pair<std::string_view, Transition>, 3> kTransitions{{
    {"Initial", Transition::kInitial},
    {"Continuing", Transition::kContinuing},
    {"Shifting", Transition::kShifting},
}};

constexpr std::array<std::pair<std::string_view, DerivationPart>, 3> kParts{{
    {"phrase", DerivationPart::kPhrase},
    {"possessor", DerivationPart::kPossessor},
    {"possessed", DerivationPart::kPossessed},
}};

int Total(const std::vector<RuleContribution> &derivation) {
  return std::accumulate(derivation.begin(), derivation.end(), 0,
                         [](int sum, const RuleContribution &c) { return sum + c.amount; });
}

bool IsAnchoring(const std::string &rule) {
  return rule.rfind("Point.", 0) == 0 || rule.rfind("Pron.", 0) == 0 || rule == "Comp.1" ||
         rule == "Comp.2";
}

// Candidate antecedent surfaces in one scored utterance, in Cf order. The
// possessed part of a genitive shares the phrase's entity.
struct Mention {
  std::string_view head;
  std::string_view np_id;
  std::string_view entity;
  Number number;
  bool pronoun;
};

std::vector<Mention> MentionsOf(const ScoredUtterance &utt) {
  std::vector<Mention> out;
  for (std::size_t i : utt.cf) {
    const ScoredNP &s = utt.scored[i];
    const NounPhrase &np = *utt.utterance.constituents[s.constituent].np;
    out.push_back({np.head_lemma, np.id, s.entity, np.number, np.is_pronoun()});
    if (np.is_genitive() && s.possessor_entity) {
      const NounPhrase &owner = np.genitive->possessor;
      out.push_back({owner.head_lemma, owner.id, *s.possessor_entity, owner.number, false});
      const NounPhrase &owned = np.genitive->possessed;
      if (owned.head_lemma != np.head_lemma) {
        out.push_back({owned.head_lemma, owned.id, s.entity, owned.number, false});
      }
    }
  }
  return out;
}

std::optional<AntecedentRef> FindById(std::string_view id, History history) {
  for (std::size_t u = history.size(); u-- > 0;) {
    for (const Mention &m : MentionsOf(history[u])) {
      if (m.np_id == id) return AntecedentRef{std::string(m.entity), std::string(m.np_id), u};
    }
  }
  return std::nullopt;
}

int DeterminerCredit(Determiner determiner, std::vector<RuleContribution> *out) {
  switch (determiner) {
    case Determiner::kDefinite:
    case Determiner::kDemonstrative:
      out->push_back({"Comp.2", 1, DerivationPart::kPhrase});
      return 1;
    case Determiner::kPossessive:
      out->push_back({"Comp.3", 2, DerivationPart::kPhrase});
      return 2;
    default:
      return 0;
  }
}

struct Composite {
  std::vector<RuleContribution> derivation;
  std::optional<ReiterationMatch> phrase_match;
  std::optional<ReiterationMatch> possessor_match;
};

// The composite-center route: a base rule plus every applicable increase.
// Indefinites get a second candidate on the default base when a reiteration
// shows the entity is not new, and the larger total wins.
Composite CompositeRoute(const NounPhrase &np, std::size_t utt_index, History history,
                         const Lexicon &lex, int limit) {
  Composite result;
  std::vector<RuleContribution> increases;
  if (!np.is_genitive()) {
    result.phrase_match = FindReiteration(np.head_lemma, utt_index, history, lex, limit);
    if (result.phrase_match) increases.push_back({"Comp.1", 1, DerivationPart::kPhrase});
    DeterminerCredit(np.determiner, &increases);
  } else {
    const GenitiveParts &parts = *np.genitive;
    DeterminerCredit(np.determiner, &increases);
    increases.push_back({"Comp.4", 0, DerivationPart::kPhrase});
    result.possessor_match =
        FindReiteration(parts.possessor.head_lemma, utt_index, history, lex, limit);
    result.phrase_match =
        FindReiteration(parts.possessed.head_lemma, utt_index, history, lex, limit);
    if (result.possessor_match) {
      increases.push_back({"Comp.1", 1, DerivationPart::kPossessor});
    }
    if (result.phrase_match) increases.push_back({"Comp.1", 1, DerivationPart::kPossessed});
  }

  auto with_base = [&](bool indefinite_base) {
    std::vector<RuleContribution> d = increases;
    if (indefinite_base) d.push_back({"Non.1", -1, DerivationPart::kPhrase});
    if (np.is_genitive()) {
      d.push_back({"Non.2", 0, DerivationPart::kPossessor});
      d.push_back({"Non.2", 0, DerivationPart::kPossessed});
    } else if (!indefinite_base) {
      d.push_back({"Non.2", 0, DerivationPart::kPhrase});
    }
    return d;
  };

  bool indefinite = np.determiner == Determiner::kIndefinite;
  result.derivation = with_base(indefinite);
  if (indefinite && (result.phrase_match || result.possessor_match)) {
    auto alternative = with_base(false);
    if (Total(alternative) > Total(result.derivation)) result.derivation = alternative;
  }
  return result;
}

}  // namespace

std::string_view ToString(Transition transition) {
  for (const auto &[name, value] : kTransitions) {
    if (value == transition) return name;
  }
  return "?";
}

std::optional<Transition> ParseTransition(std::string_view text) {
  for (const auto &[name, value] : kTransitions) {
    if (name == text) return value;
  }
  return std::nullopt;
}

std::string_view ToString(DerivationPart part) {
  for (const auto &[name, value] : kParts) {
    if (value == part) return name;
  }
  return "?";
}

std::optional<DerivationPart> ParseDerivationPart(std::string_view text) {
  for (const auto &[name, value] : kParts) {
    if (name == text) return value;
  }
  return std::nullopt;
}

const ScoredNP *ScoredUtterance::ForConstituent(std::size_t constituent) const {
  for (const ScoredNP &s : scored) {
    if (s.constituent == constituent) return &s;
  }
  return nullptr;
}

const ScoredNP *ScoredUtterance::ForRole(Role source_role) const {
  for (const ScoredNP &s : scored) {
    if (utterance.constituents[s.constituent].role == source_role) return &s;
  }
  return nullptr;
}

std::set<std::string> ScoredUtterance::RealizedEntities() const {
  std::set<std::string> out;
  for (const ScoredNP &s : scored) {
    out.insert(s.entity);
    if (s.possessor_entity) out.insert(*s.possessor_entity);
  }
  return out;
}

int ReferentialLimit(const NounPhrase &np, const Config &cfg, const Constituent &constituent) {
  int length = static_cast<int>(np.words.size());
  if (cfg.use_target_lengths && constituent.target_length) length = *constituent.target_length;
  return cfg.distance_factor * length;
}

std::optional<ReiterationMatch> FindReiteration(std::string_view head_lemma,
                                                std::size_t utt_index, History history,
                                                const Lexicon &lex, int limit) {
  std::size_t available = std::min(utt_index, history.size());
  for (std::size_t distance = 1; distance <= available; ++distance) {
    if (static_cast<int>(distance) > limit) break;
    std::size_t u = utt_index - distance;
    for (const Mention &m : MentionsOf(history[u])) {
      if (m.pronoun) continue;
      if (lex.SameLexeme(head_lemma, m.head)) {
        return ReiterationMatch{std::string(m.entity), std::string(m.np_id), u, distance};
      }
    }
  }
  return std::nullopt;
}

std::optional<ReiterationMatch> FindReiteration(const NounPhrase &np, std::size_t utt_index,
                                                History history, const Lexicon &lex,
                                                const Config &cfg,
                                                const Constituent &constituent) {
  return FindReiteration(np.head_lemma, utt_index, history, lex,
                         ReferentialLimit(np, cfg, constituent));
}

std::optional<AntecedentRef> ResolvePronoun(const NounPhrase &np, std::size_t utt_index,
                                            History history, const Config &cfg,
                                            const Constituent &constituent) {
  std::size_t available = std::min(utt_index, history.size());
  if (np.antecedent) {
    if (auto found = FindById(*np.antecedent, history.first(available))) return found;
  }
  int limit = ReferentialLimit(np, cfg, constituent);
  for (std::size_t distance = 1; distance <= available; ++distance) {
    if (distance > 1 && static_cast<int>(distance) > limit) break;
    std::size_t u = utt_index - distance;
    const ScoredUtterance &prev = history[u];
    for (std::size_t i : prev.cf) {
      const ScoredNP &s = prev.scored[i];
      const NounPhrase &cand = *prev.utterance.constituents[s.constituent].np;
      if (cand.number == np.number) return AntecedentRef{s.entity, cand.id, u};
    }
  }
  return std::nullopt;
}

ScoredNP CenterValue(const Constituent &constituent, std::size_t index, std::size_t utt_index,
                     History history, const Lexicon &lex, const Config &cfg) {
  if (!constituent.np) {
    throw ContractError("constituent " + std::to_string(index) + " has no noun phrase");
  }
  const NounPhrase &np = *constituent.np;
  history = history.first(std::min(utt_index, history.size()));

  ScoredNP out;
  out.constituent = index;
  out.np_id = np.id;
  out.entity = np.id;

  std::vector<std::vector<RuleContribution>> routes;
  switch (np.construction) {
    case Construction::kCleft: routes.push_back({{"Point.1", 3}}); break;
    case Construction::kFronted: routes.push_back({{"Point.2", 3}}); break;
    case Construction::kPrompted: routes.push_back({{"Point.3", 3}}); break;
    case Construction::kNone: break;
  }

  if (np.is_pronoun()) {
    out.resolved_antecedent = ResolvePronoun(np, utt_index, history, cfg, constituent);
    if (!out.resolved_antecedent) {
      routes.push_back({{"Non.2", 0}});
    } else if (np.pronoun == PronounClass::kPersonal) {
      routes.push_back({{"Pron.1", 3}});
    } else {
      routes.push_back({{"Pron.2", 2}});
    }
    if (out.resolved_antecedent) out.entity = out.resolved_antecedent->entity;
  } else {
    int limit = ReferentialLimit(np, cfg, constituent);
    Composite composite = CompositeRoute(np, utt_index, history, lex, limit);
    routes.push_back(composite.derivation);
    if (np.is_genitive()) {
      out.possessor_entity = composite.possessor_match ? composite.possessor_match->entity
                                                       : np.genitive->possessor.id;
    }
    // Explicit coreference annotation wins over lexical linking.
    std::optional<AntecedentRef> annotated;
    if (np.antecedent) annotated = FindById(*np.antecedent, history);
    if (annotated) {
      out.entity = annotated->entity;
    } else if (composite.phrase_match) {
      out.entity = composite.phrase_match->entity;
    }
  }

  // Highest total wins; earlier routes win ties.
  const std::vector<RuleContribution> *best = &routes.front();
  for (const auto &route : routes) {
    if (Total(route) > Total(*best)) best = &route;
  }
  out.derivation = *best;
  out.value = Total(out.derivation);
  out.anchored_value = 0;
  for (const RuleContribution &c : out.derivation) {
    if (IsAnchoring(c.rule)) out.anchored_value += c.amount;
  }
  return out;
}

ScoredUtterance ScoreUtterance(const Utterance &utt, History history, const Lexicon &lex,
                               const Config &cfg) {
  if (history.size() < utt.index) {
    throw SequencingError("utterance " + std::to_string(utt.index) + " scored with only " +
                          std::to_string(history.size()) + " prior utterances");
  }
  history = history.first(utt.index);

  ScoredUtterance out;
  out.utterance = utt;
  for (std::size_t c = 0; c < utt.constituents.size(); ++c) {
    if (!utt.constituents[c].np) continue;
    out.scored.push_back(CenterValue(utt.constituents[c], c, utt.index, history, lex, cfg));
  }

  out.cf.resize(out.scored.size());
  std::iota(out.cf.begin(), out.cf.end(), 0);
  std::sort(out.cf.begin(), out.cf.end(), [&](std::size_t a, std::size_t b) {
    return CfRankOf(utt.constituents[out.scored[a].constituent]) <
           CfRankOf(utt.constituents[out.scored[b].constituent]);
  });

  std::optional<std::size_t> best;
  for (std::size_t i : out.cf) {
    if (!best || out.scored[i].value > out.scored[*best].value) best = i;
  }
  if (best) out.discrete_center = out.scored[*best].constituent;

  if (utt.index == 0) {
    out.transition = Transition::kInitial;
    return out;
  }
  const ScoredUtterance &prev = history.back();
  std::set<std::string> previous = prev.RealizedEntities();
  for (std::size_t i : out.cf) {
    if (previous.count(out.scored[i].entity)) {
      out.cb = out.scored[i].entity;
      break;
    }
  }
  if (out.cb && prev.cb && *out.cb == *prev.cb) {
    out.transition = Transition::kContinuing;
  } else if (!out.cb && !prev.cb) {
    out.transition = Transition::kInitial;
  } else {
    out.transition = Transition::kShifting;
  }
  return out;
}

std::vector<ScoredUtterance> ScoreDocument(const Document &doc, const Lexicon &lex,
                                           const Config &cfg) {
  std::vector<ScoredUtterance> out;
  out.reserve(doc.utterances.size());
  for (const Utterance &utt : doc.utterances) {
    out.push_back(ScoreUtterance(utt, out, lex, cfg));
  }
  return out;
}

std::string RulesLabel(const ScoredNP &np) {
  std::vector<std::string> composite;
  std::string base;
  for (const RuleContribution &c : np.derivation) {
    if (c.rule.rfind("Comp.", 0) == 0) {
      std::string n = c.rule.substr(5);
      if (std::find(composite.begin(), composite.end(), n) == composite.end()) {
        composite.push_back(n);
      }
    } else if (base.empty()) {
      base = c.rule;
    }
  }
  if (composite.empty()) return base;
  std::sort(composite.begin(), composite.end());
  std::string out = "Comp.";
  for (std::size_t i = 0; i < composite.size(); ++i) {
    if (i) out += ",";
    out += composite[i];
  }
  return out;
}

std::string ValuesLabel(const ScoredNP &np) {
  std::vector<int> terms;
  for (const RuleContribution &c : np.derivation) {
    if (c.rule != "Comp.4") terms.push_back(c.amount);
  }
  std::string out = std::to_string(np.value);
  if (terms.size() < 2) return out;
  out += " = ";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += terms[i] < 0 ? "" : "+";
    out += std::to_string(terms[i]);
  }
  return out;
}

std::string CenterLabel(const ScoredUtterance &utt, const ScoredNP &np, History history) {
  const NounPhrase &phrase = *utt.utterance.constituents[np.constituent].np;
  std::string label = Lowercase(phrase.is_pronoun() ? phrase.words.front() : phrase.head_lemma);
  if (phrase.is_pronoun() && np.resolved_antecedent) {
    const AntecedentRef &ref = *np.resolved_antecedent;
    if (ref.utterance < history.size()) {
      for (const Mention &m : MentionsOf(history[ref.utterance])) {
        if (m.np_id == ref.np_id) {
          label += " = " + Lowercase(m.head);
          break;
        }
      }
    }
  }
  return label;
}

}  // namespace centord
