#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace centord {

namespace {

using nlohmann::ordered_json;

std::string Join(const std::vector<std::string> &words, const char *sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

AnalysisReport Analysis(const ScoredUtterance &utt, History history) {
  AnalysisReport out;
  for (const ScoredNP &s : utt.scored) {
    const Constituent &c = utt.utterance.constituents[s.constituent];
    NpReport np;
    np.id = s.np_id;
    np.words = Join(c.np->words);
    np.role = RoleLetter(c.role);
    np.value = s.value;
    np.anchored = s.anchored_value;
    np.rules = RulesLabel(s);
    np.values = ValuesLabel(s);
    np.derivation = s.derivation;
    if (s.resolved_antecedent) np.antecedent = s.resolved_antecedent->np_id;
    np.entity = s.entity;
    out.nps.push_back(std::move(np));
  }
  for (std::size_t i : utt.cf) out.cf.push_back(utt.scored[i].np_id);
  out.cb = utt.cb;
  if (utt.discrete_center) {
    if (const ScoredNP *center = utt.ForConstituent(*utt.discrete_center)) {
      out.center = center->np_id;
      out.center_label = CenterLabel(utt, *center, history);
    }
  }
  out.transition = std::string(ToString(utt.transition));
  return out;
}

PlanReport Plan(const OrderPlan &plan) {
  PlanReport out;
  out.preprocessing = plan.preprocessing;
  for (const FiredPreference &p : plan.preferences) {
    PreferenceReport r{p.rule, p.pattern, std::nullopt, p.suppressed};
    if (p.prim_binding) r.prim = RoleLetter(*p.prim_binding);
    out.preferences.push_back(std::move(r));
  }
  for (const RoleSequence &o : plan.candidates) {
    out.candidates.push_back(RenderOrder(o, plan.omitted));
  }
  for (const Exclusion &e : plan.exclusions) {
    out.exclusions.push_back({RenderOrder(e.order, plan.omitted), e.rule});
  }
  for (const RoleSequence &o : plan.final_orders) {
    out.final_orders.push_back(RenderOrder(o, plan.omitted));
  }
  out.all_orders_fallback = plan.all_orders_fallback;
  out.fallback_used = plan.fallback_used;
  return out;
}

std::string Pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text + " ";
}

std::string Rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Display name for the backward-looking center: the head of the NP in this
// utterance that realizes the entity.
std::string CbLabel(const AnalysisReport &a) {
  if (!a.cb) return "-";
  for (const NpReport &np : a.nps) {
    if (np.entity == *a.cb) return np.words;
  }
  return *a.cb;
}

std::string PreferenceText(const PreferenceReport &p) {
  std::string text = p.rule + " " + p.pattern;
  if (p.prim) text += " [Prim=" + std::string(1, *p.prim) + "]";
  return p.suppressed ? "(" + text + ")" : text;
}

void AnalysisRows(const UtteranceReport &u, std::ostringstream &out) {
  const AnalysisReport &a = *u.analysis;
  if (a.nps.empty()) {
    out << "      (no noun phrases)\n";
  }
  for (std::size_t i = 0; i < a.nps.size(); ++i) {
    const NpReport &np = a.nps[i];
    std::string center = i == 0 ? a.center_label : "";
    std::string transition = i == 0 ? a.transition : "";
    std::string cb = i == 0 ? CbLabel(a) : "";
    out << Rstrip("      " + Pad(np.words, 28) + Pad(np.rules, 12) + Pad(np.values, 18) +
                  Pad(center, 18) + Pad(transition, 12) + cb)
        << "\n";
  }
}

void PlanRows(const PlanReport &p, std::ostringstream &out) {
  auto line = [&](const char *label, const std::string &body) {
    out << "      " << Pad(label, 15) << (body.empty() ? "none" : body) << "\n";
  };
  std::vector<std::string> effects;
  for (const PreprocessingEffect &e : p.preprocessing) {
    std::string text = e.rule + " " + std::string(ToString(e.kind));
    if (!e.pattern.empty()) text += " " + e.pattern;
    effects.push_back(text);
  }
  line("preprocessing", Join(effects, ", "));
  std::vector<std::string> prefs;
  for (const PreferenceReport &r : p.preferences) prefs.push_back(PreferenceText(r));
  line("preferences", Join(prefs, ", "));
  line("candidates", Join(p.candidates) + (p.all_orders_fallback ? "  (all orders)" : ""));
  std::vector<std::string> excluded;
  for (const ExclusionReport &e : p.exclusions) excluded.push_back(e.order + " " + e.rule);
  line("excluded", Join(excluded, ", "));
  line("result", Join(p.final_orders) + (p.fallback_used ? "  (source order kept)" : ""));
}

ordered_json ToJson(const UtteranceReport &u, const std::string &document) {
  ordered_json out;
  out["document"] = document;
  out["utterance"] = u.index;
  out["text"] = u.text;
  if (u.analysis) {
    const AnalysisReport &a = *u.analysis;
    ordered_json nps = ordered_json::array();
    for (const NpReport &np : a.nps) {
      ordered_json item;
      item["id"] = np.id;
      item["words"] = np.words;
      item["role"] = std::string(1, np.role);
      item["value"] = np.value;
      item["anchored_value"] = np.anchored;
      item["rules"] = np.rules;
      item["values"] = np.values;
      ordered_json derivation = ordered_json::array();
      for (const RuleContribution &c : np.derivation) {
        derivation.push_back(
            {{"rule", c.rule}, {"amount", c.amount}, {"part", std::string(ToString(c.part))}});
      }
      item["derivation"] = std::move(derivation);
      item["antecedent"] = np.antecedent ? ordered_json(*np.antecedent) : ordered_json();
      item["entity"] = np.entity;
      nps.push_back(std::move(item));
    }
    ordered_json analysis;
    analysis["noun_phrases"] = std::move(nps);
    analysis["cf"] = a.cf;
    analysis["cb"] = a.cb ? ordered_json(*a.cb) : ordered_json();
    analysis["center"] = a.center ? ordered_json(*a.center) : ordered_json();
    analysis["center_label"] = a.center_label;
    analysis["transition"] = a.transition;
    out["analysis"] = std::move(analysis);
  }
  if (u.plan) {
    const PlanReport &p = *u.plan;
    ordered_json plan;
    ordered_json effects = ordered_json::array();
    for (const PreprocessingEffect &e : p.preprocessing) {
      effects.push_back(
          {{"rule", e.rule}, {"kind", std::string(ToString(e.kind))}, {"pattern", e.pattern}});
    }
    plan["preprocessing"] = std::move(effects);
    ordered_json prefs = ordered_json::array();
    for (const PreferenceReport &r : p.preferences) {
      ordered_json item{{"rule", r.rule}, {"pattern", r.pattern}};
      item["prim"] = r.prim ? ordered_json(std::string(1, *r.prim)) : ordered_json();
      item["suppressed"] = r.suppressed;
      prefs.push_back(std::move(item));
    }
    plan["preferences"] = std::move(prefs);
    plan["candidates"] = p.candidates;
    ordered_json excluded = ordered_json::array();
    for (const ExclusionReport &e : p.exclusions) {
      excluded.push_back({{"order", e.order}, {"rule", e.rule}});
    }
    plan["exclusions"] = std::move(excluded);
    plan["final_orders"] = p.final_orders;
    plan["all_orders_fallback"] = p.all_orders_fallback;
    plan["fallback_used"] = p.fallback_used;
    out["plan"] = std::move(plan);
  }
  return out;
}

std::optional<std::string> OptionalString(const ordered_json &v) {
  if (v.is_null()) return std::nullopt;
  return v.get<std::string>();
}

UtteranceReport FromJson(const ordered_json &j) {
  UtteranceReport u;
  u.index = j.at("utterance").get<std::size_t>();
  u.text = j.at("text").get<std::string>();
  if (j.contains("analysis")) {
    const ordered_json &a = j.at("analysis");
    AnalysisReport out;
    for (const ordered_json &item : a.at("noun_phrases")) {
      NpReport np;
      np.id = item.at("id").get<std::string>();
      np.words = item.at("words").get<std::string>();
      std::string role = item.at("role").get<std::string>();
      if (role.size() != 1 || !RoleFromLetter(role[0])) throw std::invalid_argument("role");
      np.role = role[0];
      np.value = item.at("value").get<int>();
      np.anchored = item.at("anchored_value").get<int>();
      np.rules = item.at("rules").get<std::string>();
      np.values = item.at("values").get<std::string>();
      for (const ordered_json &c : item.at("derivation")) {
        auto part = ParseDerivationPart(c.at("part").get<std::string>());
        if (!part) throw std::invalid_argument("part");
        np.derivation.push_back({c.at("rule").get<std::string>(), c.at("amount").get<int>(), *part});
      }
      np.antecedent = OptionalString(item.at("antecedent"));
      np.entity = item.at("entity").get<std::string>();
      out.nps.push_back(std::move(np));
    }
    out.cf = a.at("cf").get<std::vector<std::string>>();
    out.cb = OptionalString(a.at("cb"));
    out.center = OptionalString(a.at("center"));
    out.center_label = a.at("center_label").get<std::string>();
    out.transition = a.at("transition").get<std::string>();
    u.analysis = std::move(out);
  }
  if (j.contains("plan")) {
    const ordered_json &p = j.at("plan");
    PlanReport out;
    for (const ordered_json &e : p.at("preprocessing")) {
      auto kind = ParseEffectKind(e.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("kind");
      out.preprocessing.push_back(
          {e.at("rule").get<std::string>(), *kind, e.at("pattern").get<std::string>()});
    }
    for (const ordered_json &r : p.at("preferences")) {
      PreferenceReport pref;
      pref.rule = r.at("rule").get<std::string>();
      pref.pattern = r.at("pattern").get<std::string>();
      if (auto prim = OptionalString(r.at("prim"))) {
        if (prim->size() != 1) throw std::invalid_argument("prim");
        pref.prim = (*prim)[0];
      }
      pref.suppressed = r.at("suppressed").get<bool>();
      out.preferences.push_back(std::move(pref));
    }
    out.candidates = p.at("candidates").get<std::vector<std::string>>();
    for (const ordered_json &e : p.at("exclusions")) {
      out.exclusions.push_back({e.at("order").get<std::string>(), e.at("rule").get<std::string>()});
    }
    out.final_orders = p.at("final_orders").get<std::vector<std::string>>();
    out.all_orders_fallback = p.at("all_orders_fallback").get<bool>();
    out.fallback_used = p.at("fallback_used").get<bool>();
    u.plan = std::move(out);
  }
  return u;
}

}  // namespace

RunReport BuildReport(const std::string &document, std::span<const ScoredUtterance> scored,
                      std::span<const OrderPlan> plans, ReportKind kind) {
  RunReport report;
  report.document = document;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    UtteranceReport u;
    u.index = scored[i].utterance.index;
    u.text = scored[i].utterance.text;
    if (kind != ReportKind::kOrder) u.analysis = Analysis(scored[i], scored);
    if (kind != ReportKind::kAnalyze) {
      if (i >= plans.size()) throw SequencingError("no order plan for utterance " + std::to_string(i));
      u.plan = Plan(plans[i]);
    }
    report.utterances.push_back(std::move(u));
  }
  return report;
}

std::string RenderTable(const RunReport &report, ReportKind kind) {
  std::ostringstream out;
  if (kind == ReportKind::kOrder) {
    for (const UtteranceReport &u : report.utterances) {
      out << u.index + 1;
      if (u.plan) {
        for (const std::string &o : u.plan->final_orders) out << " " << o;
      }
      out << "\n";
    }
    return out.str();
  }
  if (kind == ReportKind::kAnalyze) {
    out << Rstrip("No.   " + Pad("NP", 28) + Pad("RULES", 12) + Pad("VALUES", 18) +
                  Pad("CENTER", 18) + Pad("TRANSITION", 12) + "CB")
        << "\n";
  }
  for (const UtteranceReport &u : report.utterances) {
    out << Pad(std::to_string(u.index + 1), 5) << u.text << "\n";
    if (u.analysis) AnalysisRows(u, out);
    if (kind == ReportKind::kTrace && u.plan) PlanRows(*u.plan, out);
  }
  return out.str();
}

std::string RenderRecords(const RunReport &report) {
  std::string out;
  for (const UtteranceReport &u : report.utterances) {
    out += ToJson(u, report.document).dump();
    out += '\n';
  }
  return out;
}

RunReport ParseRecords(std::string_view text) {
  RunReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      ordered_json j = ordered_json::parse(line);
      report.document = j.at("document").get<std::string>();
      report.utterances.push_back(FromJson(j));
    } catch (const ordered_json::exception &e) {
      throw ParseError(number, "", std::string("malformed report record: ") + e.what());
    } catch (const std::invalid_argument &e) {
      throw ParseError(number, e.what(), "unknown value");
    }
  }
  return report;
}

}  // namespace centord
