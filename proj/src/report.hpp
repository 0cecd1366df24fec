#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "center_scorer.hpp"
#include "ordering_engine.hpp"

namespace centord {

struct NpReport {
  std::string id;
  std::string words;
  char role = 'X';
  int value = 0;
  int anchored = 0;
  std::string rules;   // "Comp.1,2"
  std::string values;  // "2 = 1+1+0"
  std::vector<RuleContribution> derivation;
  std::optional<std::string> antecedent;  // resolved NP id
  std::string entity;

  friend bool operator==(const NpReport &, const NpReport &) = default;
};

struct AnalysisReport {
  std::vector<NpReport> nps;
  std::vector<std::string> cf;  // NP ids, highest rank first
  std::optional<std::string> cb;
  std::optional<std::string> center;  // NP id
  std::string center_label;           // "they = results"
  std::string transition;

  friend bool operator==(const AnalysisReport &, const AnalysisReport &) = default;
};

struct PreferenceReport {
  std::string rule;
  std::string pattern;
  std::optional<char> prim;
  bool suppressed = false;

  friend bool operator==(const PreferenceReport &, const PreferenceReport &) = default;
};

struct ExclusionReport {
  std::string order;
  std::string rule;

  friend bool operator==(const ExclusionReport &, const ExclusionReport &) = default;
};

struct PlanReport {
  std::vector<PreprocessingEffect> preprocessing;
  std::vector<PreferenceReport> preferences;
  std::vector<std::string> candidates;  // rendered, omitted roles bracketed
  std::vector<ExclusionReport> exclusions;
  std::vector<std::string> final_orders;
  bool all_orders_fallback = false;
  bool fallback_used = false;

  friend bool operator==(const PlanReport &, const PlanReport &) = default;
};

struct UtteranceReport {
  std::size_t index = 0;
  std::string text;
  std::optional<AnalysisReport> analysis;
  std::optional<PlanReport> plan;

  friend bool operator==(const UtteranceReport &, const UtteranceReport &) = default;
};

struct RunReport {
  std::string document;
  std::vector<UtteranceReport> utterances;

  friend bool operator==(const RunReport &, const RunReport &) = default;
};

enum class ReportKind { kAnalyze, kOrder, kTrace };

// |plans| may be empty when only the analysis is reported.
RunReport BuildReport(const std::string &document, std::span<const ScoredUtterance> scored,
                      std::span<const OrderPlan> plans, ReportKind kind);

std::string RenderTable(const RunReport &report, ReportKind kind);

// One JSON object per utterance, one per line.
std::string RenderRecords(const RunReport &report);

// Inverse of RenderRecords. Throws ParseError on malformed input.
RunReport ParseRecords(std::string_view text);

}  // namespace centord
