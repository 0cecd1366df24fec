#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "ingest.hpp"

namespace centord {

namespace {

const std::set<std::string> kBe{"am", "is", "are", "was", "were", "be", "been", "being"};
const std::set<std::string> kAuxiliaries{
    "am",    "is",     "are",     "was",     "were",    "be",      "been",     "being",
    "has",   "have",   "had",     "do",      "does",    "did",     "doesn't",  "don't",
    "didn't", "isn't", "aren't",  "wasn't",  "weren't", "hasn't",  "haven't",  "hadn't",
    "will",  "would",  "can",     "could",   "may",     "might",   "must",     "shall",
    "should", "won't", "can't",   "couldn't", "wouldn't", "shouldn't"};
const std::set<std::string> kNegation{"not", "never"};
// Common verbs without a regular -ed form, plus present-tense forms the
// fragment uses.
const std::set<std::string> kVerbs{
    "came",  "come",  "comes",  "went",  "go",    "goes",   "saw",   "see",   "sees",
    "like",  "likes", "made",   "make",  "makes", "took",   "take",  "takes", "gave",
    "give",  "gives", "found",  "find",  "finds", "knew",   "know",  "knows", "said",
    "say",   "says",  "thought", "think", "thinks", "got",  "get",   "gets",  "wrote",
    "write", "writes", "read",  "reads", "ran",   "run",    "runs",  "met",   "meet",
    "meets", "told",  "tell",   "tells", "left",  "leave",  "leaves", "held", "hold",
    "holds", "won",   "win",    "wins",  "lost",  "lose",   "loses", "bought", "buy",
    "buys",  "brought", "bring", "brings", "began", "begin", "begins", "seemed", "seems",
    "became", "become", "becomes", "showed", "shows", "shown", "done", "seen", "given",
    "taken", "known", "written", "conduct", "conducts", "examine", "examines", "judge",
    "judges", "impress", "impresses", "want", "wants", "need", "needs", "love", "loves"};
const std::set<std::string> kPrepositions{"by",   "in",   "on",     "at",    "to",     "with",
                                          "for",  "from", "about",  "into",  "after",  "before",
                                          "during", "under", "over", "through", "without"};
const std::set<std::string> kQuantifiers{"many", "some", "several", "few",  "all",  "every",
                                         "each", "any",  "no",      "most", "much", "both",
                                         "two",  "three", "four"};
const std::set<std::string> kPluralPronouns{"we", "they", "these", "those"};

struct Token {
  std::string text;
  std::string lower;
};

std::string StripPossessive(std::string word) {
  if (word.size() > 2 && word.compare(word.size() - 2, 2, "'s") == 0) {
    word.resize(word.size() - 2);
  } else if (word.size() > 1 && word.back() == '\'') {
    word.pop_back();
  }
  return word;
}

bool IsPossessiveToken(const std::string &lower) {
  return (lower.size() > 2 && lower.compare(lower.size() - 2, 2, "'s") == 0) ||
         (lower.size() > 2 && lower.back() == '\'' && lower[lower.size() - 2] == 's');
}

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() > suffix.size() + 1 &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsVerbLike(const std::string &lower) {
  return kVerbs.count(lower) || EndsWith(lower, "ed");
}

bool IsVerbStart(const std::string &lower) {
  return kAuxiliaries.count(lower) || IsVerbLike(lower);
}

bool IsAuxiliary(const std::string &lower) {
  return kAuxiliaries.count(lower) || kNegation.count(lower);
}

class ClauseAnnotator {
 public:
  ClauseAnnotator(const Lexicon &lex, std::size_t utt, std::size_t line)
      : lex_(lex), utt_(utt), line_(line) {}

  Utterance Annotate(const std::string &text) {
    Utterance out;
    out.index = utt_;
    out.text = text;
    std::vector<Token> tokens = Tokenize(text);
    if (tokens.empty()) Fail("empty clause");

    if (TryCleft(tokens) || TryPrompt(tokens) || TryFronted(tokens)) {
      // handled
    } else {
      Clause(tokens, 0, tokens.size(), nullptr);
    }
    for (std::size_t i = 0; i < constituents_.size(); ++i) {
      constituents_[i].source_position = i;
    }
    out.constituents = std::move(constituents_);
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(line_, "text", what);
  }

  static std::vector<Token> Tokenize(const std::string &text) {
    std::vector<Token> out;
    std::string current;
    auto flush = [&] {
      if (current.empty()) return;
      std::string lower = Lowercase(current);
      out.push_back({current, lower});
      current.clear();
    };
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == ',') {
        flush();
        out.push_back({",", ","});
      } else if (c == '.' || c == '!' || c == '?' || c == ';' || c == ':') {
        flush();
      } else {
        current.push_back(c);
      }
    }
    flush();
    return out;
  }

  std::vector<std::string> Words(const std::vector<Token> &tokens, std::size_t b,
                                 std::size_t e) const {
    std::vector<std::string> out;
    for (std::size_t i = b; i < e; ++i) out.push_back(tokens[i].text);
    return out;
  }

  std::string NextId() const {
    return "u" + std::to_string(utt_) + ".c" + std::to_string(constituents_.size());
  }

  Determiner DeterminerOf(const std::string &lower) const {
    if (lex_.demonstrative_pronouns().count(lower) && lex_.definite_markers().count(lower)) {
      return Determiner::kDemonstrative;
    }
    if (lex_.definite_markers().count(lower)) return Determiner::kDefinite;
    if (lex_.indefinite_markers().count(lower)) return Determiner::kIndefinite;
    if (lex_.possessive_markers().count(lower)) return Determiner::kPossessive;
    if (kQuantifiers.count(lower)) return Determiner::kQuantifier;
    return Determiner::kBare;
  }

  static Number NumberOfHead(const std::string &lemma) {
    bool plural = lemma.size() > 2 && lemma.back() == 's' && lemma[lemma.size() - 2] != 's';
    return plural ? Number::kPlural : Number::kSingular;
  }

  NounPhrase Part(const std::vector<Token> &tokens, std::size_t b, std::size_t e,
                  const std::string &id) const {
    NounPhrase np;
    np.id = id;
    np.words = Words(tokens, b, e);
    np.determiner = DeterminerOf(tokens[b].lower);
    np.head_lemma = StripPossessive(tokens[e - 1].lower);
    np.number = NumberOfHead(np.head_lemma);
    return np;
  }

  NounPhrase Noun(const std::vector<Token> &tokens, std::size_t b, std::size_t e) const {
    NounPhrase np;
    np.id = NextId();
    np.words = Words(tokens, b, e);
    const std::string &first = tokens[b].lower;
    if (e - b == 1 && (lex_.personal_pronouns().count(first) ||
                       lex_.demonstrative_pronouns().count(first))) {
      np.pronoun = lex_.personal_pronouns().count(first) ? PronounClass::kPersonal
                                                         : PronounClass::kDemonstrative;
      np.head_lemma = first;
      np.number = kPluralPronouns.count(first) ? Number::kPlural : Number::kSingular;
      return np;
    }

    np.determiner = DeterminerOf(first);
    std::size_t body = np.determiner == Determiner::kBare ? b : b + 1;
    if (body >= e) body = b;

    // "N_o's N_p" and "N_p of N_o".
    for (std::size_t i = body; i + 1 < e; ++i) {
      if (IsPossessiveToken(tokens[i].lower)) {
        auto parts = std::make_shared<GenitiveParts>();
        parts->possessor = Part(tokens, body, i + 1, np.id + ".possessor");
        parts->possessed = Part(tokens, i + 1, e, np.id + ".possessed");
        np.head_lemma = parts->possessed.head_lemma;
        np.genitive = std::move(parts);
        break;
      }
      if (tokens[i].lower == "of" && i > body) {
        auto parts = std::make_shared<GenitiveParts>();
        parts->possessed = Part(tokens, body, i, np.id + ".possessed");
        parts->possessor = Part(tokens, i + 1, e, np.id + ".possessor");
        np.head_lemma = parts->possessed.head_lemma;
        np.genitive = std::move(parts);
        break;
      }
    }
    if (!np.genitive) np.head_lemma = StripPossessive(tokens[e - 1].lower);
    np.number = NumberOfHead(np.head_lemma);
    return np;
  }

  void AddNominal(Role role, const std::vector<Token> &tokens, std::size_t b, std::size_t e,
                  Construction construction = Construction::kNone) {
    Constituent c;
    c.role = role;
    NounPhrase np = Noun(tokens, b, e);
    np.construction = construction;
    c.words = np.words;
    c.np = std::move(np);
    constituents_.push_back(std::move(c));
  }

  void AddPlain(Role role, const std::vector<Token> &tokens, std::size_t b, std::size_t e) {
    Constituent c;
    c.role = role;
    c.words = Words(tokens, b, e);
    constituents_.push_back(std::move(c));
  }

  bool LooksPredicative(const std::vector<Token> &tokens, std::size_t b, std::size_t e,
                        bool copula) const {
    if (DeterminerOf(tokens[b].lower) != Determiner::kBare) return false;
    if (lex_.personal_pronouns().count(tokens[b].lower)) return false;
    if (copula) return true;
    const std::string &w = tokens[e - 1].lower;
    for (std::string_view suffix : {"ing", "ly", "ive", "ous", "ful", "able", "ible", "al"}) {
      if (EndsWith(w, suffix)) return true;
    }
    return false;
  }

  // Verb group starting at |v|; returns its end and whether it is a bare copula.
  std::pair<std::size_t, bool> VerbGroup(const std::vector<Token> &tokens, std::size_t v,
                                         std::size_t end) const {
    std::size_t e = v + 1;
    while (e < end && IsAuxiliary(tokens[e - 1].lower) &&
           (IsAuxiliary(tokens[e].lower) || IsVerbLike(tokens[e].lower) ||
            EndsWith(tokens[e].lower, "ing"))) {
      ++e;
    }
    bool copula = true;
    for (std::size_t i = v; i < e; ++i) {
      if (!kBe.count(tokens[i].lower) && !kNegation.count(tokens[i].lower)) copula = false;
    }
    if (copula && e < end && EndsWith(tokens[e].lower, "ing")) copula = false;
    return {e, copula};
  }

  // Subject, verb group, then an object chunk and prepositional adjuncts.
  // |subject_given| marks clauses whose subject was already placed.
  void Clause(const std::vector<Token> &tokens, std::size_t b, std::size_t e,
              const bool *subject_given) {
    std::size_t v = b;
    bool has_subject = subject_given && *subject_given;
    if (!has_subject) {
      v = b + 1;
      while (v < e && !IsVerbStart(tokens[v].lower)) ++v;
      if (v >= e) Fail("no verb group found");
      AddNominal(Role::kS, tokens, b, v);
    } else if (v >= e || !IsVerbStart(tokens[v].lower)) {
      Fail("no verb group found");
    }
    auto [after, copula] = VerbGroup(tokens, v, e);
    AddPlain(Role::kV, tokens, v, after);
    Predicate(tokens, after, e, copula);
  }

  void Predicate(const std::vector<Token> &tokens, std::size_t b, std::size_t e, bool copula) {
    bool object_taken = false;
    std::size_t i = b;
    while (i < e) {
      if (tokens[i].lower == ",") {
        ++i;
        continue;
      }
      bool pp = kPrepositions.count(tokens[i].lower) > 0;
      std::size_t start = pp ? i + 1 : i;
      std::size_t j = start;
      while (j < e && tokens[j].lower != "," &&
             !(j > start && kPrepositions.count(tokens[j].lower))) {
        ++j;
      }
      if (start >= j) {
        AddPlain(Role::kX, tokens, i, j);
      } else if (pp) {
        if (LooksPredicative(tokens, start, j, false)) {
          AddPlain(Role::kX, tokens, i, j);
        } else {
          AddNominal(Role::kX, tokens, start, j);
        }
      } else if (!object_taken && !LooksPredicative(tokens, start, j, copula)) {
        AddNominal(Role::kO, tokens, start, j);
        object_taken = true;
      } else {
        AddPlain(Role::kX, tokens, start, j);
      }
      i = j;
    }
  }

  bool HasRole(Role role) const {
    return std::any_of(constituents_.begin(), constituents_.end(),
                       [&](const Constituent &c) { return c.role == role; });
  }

  // "It was/is N who/that ..."
  bool TryCleft(const std::vector<Token> &tokens) {
    if (tokens.size() < 4 || tokens[0].lower != "it" ||
        (tokens[1].lower != "was" && tokens[1].lower != "is")) {
      return false;
    }
    std::size_t k = 3;
    while (k < tokens.size() && tokens[k].lower != "who" && tokens[k].lower != "that") ++k;
    if (k >= tokens.size() || k + 1 >= tokens.size()) return false;

    bool subject_gap = IsVerbStart(tokens[k + 1].lower);
    if (subject_gap) {
      AddNominal(Role::kS, tokens, 2, k, Construction::kCleft);
      bool given = true;
      Clause(tokens, k + 1, tokens.size(), &given);
    } else {
      AddNominal(Role::kO, tokens, 2, k, Construction::kCleft);
      Clause(tokens, k + 1, tokens.size(), nullptr);
      if (std::count_if(constituents_.begin(), constituents_.end(),
                        [](const Constituent &c) { return c.role == Role::kO; }) > 1) {
        constituents_.front().role = Role::kX;
      }
    }
    return true;
  }

  // "As for N, clause"
  bool TryPrompt(const std::vector<Token> &tokens) {
    std::string joined;
    for (const Token &t : tokens) joined += t.lower + " ";
    for (const std::string &prompt : lex_.prompts()) {
      if (joined.rfind(prompt + " ", 0) != 0) continue;
      std::size_t n = 1 + static_cast<std::size_t>(
                              std::count(prompt.begin(), prompt.end(), ' '));
      auto comma = std::find_if(tokens.begin() + n, tokens.end(),
                                [](const Token &t) { return t.lower == ","; });
      if (comma == tokens.end() || comma == tokens.begin() + n) return false;
      std::size_t c = static_cast<std::size_t>(comma - tokens.begin());
      Constituent x;
      x.role = Role::kX;
      NounPhrase np = Noun(tokens, n, c);
      np.construction = Construction::kPrompted;
      x.words = np.words;
      x.np = std::move(np);
      constituents_.push_back(std::move(x));
      Clause(tokens, c + 1, tokens.size(), nullptr);
      return true;
    }
    return false;
  }

  // "N_f, clause-without-N_f"
  bool TryFronted(const std::vector<Token> &tokens) {
    auto comma = std::find_if(tokens.begin(), tokens.end(),
                              [](const Token &t) { return t.lower == ","; });
    if (comma == tokens.begin() || comma == tokens.end() || comma + 1 == tokens.end()) {
      return false;
    }
    std::size_t c = static_cast<std::size_t>(comma - tokens.begin());
    ClauseAnnotator rest(lex_, utt_, line_);
    rest.Clause(tokens, c + 1, tokens.size(), nullptr);
    if (rest.HasRole(Role::kO)) {
      AddPlain(Role::kX, tokens, 0, c);
    } else {
      AddNominal(Role::kO, tokens, 0, c, Construction::kFronted);
    }
    Clause(tokens, c + 1, tokens.size(), nullptr);
    return true;
  }

  const Lexicon &lex_;
  std::size_t utt_;
  std::size_t line_;
  std::vector<Constituent> constituents_;
};

}  // namespace

Document AnnotateDemo(std::string_view text, const Lexicon &lex,
                      const std::string &document_id) {
  Document doc;
  doc.id = document_id;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ClauseAnnotator annotator(lex, doc.utterances.size(), line_number);
    doc.utterances.push_back(annotator.Annotate(line));
  }
  return doc;
}

}  // namespace centord
