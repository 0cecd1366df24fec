#include "ingest.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace centord {

namespace {

using nlohmann::ordered_json;

const std::set<std::string> kRecordFields{"text", "constituents"};
const std::set<std::string> kConstituentFields{
    "role",         "words",    "id",         "head_lemma",    "number",
    "determiner",   "pronoun",  "construction", "genitive",    "antecedent_id",
    "target_role_override", "target_length"};
const std::set<std::string> kPartFields{"id", "words", "head_lemma", "number", "determiner"};
const std::set<std::string> kNounFields{"id",           "head_lemma", "number",
                                        "determiner",   "pronoun",    "construction",
                                        "genitive",     "antecedent_id"};

class RecordReader {
 public:
  RecordReader(std::size_t line, const ReadOptions &options, std::vector<std::string> *warnings)
      : line_(line), options_(options), warnings_(warnings) {}

  [[noreturn]] void Fail(const std::string &field, const std::string &what) const {
    throw ParseError(line_, field, what);
  }

  void CheckFields(const ordered_json &obj, const std::set<std::string> &allowed,
                   const std::string &path) const {
    for (const auto &item : obj.items()) {
      if (allowed.count(item.key())) continue;
      std::string field = path.empty() ? item.key() : path + "." + item.key();
      if (options_.strict) Fail(field, "unknown field");
      warnings_->push_back("line " + std::to_string(line_) + ": ignoring unknown field " + field);
    }
  }

  std::string String(const ordered_json &obj, const char *key, const std::string &path) const {
    const ordered_json &v = obj.at(key);
    if (!v.is_string()) Fail(path + key, "expected a string");
    return v.get<std::string>();
  }

  std::vector<std::string> Words(const ordered_json &obj, const std::string &path) const {
    if (!obj.contains("words")) Fail(path + "words", "missing");
    const ordered_json &v = obj.at("words");
    if (!v.is_array() || v.empty()) Fail(path + "words", "expected a non-empty array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) Fail(path + "words[" + std::to_string(i) + "]", "expected a string");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  template <typename Enum>
  Enum Vocabulary(const ordered_json &obj, const char *key, const std::string &path,
                  Enum fallback, std::optional<Enum> (*parse)(std::string_view)) const {
    if (!obj.contains(key)) return fallback;
    std::string text = String(obj, key, path);
    auto value = parse(text);
    if (!value) Fail(path + key, "unknown value \"" + text + "\"");
    return *value;
  }

  NounPhrase Part(const ordered_json &obj, const std::string &path, const std::string &id) const {
    if (!obj.is_object()) Fail(path, "expected an object");
    CheckFields(obj, kPartFields, path);
    std::string prefix = path + ".";
    NounPhrase np;
    np.id = obj.contains("id") ? String(obj, "id", prefix) : id;
    np.words = Words(obj, prefix);
    if (!obj.contains("head_lemma")) Fail(prefix + "head_lemma", "missing");
    np.head_lemma = String(obj, "head_lemma", prefix);
    np.number = Vocabulary(obj, "number", prefix, Number::kSingular, &ParseNumber);
    np.determiner = Vocabulary(obj, "determiner", prefix, Determiner::kBare, &ParseDeterminer);
    return np;
  }

  Constituent Read(const ordered_json &obj, std::size_t utt, std::size_t index,
                   const std::set<std::string> &declared) const {
    std::string path = "constituents[" + std::to_string(index) + "]";
    if (!obj.is_object()) Fail(path, "expected an object");
    CheckFields(obj, kConstituentFields, path);
    std::string prefix = path + ".";

    Constituent c;
    c.source_position = index;
    if (!obj.contains("role")) Fail(prefix + "role", "missing");
    std::string role = String(obj, "role", prefix);
    if (role.size() != 1 || !RoleFromLetter(role[0])) {
      Fail(prefix + "role", "unknown role \"" + role + "\"");
    }
    c.role = *RoleFromLetter(role[0]);
    c.words = Words(obj, prefix);

    if (obj.contains("target_role_override")) {
      std::string target = String(obj, "target_role_override", prefix);
      if (target.size() != 1 || !RoleFromLetter(target[0])) {
        Fail(prefix + "target_role_override", "unknown role \"" + target + "\"");
      }
      c.target_role = *RoleFromLetter(target[0]);
    }
    if (obj.contains("target_length")) {
      const ordered_json &v = obj.at("target_length");
      if (!v.is_number_integer() || v.get<long long>() <= 0) {
        Fail(prefix + "target_length", "expected a positive integer");
      }
      c.target_length = v.get<int>();
    }

    bool nominal = obj.contains("head_lemma");
    if (!nominal) {
      for (const std::string &key : kNounFields) {
        if (obj.contains(key)) Fail(prefix + "head_lemma", "required when " + key + " is given");
      }
      return c;
    }
    if (c.role == Role::kV) Fail(prefix + "head_lemma", "verb constituents carry no noun phrase");

    NounPhrase np;
    np.id = obj.contains("id") ? String(obj, "id", prefix)
                               : "u" + std::to_string(utt) + ".c" + std::to_string(index);
    np.words = c.words;
    np.head_lemma = String(obj, "head_lemma", prefix);
    np.number = Vocabulary(obj, "number", prefix, Number::kSingular, &ParseNumber);
    np.determiner = Vocabulary(obj, "determiner", prefix, Determiner::kBare, &ParseDeterminer);
    np.pronoun = Vocabulary(obj, "pronoun", prefix, PronounClass::kNone, &ParsePronounClass);
    np.construction =
        Vocabulary(obj, "construction", prefix, Construction::kNone, &ParseConstruction);
    if (obj.contains("genitive")) {
      const ordered_json &g = obj.at("genitive");
      if (!g.is_object() || !g.contains("possessor") || !g.contains("possessed")) {
        Fail(prefix + "genitive", "expected {possessor, possessed}");
      }
      CheckFields(g, {"possessor", "possessed"}, prefix + "genitive");
      auto parts = std::make_shared<GenitiveParts>();
      parts->possessor = Part(g.at("possessor"), prefix + "genitive.possessor", np.id + ".possessor");
      parts->possessed = Part(g.at("possessed"), prefix + "genitive.possessed", np.id + ".possessed");
      np.genitive = std::move(parts);
    }
    if (obj.contains("antecedent_id")) {
      std::string ref = String(obj, "antecedent_id", prefix);
      if (!declared.count(ref)) {
        Fail(prefix + "antecedent_id", "reference to undeclared noun phrase \"" + ref + "\"");
      }
      np.antecedent = ref;
    }
    c.np = std::move(np);
    return c;
  }

 private:
  std::size_t line_;
  const ReadOptions &options_;
  std::vector<std::string> *warnings_;
};

ordered_json PartJson(const NounPhrase &np) {
  ordered_json out;
  out["id"] = np.id;
  out["words"] = np.words;
  out["head_lemma"] = np.head_lemma;
  out["number"] = ToString(np.number);
  out["determiner"] = ToString(np.determiner);
  return out;
}

void DeclareIds(const NounPhrase &np, std::set<std::string> *declared) {
  declared->insert(np.id);
  if (np.is_genitive()) {
    declared->insert(np.genitive->possessor.id);
    declared->insert(np.genitive->possessed.id);
  }
}

}  // namespace

ReadResult ReadDocument(std::istream &in, const ReadOptions &options) {
  ReadResult result;
  result.document.id = options.document_id;
  std::set<std::string> declared;
  std::vector<std::size_t> lines;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const ordered_json::parse_error &e) {
      throw ParseError(number, "", std::string("malformed record: ") + e.what());
    }
    RecordReader reader(number, options, &result.warnings);
    if (!record.is_object()) reader.Fail("", "expected an object");
    reader.CheckFields(record, kRecordFields, "");

    Utterance utt;
    utt.index = result.document.utterances.size();
    if (!record.contains("text")) reader.Fail("text", "missing");
    utt.text = reader.String(record, "text", "");
    if (!record.contains("constituents") || !record.at("constituents").is_array()) {
      reader.Fail("constituents", "expected an array");
    }
    const ordered_json &items = record.at("constituents");
    for (std::size_t i = 0; i < items.size(); ++i) {
      utt.constituents.push_back(reader.Read(items[i], utt.index, i, declared));
    }
    for (const Constituent &c : utt.constituents) {
      if (c.np) DeclareIds(*c.np, &declared);
    }
    result.document.utterances.push_back(std::move(utt));
    lines.push_back(number);
  }

  std::vector<Violation> violations = ValidateDocument(result.document);
  if (!violations.empty()) {
    const Violation &v = violations.front();
    std::string field =
        v.constituent ? "constituents[" + std::to_string(*v.constituent) + "]" : "";
    throw ParseError(lines[v.utterance], field, v.message);
  }
  return result;
}

ReadResult ReadDocument(std::string_view data, const ReadOptions &options) {
  std::istringstream in{std::string(data)};
  return ReadDocument(in, options);
}

std::string WriteDocument(const Document &doc) {
  std::string out;
  for (const Utterance &utt : doc.utterances) {
    ordered_json record;
    record["text"] = utt.text;
    record["constituents"] = ordered_json::array();
    for (const Constituent &c : utt.constituents) {
      ordered_json item;
      item["role"] = std::string(1, RoleLetter(c.role));
      item["words"] = c.words;
      if (c.np) {
        const NounPhrase &np = *c.np;
        item["id"] = np.id;
        item["head_lemma"] = np.head_lemma;
        item["number"] = ToString(np.number);
        item["determiner"] = ToString(np.determiner);
        item["pronoun"] = ToString(np.pronoun);
        item["construction"] = ToString(np.construction);
        if (np.is_genitive()) {
          item["genitive"] = {{"possessor", PartJson(np.genitive->possessor)},
                              {"possessed", PartJson(np.genitive->possessed)}};
        }
        if (np.antecedent) item["antecedent_id"] = *np.antecedent;
      }
      if (c.target_role) item["target_role_override"] = std::string(1, RoleLetter(*c.target_role));
      if (c.target_length) item["target_length"] = *c.target_length;
      record["constituents"].push_back(std::move(item));
    }
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace centord
