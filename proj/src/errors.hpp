#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centord {

// Base class for every failure the library reports. The kind drives the C API
// status code and the CLI exit status.
class Error : public std::runtime_error {
 public:
  enum class Kind { kInput, kUsage, kLexicon, kSequencing, kContract };

  Error(Kind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Malformed document record. Line numbers are 1-based; field is a JSON-style
// path such as "constituents[1].role".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &field, const std::string &what)
      : Error(Kind::kInput, Format(line, field, what)), line_(line), field_(field) {}

  std::size_t line() const { return line_; }
  const std::string &field() const { return field_; }

 private:
  static std::string Format(std::size_t line, const std::string &field,
                            const std::string &what) {
    std::string msg = "line " + std::to_string(line);
    if (!field.empty()) msg += ", field " + field;
    return msg + ": " + what;
  }

  std::size_t line_;
  std::string field_;
};

class LexiconError : public Error {
 public:
  LexiconError(std::size_t line, const std::string &what)
      : Error(Kind::kLexicon,
              line == 0 ? "lexicon: " + what
                        : "lexicon line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class PatternError : public Error {
 public:
  PatternError(std::size_t column, const std::string &what)
      : Error(Kind::kUsage, "pattern column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string &what) : Error(Kind::kUsage, what) {}
};

// Utterances processed out of order, or planning before scoring.
class SequencingError : public Error {
 public:
  explicit SequencingError(const std::string &what) : Error(Kind::kSequencing, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string &what) : Error(Kind::kContract, what) {}
};

}  // namespace centord
