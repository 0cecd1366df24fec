#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_model.hpp"
#include "lexicon.hpp"

namespace centord {

struct ReadOptions {
  // Reject unknown fields instead of warning about them.
  bool strict = false;
  std::string document_id;
};

struct ReadResult {
  Document document;
  std::vector<std::string> warnings;
};

// Reads a line-delimited document file: one JSON object per utterance with
// "text" and "constituents". Throws ParseError naming the line and field.
ReadResult ReadDocument(std::istream &in, const ReadOptions &options = {});
ReadResult ReadDocument(std::string_view data, const ReadOptions &options = {});

// Serializes a document in the same format; ReadDocument inverts it.
std::string WriteDocument(const Document &doc);

// Best-effort annotation of plain text, one clause per line, for a small
// fragment of English: simple clauses, determiners and possessives, "'s" and
// "of" genitives, clefts, fronting and prompt phrases. Tokens are
// whitespace-separated; multiword names are not recognised.
Document AnnotateDemo(std::string_view text, const Lexicon &lex,
                      const std::string &document_id = "demo");

}  // namespace centord
