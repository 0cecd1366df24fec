#pragma once

#include <algorithm>
#include <functional>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Every pattern the rule tables use, Prim forms included.
inline const std::vector<std::string> &TablePatterns() {
  static const std::vector<std::string> patterns{
      "-S",      "-O",      "-X",      "-S-O-",   "-O-S-",   "-S-X-",   "-X-S-",
      "-O-X-",   "-X-O-",   "X-",      "(X-)(V-)Prim-",       "-VS-",    "-SV-",
      "SOV",     "-V-O-",   "-V-S-O-", "-X-",     "XV-S-O-", "XV-O-S-", "-V-O-S-",
      "-S-V-O-", "XS-V-O-", "S-V-OX",  "-O-V-S-", "O-V-SX",  "O-VXS",   "-V-S-O",
      "-S-O-V-", "-O-S-V-", "OSVX",    "-O-V-S"};
  return patterns;
}

// Translates a pattern into an anchored regular expression over role letters.
// A "-" that closes an optional group only separates it, so it becomes empty.
inline std::regex PatternRegex(const std::string &pattern, char prim) {
  std::string re = "^";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (pattern.compare(i, 4, "Prim") == 0) {
      re += prim;
      i += 3;
    } else if (c == '-') {
      if (i + 1 < pattern.size() && pattern[i + 1] == ')') continue;
      re += ".*";
    } else if (c == '(') {
      re += "(?:";
    } else if (c == ')') {
      re += ")?";
    } else {
      re += c;
    }
  }
  return std::regex(re + "$");
}

inline bool RegexMatches(const std::string &pattern, const std::string &order, char prim = 'S') {
  return std::regex_match(order, PatternRegex(pattern, prim));
}

// Letters a pattern needs outside optional groups, Prim counted as its binding.
inline std::string RequiredLetters(const std::string &pattern, char prim) {
  std::string out;
  int depth = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth) continue;
    if (pattern.compare(i, 4, "Prim") == 0) {
      out += prim;
      i += 3;
    } else if (c == 'S' || c == 'V' || c == 'O' || c == 'X') {
      out += c;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when |letters| contains |needed| as a multiset.
inline bool Contains(std::string letters, std::string needed) {
  std::sort(letters.begin(), letters.end());
  std::sort(needed.begin(), needed.end());
  return std::includes(letters.begin(), letters.end(), needed.begin(), needed.end());
}

}  // namespace oracle

namespace oracle {

// Expands a pattern into every concrete letter sequence of at most |max_len|
// constituents it denotes. Wildcards range over all strings of SVOX.
inline std::set<std::string> Expand(const std::string &pattern, char prim, std::size_t max_len) {
  std::set<std::string> out;
  std::function<void(std::size_t, std::string, bool)> walk = [&](std::size_t i, std::string s,
                                                                 bool in_group) {
    if (s.size() > max_len) return;
    if (i == pattern.size()) {
      out.insert(s);
      return;
    }
    char c = pattern[i];
    if (c == '(') {
      std::size_t close = pattern.find(')', i);
      walk(close + 1, s, false);  // group absent
      walk(i + 1, s, true);       // group present
    } else if (c == ')') {
      walk(i + 1, s, false);
    } else if (c == '-') {
      if (in_group && i + 1 < pattern.size() && pattern[i + 1] == ')') {
        walk(i + 1, s, in_group);
        return;
      }
      std::vector<std::string> fills{""};
      for (std::size_t n = 0; n < fills.size(); ++n) {
        if (s.size() + fills[n].size() >= max_len) continue;
        for (char r : std::string("OSVX")) fills.push_back(fills[n] + r);
      }
      for (const std::string &f : fills) walk(i + 1, s + f, in_group);
    } else if (pattern.compare(i, 4, "Prim") == 0) {
      walk(i + 4, s + prim, in_group);
    } else {
      walk(i + 1, s + c, in_group);
    }
  };
  walk(0, "", false);
  return out;
}

}  // namespace oracle
