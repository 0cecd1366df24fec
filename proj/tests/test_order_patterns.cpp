#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "errors.hpp"
#include "order_patterns.hpp"
#include "pattern_oracle.hpp"

using namespace centord;

namespace {

bool M(const char *pattern, const char *order, std::optional<Role> prim = std::nullopt) {
  return Matches(ParsePattern(pattern), ParseSequence(order), prim);
}

std::size_t ErrorColumn(const char *pattern) {
  try {
    ParsePattern(pattern);
  } catch (const PatternError &e) {
    return e.column();
  }
  return 0;
}

std::vector<std::string> Render(const std::vector<RoleSequence> &orders) {
  std::vector<std::string> out;
  for (const RoleSequence &o : orders) out.push_back(RenderSequence(o));
  return out;
}

// Every sub-multiset of SVOXX, as sorted letter strings.
std::vector<std::string> RoleSets() {
  std::vector<std::string> out;
  const std::string pool = "OSVXX";
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::string s;
    for (unsigned i = 0; i < 5; ++i) {
      if (mask & (1u << i)) s += pool[i];
    }
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<std::string> Permutations(std::string letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<std::string> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

TEST_CASE("parse and render") {
  OrderPattern p = ParsePattern("(X-)(V-)Prim-");
  REQUIRE(p.atoms().size() == 4);
  CHECK(p.atoms()[0].kind == PatternAtom::Kind::kGroup);
  CHECK(p.atoms()[2].kind == PatternAtom::Kind::kPrim);
  CHECK(p.uses_prim());
  CHECK(p.prim_required());
  CHECK(p.anchored_start());
  CHECK_FALSE(p.anchored_end());
  CHECK(ParsePattern("-S-O-").RequiredRoles() == std::array<int, 4>{1, 0, 1, 0});
  CHECK_FALSE(ParsePattern("-S-O-").anchored_start());
  for (const std::string &text : oracle::TablePatterns()) {
    CHECK(ParsePattern(text).Render() == text);
    CHECK(ParsePattern(ParsePattern(text).Render()) == ParsePattern(text));
  }
}

TEST_CASE("pattern errors carry the column") {
  CHECK(ErrorColumn("-S-Q") == 4);
  CHECK(ErrorColumn("S--O") == 3);
  CHECK(ErrorColumn("(S") == 1);
  CHECK(ErrorColumn("S)") == 2);
  CHECK(ErrorColumn("((S))") == 2);
  CHECK(ErrorColumn("()") == 2);
  CHECK(ErrorColumn("Pri") == 1);
  CHECK_THROWS_AS(ParsePattern("x"), PatternError);
}

TEST_CASE("match examples") {
  CHECK(M("-V-O-", "SVO"));
  CHECK_FALSE(M("-V-O-", "OVS"));
  CHECK(M("-VS-", "XVS"));
  CHECK_FALSE(M("-VS-", "VXS"));
  CHECK(M("SOV", "SOV"));
  CHECK_FALSE(M("SOV", "SOVX"));
  CHECK(M("-X-", "X"));
  CHECK(M("O-VXS", "OVXS"));
  CHECK_FALSE(M("O-VXS", "OVSX"));
  CHECK(M("(X-)(V-)Prim-", "OVS", Role::kO));
  CHECK(M("(X-)(V-)Prim-", "XVOS", Role::kO));
  CHECK(M("(X-)(V-)Prim-", "VOS", Role::kO));
  CHECK_FALSE(M("(X-)(V-)Prim-", "SOV", Role::kO));
  CHECK_FALSE(M("(X-)(V-)Prim-", "VXO", Role::kO));
  CHECK(M("(X-)(V-)Prim-", "SVO", Role::kS));
}

TEST_CASE("prim without a binding is a usage error") {
  CHECK_THROWS_AS(M("(X-)(V-)Prim-", "SVO"), UsageError);
}

TEST_CASE("sequences parse and render") {
  CHECK(RenderSequence(ParseSequence("XVOS")) == "XVOS");
  CHECK_THROWS_AS(ParseSequence("SVQ"), UsageError);
}

TEST_CASE("all orders are distinct and sorted by letter") {
  CHECK(Render(AllOrders(ParseSequence("SVO"))) ==
        std::vector<std::string>{"OSV", "OVS", "SOV", "SVO", "VOS", "VSO"});
  CHECK(AllOrders(ParseSequence("XSX")).size() == 3);
}

TEST_CASE("satisfying order examples") {
  std::vector<OrderConstraint> cs{{ParsePattern("-V-O-"), std::nullopt},
                                  {ParsePattern("-S-O-"), std::nullopt}};
  CHECK(Render(SatisfyingOrders(cs, ParseSequence("SVO"))) ==
        std::vector<std::string>{"SVO", "VSO"});
  std::vector<OrderConstraint> prim{{ParsePattern("(X-)(V-)Prim-"), Role::kO}};
  CHECK(Render(SatisfyingOrders(prim, ParseSequence("SVO"))) ==
        std::vector<std::string>{"OSV", "OVS", "VOS"});
  // A constraint naming an unavailable role is skipped.
  std::vector<OrderConstraint> missing{{ParsePattern("-S-O-"), std::nullopt}};
  CHECK(SatisfyingOrders(missing, ParseSequence("VX")).size() == 2);
  CHECK(SatisfyingOrders({}, ParseSequence("SVO")).size() == 6);
}

TEST_CASE("matching agrees with a regular-expression oracle on every table pattern") {
  for (const std::string &text : oracle::TablePatterns()) {
    OrderPattern pattern = ParsePattern(text);
    for (const std::string &roles : RoleSets()) {
      for (const std::string &order : Permutations(roles)) {
        for (char prim : {'S', 'O'}) {
          bool expected = oracle::RegexMatches(text, order, prim);
          CHECK_MESSAGE(Matches(pattern, ParseSequence(order), *RoleFromLetter(prim)) == expected,
                        text, " on ", order, " Prim=", prim);
        }
      }
    }
  }
}

TEST_CASE("satisfying orders equal brute-force filtering") {
  std::mt19937 rng(17);
  const auto &table = oracle::TablePatterns();
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<OrderConstraint> cs;
    std::vector<std::pair<std::string, char>> texts;
    int n = static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      std::string text = table[rng() % table.size()];
      char prim = rng() % 2 ? 'S' : 'O';
      cs.push_back({ParsePattern(text), *RoleFromLetter(prim)});
      texts.emplace_back(text, prim);
    }
    std::vector<std::string> sets = RoleSets();
    std::string roles = sets[rng() % sets.size()];
    std::vector<std::string> expected;
    for (const std::string &order : Permutations(roles)) {
      bool ok = true;
      for (const auto &[text, prim] : texts) {
        if (!oracle::Contains(roles, oracle::RequiredLetters(text, prim))) continue;
        ok = ok && oracle::RegexMatches(text, order, prim);
      }
      if (ok) expected.push_back(order);
    }
    std::vector<std::string> got = Render(SatisfyingOrders(cs, ParseSequence(roles)));
    CHECK(got == expected);
    // Adding a constraint never grows the result.
    if (!cs.empty()) {
      std::vector<OrderConstraint> fewer(cs.begin(), cs.end() - 1);
      std::vector<std::string> wider = Render(SatisfyingOrders(fewer, ParseSequence(roles)));
      for (const std::string &o : got) {
        CHECK(std::find(wider.begin(), wider.end(), o) != wider.end());
      }
    }
  }
}

TEST_CASE("matching agrees with explicit expansion of each table pattern") {
  for (const std::string &text : oracle::TablePatterns()) {
    OrderPattern pattern = ParsePattern(text);
    for (char prim : {'S', 'O'}) {
      std::set<std::string> language = oracle::Expand(text, prim, 5);
      for (const std::string &roles : RoleSets()) {
        for (const std::string &order : Permutations(roles)) {
          CHECK_MESSAGE(Matches(pattern, ParseSequence(order), *RoleFromLetter(prim)) ==
                            static_cast<bool>(language.count(order)),
                        text, " on ", order, " Prim=", prim);
        }
      }
    }
  }
}
