#include "order_patterns.hpp"

#include <algorithm>

#include "errors.hpp"

namespace centord {

namespace {

using Kind = PatternAtom::Kind;

int Index(Role role) { return static_cast<int>(role); }

void Render(const std::vector<PatternAtom> &atoms, std::string *out) {
  for (const PatternAtom &atom : atoms) {
    switch (atom.kind) {
      case Kind::kRole: out->push_back(RoleLetter(atom.role)); break;
      case Kind::kPrim: out->append("Prim"); break;
      case Kind::kWildcard: out->push_back('-'); break;
      case Kind::kGroup:
        out->push_back('(');
        Render(atom.body, out);
        out->push_back(')');
        break;
    }
  }
}

// Flattens optional groups into every include/exclude combination. Included
// bodies lose their trailing separator.
void Expand(const std::vector<PatternAtom> &atoms, std::size_t i,
            std::vector<PatternAtom> *current, std::vector<std::vector<PatternAtom>> *out) {
  if (i == atoms.size()) {
    out->push_back(*current);
    return;
  }
  const PatternAtom &atom = atoms[i];
  if (atom.kind != Kind::kGroup) {
    current->push_back(atom);
    Expand(atoms, i + 1, current, out);
    current->pop_back();
    return;
  }
  Expand(atoms, i + 1, current, out);
  std::size_t size = current->size();
  std::size_t n = atom.body.size();
  if (n > 0 && atom.body.back().kind == Kind::kWildcard) --n;
  current->insert(current->end(), atom.body.begin(), atom.body.begin() + n);
  Expand(atoms, i + 1, current, out);
  current->resize(size);
}

bool MatchFlat(const std::vector<PatternAtom> &atoms, std::size_t ai, std::span<const Role> order,
               std::size_t oi, Role prim) {
  if (ai == atoms.size()) return oi == order.size();
  const PatternAtom &atom = atoms[ai];
  switch (atom.kind) {
    case Kind::kWildcard:
      for (std::size_t k = oi; k <= order.size(); ++k) {
        if (MatchFlat(atoms, ai + 1, order, k, prim)) return true;
      }
      return false;
    case Kind::kRole:
    case Kind::kPrim: {
      Role want = atom.kind == Kind::kRole ? atom.role : prim;
      return oi < order.size() && order[oi] == want && MatchFlat(atoms, ai + 1, order, oi + 1, prim);
    }
    case Kind::kGroup:
      break;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OrderPattern Parse() {
    std::vector<PatternAtom> atoms = ParseSequence(false);
    if (pos_ != text_.size()) Fail("unbalanced ')'");
    return OrderPattern(std::move(atoms));
  }

 private:
  std::vector<PatternAtom> ParseSequence(bool in_group) {
    std::vector<PatternAtom> atoms;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ')') {
        if (!in_group) Fail("unbalanced ')'");
        return atoms;
      }
      if (c == '(') {
        if (in_group) Fail("nested optional group");
        std::size_t open = pos_;
        ++pos_;
        PatternAtom group{Kind::kGroup, Role::kS, ParseSequence(true)};
        if (pos_ >= text_.size()) {
          pos_ = open;
          Fail("unbalanced '('");
        }
        if (group.body.empty()) Fail("empty optional group");
        ++pos_;
        atoms.push_back(std::move(group));
      } else if (c == '-') {
        if (!atoms.empty() && atoms.back().kind == Kind::kWildcard) Fail("consecutive '-'");
        atoms.push_back({Kind::kWildcard, Role::kS, {}});
        ++pos_;
      } else if (text_.substr(pos_, 4) == "Prim") {
        atoms.push_back({Kind::kPrim, Role::kS, {}});
        pos_ += 4;
      } else if (auto role = RoleFromLetter(c)) {
        atoms.push_back({Kind::kRole, *role, {}});
        ++pos_;
      } else {
        Fail(std::string("unknown symbol '") + c + "'");
      }
    }
    return atoms;
  }

  [[noreturn]] void Fail(const std::string &what) const { throw PatternError(pos_ + 1, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string RenderSequence(std::span<const Role> order) {
  std::string out;
  for (Role r : order) out.push_back(RoleLetter(r));
  return out;
}

RoleSequence ParseSequence(std::string_view text) {
  RoleSequence out;
  for (char c : text) {
    auto role = RoleFromLetter(c);
    if (!role) throw UsageError("bad role letter '" + std::string(1, c) + "' in " + std::string(text));
    out.push_back(*role);
  }
  return out;
}

bool OrderPattern::anchored_start() const {
  return !atoms_.empty() && atoms_.front().kind != Kind::kWildcard;
}

bool OrderPattern::anchored_end() const {
  return !atoms_.empty() && atoms_.back().kind != Kind::kWildcard;
}

bool OrderPattern::uses_prim() const {
  for (const PatternAtom &a : atoms_) {
    if (a.kind == Kind::kPrim) return true;
    for (const PatternAtom &b : a.body) {
      if (b.kind == Kind::kPrim) return true;
    }
  }
  return false;
}

bool OrderPattern::prim_required() const {
  return std::any_of(atoms_.begin(), atoms_.end(),
                     [](const PatternAtom &a) { return a.kind == Kind::kPrim; });
}

std::array<int, 4> OrderPattern::RequiredRoles() const {
  std::array<int, 4> out{};
  for (const PatternAtom &a : atoms_) {
    if (a.kind == Kind::kRole) ++out[Index(a.role)];
  }
  return out;
}

std::array<bool, 4> OrderPattern::NamedRoles() const {
  std::array<bool, 4> out{};
  for (const PatternAtom &a : atoms_) {
    if (a.kind == Kind::kRole) out[Index(a.role)] = true;
    for (const PatternAtom &b : a.body) {
      if (b.kind == Kind::kRole) out[Index(b.role)] = true;
    }
  }
  return out;
}

std::string OrderPattern::Render() const {
  std::string out;
  centord::Render(atoms_, &out);
  return out;
}

OrderPattern ParsePattern(std::string_view text) { return Parser(text).Parse(); }

bool Matches(const OrderPattern &pattern, std::span<const Role> order,
             std::optional<Role> prim_binding) {
  if (pattern.uses_prim() && !prim_binding) {
    throw UsageError("pattern " + pattern.Render() + " uses Prim but no binding was given");
  }
  std::vector<std::vector<PatternAtom>> flat;
  std::vector<PatternAtom> current;
  Expand(pattern.atoms(), 0, &current, &flat);
  Role prim = prim_binding.value_or(Role::kS);
  return std::any_of(flat.begin(), flat.end(), [&](const std::vector<PatternAtom> &atoms) {
    return MatchFlat(atoms, 0, order, 0, prim);
  });
}

bool ConstraintApplies(const OrderConstraint &constraint, std::span<const Role> roles) {
  std::array<int, 4> have{};
  for (Role r : roles) ++have[Index(r)];
  std::array<int, 4> need = constraint.pattern.RequiredRoles();
  if (constraint.pattern.prim_required()) {
    if (!constraint.prim_binding) return false;
    ++need[Index(*constraint.prim_binding)];
  }
  for (int i = 0; i < 4; ++i) {
    if (need[i] > have[i]) return false;
  }
  return true;
}

std::vector<RoleSequence> AllOrders(std::span<const Role> roles) {
  RoleSequence seq(roles.begin(), roles.end());
  auto by_letter = [](Role a, Role b) { return RoleLetter(a) < RoleLetter(b); };
  std::sort(seq.begin(), seq.end(), by_letter);
  std::vector<RoleSequence> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end(), by_letter));
  return out;
}

std::vector<RoleSequence> SatisfyingOrders(std::span<const OrderConstraint> constraints,
                                           std::span<const Role> roles) {
  std::vector<const OrderConstraint *> active;
  for (const OrderConstraint &c : constraints) {
    if (ConstraintApplies(c, roles)) active.push_back(&c);
  }
  std::vector<RoleSequence> out;
  for (RoleSequence &order : AllOrders(roles)) {
    bool ok = std::all_of(active.begin(), active.end(), [&](const OrderConstraint *c) {
      return Matches(c->pattern, order, c->prim_binding);
    });
    if (ok) out.push_back(std::move(order));
  }
  return out;
}

}  // namespace centord
