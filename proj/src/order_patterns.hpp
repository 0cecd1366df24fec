#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discourse_model.hpp"

namespace centord {

using RoleSequence = std::vector<Role>;

std::string RenderSequence(std::span<const Role> order);
// Parses "SVO"-style strings; throws UsageError on other characters.
RoleSequence ParseSequence(std::string_view text);

// Constituent-order patterns in the notation of the ordering tables:
//
//   S V O X   one constituent of that role
//   Prim      one constituent of the role bound at match time
//   -         any (possibly empty) run of constituents
//   (...)     optional group
//
// Adjacent letters are adjacent constituents; a pattern without a leading
// (trailing) "-" is anchored to the start (end) of the clause. Inside an
// optional group a trailing "-" only separates the group from what follows,
// so "(X-)(V-)Prim-" allows nothing but X and V ahead of Prim.
struct PatternAtom {
  enum class Kind { kRole, kPrim, kWildcard, kGroup };

  Kind kind = Kind::kWildcard;
  Role role = Role::kS;
  std::vector<PatternAtom> body;

  friend bool operator==(const PatternAtom &, const PatternAtom &) = default;
};

class OrderPattern {
 public:
  OrderPattern() = default;
  explicit OrderPattern(std::vector<PatternAtom> atoms) : atoms_(std::move(atoms)) {}

  const std::vector<PatternAtom> &atoms() const { return atoms_; }

  bool anchored_start() const;
  bool anchored_end() const;
  bool uses_prim() const;
  bool prim_required() const;

  // Per-role count of literals that must be matched (outside optional groups).
  std::array<int, 4> RequiredRoles() const;
  // Roles the pattern mentions anywhere, optional groups included.
  std::array<bool, 4> NamedRoles() const;

  std::string Render() const;

  friend bool operator==(const OrderPattern &, const OrderPattern &) = default;

 private:
  std::vector<PatternAtom> atoms_;
};

// Throws PatternError with the 1-based column of the offending character.
OrderPattern ParsePattern(std::string_view text);

// Throws UsageError when the pattern uses Prim and no binding is given.
bool Matches(const OrderPattern &pattern, std::span<const Role> order,
             std::optional<Role> prim_binding = std::nullopt);

struct OrderConstraint {
  OrderPattern pattern;
  std::optional<Role> prim_binding;
};

// True when every role the constraint requires is available in |roles|.
bool ConstraintApplies(const OrderConstraint &constraint, std::span<const Role> roles);

// Distinct permutations of |roles| in lexicographic letter order.
std::vector<RoleSequence> AllOrders(std::span<const Role> roles);

// Every permutation of |roles| matching all applicable constraints.
// Constraints naming a role that is not available are skipped.
std::vector<RoleSequence> SatisfyingOrders(std::span<const OrderConstraint> constraints,
                                           std::span<const Role> roles);

}  // namespace centord
