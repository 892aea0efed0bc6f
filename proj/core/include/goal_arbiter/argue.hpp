#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "goal_arbiter/detect.hpp"
#include "goal_arbiter/model.hpp"

namespace goal_arbiter {

/// Unordered pair of distinct goals; stored with the smaller id first so
/// that {a,b} and {b,a} compare equal.
class GoalPair {
public:
  GoalPair(GoalId a, GoalId b);

  const GoalId& first() const noexcept { return first_; }
  const GoalId& second() const noexcept { return second_; }
  bool contains(const GoalId& g) const noexcept { return g == first_ || g == second_; }

  friend auto operator<=>(const GoalPair&, const GoalPair&) = default;
  friend bool operator==(const GoalPair&, const GoalPair&) = default;

private:
  GoalId first_;
  GoalId second_;
};

/// Conflicting goals, the symmetric incompatibility relation between them,
/// and their worth.
class GoalFramework {
public:
  GoalFramework() = default;
  /// Throws std::invalid_argument if a pair mentions a goal outside `goals`
  /// or a goal has no worth entry.
  GoalFramework(GoalSet goals, std::set<GoalPair> incompatibility, WorthMap worth);

  const GoalSet& goals() const noexcept { return goals_; }
  const std::set<GoalPair>& incompatibility() const noexcept { return pairs_; }
  const WorthMap& worth_table() const noexcept { return worth_; }
  double worth(const GoalId& g) const;
  bool incompatible(const GoalId& a, const GoalId& b) const;
  /// Goals sharing an incompatibility pair with `g`.
  const GoalSet& neighbors(const GoalId& g) const;
  std::size_t size() const noexcept { return goals_.size(); }

private:
  GoalSet goals_;
  std::set<GoalPair> pairs_;
  WorthMap worth_;
  std::map<GoalId, GoalSet> adjacency_;
};

using Extension = GoalSet;

/// Framework over the conflicting goals of `report`; every two goals that
/// share a conflict set become an incompatible pair. A report of kind None
/// yields an empty framework.
GoalFramework build_framework(const IncompatibilityReport& report, const WorthMap& worth);
GoalFramework build_framework(std::span<const GoalSet> sets, const WorthMap& worth);

/// `a` defeats `b` when they are incompatible and worth(a) >= worth(b).
/// Equal worth therefore gives mutual defeat.
bool defeats(const GoalFramework& gf, const GoalId& a, const GoalId& b);

bool is_conflict_free(const GoalFramework& gf, const Extension& ext);

/// Every defeater of `g` is itself defeated by some member of `ext`.
bool defends(const GoalFramework& gf, const Extension& ext, const GoalId& g);

bool is_admissible(const GoalFramework& gf, const Extension& ext);

/// Least fixpoint of the defense operator, starting from the empty set.
Extension grounded_extension(const GoalFramework& gf);

inline constexpr std::size_t kDefaultEnumerationCap = 25;

/// All inclusion-maximal admissible sets, in lexicographic order of their
/// sorted members. Throws FrameworkTooLarge when the framework has more than
/// `cap` goals (cap itself is clamped to 63).
std::vector<Extension> preferred_extensions(const GoalFramework& gf,
                                            std::size_t cap = kDefaultEnumerationCap);

enum class Semantics { Grounded, Preferred, Auto };

std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view text);

/// Extensions whose members are acceptable goals. Auto returns the grounded
/// extension when it is non-empty and the preferred extensions otherwise.
std::vector<Extension> acceptable_goals(const GoalFramework& gf, Semantics semantics,
                                        std::size_t cap = kDefaultEnumerationCap);

/// Semantics that acceptable_goals actually applied (Auto resolved).
Semantics effective_semantics(const GoalFramework& gf, Semantics semantics);

/// Sum of worth over `ext`, accumulated in id order.
double total_worth(const WorthMap& worth, const GoalSet& ext);

/// Single-answer choice among several extensions: highest total worth, ties
/// to the lexicographically smallest member list. `exts` must be non-empty.
const Extension& select_extension(const GoalFramework& gf, std::span<const Extension> exts);

/// Graphviz rendering of the defeat graph. Nodes are "id (worth)" in id
/// order; a mutual defeat appears as two edges drawn double-headed.
std::string to_dot(const GoalFramework& gf);

}  // namespace goal_arbiter
