#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goal_arbiter/model.hpp"

namespace goal_arbiter {

/// How goals of equal worth are ranked against each other.
struct TieBreak {
  enum class Mode { ById, Seeded };

  Mode mode = Mode::ById;
  std::uint64_t seed = 0;

  static TieBreak by_id() { return {}; }
  static TieBreak seeded(std::uint64_t seed) { return {Mode::Seeded, seed}; }

  /// Accepts "id" or "seed:N".
  static std::optional<TieBreak> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TieBreak&, const TieBreak&) = default;
};

/// Strict total order on goals: higher worth first; among equal worth,
/// ascending id (ById) or a permutation drawn from mt19937_64 (Seeded).
class GoalOrder {
public:
  GoalOrder(const WorthMap& worth, TieBreak tiebreak);

  /// True when `a` ranks strictly ahead of `b`.
  bool before(const GoalId& a, const GoalId& b) const;
  double worth(const GoalId& g) const;

  template <typename Range>
  std::vector<GoalId> sorted(const Range& goals) const {
    std::vector<GoalId> out(goals.begin(), goals.end());
    std::sort(out.begin(), out.end(),
              [this](const GoalId& a, const GoalId& b) { return before(a, b); });
    return out;
  }

  /// First goal of `goals` in this order; `goals` must be non-empty.
  template <typename Range>
  GoalId best(const Range& goals) const {
    auto it = goals.begin();
    GoalId top = *it;
    for (++it; it != goals.end(); ++it) {
      if (before(*it, top)) top = *it;
    }
    return top;
  }

private:
  WorthMap worth_;
  std::map<GoalId, std::size_t> tie_rank_;
};

}  // namespace goal_arbiter

