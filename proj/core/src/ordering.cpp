#include "goal_arbiter/ordering.hpp"

#include <charconv>
#include <random>
#include <utility>

namespace goal_arbiter {

std::optional<TieBreak> TieBreak::parse(std::string_view text) {
  if (text == "id") return by_id();
  constexpr std::string_view prefix = "seed:";
  if (!text.starts_with(prefix)) return std::nullopt;
  text.remove_prefix(prefix.size());
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return seeded(seed);
}

std::string TieBreak::to_string() const {
  return mode == Mode::ById ? "id" : "seed:" + std::to_string(seed);
}

GoalOrder::GoalOrder(const WorthMap& worth, TieBreak tiebreak) : worth_(worth) {
  std::vector<GoalId> ids;
  ids.reserve(worth_.size());
  for (const auto& [id, w] : worth_) ids.push_back(id);

  if (tiebreak.mode == TieBreak::Mode::Seeded) {
    // Fisher-Yates with explicit modulo draws: std::shuffle and the standard
    // distributions are not specified bit-for-bit across library vendors.
    std::mt19937_64 rng(tiebreak.seed);
    for (std::size_t i = ids.size(); i > 1; --i) {
      std::swap(ids[i - 1], ids[rng() % i]);
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) tie_rank_.emplace(ids[i], i);
}

double GoalOrder::worth(const GoalId& g) const {
  auto it = worth_.find(g);
  if (it == worth_.end()) throw UnknownGoal(g);
  return it->second;
}

bool GoalOrder::before(const GoalId& a, const GoalId& b) const {
  const double wa = worth(a);
  const double wb = worth(b);
  if (wa != wb) return wa > wb;
  return tie_rank_.at(a) < tie_rank_.at(b);
}

}  // namespace goal_arbiter
