#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace goal_arbiter {

/// Case-sensitive identifier tagged by the kind of entity it names, so a
/// goal id cannot be passed where a resource id is expected.
template <typename Tag>
class Id {
public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}
  explicit Id(std::string_view value) : value_(value) {}
  explicit Id(const char* value) : value_(value) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Id& id) {
    return os << id.value_;
  }

private:
  std::string value_;
};

struct GoalTag {};
struct ResourceTag {};
struct PlanTag {};

using GoalId = Id<GoalTag>;
using ResourceId = Id<ResourceTag>;
using PlanId = Id<PlanTag>;

/// True when `name` is non-empty and has no whitespace or control characters.
bool is_valid_identifier(std::string_view name) noexcept;

}  // namespace goal_arbiter

template <typename Tag>
struct std::hash<goal_arbiter::Id<Tag>> {
  std::size_t operator()(const goal_arbiter::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
