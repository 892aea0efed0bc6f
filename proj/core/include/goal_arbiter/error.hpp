#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "goal_arbiter/ids.hpp"

namespace goal_arbiter {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnknownGoal : public Error {
public:
  explicit UnknownGoal(const GoalId& goal)
      : Error("unknown goal '" + goal.str() + "'"), goal_(goal) {}
  const GoalId& goal() const noexcept { return goal_; }

private:
  GoalId goal_;
};

class NoApplicablePlan : public Error {
public:
  explicit NoApplicablePlan(const GoalId& goal)
      : Error("no applicable plan for goal '" + goal.str() + "'"), goal_(goal) {}
  const GoalId& goal() const noexcept { return goal_; }

private:
  GoalId goal_;
};

/// An enumeration would exceed its configured size limit.
class LimitExceeded : public Error {
public:
  LimitExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": " + std::to_string(size) + " goals exceeds the cap of " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t size_;
  std::size_t cap_;
};

class FrameworkTooLarge : public LimitExceeded {
public:
  FrameworkTooLarge(std::size_t size, std::size_t cap)
      : LimitExceeded("preferred-extension enumeration", size, cap) {}
};

class TooManyGoals : public LimitExceeded {
public:
  TooManyGoals(std::size_t size, std::size_t cap)
      : LimitExceeded("oracle enumeration", size, cap) {}
};

/// A resolution routine was handed a report of the wrong incompatibility kind.
class WrongKind : public Error {
public:
  using Error::Error;
};

}  // namespace goal_arbiter
