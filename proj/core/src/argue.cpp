#include "goal_arbiter/argue.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace goal_arbiter {

GoalPair::GoalPair(GoalId a, GoalId b) {
  if (a == b) throw std::invalid_argument("goal pair needs two distinct goals: " + a.str());
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

GoalFramework::GoalFramework(GoalSet goals, std::set<GoalPair> incompatibility, WorthMap worth)
    : goals_(std::move(goals)), pairs_(std::move(incompatibility)) {
  for (const auto& g : goals_) {
    auto it = worth.find(g);
    if (it == worth.end()) throw std::invalid_argument("no worth for goal " + g.str());
    worth_.emplace(g, it->second);
    adjacency_[g];
  }
  for (const auto& p : pairs_) {
    if (!goals_.contains(p.first()) || !goals_.contains(p.second())) {
      throw std::invalid_argument("pair {" + p.first().str() + "," + p.second().str() +
                                  "} mentions a goal outside the framework");
    }
    adjacency_[p.first()].insert(p.second());
    adjacency_[p.second()].insert(p.first());
  }
}

double GoalFramework::worth(const GoalId& g) const {
  auto it = worth_.find(g);
  if (it == worth_.end()) throw UnknownGoal(g);
  return it->second;
}

bool GoalFramework::incompatible(const GoalId& a, const GoalId& b) const {
  if (a == b) return false;
  return pairs_.contains(GoalPair(a, b));
}

const GoalSet& GoalFramework::neighbors(const GoalId& g) const {
  auto it = adjacency_.find(g);
  if (it == adjacency_.end()) throw UnknownGoal(g);
  return it->second;
}

GoalFramework build_framework(std::span<const GoalSet> sets, const WorthMap& worth) {
  GoalSet goals;
  std::set<GoalPair> pairs;
  for (const auto& set : sets) {
    goals.insert(set.begin(), set.end());
    for (auto i = set.begin(); i != set.end(); ++i) {
      for (auto j = std::next(i); j != set.end(); ++j) pairs.emplace(*i, *j);
    }
  }
  return GoalFramework(std::move(goals), std::move(pairs), worth);
}

GoalFramework build_framework(const IncompatibilityReport& report, const WorthMap& worth) {
  std::vector<GoalSet> sets;
  sets.reserve(report.sets.size());
  for (const auto& s : report.sets) sets.push_back(s.goals());
  return build_framework(std::span<const GoalSet>(sets), worth);
}

bool defeats(const GoalFramework& gf, const GoalId& a, const GoalId& b) {
  return gf.incompatible(a, b) && gf.worth(a) >= gf.worth(b);
}

bool is_conflict_free(const GoalFramework& gf, const Extension& ext) {
  for (const auto& a : ext) {
    for (const auto& b : gf.neighbors(a)) {
      if (ext.contains(b) && defeats(gf, a, b)) return false;
    }
  }
  return true;
}

bool defends(const GoalFramework& gf, const Extension& ext, const GoalId& g) {
  for (const auto& attacker : gf.neighbors(g)) {
    if (!defeats(gf, attacker, g)) continue;
    const auto& counter = gf.neighbors(attacker);
    bool answered = std::any_of(counter.begin(), counter.end(), [&](const GoalId& k) {
      return ext.contains(k) && defeats(gf, k, attacker);
    });
    if (!answered) return false;
  }
  return true;
}

bool is_admissible(const GoalFramework& gf, const Extension& ext) {
  if (!is_conflict_free(gf, ext)) return false;
  return std::all_of(ext.begin(), ext.end(),
                     [&](const GoalId& g) { return defends(gf, ext, g); });
}

Extension grounded_extension(const GoalFramework& gf) {
  Extension current;
  while (true) {
    Extension next;
    for (const auto& g : gf.goals()) {
      if (defends(gf, current, g)) next.insert(g);
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

namespace {

using Mask = std::uint64_t;

// Bitset view of a framework: bit i is the i-th goal in id order.
struct IndexedFramework {
  std::vector<GoalId> ids;
  std::vector<Mask> attackers;  // attackers[i]: goals defeating i
  std::vector<Mask> targets;    // targets[i]: goals i defeats
  Mask live = 0;                // goals neither accepted nor defeated by the grounded set

  explicit IndexedFramework(const GoalFramework& gf) : ids(gf.goals().begin(), gf.goals().end()) {
    const std::size_t n = ids.size();
    attackers.assign(n, 0);
    targets.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && defeats(gf, ids[i], ids[j])) {
          targets[i] |= Mask{1} << j;
          attackers[j] |= Mask{1} << i;
        }
      }
    }
  }

  Mask union_of(const std::vector<Mask>& rel, Mask set) const {
    Mask out = 0;
    while (set != 0) {
      const int i = std::countr_zero(set);
      out |= rel[static_cast<std::size_t>(i)];
      set &= set - 1;
    }
    return out;
  }

  Extension to_extension(Mask set) const {
    Extension ext;
    while (set != 0) {
      ext.insert(ids[static_cast<std::size_t>(std::countr_zero(set))]);
      set &= set - 1;
    }
    return ext;
  }
};

// Visits every conflict-free subset of `scope` once, keeping those that
// defend themselves against attackers inside `scope`.
void collect_admissible(const IndexedFramework& af, Mask scope, Mask set, std::vector<Mask>& out) {
  if (scope == 0) {
    const Mask attacked_by_set = af.union_of(af.targets, set);
    const Mask attacking_set = af.union_of(af.attackers, set);
    if ((attacking_set & ~attacked_by_set & af.live) == 0) out.push_back(set);
    return;
  }
  const int i = std::countr_zero(scope);
  const Mask rest = scope & (scope - 1);
  collect_admissible(af, rest, set, out);
  if (((af.attackers[static_cast<std::size_t>(i)] | af.targets[static_cast<std::size_t>(i)]) & set) == 0) {
    collect_admissible(af, rest, set | (Mask{1} << i), out);
  }
}

std::vector<Mask> maximal_only(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<Mask> maximal;
  for (Mask candidate : sets) {
    bool covered = std::any_of(maximal.begin(), maximal.end(),
                               [candidate](Mask m) { return (candidate & m) == candidate; });
    if (!covered) maximal.push_back(candidate);
  }
  return maximal;
}

}  // namespace

// Every preferred extension contains the grounded extension and excludes what
// it defeats. The undecided rest splits into connected components whose
// preferred extensions combine independently, so only components are
// enumerated subset by subset.
std::vector<Extension> preferred_extensions(const GoalFramework& gf, std::size_t cap) {
  cap = std::min<std::size_t>(cap, 63);
  if (gf.size() > cap) throw FrameworkTooLarge(gf.size(), cap);

  IndexedFramework af(gf);
  const std::size_t n = af.ids.size();
  const Mask all = (Mask{1} << n) - 1;

  Mask grounded = 0;
  for (;;) {
    const Mask attacked = af.union_of(af.targets, grounded);
    Mask next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((af.attackers[i] & ~attacked) == 0) next |= Mask{1} << i;
    }
    if (next == grounded) break;
    grounded = next;
  }
  af.live = all & ~grounded & ~af.union_of(af.targets, grounded);

  std::vector<Mask> partial{grounded};
  Mask unvisited = af.live;
  while (unvisited != 0) {
    Mask component = Mask{1} << std::countr_zero(unvisited);
    for (Mask frontier = component; frontier != 0;) {
      const Mask reach = (af.union_of(af.targets, frontier) | af.union_of(af.attackers, frontier)) &
                         af.live & ~component;
      component |= reach;
      frontier = reach;
    }
    unvisited &= ~component;

    std::vector<Mask> admissible;
    collect_admissible(af, component, 0, admissible);
    const std::vector<Mask> local = maximal_only(std::move(admissible));
    std::vector<Mask> combined;
    combined.reserve(partial.size() * local.size());
    for (Mask p : partial) {
      for (Mask l : local) combined.push_back(p | l);
    }
    partial = std::move(combined);
  }

  std::vector<Extension> out;
  out.reserve(partial.size());
  for (Mask m : partial) out.push_back(af.to_extension(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Preferred: return "preferred";
    case Semantics::Auto: return "auto";
  }
  return "auto";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "grounded") return Semantics::Grounded;
  if (text == "preferred") return Semantics::Preferred;
  if (text == "auto") return Semantics::Auto;
  return std::nullopt;
}

Semantics effective_semantics(const GoalFramework& gf, Semantics semantics) {
  if (semantics != Semantics::Auto) return semantics;
  return grounded_extension(gf).empty() && gf.size() > 0 ? Semantics::Preferred
                                                         : Semantics::Grounded;
}

std::vector<Extension> acceptable_goals(const GoalFramework& gf, Semantics semantics,
                                        std::size_t cap) {
  if (semantics == Semantics::Auto) {
    Extension grounded = grounded_extension(gf);
    if (!grounded.empty() || gf.size() == 0) return {std::move(grounded)};
    return preferred_extensions(gf, cap);
  }
  if (semantics == Semantics::Grounded) return {grounded_extension(gf)};
  return preferred_extensions(gf, cap);
}

double total_worth(const WorthMap& worth, const GoalSet& ext) {
  double sum = 0.0;
  for (const auto& g : ext) sum += worth.at(g);
  return sum;
}

const Extension& select_extension(const GoalFramework& gf, std::span<const Extension> exts) {
  if (exts.empty()) throw std::invalid_argument("select_extension needs at least one extension");
  const Extension* best = &exts.front();
  double best_worth = total_worth(gf.worth_table(), *best);
  for (const auto& ext : exts.subspan(1)) {
    const double w = total_worth(gf.worth_table(), ext);
    if (w > best_worth || (w == best_worth && ext < *best)) {
      best = &ext;
      best_worth = w;
    }
  }
  return *best;
}

namespace {
std::string format_worth(double w) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::to_string(w);
}

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const GoalFramework& gf) {
  std::ostringstream os;
  os << "digraph goal_framework {\n";
  for (const auto& g : gf.goals()) {
    os << "  " << quoted(g.str()) << " [label=" << quoted(g.str() + " (" + format_worth(gf.worth(g)) + ")")
       << "];\n";
  }
  for (const auto& a : gf.goals()) {
    for (const auto& b : gf.neighbors(a)) {
      if (!defeats(gf, a, b)) continue;
      os << "  " << quoted(a.str()) << " -> " << quoted(b.str());
      if (defeats(gf, b, a)) os << " [dir=both]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace goal_arbiter
