#ifndef HCLP_MODEL_HPP
#define HCLP_MODEL_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hclp/cost_table.hpp"

namespace hclp {

/// An ordered partition (C1, ..., Ck) of a subset of the evaluations.
/// Earlier levels are more important.
struct HclpModel {
  std::vector<std::vector<EvalId>> levels;

  static HclpModel sequence(std::span<const EvalId> order) {
    HclpModel m;
    m.levels.reserve(order.size());
    for (EvalId c : order) m.levels.push_back({c});
    return m;
  }

  /// Union of the levels, level by level.
  std::vector<EvalId> sigma() const {
    std::vector<EvalId> out;
    for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

  bool uses(EvalId c) const {
    for (const auto& level : levels)
      for (EvalId e : level)
        if (e == c) return true;
    return false;
  }

  friend bool operator==(const HclpModel&, const HclpModel&) = default;
};

struct Unrestricted {
  friend bool operator==(const Unrestricted&, const Unrestricted&) = default;
};

/// Every level has at most `t` evaluations.
struct LevelSizeAtMost {
  std::size_t t = 1;
  friend bool operator==(const LevelSizeAtMost&, const LevelSizeAtMost&) = default;
};

/// Every level is exactly one class of a partition of the evaluations.
struct EquivalenceClasses {
  std::vector<std::vector<EvalId>> classes;
  friend bool operator==(const EquivalenceClasses&, const EquivalenceClasses&) = default;
};

using ModelConstraint = std::variant<Unrestricted, LevelSizeAtMost, EquivalenceClasses>;

enum class ViolationKind {
  EmptyLevel,
  UnknownEvaluation,
  OverlappingLevels,
  LevelTooLarge,
  NotAnEquivalenceClass,
  MalformedPartition,
  InvalidBound,
};

struct ModelViolation {
  ViolationKind kind;
  std::size_t level = 0;
  std::string message;
};

/// Checks that `classes` partitions the table's evaluations exactly.
/// Returns a description of the first problem, if any.
inline std::optional<std::string> partition_problem(const CostTable& table,
                                                    const std::vector<std::vector<EvalId>>& classes) {
  std::vector<int> seen(table.num_evaluations(), 0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) return "class " + std::to_string(k) + " is empty";
    for (EvalId c : classes[k]) {
      if (!table.contains(c)) return "class " + std::to_string(k) + " names an unknown evaluation";
      if (seen[to_index(c)]++) return "evaluation " + table.name(c) + " appears in more than one class";
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c)
    if (!seen[c]) return "evaluation " + table.name(eval_at(c)) + " is not covered by any class";
  return std::nullopt;
}

/// Reports the first violated invariant of `model`, or nothing when it is a
/// valid ordered partition that also meets `constraint`.
inline std::optional<ModelViolation> validate_model(const CostTable& table, const HclpModel& model,
                                                    const ModelConstraint& constraint = Unrestricted{}) {
  std::vector<char> seen(table.num_evaluations(), 0);
  for (std::size_t i = 0; i < model.levels.size(); ++i) {
    const auto& level = model.levels[i];
    if (level.empty())
      return ModelViolation{ViolationKind::EmptyLevel, i, "level " + std::to_string(i) + " is empty"};
    for (EvalId c : level) {
      if (!table.contains(c))
        return ModelViolation{ViolationKind::UnknownEvaluation, i,
                              "level " + std::to_string(i) + " names unknown evaluation #" +
                                  std::to_string(to_index(c))};
      if (seen[to_index(c)])
        return ModelViolation{ViolationKind::OverlappingLevels, i,
                              "evaluation " + table.name(c) + " appears more than once"};
      seen[to_index(c)] = 1;
    }
  }

  if (const auto* bound = std::get_if<LevelSizeAtMost>(&constraint)) {
    if (bound->t < 1) return ModelViolation{ViolationKind::InvalidBound, 0, "level-size bound must be at least 1"};
    for (std::size_t i = 0; i < model.levels.size(); ++i)
      if (model.levels[i].size() > bound->t)
        return ModelViolation{ViolationKind::LevelTooLarge, i,
                              "level " + std::to_string(i) + " has " + std::to_string(model.levels[i].size()) +
                                  " evaluations, bound is " + std::to_string(bound->t)};
  } else if (const auto* eq = std::get_if<EquivalenceClasses>(&constraint)) {
    if (auto problem = partition_problem(table, eq->classes))
      return ModelViolation{ViolationKind::MalformedPartition, 0, *problem};
    std::vector<std::size_t> class_of(table.num_evaluations());
    for (std::size_t k = 0; k < eq->classes.size(); ++k)
      for (EvalId c : eq->classes[k]) class_of[to_index(c)] = k;
    for (std::size_t i = 0; i < model.levels.size(); ++i) {
      const auto& level = model.levels[i];
      const std::size_t k = class_of[to_index(level.front())];
      bool exact = level.size() == eq->classes[k].size();
      for (EvalId c : level) exact = exact && class_of[to_index(c)] == k;
      if (!exact)
        return ModelViolation{ViolationKind::NotAnEquivalenceClass, i,
                              "level " + std::to_string(i) + " is not an equivalence class"};
    }
  }
  return std::nullopt;
}

/// "({c1,c2},{c3})"
inline std::string to_string(const CostTable& table, const HclpModel& model) {
  std::string out = "(";
  for (std::size_t i = 0; i < model.levels.size(); ++i) {
    if (i) out += ',';
    out += '{';
    for (std::size_t j = 0; j < model.levels[i].size(); ++j) {
      if (j) out += ',';
      out += table.name(model.levels[i][j]);
    }
    out += '}';
  }
  return out + ")";
}

}  // namespace hclp

#endif  // HCLP_MODEL_HPP
