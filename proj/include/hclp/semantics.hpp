#ifndef HCLP_SEMANTICS_HPP
#define HCLP_SEMANTICS_HPP

#include <span>

#include "hclp/combiner.hpp"
#include "hclp/cost_table.hpp"
#include "hclp/model.hpp"
#include "hclp/statement.hpp"

namespace hclp {

enum class ComparisonOutcome { StrictlyBetter, Equivalent, StrictlyWorse };

constexpr ComparisonOutcome reversed(ComparisonOutcome o) noexcept {
  switch (o) {
    case ComparisonOutcome::StrictlyBetter: return ComparisonOutcome::StrictlyWorse;
    case ComparisonOutcome::StrictlyWorse: return ComparisonOutcome::StrictlyBetter;
    default: return o;
  }
}

namespace detail {

inline void require_alternatives(const CostTable& table, AltId a, AltId b) {
  if (!table.contains(a) || !table.contains(b))
    throw Error(ErrorCode::NameResolution, "alternative id outside the table");
}

inline ComparisonOutcome compare_values(const Rational& x, const Rational& y) {
  const auto order = x <=> y;
  if (order < 0) return ComparisonOutcome::StrictlyBetter;
  if (order > 0) return ComparisonOutcome::StrictlyWorse;
  return ComparisonOutcome::Equivalent;
}

inline ComparisonOutcome level_compare_unchecked(const CostTable& table, std::span<const EvalId> level, AltId a,
                                                 AltId b) {
  if (level.size() == 1) return compare_values(table.cost(level[0], a), table.cost(level[0], b));
  Rational ca;
  Rational cb;
  for (EvalId c : level) {
    ca = combine(table.combiner(), ca, table.cost(c, a));
    cb = combine(table.combiner(), cb, table.cost(c, b));
  }
  return compare_values(ca, cb);
}

}  // namespace detail

/// Compares a and b on one level: the combined costs of the level decide.
inline ComparisonOutcome level_compare(const CostTable& table, std::span<const EvalId> level, AltId a, AltId b) {
  detail::require_alternatives(table, a, b);
  for (EvalId c : level)
    if (!table.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
  return detail::level_compare_unchecked(table, level, a, b);
}

/// Lexicographic comparison: the first level on which a and b differ decides.
/// The empty model makes every pair equivalent.
inline ComparisonOutcome model_compare(const CostTable& table, const HclpModel& model, AltId a, AltId b) {
  detail::require_alternatives(table, a, b);
  for (const auto& level : model.levels) {
    for (EvalId c : level)
      if (!table.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
    const auto outcome = detail::level_compare_unchecked(table, level, a, b);
    if (outcome != ComparisonOutcome::Equivalent) return outcome;
  }
  return ComparisonOutcome::Equivalent;
}

inline bool satisfies(const CostTable& table, const HclpModel& model, const PreferenceStatement& stmt) {
  const auto outcome = model_compare(table, model, stmt.left, stmt.right);
  if (stmt.strict) return outcome == ComparisonOutcome::StrictlyBetter;
  return outcome != ComparisonOutcome::StrictlyWorse;
}

inline bool satisfies_all(const CostTable& table, const HclpModel& model, std::span<const PreferenceStatement> gamma) {
  for (const auto& stmt : gamma)
    if (!satisfies(table, model, stmt)) return false;
  return true;
}

}  // namespace hclp

#endif  // HCLP_SEMANTICS_HPP
