#ifndef HCLP_COMBINER_HPP
#define HCLP_COMBINER_HPP

#include <optional>
#include <span>
#include <string_view>

#include "hclp/rational.hpp"

namespace hclp {

/// The operation that merges costs of equally important evaluations.
///
/// Both members are associative, commutative and monotonic on the
/// non-negative rationals with identity 0, and both satisfy 1 (+) 1 != 0,
/// which the 3-SAT reduction relies on. New kinds must keep those laws.
enum class Combiner { Sum, Max };

inline Rational combine(Combiner combiner, const Rational& x, const Rational& y) {
  if (combiner == Combiner::Sum) return x + y;
  return x < y ? y : x;
}

/// Folds `values` with the combiner; an empty collection yields 0.
inline Rational combine(Combiner combiner, std::span<const Rational> values) {
  Rational acc;
  for (const Rational& v : values) acc = combine(combiner, acc, v);
  return acc;
}

constexpr std::string_view to_string(Combiner combiner) {
  return combiner == Combiner::Sum ? "sum" : "max";
}

inline std::optional<Combiner> parse_combiner(std::string_view text) {
  if (text == "sum") return Combiner::Sum;
  if (text == "max") return Combiner::Max;
  return std::nullopt;
}

}  // namespace hclp

#endif  // HCLP_COMBINER_HPP
