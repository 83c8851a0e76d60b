#ifndef HCLP_ORDERING_HPP
#define HCLP_ORDERING_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/lex_engine.hpp"
#include "hclp/statement.hpp"

namespace hclp {

/// `left < right`: some evaluation of `left` comes before every evaluation of
/// `right`. The non-strict form `left <= right` also holds when neither side
/// occurs at all. Sides are disjoint sets of evaluations, kept sorted.
struct OrderingStatement {
  std::vector<EvalId> left;
  std::vector<EvalId> right;
  bool strict = false;

  friend bool operator==(const OrderingStatement&, const OrderingStatement&) = default;
};

/// Sorts and deduplicates both sides, then checks range and disjointness.
inline OrderingStatement make_ordering(const CostTable& universe, std::vector<EvalId> left, std::vector<EvalId> right,
                                       bool strict) {
  for (auto* side : {&left, &right}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
    for (EvalId c : *side)
      if (!universe.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
  }
  std::vector<EvalId> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
  if (!common.empty())
    throw Error(ErrorCode::InvalidStatement,
                "evaluation " + universe.name(common.front()) + " appears on both sides of an ordering statement");
  return {std::move(left), std::move(right), strict};
}

/// "{c1} < {c2,c3}"
inline std::string to_string(const CostTable& universe, const OrderingStatement& stmt) {
  auto side = [&](const std::vector<EvalId>& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + universe.name(ids[i]);
    return out + "}";
  };
  return side(stmt.left) + " " + std::string(relation_symbol(stmt.strict)) + " " + side(stmt.right);
}

inline bool ord_satisfies(const CostTable& universe, std::span<const EvalId> seq, const OrderingStatement& stmt) {
  std::vector<signed char> side(universe.num_evaluations(), 0);
  for (EvalId c : stmt.left) {
    if (!universe.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
    side[to_index(c)] = 1;
  }
  for (EvalId c : stmt.right) {
    if (!universe.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
    side[to_index(c)] = -1;
  }
  std::vector<char> seen(universe.num_evaluations(), 0);
  for (EvalId c : seq) {
    if (!universe.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
    if (seen[to_index(c)]++) throw Error(ErrorCode::InvalidModel, "sequence repeats " + universe.name(c));
  }
  for (EvalId c : seq) {
    if (side[to_index(c)] == 1) return true;
    if (side[to_index(c)] == -1) return false;
  }
  return !stmt.strict;
}

/// (Supp, Opp) of the statement, with the same strictness.
inline OrderingStatement statement_to_ordering(const CostTable& table, const PreferenceStatement& stmt) {
  auto split = classify(table, stmt);
  return {std::move(split.supp), std::move(split.opp), stmt.strict};
}

/// Two fresh alternatives for one ordering statement: the left one costs 1
/// exactly on the right side, the right one costs 1 exactly on the left side.
struct SyntheticPair {
  std::string left_name;
  std::string right_name;
  std::vector<Rational> left_costs;   // indexed by evaluation
  std::vector<Rational> right_costs;
  bool strict = false;
};

inline std::string synthetic_name(std::string_view base, std::size_t counter) {
  return std::string(base) + "#ord" + std::to_string(counter);
}

inline SyntheticPair ordering_to_statement(const CostTable& universe, const OrderingStatement& stmt,
                                           std::size_t counter) {
  SyntheticPair pair;
  pair.left_name = synthetic_name("alpha", counter);
  pair.right_name = synthetic_name("beta", counter);
  for (const auto& name : {pair.left_name, pair.right_name})
    if (universe.find_alternative(name))
      throw Error(ErrorCode::NameCollision, "synthetic alternative " + name + " already exists");
  pair.left_costs.assign(universe.num_evaluations(), Rational(0));
  pair.right_costs.assign(universe.num_evaluations(), Rational(0));
  for (EvalId c : stmt.right) pair.left_costs.at(to_index(c)) = Rational(1);
  for (EvalId c : stmt.left) pair.right_costs.at(to_index(c)) = Rational(1);
  pair.strict = stmt.strict;
  return pair;
}

struct EmbeddedOrderings {
  CostTable table;        // the base table plus two alternatives per ordering statement
  Statements statements;  // statements[k] stands for orderings[k]
};

/// Adds the synthetic pairs of all `orderings` to `base`, numbering them
/// from `first_counter` upwards.
inline EmbeddedOrderings embed_orderings(const CostTable& base, std::span<const OrderingStatement> orderings,
                                         std::size_t first_counter = 1) {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> columns;
  std::vector<bool> strict;
  for (std::size_t k = 0; k < orderings.size(); ++k) {
    auto pair = ordering_to_statement(base, orderings[k], first_counter + k);
    names.push_back(std::move(pair.left_name));
    names.push_back(std::move(pair.right_name));
    columns.push_back(std::move(pair.left_costs));
    columns.push_back(std::move(pair.right_costs));
    strict.push_back(pair.strict);
  }
  EmbeddedOrderings out{base.with_alternatives(names, columns), {}};
  const std::size_t offset = base.num_alternatives();
  for (std::size_t k = 0; k < orderings.size(); ++k)
    out.statements.push_back({alt_at(offset + 2 * k), alt_at(offset + 2 * k + 1), static_cast<bool>(strict[k])});
  return out;
}

/// A table with the given evaluation names and no alternatives, for
/// reasoning about ordering statements alone.
inline CostTable evaluation_universe(std::vector<std::string> names) {
  std::vector<CostTable::Row> rows;
  rows.reserve(names.size());
  for (auto& name : names) rows.push_back({std::move(name), {}});
  return CostTable({}, std::move(rows));
}

/// The greedy run over ordering statements. With singleton sides this is a
/// topological sort; `supported[k]` false for a strict statement means it
/// lies on an unresolvable cycle.
inline ConsCheckResult ord_cons_check(const CostTable& universe, std::span<const OrderingStatement> stmts,
                                      const TieOrder& tie = {}) {
  const auto embedded = embed_orderings(universe, stmts);
  return cons_check(embedded.table, embedded.statements, tie);
}

}  // namespace hclp

#endif  // HCLP_ORDERING_HPP
