#ifndef HCLP_LEX_ENGINE_HPP
#define HCLP_LEX_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/model.hpp"
#include "hclp/statement.hpp"

// Reasoning over sequence-of-evaluations models: every level holds exactly
// one evaluation. Consistency, deduction and the maximal inconsistency base
// are all read off one greedy run that only ever appends an evaluation whose
// opposed statements are already supported.

namespace hclp {

/// Evaluations of C split by how they judge one statement.
struct StatementClassification {
  std::vector<EvalId> supp;  // c(left) < c(right)
  std::vector<EvalId> opp;   // c(left) > c(right)
  std::vector<EvalId> ind;   // c(left) = c(right)
};

inline StatementClassification classify(const CostTable& table, const PreferenceStatement& stmt) {
  if (!table.contains(stmt.left) || !table.contains(stmt.right))
    throw Error(ErrorCode::NameResolution, "statement refers to an alternative outside the table");
  StatementClassification out;
  for (std::size_t i = 0; i < table.num_evaluations(); ++i) {
    const EvalId c = eval_at(i);
    const auto order = table.cost(c, stmt.left) <=> table.cost(c, stmt.right);
    if (order < 0) {
      out.supp.push_back(c);
    } else if (order > 0) {
      out.opp.push_back(c);
    } else {
      out.ind.push_back(c);
    }
  }
  return out;
}

/// Satisfaction on a sequence model, decided by the first evaluation of the
/// sequence that is not indifferent to the statement.
inline bool seq_satisfies(const CostTable& table, std::span<const EvalId> seq, const PreferenceStatement& stmt) {
  if (!table.contains(stmt.left) || !table.contains(stmt.right))
    throw Error(ErrorCode::NameResolution, "statement refers to an alternative outside the table");
  for (EvalId c : seq) {
    if (!table.contains(c)) throw Error(ErrorCode::NameResolution, "evaluation id outside the table");
    const auto order = table.cost(c, stmt.left) <=> table.cost(c, stmt.right);
    if (order < 0) return true;
    if (order > 0) return false;
  }
  return !stmt.strict;
}

/// Deterministic choice rule for the greedy run: among the evaluations that
/// may be appended, the one earliest in this order is taken. The default
/// (empty) order is the table's declaration order.
class TieOrder {
 public:
  TieOrder() = default;
  explicit TieOrder(std::vector<EvalId> order) : order_(std::move(order)), explicit_(true) {}

  bool is_declaration_order() const noexcept { return !explicit_; }

  /// The full order for a table with `n` evaluations; throws unless the
  /// explicit order is a permutation of 0..n-1.
  std::vector<EvalId> resolve(std::size_t n) const {
    if (!explicit_) {
      std::vector<EvalId> ids(n);
      for (std::size_t i = 0; i < n; ++i) ids[i] = eval_at(i);
      return ids;
    }
    if (order_.size() != n)
      throw Error(ErrorCode::InvalidTieOrder, "tie order lists " + std::to_string(order_.size()) +
                                                  " evaluations, table has " + std::to_string(n));
    std::vector<char> seen(n, 0);
    for (EvalId c : order_) {
      if (to_index(c) >= n || seen[to_index(c)])
        throw Error(ErrorCode::InvalidTieOrder, "tie order is not a permutation of the evaluations");
      seen[to_index(c)] = 1;
    }
    return order_;
  }

 private:
  std::vector<EvalId> order_;
  bool explicit_ = false;
};

/// Incremental state of one greedy run.
///
/// For every unemitted evaluation c the state tracks how many statements it
/// opposes that are not yet supported by the emitted prefix, i.e. the size of
/// Opp(c) - Supp(H). An evaluation is ready exactly when that count is zero.
/// When an emitted evaluation newly supports a statement, only the opposers
/// of that statement are touched, and every statement becomes supported at
/// most once, so a full run costs O(|gamma| * |C|) plus the heap pops.
class EngineState {
 public:
  EngineState(const CostTable& table, std::span<const PreferenceStatement> gamma, const TieOrder& tie = {})
      : order_(tie.resolve(table.num_evaluations())) {
    const std::size_t n_eval = table.num_evaluations();
    const std::size_t n_stmt = gamma.size();
    for (const auto& stmt : gamma)
      if (!table.contains(stmt.left) || !table.contains(stmt.right))
        throw Error(ErrorCode::NameResolution, "statement refers to an alternative outside the table");

    position_.resize(n_eval);
    for (std::size_t p = 0; p < n_eval; ++p) position_[to_index(order_[p])] = static_cast<std::uint32_t>(p);

    // Two passes over the rank rows: count, then fill compressed rows.
    supp_offsets_.assign(n_eval + 1, 0);
    opp_offsets_.assign(n_stmt + 1, 0);
    residual_.assign(n_eval, 0);
    for (std::size_t j = 0; j < n_stmt; ++j) {
      const auto left = table.rank_row(gamma[j].left);
      const auto right = table.rank_row(gamma[j].right);
      std::uint32_t opposers = 0;
      for (std::size_t c = 0; c < n_eval; ++c) {
        if (left[c] < right[c]) {
          ++supp_offsets_[c + 1];
        } else if (left[c] > right[c]) {
          ++residual_[c];
          ++opposers;
        }
      }
      opp_offsets_[j + 1] = opposers;
    }
    for (std::size_t c = 0; c < n_eval; ++c) supp_offsets_[c + 1] += supp_offsets_[c];
    for (std::size_t j = 0; j < n_stmt; ++j) opp_offsets_[j + 1] += opp_offsets_[j];
    supp_items_.resize(supp_offsets_[n_eval]);
    opp_items_.resize(opp_offsets_[n_stmt]);
    std::vector<std::uint32_t> supp_fill(supp_offsets_.begin(), supp_offsets_.end() - 1);
    for (std::size_t j = 0; j < n_stmt; ++j) {
      const auto left = table.rank_row(gamma[j].left);
      const auto right = table.rank_row(gamma[j].right);
      std::uint32_t fill = opp_offsets_[j];
      for (std::size_t c = 0; c < n_eval; ++c) {
        if (left[c] < right[c]) {
          supp_items_[supp_fill[c]++] = static_cast<std::uint32_t>(j);
        } else if (left[c] > right[c]) {
          opp_items_[fill++] = static_cast<std::uint32_t>(c);
        }
      }
    }

    supported_.assign(n_stmt, false);
    emitted_.assign(n_eval, false);
    sequence_.reserve(n_eval);
    for (std::size_t c = 0; c < n_eval; ++c)
      if (residual_[c] == 0) ready_.push(position_[c]);
  }

  /// Appends the earliest ready evaluation. Returns false when none is ready.
  bool step() {
    if (ready_.empty()) return false;
    const EvalId c = order_[ready_.top()];
    ready_.pop();
    emitted_[to_index(c)] = true;
    sequence_.push_back(c);
    for (std::uint32_t k = supp_offsets_[to_index(c)]; k < supp_offsets_[to_index(c) + 1]; ++k) {
      const std::uint32_t j = supp_items_[k];
      if (supported_[j]) continue;
      supported_[j] = true;
      for (std::uint32_t q = opp_offsets_[j]; q < opp_offsets_[j + 1]; ++q) {
        const std::uint32_t other = opp_items_[q];
        if (--residual_[other] == 0) ready_.push(position_[other]);
      }
    }
    return true;
  }

  void run() {
    while (step()) {
    }
  }

  std::span<const EvalId> sequence() const noexcept { return sequence_; }
  bool emitted(EvalId c) const { return emitted_.at(to_index(c)); }
  bool supported(std::size_t statement) const { return supported_.at(statement); }
  std::size_t residual_opposition(EvalId c) const { return residual_.at(to_index(c)); }
  std::size_t ready_count() const noexcept { return ready_.size(); }

  const std::vector<bool>& supported_flags() const noexcept { return supported_; }
  const std::vector<bool>& emitted_flags() const noexcept { return emitted_; }

 private:
  std::vector<EvalId> order_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> supp_offsets_, supp_items_;  // statements supported by each evaluation
  std::vector<std::uint32_t> opp_offsets_, opp_items_;    // evaluations opposing each statement
  std::vector<std::uint32_t> residual_;
  std::vector<bool> supported_;
  std::vector<bool> emitted_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready_;
  std::vector<EvalId> sequence_;
};

struct ConsCheckResult {
  std::vector<EvalId> sequence;  // the model H
  std::vector<bool> supported;   // per statement of gamma: in Supp(H)
  std::vector<bool> emitted;     // per evaluation: in sigma(H)

  HclpModel model() const { return HclpModel::sequence(sequence); }
};

/// `Naive` rescans every statement for every candidate at every step
/// (cubic). It exists as a differential-testing partner for the incremental
/// engine and works on the raw costs instead of the rank cache.
enum class ScanStrategy { Incremental, Naive };

namespace detail {

inline ConsCheckResult cons_check_naive(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                        const TieOrder& tie) {
  const std::vector<EvalId> order = tie.resolve(table.num_evaluations());
  for (const auto& stmt : gamma)
    if (!table.contains(stmt.left) || !table.contains(stmt.right))
      throw Error(ErrorCode::NameResolution, "statement refers to an alternative outside the table");
  ConsCheckResult out;
  out.supported.assign(gamma.size(), false);
  out.emitted.assign(table.num_evaluations(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const EvalId* chosen = nullptr;
    for (const EvalId& c : order) {
      if (out.emitted[to_index(c)]) continue;
      bool allowed = true;
      for (std::size_t j = 0; j < gamma.size() && allowed; ++j)
        if (!out.supported[j] && table.cost(c, gamma[j].left) > table.cost(c, gamma[j].right)) allowed = false;
      if (allowed) {
        chosen = &c;
        break;
      }
    }
    if (!chosen) break;
    out.emitted[to_index(*chosen)] = true;
    out.sequence.push_back(*chosen);
    for (std::size_t j = 0; j < gamma.size(); ++j)
      if (table.cost(*chosen, gamma[j].left) < table.cost(*chosen, gamma[j].right)) out.supported[j] = true;
  }
  return out;
}

}  // namespace detail

/// Greedy run: repeatedly append any unemitted evaluation all of whose
/// opposed statements are already supported, choosing by `tie`. The result
/// always satisfies the non-strict weakening of gamma.
inline ConsCheckResult cons_check(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                  const TieOrder& tie = {}, ScanStrategy strategy = ScanStrategy::Incremental) {
  if (strategy == ScanStrategy::Naive) return detail::cons_check_naive(table, gamma, tie);
  EngineState state(table, gamma, tie);
  state.run();
  return {std::vector<EvalId>(state.sequence().begin(), state.sequence().end()), state.supported_flags(),
          state.emitted_flags()};
}

/// A pair (statements, evaluations): every statement is indifferent outside
/// the evaluation part, and every evaluation of the part opposes one of the
/// statements. Statements are positions in gamma, so duplicates stay distinct.
struct InconsistencyBase {
  std::vector<std::size_t> statements;
  std::vector<EvalId> evaluations;

  bool empty() const noexcept { return statements.empty() && evaluations.empty(); }
  friend bool operator==(const InconsistencyBase&, const InconsistencyBase&) = default;
};

inline InconsistencyBase mib_from(const ConsCheckResult& run) {
  InconsistencyBase base;
  for (std::size_t j = 0; j < run.supported.size(); ++j)
    if (!run.supported[j]) base.statements.push_back(j);
  for (std::size_t c = 0; c < run.emitted.size(); ++c)
    if (!run.emitted[c]) base.evaluations.push_back(eval_at(c));
  return base;
}

/// The maximal inconsistency base: what a greedy run leaves behind. It does
/// not depend on the tie order.
inline InconsistencyBase mib(const CostTable& table, std::span<const PreferenceStatement> gamma,
                             const TieOrder& tie = {}) {
  return mib_from(cons_check(table, gamma, tie));
}

/// Checks both defining clauses of an inconsistency base directly.
inline bool is_inconsistency_base(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                  const InconsistencyBase& base) {
  std::vector<char> in_base(table.num_evaluations(), 0);
  for (EvalId c : base.evaluations) {
    if (!table.contains(c)) return false;
    in_base[to_index(c)] = 1;
  }
  for (std::size_t j : base.statements) {
    if (j >= gamma.size()) return false;
    for (std::size_t c = 0; c < table.num_evaluations(); ++c)
      if (!in_base[c] && table.cost(eval_at(c), gamma[j].left) != table.cost(eval_at(c), gamma[j].right))
        return false;
  }
  for (EvalId c : base.evaluations) {
    bool opposes = false;
    for (std::size_t j : base.statements)
      if (table.cost(c, gamma[j].left) > table.cost(c, gamma[j].right)) opposes = true;
    if (!opposes) return false;
  }
  return true;
}

namespace detail {

inline bool all_strict_supported(std::span<const PreferenceStatement> gamma, const std::vector<bool>& supported) {
  for (std::size_t j = 0; j < gamma.size(); ++j)
    if (gamma[j].strict && !supported[j]) return false;
  return true;
}

}  // namespace detail

/// Consistency over sequence models: the greedy run supports every strict
/// statement. When it does, the run's sequence is a model of gamma.
inline bool is_consistent(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  const auto run = cons_check(table, gamma);
  return detail::all_strict_supported(gamma, run.supported);
}

/// The greedy sequence if gamma is consistent.
inline std::optional<std::vector<EvalId>> consistency_witness(const CostTable& table,
                                                              std::span<const PreferenceStatement> gamma) {
  auto run = cons_check(table, gamma);
  if (!detail::all_strict_supported(gamma, run.supported)) return std::nullopt;
  return std::move(run.sequence);
}

/// gamma entails query iff gamma plus the negated query is inconsistent.
inline bool deduce(const CostTable& table, std::span<const PreferenceStatement> gamma,
                   const PreferenceStatement& query) {
  Statements extended(gamma.begin(), gamma.end());
  extended.push_back(negate(query));
  return !is_consistent(table, extended);
}

inline Statements nonstrict_closure(std::span<const PreferenceStatement> gamma) {
  Statements out;
  out.reserve(gamma.size());
  for (const auto& stmt : gamma) out.push_back(weakened(stmt));
  return out;
}

/// (gamma - MIB statements) united with the non-strict closure of gamma.
/// Always consistent: the greedy sequence of gamma satisfies it.
inline Statements repair(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  const auto run = cons_check(table, gamma);
  Statements out;
  using Key = std::tuple<std::size_t, std::size_t, bool>;
  std::set<Key> present;
  auto key = [](const PreferenceStatement& s) { return Key{to_index(s.left), to_index(s.right), s.strict}; };
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (!run.supported[j]) continue;
    out.push_back(gamma[j]);
    present.insert(key(gamma[j]));
  }
  for (const auto& stmt : gamma) {
    const auto w = weakened(stmt);
    if (present.insert(key(w)).second) out.push_back(w);
  }
  return out;
}

namespace detail {

inline bool has_support(const CostTable& table, const PreferenceStatement& stmt) {
  for (std::size_t c = 0; c < table.num_evaluations(); ++c)
    if (table.cost(eval_at(c), stmt.left) < table.cost(eval_at(c), stmt.right)) return true;
  return false;
}

inline bool agree_everywhere(const CostTable& table, AltId a, AltId b) {
  for (std::size_t c = 0; c < table.num_evaluations(); ++c)
    if (table.cost(eval_at(c), a) != table.cost(eval_at(c), b)) return false;
  return true;
}

}  // namespace detail

/// Some sequence using every evaluation satisfies gamma. Decided as: the MIB
/// has no evaluations, and every strict statement has a supporter in C (a
/// strict statement on which all evaluations agree is unsatisfiable on its
/// own, even though it leaves the MIB evaluation part empty).
inline bool strong_is_consistent(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  const auto run = cons_check(table, gamma);
  if (run.sequence.size() != table.num_evaluations()) return false;
  for (const auto& stmt : gamma)
    if (stmt.strict && !detail::has_support(table, stmt)) return false;
  return true;
}

namespace detail {

inline void require_strongly_consistent(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  if (!strong_is_consistent(table, gamma))
    throw Error(ErrorCode::PreconditionViolation,
                "statements are not strongly consistent; entailment over complete sequences is vacuous");
}

}  // namespace detail

/// Entailment over sequences that use every evaluation. Requires gamma to be
/// strongly consistent.
inline bool strong_deduce(const CostTable& table, std::span<const PreferenceStatement> gamma,
                          const PreferenceStatement& query) {
  detail::require_strongly_consistent(table, gamma);
  const bool weak = deduce(table, gamma, weakened(query));
  if (!query.strict) return weak;
  return weak && !detail::agree_everywhere(table, query.left, query.right);
}

/// a == b holds in every complete-sequence model of gamma iff a and b agree
/// on every evaluation. Requires gamma to be strongly consistent.
inline bool strong_deduce_equivalence(const CostTable& table, std::span<const PreferenceStatement> gamma, AltId a,
                                      AltId b) {
  detail::require_strongly_consistent(table, gamma);
  if (!table.contains(a) || !table.contains(b))
    throw Error(ErrorCode::NameResolution, "alternative id outside the table");
  return detail::agree_everywhere(table, a, b);
}

/// Drops the MIB evaluations; entailment from gamma is unchanged and gamma
/// becomes strongly consistent on the result. Requires gamma consistent.
inline CostTable reduce_evaluations(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  const auto run = cons_check(table, gamma);
  if (!detail::all_strict_supported(gamma, run.supported))
    throw Error(ErrorCode::PreconditionViolation, "cannot reduce evaluations of an inconsistent statement set");
  std::vector<EvalId> keep;
  for (std::size_t c = 0; c < table.num_evaluations(); ++c)
    if (run.emitted[c]) keep.push_back(eval_at(c));
  return table.restricted_to(keep);
}

/// One evaluation per class, costing each alternative the combined cost of
/// the class. Sequence reasoning over the result is reasoning over models
/// whose levels are the classes. Singleton classes keep their name; larger
/// classes are named by joining member names with '+'.
inline CostTable equiv_reduce(const CostTable& table, const std::vector<std::vector<EvalId>>& classes) {
  if (auto problem = partition_problem(table, classes)) throw Error(ErrorCode::InvalidPartition, *problem);
  std::vector<CostTable::Row> rows;
  rows.reserve(classes.size());
  for (const auto& cls : classes) {
    CostTable::Row row;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) row.evaluation += '+';
      row.evaluation += table.name(cls[i]);
    }
    row.costs.resize(table.num_alternatives());
    for (std::size_t a = 0; a < table.num_alternatives(); ++a) {
      Rational acc;
      for (EvalId c : cls) acc = combine(table.combiner(), acc, table.cost(c, alt_at(a)));
      row.costs[a] = acc;
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> alts(table.alternatives().begin(), table.alternatives().end());
  return CostTable(std::move(alts), std::move(rows), table.combiner());
}

/// Maps a sequence over an equiv_reduce table back to levels of the
/// original table.
inline HclpModel expand_classes(std::span<const EvalId> reduced_sequence,
                                const std::vector<std::vector<EvalId>>& classes) {
  HclpModel model;
  for (EvalId k : reduced_sequence) model.levels.push_back(classes.at(to_index(k)));
  return model;
}

}  // namespace hclp

#endif  // HCLP_LEX_ENGINE_HPP
