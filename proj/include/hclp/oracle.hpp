#ifndef HCLP_ORACLE_HPP
#define HCLP_ORACLE_HPP

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/lex_engine.hpp"
#include "hclp/model.hpp"
#include "hclp/semantics.hpp"
#include "hclp/statement.hpp"

// Exhaustive ground truth. Everything here enumerates models (or candidate
// inconsistency bases) one by one and checks them with the plain semantics;
// nothing is pruned.

namespace hclp::oracle {

/// Which HCLP models are enumerated. `require_full_sigma` keeps only models
/// that use every evaluation.
struct ModelClassSpec {
  ModelConstraint constraint = Unrestricted{};
  bool require_full_sigma = false;

  static ModelClassSpec level_size(std::size_t t, bool full_sigma = false) {
    return {LevelSizeAtMost{t}, full_sigma};
  }
  static ModelClassSpec sequences(bool full_sigma = false) { return level_size(1, full_sigma); }
  static ModelClassSpec equivalence(std::vector<std::vector<EvalId>> classes) {
    return {EquivalenceClasses{std::move(classes)}, false};
  }
};

constexpr const char* kCapEnvironmentVariable = "HCLP_ORACLE_CAP";
constexpr std::size_t kHardEvaluationLimit = 30;

struct OracleLimits {
  std::size_t max_evaluations = 8;
  std::size_t max_statements = 16;  // for brute_mib, which enumerates subsets of gamma

  /// Defaults, with max_evaluations overridden by HCLP_ORACLE_CAP when set.
  static OracleLimits from_environment() {
    OracleLimits limits;
    if (const char* value = std::getenv(kCapEnvironmentVariable)) {
      std::size_t cap = 0;
      const char* end = value + std::char_traits<char>::length(value);
      auto [ptr, ec] = std::from_chars(value, end, cap);
      if (ec != std::errc() || ptr != end || cap == 0)
        throw Error(ErrorCode::InvalidParameter,
                    std::string(kCapEnvironmentVariable) + " must be a positive integer, got \"" + value + "\"");
      limits.max_evaluations = cap;
    }
    return limits;
  }
};

using ModelVisitor = std::function<bool(const HclpModel&)>;

namespace detail {

using Mask = std::uint32_t;

inline void guard_size(const CostTable& table, const OracleLimits& limits) {
  const std::size_t n = table.num_evaluations();
  if (n > limits.max_evaluations || n > kHardEvaluationLimit)
    throw Error(ErrorCode::SizeGuard, "oracle refuses " + std::to_string(n) + " evaluations (cap " +
                                          std::to_string(std::min(limits.max_evaluations, kHardEvaluationLimit)) +
                                          ")");
}

inline std::vector<EvalId> mask_to_level(Mask mask) {
  std::vector<EvalId> level;
  while (mask) {
    level.push_back(eval_at(static_cast<std::size_t>(std::countr_zero(mask))));
    mask &= mask - 1;
  }
  return level;
}

class Enumerator {
 public:
  Enumerator(const CostTable& table, const ModelClassSpec& spec, const ModelVisitor& visit)
      : n_(table.num_evaluations()), spec_(spec), visit_(visit) {
    if (const auto* bound = std::get_if<LevelSizeAtMost>(&spec.constraint)) {
      if (bound->t < 1) throw Error(ErrorCode::InvalidParameter, "level-size bound must be at least 1");
      max_level_ = bound->t;
    } else if (const auto* eq = std::get_if<EquivalenceClasses>(&spec.constraint)) {
      if (auto problem = partition_problem(table, eq->classes)) throw Error(ErrorCode::InvalidPartition, *problem);
      for (const auto& cls : eq->classes) {
        Mask m = 0;
        for (EvalId c : cls) m |= Mask{1} << to_index(c);
        class_masks_.push_back(m);
      }
    }
  }

  void run() {
    const Mask full = n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    if (spec_.require_full_sigma) {
      partitions(full);
      return;
    }
    // Subsets by size, then lexicographically by member indices.
    for (std::size_t k = 0; k <= n_ && !stopped_; ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (!stopped_) {
        Mask subset = 0;
        for (std::size_t i : pick) subset |= Mask{1} << i;
        partitions(subset);
        // Next k-combination of 0..n-1.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n_ - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

 private:
  bool allowed_block(Mask block) const {
    if (!class_masks_.empty() || std::holds_alternative<EquivalenceClasses>(spec_.constraint)) {
      for (Mask m : class_masks_)
        if (m == block) return true;
      return false;
    }
    return static_cast<std::size_t>(std::popcount(block)) <= max_level_;
  }

  // Every ordered partition of `remaining` into allowed blocks: pick the
  // first block among the non-empty submasks (increasing), then recurse.
  void partitions(Mask remaining) {
    if (stopped_) return;
    if (remaining == 0) {
      if (!visit_(current_)) stopped_ = true;
      return;
    }
    for (Mask block = 0; (block = (block - remaining) & remaining) != 0;) {
      if (!allowed_block(block)) continue;
      current_.levels.push_back(mask_to_level(block));
      partitions(remaining & ~block);
      current_.levels.pop_back();
      if (stopped_) return;
    }
  }

  std::size_t n_;
  const ModelClassSpec& spec_;
  const ModelVisitor& visit_;
  std::size_t max_level_ = static_cast<std::size_t>(-1);
  std::vector<Mask> class_masks_;
  HclpModel current_;
  bool stopped_ = false;
};

}  // namespace detail

/// Streams every model of the class exactly once, in a fixed order; the
/// visitor returns false to stop early.
inline void for_each_model(const CostTable& table, const ModelClassSpec& spec, const ModelVisitor& visit,
                           const OracleLimits& limits = {}) {
  detail::guard_size(table, limits);
  detail::Enumerator(table, spec, visit).run();
}

inline std::vector<HclpModel> enumerate_models(const CostTable& table, const ModelClassSpec& spec,
                                               const OracleLimits& limits = {}) {
  std::vector<HclpModel> out;
  for_each_model(
      table, spec,
      [&](const HclpModel& m) {
        out.push_back(m);
        return true;
      },
      limits);
  return out;
}

inline std::size_t count_models(const CostTable& table, const ModelClassSpec& spec, const OracleLimits& limits = {}) {
  std::size_t count = 0;
  for_each_model(
      table, spec,
      [&](const HclpModel&) {
        ++count;
        return true;
      },
      limits);
  return count;
}

inline std::optional<HclpModel> find_model(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                           const ModelClassSpec& spec, const OracleLimits& limits = {}) {
  std::optional<HclpModel> found;
  for_each_model(
      table, spec,
      [&](const HclpModel& m) {
        if (!satisfies_all(table, m, gamma)) return true;
        found = m;
        return false;
      },
      limits);
  return found;
}

inline bool brute_consistent(const CostTable& table, std::span<const PreferenceStatement> gamma,
                             const ModelClassSpec& spec, const OracleLimits& limits = {}) {
  return find_model(table, gamma, spec, limits).has_value();
}

/// A model of gamma that does not satisfy `query`.
inline std::optional<HclpModel> find_countermodel(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                                  const PreferenceStatement& query, const ModelClassSpec& spec,
                                                  const OracleLimits& limits = {}) {
  std::optional<HclpModel> found;
  for_each_model(
      table, spec,
      [&](const HclpModel& m) {
        if (satisfies(table, m, query) || !satisfies_all(table, m, gamma)) return true;
        found = m;
        return false;
      },
      limits);
  return found;
}

/// Every model of gamma satisfies the query (vacuously true without models).
inline bool brute_deduce(const CostTable& table, std::span<const PreferenceStatement> gamma,
                         const PreferenceStatement& query, const ModelClassSpec& spec,
                         const OracleLimits& limits = {}) {
  return !find_countermodel(table, gamma, query, spec, limits).has_value();
}

// Variants over a pre-enumerated model list, for sweeps that ask many
// questions about one table.

inline bool brute_consistent_over(const CostTable& table, std::span<const HclpModel> models,
                                  std::span<const PreferenceStatement> gamma) {
  for (const auto& m : models)
    if (satisfies_all(table, m, gamma)) return true;
  return false;
}

inline bool brute_deduce_over(const CostTable& table, std::span<const HclpModel> models,
                              std::span<const PreferenceStatement> gamma, const PreferenceStatement& query) {
  for (const auto& m : models)
    if (!satisfies(table, m, query) && satisfies_all(table, m, gamma)) return false;
  return true;
}

/// Union of every pair (gamma', C') that meets both inconsistency-base
/// clauses, found by trying all 2^|gamma| * 2^|C| pairs.
inline InconsistencyBase brute_mib(const CostTable& table, std::span<const PreferenceStatement> gamma,
                                   const OracleLimits& limits = {}) {
  using detail::Mask;
  detail::guard_size(table, limits);
  if (gamma.size() > limits.max_statements || gamma.size() > 30)
    throw Error(ErrorCode::SizeGuard, "oracle refuses " + std::to_string(gamma.size()) + " statements (cap " +
                                          std::to_string(limits.max_statements) + ")");
  const std::size_t n = table.num_evaluations();
  std::vector<Mask> decisive(gamma.size(), 0);  // evaluations not indifferent to the statement
  std::vector<Mask> opposing(gamma.size(), 0);
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto order = table.cost(eval_at(c), gamma[j].left) <=> table.cost(eval_at(c), gamma[j].right);
      if (order != 0) decisive[j] |= Mask{1} << c;
      if (order > 0) opposing[j] |= Mask{1} << c;
    }
  }
  const std::uint64_t stmt_subsets = std::uint64_t{1} << gamma.size();
  const std::uint64_t eval_subsets = std::uint64_t{1} << n;
  std::uint64_t union_stmts = 0;
  Mask union_evals = 0;
  for (std::uint64_t gs = 0; gs < stmt_subsets; ++gs) {
    for (std::uint64_t cs = 0; cs < eval_subsets; ++cs) {
      const Mask evals = static_cast<Mask>(cs);
      bool clause_one = true;
      Mask opposed = 0;
      for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (!((gs >> j) & 1)) continue;
        if ((decisive[j] & ~evals) != 0) clause_one = false;
        opposed |= opposing[j];
      }
      const bool clause_two = (evals & ~opposed) == 0;
      if (clause_one && clause_two) {
        union_stmts |= gs;
        union_evals |= evals;
      }
    }
  }
  InconsistencyBase base;
  for (std::size_t j = 0; j < gamma.size(); ++j)
    if ((union_stmts >> j) & 1) base.statements.push_back(j);
  for (std::size_t c = 0; c < n; ++c)
    if ((union_evals >> c) & 1) base.evaluations.push_back(eval_at(c));
  return base;
}

}  // namespace hclp::oracle

#endif  // HCLP_ORACLE_HPP
