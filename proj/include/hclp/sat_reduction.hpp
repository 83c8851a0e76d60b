#ifndef HCLP_SAT_REDUCTION_HPP
#define HCLP_SAT_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/model.hpp"
#include "hclp/oracle.hpp"
#include "hclp/semantics.hpp"
#include "hclp/statement.hpp"

// Turns a 3-CNF formula into statements gamma and a query alpha <= beta such
// that the formula is satisfiable iff gamma does not entail the query over
// models whose levels have at most t evaluations (t >= 2). Everything in
// gamma and the query is non-strict.

namespace hclp::sat {

struct Literal {
  std::uint32_t var = 1;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// Every clause has exactly three literals; repeats are allowed.
struct Cnf3 {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf3&, const Cnf3&) = default;
};

/// Truth value of variable i + 1 at position i.
using Assignment = std::vector<bool>;

inline void validate(const Cnf3& cnf) {
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j)
    for (const Literal& l : cnf.clauses[j])
      if (l.var < 1 || l.var > cnf.num_vars)
        throw Error(ErrorCode::Dimacs, "clause " + std::to_string(j + 1) + " references variable " +
                                           std::to_string(l.var) + " outside 1.." + std::to_string(cnf.num_vars));
}

/// DIMACS CNF: `c` comment lines, a `p cnf VARS CLAUSES` header, then
/// zero-terminated clauses (which may span lines). Clauses with one or two
/// literals are padded by repeating their last literal; longer clauses and
/// empty clauses are rejected.
inline Cnf3 parse_dimacs(std::string_view text) {
  Cnf3 cnf;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> pending;
  std::size_t line_no = 0;
  std::size_t start = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::Dimacs, "line " + std::to_string(line_no) + ": " + why);
  };
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    line.remove_prefix(first);
    if (line.front() == 'c') continue;
    if (line.front() == '%') break;
    std::istringstream in{std::string(line)};
    if (line.front() == 'p') {
      if (have_header) throw fail("duplicate problem line");
      std::string p, format;
      long long vars = -1, clauses = -1;
      if (!(in >> p >> format >> vars >> clauses) || p != "p" || format != "cnf" || vars < 0 || clauses < 0)
        throw fail("expected \"p cnf VARS CLAUSES\"");
      std::string extra;
      if (in >> extra) throw fail("unexpected text after problem line");
      cnf.num_vars = static_cast<std::uint32_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw fail("clause before problem line");
    std::string token;
    while (in >> token) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) throw fail("bad literal \"" + token + "\"");
      if (value == 0) {
        if (pending.empty()) throw fail("empty clause");
        if (pending.size() > 3) throw fail("clause has " + std::to_string(pending.size()) + " literals, at most 3 allowed");
        while (pending.size() < 3) pending.push_back(pending.back());
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long long var = value < 0 ? -value : value;
      if (var > static_cast<long long>(cnf.num_vars))
        throw fail("literal " + token + " exceeds declared variable count " + std::to_string(cnf.num_vars));
      pending.push_back({static_cast<std::uint32_t>(var), value > 0});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw Error(ErrorCode::Dimacs, "missing problem line");
  if (!pending.empty()) throw Error(ErrorCode::Dimacs, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared_clauses)
    throw Error(ErrorCode::Dimacs, "problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                                       std::to_string(cnf.clauses.size()));
  return cnf;
}

inline std::string to_dimacs(const Cnf3& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " + std::to_string(cnf.clauses.size()) + "\n";
  for (const Clause& clause : cnf.clauses) {
    for (const Literal& l : clause) out += (l.positive ? "" : "-") + std::to_string(l.var) + " ";
    out += "0\n";
  }
  return out;
}

inline bool evaluates_true(const Cnf3& cnf, const Assignment& f) {
  if (f.size() != cnf.num_vars)
    throw Error(ErrorCode::IncompleteAssignment, "assignment has " + std::to_string(f.size()) + " values for " +
                                                     std::to_string(cnf.num_vars) + " variables");
  for (const Clause& clause : cnf.clauses) {
    bool sat = false;
    for (const Literal& l : clause) sat = sat || f[l.var - 1] == l.positive;
    if (!sat) return false;
  }
  return true;
}

/// Truth-table search; the first satisfying assignment in binary counting
/// order (variable 1 least significant).
inline std::optional<Assignment> brute_force_sat(const Cnf3& cnf) {
  validate(cnf);
  if (cnf.num_vars > 24) throw Error(ErrorCode::SizeGuard, "truth-table search refuses more than 24 variables");
  Assignment f(cnf.num_vars);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.num_vars); ++bits) {
    for (std::uint32_t i = 0; i < cnf.num_vars; ++i) f[i] = (bits >> i) & 1;
    if (evaluates_true(cnf, f)) return f;
  }
  return std::nullopt;
}

/// The generated entailment problem, with named handles into it.
struct ReductionInstance {
  Cnf3 cnf;
  std::size_t t = 2;
  CostTable table;
  Statements gamma;                               // gamma1, then gamma2, then gamma3
  PreferenceStatement query;                      // alpha <= beta
  std::vector<std::vector<EvalId>> clause_evals;  // Q_j: the evaluations of clause j's literals

  std::size_t num_vars() const noexcept { return cnf.num_vars; }
  EvalId cstar() const noexcept { return eval_at(0); }
  EvalId q_plus(std::size_t i) const noexcept { return eval_at(1 + 2 * (i - 1)); }
  EvalId q_minus(std::size_t i) const noexcept { return eval_at(2 + 2 * (i - 1)); }
  EvalId aux(std::size_t i, std::size_t k) const noexcept {
    return eval_at(1 + 2 * cnf.num_vars + (i - 1) * (t - 1) + (k - 1));
  }
  EvalId literal_eval(const Literal& l) const noexcept { return l.positive ? q_plus(l.var) : q_minus(l.var); }
};

/// Builds the instance. Evaluations: cstar, q+{i}, q-{i}, a{i}^{k}.
/// Alternatives: alpha, beta, alpha{i}, beta{i}, delta{i}, gamma{i}^{k},
/// theta{j}, tau{j}. All costs are 0 or 1.
inline ReductionInstance build_instance(const Cnf3& cnf, std::size_t t, Combiner combiner = Combiner::Sum) {
  if (t < 2) throw Error(ErrorCode::InvalidParameter, "the reduction needs t >= 2, got " + std::to_string(t));
  validate(cnf);
  const std::size_t r = cnf.num_vars;
  const std::size_t s = cnf.clauses.size();
  const auto num = [](std::size_t v) { return std::to_string(v); };

  std::vector<std::string> evals{"cstar"};
  for (std::size_t i = 1; i <= r; ++i) {
    evals.push_back("q+" + num(i));
    evals.push_back("q-" + num(i));
  }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t k = 1; k < t; ++k) evals.push_back("a" + num(i) + "^" + num(k));

  std::vector<std::string> alts{"alpha", "beta"};
  for (std::size_t i = 1; i <= r; ++i) {
    alts.push_back("alpha" + num(i));
    alts.push_back("beta" + num(i));
    alts.push_back("delta" + num(i));
  }
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t k = 1; k < t; ++k) alts.push_back("gamma" + num(i) + "^" + num(k));
  for (std::size_t j = 1; j <= s; ++j) {
    alts.push_back("theta" + num(j));
    alts.push_back("tau" + num(j));
  }

  const std::size_t alpha = 0, beta = 1;
  auto alpha_i = [&](std::size_t i) { return 2 + 3 * (i - 1); };
  auto beta_i = [&](std::size_t i) { return 3 + 3 * (i - 1); };
  auto delta_i = [&](std::size_t i) { return 4 + 3 * (i - 1); };
  auto gamma_ik = [&](std::size_t i, std::size_t k) { return 2 + 3 * r + (i - 1) * (t - 1) + (k - 1); };
  auto theta_j = [&](std::size_t j) { return 2 + 3 * r + r * (t - 1) + 2 * (j - 1); };
  auto tau_j = [&](std::size_t j) { return 3 + 3 * r + r * (t - 1) + 2 * (j - 1); };

  ReductionInstance inst;
  inst.cnf = cnf;
  inst.t = t;

  std::vector<CostTable::Row> rows;
  for (const auto& e : evals) rows.push_back({e, std::vector<Rational>(alts.size())});
  auto set_one = [&](EvalId c, std::size_t a) { rows[to_index(c)].costs[a] = Rational(1); };

  set_one(inst.cstar(), alpha);
  for (std::size_t i = 1; i <= r; ++i) {
    set_one(inst.cstar(), alpha_i(i));
    set_one(inst.q_plus(i), beta_i(i));
    set_one(inst.q_minus(i), beta_i(i));
    set_one(inst.q_plus(i), delta_i(i));
    set_one(inst.q_minus(i), delta_i(i));
    for (std::size_t k = 1; k < t; ++k) set_one(inst.aux(i, k), gamma_ik(i, k));
  }
  for (std::size_t j = 1; j <= s; ++j) {
    set_one(inst.cstar(), theta_j(j));
    std::vector<EvalId> q;
    for (const Literal& l : cnf.clauses[j - 1]) {
      const EvalId c = inst.literal_eval(l);
      if (std::find(q.begin(), q.end(), c) == q.end()) q.push_back(c);
    }
    for (EvalId c : q) set_one(c, tau_j(j));
    inst.clause_evals.push_back(std::move(q));
  }
  inst.table = CostTable(std::move(alts), std::move(rows), combiner);

  auto le = [](std::size_t a, std::size_t b) { return PreferenceStatement{alt_at(a), alt_at(b), false}; };
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t k = 1; k < t; ++k) {
      inst.gamma.push_back(le(delta_i(i), gamma_ik(i, k)));
      inst.gamma.push_back(le(gamma_ik(i, k), delta_i(i)));
    }
  for (std::size_t i = 1; i <= r; ++i) inst.gamma.push_back(le(alpha_i(i), beta_i(i)));
  for (std::size_t j = 1; j <= s; ++j) inst.gamma.push_back(le(theta_j(j), tau_j(j)));
  inst.query = le(alpha, beta);
  return inst;
}

/// Levels S_1, ..., S_r, {cstar}, where S_i is the auxiliary block of
/// variable i plus q+{i} when f(p_i) is true and q-{i} otherwise.
inline HclpModel model_from_assignment(const ReductionInstance& inst, const Assignment& f) {
  if (f.size() != inst.num_vars())
    throw Error(ErrorCode::IncompleteAssignment, "assignment has " + std::to_string(f.size()) + " values for " +
                                                     std::to_string(inst.num_vars()) + " variables");
  HclpModel model;
  for (std::size_t i = 1; i <= inst.num_vars(); ++i) {
    std::vector<EvalId> level;
    for (std::size_t k = 1; k < inst.t; ++k) level.push_back(inst.aux(i, k));
    level.push_back(f[i - 1] ? inst.q_plus(i) : inst.q_minus(i));
    model.levels.push_back(std::move(level));
  }
  model.levels.push_back({inst.cstar()});
  return model;
}

/// Reads p_i as true iff q+{i} is used. The model must be a countermodel:
/// it satisfies gamma and beta < alpha, and respects the level-size bound.
inline Assignment assignment_from_model(const ReductionInstance& inst, const HclpModel& model) {
  if (auto violation = validate_model(inst.table, model, LevelSizeAtMost{inst.t}))
    throw Error(ErrorCode::InvalidModel, violation->message);
  if (!satisfies_all(inst.table, model, inst.gamma))
    throw Error(ErrorCode::NotACountermodel, "model does not satisfy the generated statements");
  if (!satisfies(inst.table, model, negate(inst.query)))
    throw Error(ErrorCode::NotACountermodel, "model does not satisfy beta < alpha");
  Assignment f(inst.num_vars());
  for (std::size_t i = 1; i <= inst.num_vars(); ++i) f[i - 1] = model.uses(inst.q_plus(i));
  return f;
}

struct ReductionReport {
  bool sat = false;
  bool entailed = false;
  bool agree = false;
  std::optional<Assignment> assignment;   // a satisfying assignment, if any
  std::optional<HclpModel> countermodel;  // a model of gamma violating the query, if any
};

/// Decides both sides independently: satisfiability by truth table, and
/// entailment by exhaustive enumeration of models with levels of size <= t.
inline ReductionReport verify_reduction(const Cnf3& cnf, std::size_t t, const oracle::OracleLimits& limits = {},
                                        Combiner combiner = Combiner::Sum) {
  ReductionReport report;
  const ReductionInstance inst = build_instance(cnf, t, combiner);
  report.assignment = brute_force_sat(cnf);
  report.sat = report.assignment.has_value();
  report.countermodel =
      oracle::find_countermodel(inst.table, inst.gamma, inst.query, oracle::ModelClassSpec::level_size(t), limits);
  report.entailed = !report.countermodel.has_value();
  report.agree = report.sat == !report.entailed;
  return report;
}

}  // namespace hclp::sat

#endif  // HCLP_SAT_REDUCTION_HPP
