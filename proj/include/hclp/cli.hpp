#ifndef HCLP_CLI_HPP
#define HCLP_CLI_HPP

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hclp/lex_engine.hpp"
#include "hclp/oracle.hpp"
#include "hclp/ordering.hpp"
#include "hclp/problem_io.hpp"
#include "hclp/sat_reduction.hpp"
#include "hclp/semantics.hpp"

// Command dispatch for the `hclp` tool. Every command writes one JSON
// envelope to standard output with sorted keys:
//
//   command  the subcommand name and the argument vector
//   verdict  the answer (an object)
//   witness  a checkable justification, or null
//   timing   {"elapsed_ms": ...}, the only field that varies between runs
//
// A failed command writes {"command", "error": {"code", "message",
// "location"}} instead. Exit status: 0 for a positive answer, 1 for a
// negative one, 2 for usage or input errors.

namespace hclp::cli {

using Envelope = nlohmann::json;  // std::map-backed, so keys serialize sorted

struct CommandOutcome {
  int exit_code = 2;
  std::string out;  // JSON envelope (or help text)
  std::string err;  // human summary
  Envelope envelope;
};

namespace detail {

using Json = nlohmann::json;

inline Json names_of(const CostTable& table, std::span<const EvalId> ids) {
  Json out = Json::array();
  for (EvalId c : ids) out.push_back(table.name(c));
  return out;
}

inline Json model_json(const CostTable& table, const HclpModel& model) {
  Json out = Json::array();
  for (const auto& level : model.levels) out.push_back(names_of(table, level));
  return out;
}

inline Json statements_json(const CostTable& table, std::span<const PreferenceStatement> gamma) {
  Json out = Json::array();
  for (const auto& s : gamma) out.push_back(to_string(table, s));
  return out;
}

inline std::string format_table(const CostTable& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& a : table.alternatives()) header.push_back(a);
  cells.push_back(header);
  for (std::size_t c = 0; c < table.num_evaluations(); ++c) {
    std::vector<std::string> row{table.name(eval_at(c))};
    for (std::size_t a = 0; a < table.num_alternatives(); ++a)
      row.push_back(table.cost(eval_at(c), alt_at(a)).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  out << "operator: " << to_string(table.combiner()) << "\n";
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) out << std::left << std::setw(static_cast<int>(width[i] + 2)) << row[i];
    out << "\n";
  }
  return out.str();
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem, resolved statements, and helpers shared by the table commands.
struct Loaded {
  io::Problem problem;
  CostTable table;  // including synthetic alternatives of ordering statements
  Statements gamma;

  explicit Loaded(const std::string& path) : problem(io::load_problem(path)) {
    auto resolved = io::resolve_statements(problem);
    table = std::move(resolved.table);
    gamma = std::move(resolved.gamma);
  }

  std::string summary() const {
    std::string out = format_table(table);
    out += "statements:";
    if (gamma.empty()) out += " (none)";
    out += "\n";
    for (const auto& s : gamma) out += "  " + to_string(table, s) + "\n";
    return out;
  }
};

inline QueryText query_text(const Loaded& loaded, const std::string& flag) {
  if (!flag.empty()) return io::check_query(loaded.table, flag, "--query");
  if (loaded.problem.query) return *loaded.problem.query;
  throw UsageError("no query: pass --query or add \"query\" to the problem file");
}

/// Sequence reasoning applies directly, or to the class-merged table when
/// the problem fixes equivalence classes. Bigger level sizes need the oracle.
struct SequenceView {
  CostTable table;
  const std::vector<std::vector<EvalId>>* classes = nullptr;

  HclpModel to_model(std::span<const EvalId> seq) const {
    return classes ? expand_classes(seq, *classes) : HclpModel::sequence(seq);
  }
};

inline SequenceView sequence_view(const Loaded& loaded, const std::string& command) {
  if (loaded.problem.max_level_size && *loaded.problem.max_level_size > 1)
    throw UsageError(command + " reasons over sequence models; the problem sets max_level_size " +
                     std::to_string(*loaded.problem.max_level_size) + ", use brute-deduce for that class");
  if (loaded.problem.equivalence) return {equiv_reduce(loaded.table, *loaded.problem.equivalence), &*loaded.problem.equivalence};
  return {loaded.table, nullptr};
}

struct Result {
  Json verdict = Json::object();
  Json witness = nullptr;
  bool positive = true;
  std::string summary;
};

inline bool all_strict_supported(std::span<const PreferenceStatement> gamma, const ConsCheckResult& run) {
  return ::hclp::detail::all_strict_supported(gamma, run.supported);
}

inline Result cmd_check(const Loaded& in) {
  const auto view = sequence_view(in, "check");
  const auto run = cons_check(view.table, in.gamma);
  const bool ok = all_strict_supported(in.gamma, run);
  Result r;
  r.positive = ok;
  r.verdict["consistent"] = ok;
  r.summary = std::string("consistent: ") + (ok ? "yes" : "no") + "\n";
  if (ok) {
    const auto model = view.to_model(run.sequence);
    r.witness = Json::object({{"model", model_json(in.table, model)}});
    r.summary += "model: " + to_string(in.table, model) + "\n";
  }
  return r;
}

inline Result cmd_deduce(const Loaded& in, const std::string& query_flag) {
  const auto view = sequence_view(in, "deduce");
  const auto query = io::to_statement(in.table, query_text(in, query_flag));
  Statements extended = in.gamma;
  extended.push_back(negate(query));
  const auto run = cons_check(view.table, extended);
  const bool entailed = !all_strict_supported(extended, run);
  Result r;
  r.positive = entailed;
  r.verdict["entailed"] = entailed;
  r.verdict["query"] = to_string(in.table, query);
  r.summary = "query: " + to_string(in.table, query) + "\nentailed: " + (entailed ? "yes" : "no") + "\n";
  if (!entailed) {
    const auto model = view.to_model(run.sequence);
    r.witness = Json::object({{"countermodel", model_json(in.table, model)}});
    r.summary += "countermodel: " + to_string(in.table, model) + "\n";
  }
  return r;
}

inline Json mib_json(const CostTable& table, std::span<const PreferenceStatement> gamma,
                     const InconsistencyBase& base) {
  Json stmts = Json::array();
  for (std::size_t j : base.statements)
    stmts.push_back(Json::object({{"index", j}, {"statement", to_string(table, gamma[j])}}));
  return Json::object({{"statements", stmts}, {"evaluations", names_of(table, base.evaluations)}});
}

inline Result cmd_mib(const Loaded& in) {
  const auto view = sequence_view(in, "mib");
  const auto run = cons_check(view.table, in.gamma);
  // Over a class-merged table the evaluation part names merged classes.
  const auto base = mib_from(run);
  const bool ok = all_strict_supported(in.gamma, run);
  Result r;
  r.positive = ok;
  r.verdict["consistent"] = ok;
  r.witness = mib_json(view.table, in.gamma, base);
  r.summary = std::string("consistent: ") + (ok ? "yes" : "no") + "\ninconsistent statements:";
  for (std::size_t j : base.statements) r.summary += "\n  " + to_string(in.table, in.gamma[j]);
  r.summary += "\nexcluded evaluations:";
  for (EvalId c : base.evaluations) r.summary += " " + view.table.name(c);
  r.summary += "\n";
  return r;
}

inline Result cmd_repair(const Loaded& in) {
  const auto view = sequence_view(in, "repair");
  const bool ok = is_consistent(view.table, in.gamma);
  const Statements repaired = repair(view.table, in.gamma);
  const auto run = cons_check(view.table, repaired);
  Result r;
  r.positive = ok;
  r.verdict["consistent"] = ok;
  r.verdict["repaired"] = statements_json(in.table, repaired);
  r.witness = Json::object({{"model", model_json(in.table, view.to_model(run.sequence))}});
  r.summary = std::string("originally consistent: ") + (ok ? "yes" : "no") + "\nrepaired statements:";
  for (const auto& s : repaired) r.summary += "\n  " + to_string(in.table, s);
  r.summary += "\n";
  return r;
}

inline void require_plain_sequences(const Loaded& in, const std::string& command) {
  if (in.problem.equivalence || (in.problem.max_level_size && *in.problem.max_level_size > 1))
    throw UsageError(command + " reasons over complete sequences; remove \"equivalence\" and "
                               "\"max_level_size\" from the problem");
}

inline Result cmd_strong_check(const Loaded& in) {
  require_plain_sequences(in, "strong-check");
  const auto run = cons_check(in.table, in.gamma);
  const bool ok = strong_is_consistent(in.table, in.gamma);
  const auto base = mib_from(run);
  Result r;
  r.positive = ok;
  r.verdict["strongly_consistent"] = ok;
  r.verdict["mib_evaluations_empty"] = base.evaluations.empty();
  if (ok) r.witness = Json::object({{"model", model_json(in.table, HclpModel::sequence(run.sequence))}});
  r.summary = std::string("strongly consistent: ") + (ok ? "yes" : "no") + "\n";
  return r;
}

inline Result cmd_strong_deduce(const Loaded& in, const std::string& query_flag) {
  require_plain_sequences(in, "strong-deduce");
  const QueryText q = query_text(in, query_flag);
  Result r;
  bool entailed = false;
  if (q.relation == QueryRelation::Equivalent) {
    entailed = strong_deduce_equivalence(in.table, in.gamma, in.table.alternative(q.left), in.table.alternative(q.right));
  } else {
    entailed = strong_deduce(in.table, in.gamma, io::to_statement(in.table, q));
  }
  r.positive = entailed;
  r.verdict["entailed"] = entailed;
  r.verdict["query"] = to_string(q);
  r.summary = "query: " + to_string(q) + "\nentailed over complete sequences: " + (entailed ? "yes" : "no") + "\n";
  return r;
}

inline oracle::ModelClassSpec model_class(const Loaded& in, std::optional<std::size_t> t_flag, bool full_sigma,
                                          bool require) {
  if (t_flag) return oracle::ModelClassSpec::level_size(*t_flag, full_sigma);
  if (in.problem.equivalence) {
    if (full_sigma) throw UsageError("--full-sigma cannot be combined with equivalence classes");
    return oracle::ModelClassSpec::equivalence(*in.problem.equivalence);
  }
  if (in.problem.max_level_size) return oracle::ModelClassSpec::level_size(*in.problem.max_level_size, full_sigma);
  if (require) throw UsageError("no model class: pass --max-level-size or set it in the problem file");
  return {Unrestricted{}, full_sigma};
}

inline Json class_json(const CostTable& table, const oracle::ModelClassSpec& spec) {
  Json out = Json::object();
  out["full_sigma"] = spec.require_full_sigma;
  if (const auto* b = std::get_if<LevelSizeAtMost>(&spec.constraint)) {
    out["max_level_size"] = b->t;
  } else if (const auto* eq = std::get_if<EquivalenceClasses>(&spec.constraint)) {
    Json classes = Json::array();
    for (const auto& cls : eq->classes) classes.push_back(names_of(table, cls));
    out["equivalence"] = classes;
  } else {
    out["unrestricted"] = true;
  }
  return out;
}

inline Result cmd_brute_deduce(const Loaded& in, const std::string& query_flag, std::optional<std::size_t> t,
                               bool full_sigma) {
  const auto spec = model_class(in, t, full_sigma, true);
  const auto query = io::to_statement(in.table, query_text(in, query_flag));
  const auto counter =
      oracle::find_countermodel(in.table, in.gamma, query, spec, oracle::OracleLimits::from_environment());
  Result r;
  r.positive = !counter;
  r.verdict["entailed"] = !counter;
  r.verdict["query"] = to_string(in.table, query);
  r.verdict["model_class"] = class_json(in.table, spec);
  r.summary = "query: " + to_string(in.table, query) + "\nentailed (exhaustive): " + (counter ? "no" : "yes") + "\n";
  if (counter) {
    r.witness = Json::object({{"countermodel", model_json(in.table, *counter)}});
    r.summary += "countermodel: " + to_string(in.table, *counter) + "\n";
  }
  return r;
}

inline Result cmd_enumerate(const Loaded& in, std::optional<std::size_t> t, bool full_sigma, bool count_only) {
  const auto spec = model_class(in, t, full_sigma, false);
  Json models = Json::array();
  std::size_t count = 0;
  std::size_t satisfying = 0;
  oracle::for_each_model(
      in.table, spec,
      [&](const HclpModel& m) {
        ++count;
        if (!satisfies_all(in.table, m, in.gamma)) return true;
        ++satisfying;
        if (!count_only) models.push_back(model_json(in.table, m));
        return true;
      },
      oracle::OracleLimits::from_environment());
  Result r;
  r.verdict["models"] = count;
  r.verdict["models_of_statements"] = satisfying;
  r.verdict["model_class"] = class_json(in.table, spec);
  if (!count_only) r.witness = Json::object({{"models_of_statements", models}});
  r.summary = "models in class: " + std::to_string(count) + "\nmodels satisfying the statements: " +
              std::to_string(satisfying) + "\n";
  return r;
}

inline Result cmd_translate(const Loaded& in, bool to_ordering) {
  io::Problem out = in.problem;
  out.statements.clear();
  std::vector<std::pair<std::string, std::string>> lines;
  if (to_ordering) {
    // Ordering statements are over evaluations only, so the result keeps the
    // original table; existing ordering statements pass through.
    for (const auto& entry : in.problem.statements) {
      if (const auto* p = std::get_if<PreferenceStatement>(&entry)) {
        auto o = statement_to_ordering(in.problem.table, *p);
        lines.push_back({to_string(in.problem.table, *p), to_string(in.problem.table, o)});
        out.statements.push_back(std::move(o));
      } else {
        out.statements.push_back(entry);
      }
    }
  } else {
    out.table = in.table;
    for (std::size_t j = 0; j < in.gamma.size(); ++j) {
      out.statements.push_back(in.gamma[j]);
      if (const auto* o = std::get_if<OrderingStatement>(&in.problem.statements[j]))
        lines.push_back({to_string(in.problem.table, *o), to_string(in.table, in.gamma[j])});
    }
  }
  Result r;
  r.verdict["direction"] = to_ordering ? "to-ordering" : "from-ordering";
  r.verdict["problem"] = Json::parse(io::serialize_problem(out));
  r.verdict["translated"] = lines.size();
  r.summary = "translated " + std::to_string(lines.size()) + " statements\n";
  for (const auto& [from, to] : lines) r.summary += "  " + from + "  =>  " + to + "\n";
  return r;
}

inline Json assignment_json(const sat::Assignment& f) {
  Json out = Json::array();
  for (bool b : f) out.push_back(b);
  return out;
}

inline io::Problem reduction_problem(const sat::ReductionInstance& inst) {
  io::Problem p;
  p.table = inst.table;
  for (const auto& s : inst.gamma) p.statements.push_back(s);
  p.max_level_size = inst.t;
  p.query = QueryText{inst.table.name(inst.query.left), QueryRelation::NonStrict, inst.table.name(inst.query.right)};
  return p;
}

inline Result cmd_reduce_3sat(const std::string& dimacs, std::size_t t, const std::string& emit) {
  const auto cnf = sat::parse_dimacs(io::read_file(dimacs));
  const auto inst = sat::build_instance(cnf, t);
  if (!emit.empty()) io::write_file(emit, io::serialize_problem(reduction_problem(inst)));
  Result r;
  r.verdict["variables"] = cnf.num_vars;
  r.verdict["clauses"] = cnf.clauses.size();
  r.verdict["evaluations"] = inst.table.num_evaluations();
  r.verdict["alternatives"] = inst.table.num_alternatives();
  r.verdict["statements"] = inst.gamma.size();
  r.verdict["query"] = to_string(inst.table, inst.query);
  r.verdict["max_level_size"] = t;
  if (emit.empty()) {
    r.witness = Json::object({{"problem", Json::parse(io::serialize_problem(reduction_problem(inst)))}});
  } else {
    r.verdict["emitted"] = emit;
  }
  r.summary = std::to_string(cnf.num_vars) + " variables, " + std::to_string(cnf.clauses.size()) + " clauses => " +
              std::to_string(inst.table.num_evaluations()) + " evaluations, " +
              std::to_string(inst.table.num_alternatives()) + " alternatives, " + std::to_string(inst.gamma.size()) +
              " statements\n";
  return r;
}

inline Result cmd_verify_reduction(const std::string& dimacs, std::size_t t) {
  const auto cnf = sat::parse_dimacs(io::read_file(dimacs));
  const auto report = sat::verify_reduction(cnf, t, oracle::OracleLimits::from_environment());
  const auto inst = sat::build_instance(cnf, t);
  Result r;
  r.positive = report.agree;
  r.verdict["sat"] = report.sat;
  r.verdict["entailed"] = report.entailed;
  r.verdict["agree"] = report.agree;
  r.witness = Json::object();
  r.witness["assignment"] = report.assignment ? assignment_json(*report.assignment) : Json(nullptr);
  r.witness["countermodel"] = report.countermodel ? model_json(inst.table, *report.countermodel) : Json(nullptr);
  r.summary = std::string("satisfiable: ") + (report.sat ? "yes" : "no") + "\nentailed: " +
              (report.entailed ? "yes" : "no") + "\nagree: " + (report.agree ? "yes" : "no") + "\n";
  return r;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline CommandOutcome run_command(const std::vector<std::string>& args) {
  using detail::Json;
  CLI::App app{"Lexicographic preference inference over hierarchical evaluation models", "hclp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Show help for every command");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Do not print the human summary on standard error");

  std::string problem_path;
  std::string query;
  std::optional<std::size_t> t_flag;
  bool full_sigma = false;
  bool count_only = false;
  std::string dimacs;
  std::size_t t_reduction = 2;
  std::string emit;
  bool to_ordering = false;
  bool from_ordering = false;

  auto with_problem = [&](CLI::App* sub) {
    sub->add_option("problem", problem_path, "Problem file (JSON)")->required();
    return sub;
  };
  auto* check = with_problem(app.add_subcommand("check", "Decide consistency over sequence models"));
  auto* deduce = with_problem(app.add_subcommand("deduce", "Decide whether the statements entail a query"));
  deduce->add_option("--query", query, "Query \"a <= b\" or \"a < b\"");
  auto* mib = with_problem(app.add_subcommand("mib", "Report the maximal inconsistency base"));
  auto* repair_cmd = with_problem(app.add_subcommand("repair", "Drop inconsistent strict statements to their weak form"));
  auto* strong_check = with_problem(app.add_subcommand("strong-check", "Consistency over sequences using every evaluation"));
  auto* strong_deduce_cmd = with_problem(app.add_subcommand("strong-deduce", "Entailment over sequences using every evaluation"));
  strong_deduce_cmd->add_option("--query", query, "Query \"a <= b\", \"a < b\" or \"a == b\"");
  auto* brute = with_problem(app.add_subcommand("brute-deduce", "Entailment by exhaustive model enumeration"));
  brute->add_option("--query", query, "Query \"a <= b\" or \"a < b\"");
  brute->add_option("--max-level-size", t_flag, "Largest level size of enumerated models")->check(CLI::PositiveNumber);
  brute->add_flag("--full-sigma", full_sigma, "Only models that use every evaluation");
  auto* enumerate = with_problem(app.add_subcommand("enumerate", "List the models of the statements"));
  enumerate->add_option("--max-level-size", t_flag, "Largest level size of enumerated models")->check(CLI::PositiveNumber);
  enumerate->add_flag("--full-sigma", full_sigma, "Only models that use every evaluation");
  enumerate->add_flag("--count-only", count_only, "Report counts without listing models");
  auto* translate = with_problem(app.add_subcommand("translate", "Convert between preference and ordering statements"));
  auto* to_opt = translate->add_flag("--to-ordering", to_ordering, "Preference statements to ordering statements");
  auto* from_opt = translate->add_flag("--from-ordering", from_ordering, "Ordering statements to preference statements");
  to_opt->excludes(from_opt);
  from_opt->excludes(to_opt);
  auto* reduce = app.add_subcommand("reduce-3sat", "Build the entailment instance of a 3-CNF formula");
  reduce->add_option("--dimacs", dimacs, "DIMACS CNF file")->required();
  reduce->add_option("--t", t_reduction, "Level-size bound (>= 2)")->required();
  reduce->add_option("--emit", emit, "Write the instance as a problem file");
  auto* verify = app.add_subcommand("verify-reduction", "Check satisfiability against non-entailment");
  verify->add_option("--dimacs", dimacs, "DIMACS CNF file")->required();
  verify->add_option("--t", t_reduction, "Level-size bound (>= 2)")->required();

  CommandOutcome outcome;
  Json command = Json::object({{"argv", args}, {"name", nullptr}});
  auto fail = [&](const std::string& code, const std::string& message, const std::string& location,
                  const std::string& extra_err) {
    outcome.exit_code = 2;
    outcome.envelope = Json::object();
    outcome.envelope["command"] = command;
    outcome.envelope["error"] = Json::object({{"code", code}, {"message", message}, {"location", location}});
    outcome.out = outcome.envelope.dump(2) + "\n";
    outcome.err = "error (" + code + "): " + (location.empty() ? "" : location + ": ") + message + "\n" + extra_err;
    return outcome;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {0, out.str(), err.str(), nullptr};
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    return {0, out.str(), err.str(), nullptr};
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), "", app.help());
  }

  CLI::App* chosen = app.get_subcommands().front();
  command["name"] = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  detail::Result result;
  std::string context;
  try {
    if (chosen == reduce) {
      result = detail::cmd_reduce_3sat(dimacs, t_reduction, emit);
    } else if (chosen == verify) {
      result = detail::cmd_verify_reduction(dimacs, t_reduction);
    } else {
      const detail::Loaded loaded(problem_path);
      context = loaded.summary();
      if (chosen == check) {
        result = detail::cmd_check(loaded);
      } else if (chosen == deduce) {
        result = detail::cmd_deduce(loaded, query);
      } else if (chosen == mib) {
        result = detail::cmd_mib(loaded);
      } else if (chosen == repair_cmd) {
        result = detail::cmd_repair(loaded);
      } else if (chosen == strong_check) {
        result = detail::cmd_strong_check(loaded);
      } else if (chosen == strong_deduce_cmd) {
        result = detail::cmd_strong_deduce(loaded, query);
      } else if (chosen == brute) {
        result = detail::cmd_brute_deduce(loaded, query, t_flag, full_sigma);
      } else if (chosen == enumerate) {
        result = detail::cmd_enumerate(loaded, t_flag, full_sigma, count_only);
      } else if (chosen == translate) {
        if (!to_ordering && !from_ordering) throw detail::UsageError("translate needs --to-ordering or --from-ordering");
        result = detail::cmd_translate(loaded, to_ordering);
      }
    }
  } catch (const detail::UsageError& e) {
    return fail("usage", e.what(), "", chosen->help());
  } catch (const Error& e) {
    std::string message = e.what();
    if (!e.location().empty()) message = message.substr(e.location().size() + 2);
    std::string location = e.location();
    if (!problem_path.empty() && chosen != reduce && chosen != verify && e.code() != ErrorCode::Io)
      location = problem_path + (location.empty() ? "" : ":" + location);
    return fail(std::string(code_name(e.code())), message, location, "");
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  outcome.exit_code = result.positive ? 0 : 1;
  outcome.envelope = Json::object();
  outcome.envelope["command"] = command;
  outcome.envelope["verdict"] = result.verdict;
  outcome.envelope["witness"] = result.witness;
  outcome.envelope["timing"] = Json::object({{"elapsed_ms", elapsed_ms}});
  outcome.out = outcome.envelope.dump(2) + "\n";
  if (!quiet) outcome.err = context + result.summary;
  return outcome;
}

}  // namespace hclp::cli

#endif  // HCLP_CLI_HPP
