#ifndef HCLP_PROBLEM_IO_HPP
#define HCLP_PROBLEM_IO_HPP

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"
#include "hclp/lex_engine.hpp"
#include "hclp/model.hpp"
#include "hclp/ordering.hpp"
#include "hclp/statement.hpp"

// JSON problem files:
//
//   {
//     "operator": "sum",
//     "alternatives": ["alpha", "beta"],
//     "evaluations": {"c1": {"alpha": 1, "beta": "1/2"}},
//     "statements": [{"left": "alpha", "rel": "<=", "right": "beta"},
//                    {"left": ["c1"], "rel": "<", "right": []}],
//     "equivalence": [["c1"]],          optional
//     "max_level_size": 1,              optional, excludes "equivalence"
//     "query": "alpha <= beta"          optional
//   }
//
// A statement whose sides are arrays is an ordering statement over
// evaluations; otherwise it relates two alternatives.

namespace hclp::io {

using Json = nlohmann::ordered_json;

using StatementEntry = std::variant<PreferenceStatement, OrderingStatement>;

struct Problem {
  CostTable table;
  std::vector<StatementEntry> statements;
  std::optional<std::vector<std::vector<EvalId>>> equivalence;
  std::optional<std::size_t> max_level_size;
  std::optional<QueryText> query;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Preference statements as written plus the embedding of every ordering
/// statement; the table gains the synthetic alternatives.
struct ResolvedStatements {
  CostTable table;
  Statements gamma;
};

inline ResolvedStatements resolve_statements(const Problem& problem) {
  std::vector<OrderingStatement> orderings;
  for (const auto& entry : problem.statements)
    if (const auto* o = std::get_if<OrderingStatement>(&entry)) orderings.push_back(*o);
  if (orderings.empty()) {
    Statements gamma;
    for (const auto& entry : problem.statements) gamma.push_back(std::get<PreferenceStatement>(entry));
    return {problem.table, std::move(gamma)};
  }
  auto embedded = embed_orderings(problem.table, orderings);
  ResolvedStatements out{std::move(embedded.table), {}};
  std::size_t next_ordering = 0;
  for (const auto& entry : problem.statements) {
    if (const auto* p = std::get_if<PreferenceStatement>(&entry)) {
      out.gamma.push_back(*p);
    } else {
      out.gamma.push_back(embedded.statements[next_ordering++]);
    }
  }
  return out;
}

namespace detail {

inline std::string pointer(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (std::string_view part : parts) {
    out += '/';
    for (char ch : part) {
      if (ch == '~') {
        out += "~0";
      } else if (ch == '/') {
        out += "~1";
      } else {
        out += ch;
      }
    }
  }
  return out;
}

inline std::string pointer_at(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

inline const char* type_name(const Json& value) { return value.type_name(); }

inline const Json& require_field(const Json& object, std::string_view key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end())
    throw Error(ErrorCode::MissingField, "missing field \"" + std::string(key) + "\"", where.empty() ? "/" : where);
  return *it;
}

inline void require_type(bool ok, const Json& value, const char* expected, const std::string& where) {
  if (!ok) throw Error(ErrorCode::WrongType, std::string("expected ") + expected + ", got " + type_name(value), where);
}

inline Rational parse_cost(const Json& value, const std::string& where) {
  try {
    if (value.is_number_unsigned()) {
      const auto v = value.get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        return Rational(BigInt(v), BigInt(1));
      return Rational(static_cast<std::int64_t>(v));
    }
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number_float())
      throw Error(ErrorCode::MalformedRational, "cost " + value.dump() + " is not an exact rational; write \"n/d\"");
    require_type(value.is_string(), value, "integer or \"n/d\" string", where);
    return Rational::parse(value.get<std::string>());
  } catch (const Error& e) {
    if (!e.location().empty()) throw;
    throw Error(e.code(), e.what(), where);
  }
}

inline Json cost_to_json(const Rational& value) {
  if (value.is_small() && value.denominator() == 1) return Json(static_cast<std::int64_t>(value.numerator()));
  return Json(value.to_string());
}

inline std::vector<std::string> read_names(const Json& value, const std::string& where) {
  require_type(value.is_array(), value, "array of names", where);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < value.size(); ++i) {
    require_type(value[i].is_string(), value[i], "name string", pointer_at(where, i));
    names.push_back(value[i].get<std::string>());
  }
  return names;
}

inline std::vector<EvalId> read_evaluation_set(const CostTable& table, const Json& value, const std::string& where) {
  std::vector<EvalId> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string loc = pointer_at(where, i);
    require_type(value[i].is_string(), value[i], "evaluation name", loc);
    const auto c = table.find_evaluation(value[i].get<std::string>());
    if (!c) throw Error(ErrorCode::NameResolution, "unknown evaluation \"" + value[i].get<std::string>() + "\"", loc);
    out.push_back(*c);
  }
  return out;
}

inline StatementEntry read_statement(const CostTable& table, const Json& value, const std::string& where) {
  require_type(value.is_object(), value, "statement object", where);
  const Json& left = require_field(value, "left", where);
  const Json& rel = require_field(value, "rel", where);
  const Json& right = require_field(value, "right", where);
  require_type(rel.is_string(), rel, "\"<=\" or \"<\"", where + "/rel");
  const std::string r = rel.get<std::string>();
  if (r != "<=" && r != "<")
    throw Error(ErrorCode::InvalidStatement, "relation must be \"<=\" or \"<\", got \"" + r + "\"", where + "/rel");
  const bool strict = r == "<";
  if (left.is_array() || right.is_array()) {
    require_type(left.is_array(), left, "array of evaluation names", where + "/left");
    require_type(right.is_array(), right, "array of evaluation names", where + "/right");
    auto l = read_evaluation_set(table, left, where + "/left");
    auto rr = read_evaluation_set(table, right, where + "/right");
    try {
      return make_ordering(table, std::move(l), std::move(rr), strict);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), where);
    }
  }
  require_type(left.is_string(), left, "alternative name", where + "/left");
  require_type(right.is_string(), right, "alternative name", where + "/right");
  auto resolve = [&](const Json& name, const std::string& loc) {
    const auto a = table.find_alternative(name.get<std::string>());
    if (!a) throw Error(ErrorCode::NameResolution, "unknown alternative \"" + name.get<std::string>() + "\"", loc);
    return *a;
  };
  return PreferenceStatement{resolve(left, where + "/left"), resolve(right, where + "/right"), strict};
}

}  // namespace detail

/// Validates the query's alternative names against the table.
inline QueryText check_query(const CostTable& table, std::string_view text, const std::string& where = "") {
  try {
    QueryText q = parse_query_text(text);
    table.alternative(q.left);
    table.alternative(q.right);
    return q;
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), where);
  }
}

inline PreferenceStatement to_statement(const CostTable& table, const QueryText& q) {
  if (q.relation == QueryRelation::Equivalent)
    throw Error(ErrorCode::InvalidStatement, "\"==\" is only accepted by strong-deduce");
  return {table.alternative(q.left), table.alternative(q.right), q.relation == QueryRelation::Strict};
}

inline Problem problem_from_json(const Json& doc) {
  using namespace detail;
  require_type(doc.is_object(), doc, "object", "/");
  static constexpr std::string_view known[] = {"operator",   "alternatives",   "evaluations", "statements",
                                               "equivalence", "max_level_size", "query"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw Error(ErrorCode::Syntax, "unknown field \"" + key + "\"", pointer({key}));
  }

  const Json& op = require_field(doc, "operator", "");
  require_type(op.is_string(), op, "\"sum\" or \"max\"", "/operator");
  const auto combiner = parse_combiner(op.get<std::string>());
  if (!combiner)
    throw Error(ErrorCode::InvalidParameter, "operator must be \"sum\" or \"max\", got \"" + op.get<std::string>() + "\"",
                "/operator");

  std::vector<std::string> alts = read_names(require_field(doc, "alternatives", ""), "/alternatives");
  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (alts[j] == alts[i])
        throw Error(ErrorCode::DuplicateName, "duplicate alternative \"" + alts[i] + "\"", pointer_at("/alternatives", i));
    if (!is_identifier(alts[i]))
      throw Error(ErrorCode::InvalidParameter, "\"" + alts[i] + "\" is not an identifier", pointer_at("/alternatives", i));
  }

  const Json& evals = require_field(doc, "evaluations", "");
  require_type(evals.is_object(), evals, "object of evaluations", "/evaluations");
  std::vector<CostTable::Row> rows;
  for (const auto& [name, cells] : evals.items()) {
    const std::string where = pointer({"evaluations", name});
    if (!is_identifier(name)) throw Error(ErrorCode::InvalidParameter, "\"" + name + "\" is not an identifier", where);
    require_type(cells.is_object(), cells, "object of costs", where);
    CostTable::Row row{name, std::vector<Rational>(alts.size())};
    std::vector<char> seen(alts.size(), 0);
    for (const auto& [alt, cost] : cells.items()) {
      const std::string cell = pointer({"evaluations", name, alt});
      const auto pos = std::find(alts.begin(), alts.end(), alt);
      if (pos == alts.end()) throw Error(ErrorCode::NameResolution, "unknown alternative \"" + alt + "\"", cell);
      const auto a = static_cast<std::size_t>(pos - alts.begin());
      row.costs[a] = parse_cost(cost, cell);
      if (row.costs[a].sign() < 0)
        throw Error(ErrorCode::NegativeCost, "negative cost " + name + "/" + alt + " = " + row.costs[a].to_string(), cell);
      seen[a] = 1;
    }
    for (std::size_t a = 0; a < alts.size(); ++a)
      if (!seen[a]) throw Error(ErrorCode::MissingCost, "missing cost " + name + "/" + alts[a], where);
    rows.push_back(std::move(row));
  }
  Problem problem;
  problem.table = CostTable(std::move(alts), std::move(rows), *combiner);

  const Json& stmts = require_field(doc, "statements", "");
  require_type(stmts.is_array(), stmts, "array of statements", "/statements");
  for (std::size_t i = 0; i < stmts.size(); ++i)
    problem.statements.push_back(read_statement(problem.table, stmts[i], pointer_at("/statements", i)));

  const bool has_eq = doc.contains("equivalence");
  const bool has_t = doc.contains("max_level_size");
  if (has_eq && has_t)
    throw Error(ErrorCode::ConflictingOptions, "\"equivalence\" and \"max_level_size\" are mutually exclusive", "/");
  if (has_eq) {
    const Json& eq = doc["equivalence"];
    require_type(eq.is_array(), eq, "array of evaluation-name arrays", "/equivalence");
    std::vector<std::vector<EvalId>> classes;
    for (std::size_t k = 0; k < eq.size(); ++k) {
      const std::string where = pointer_at("/equivalence", k);
      require_type(eq[k].is_array(), eq[k], "array of evaluation names", where);
      classes.push_back(read_evaluation_set(problem.table, eq[k], where));
    }
    if (auto problem_text = partition_problem(problem.table, classes))
      throw Error(ErrorCode::InvalidPartition, *problem_text, "/equivalence");
    problem.equivalence = std::move(classes);
  }
  if (has_t) {
    const Json& t = doc["max_level_size"];
    require_type(t.is_number_integer(), t, "positive integer", "/max_level_size");
    if (t.get<std::int64_t>() < 1)
      throw Error(ErrorCode::InvalidParameter, "max_level_size must be at least 1", "/max_level_size");
    problem.max_level_size = t.get<std::size_t>();
  }
  if (doc.contains("query")) {
    const Json& q = doc["query"];
    require_type(q.is_string(), q, "query string", "/query");
    problem.query = check_query(problem.table, q.get<std::string>(), "/query");
  }
  return problem;
}

inline Problem parse_problem(std::string_view text) {
  Json doc;
  // JSON itself tolerates repeated keys (the last one wins); a repeated
  // evaluation or alternative key is a duplicate name here.
  std::vector<std::set<std::string>> open_objects;
  std::vector<std::string> path;
  auto reject_duplicate_keys = [&](int, nlohmann::json::parse_event_t event, Json& parsed) {
    using Event = nlohmann::json::parse_event_t;
    if (event == Event::object_start) {
      open_objects.emplace_back();
    } else if (event == Event::object_end) {
      open_objects.pop_back();
    } else if (event == Event::key) {
      const std::string key = parsed.get<std::string>();
      path.resize(open_objects.size() - 1);
      if (!open_objects.back().insert(key).second) {
        std::string where;
        for (const auto& part : path) where += "/" + part;
        throw Error(ErrorCode::DuplicateName, "duplicate key \"" + key + "\"", where.empty() ? "/" : where);
      }
      path.push_back(key);
    }
    return true;
  };
  try {
    doc = Json::parse(text.begin(), text.end(), reject_duplicate_keys);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line:column location.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::Syntax, "malformed JSON", "line " + std::to_string(line) + ":" + std::to_string(column));
  }
  return problem_from_json(doc);
}

inline Json problem_to_json(const Problem& problem) {
  const CostTable& table = problem.table;
  Json doc = Json::object();
  doc["operator"] = to_string(table.combiner());
  doc["alternatives"] = Json::array();
  for (const auto& a : table.alternatives()) doc["alternatives"].push_back(a);
  doc["evaluations"] = Json::object();
  for (std::size_t c = 0; c < table.num_evaluations(); ++c) {
    Json cells = Json::object();
    for (std::size_t a = 0; a < table.num_alternatives(); ++a)
      cells[table.name(alt_at(a))] = detail::cost_to_json(table.cost(eval_at(c), alt_at(a)));
    doc["evaluations"][table.name(eval_at(c))] = std::move(cells);
  }
  doc["statements"] = Json::array();
  auto names = [&](const std::vector<EvalId>& ids) {
    Json out = Json::array();
    for (EvalId c : ids) out.push_back(table.name(c));
    return out;
  };
  for (const auto& entry : problem.statements) {
    Json s = Json::object();
    if (const auto* p = std::get_if<PreferenceStatement>(&entry)) {
      s["left"] = table.name(p->left);
      s["rel"] = std::string(relation_symbol(p->strict));
      s["right"] = table.name(p->right);
    } else {
      const auto& o = std::get<OrderingStatement>(entry);
      s["left"] = names(o.left);
      s["rel"] = std::string(relation_symbol(o.strict));
      s["right"] = names(o.right);
    }
    doc["statements"].push_back(std::move(s));
  }
  if (problem.equivalence) {
    doc["equivalence"] = Json::array();
    for (const auto& cls : *problem.equivalence) doc["equivalence"].push_back(names(cls));
  }
  if (problem.max_level_size) doc["max_level_size"] = *problem.max_level_size;
  if (problem.query) doc["query"] = to_string(*problem.query);
  return doc;
}

inline std::string serialize_problem(const Problem& problem) { return problem_to_json(problem).dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

inline Problem load_problem(const std::string& path) { return parse_problem(read_file(path)); }

}  // namespace hclp::io

#endif  // HCLP_PROBLEM_IO_HPP
