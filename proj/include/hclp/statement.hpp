#ifndef HCLP_STATEMENT_HPP
#define HCLP_STATEMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hclp/cost_table.hpp"
#include "hclp/error.hpp"

namespace hclp {

/// `left <= right` (non-strict) or `left < right` (strict): the left
/// alternative is at least as good as / strictly better than the right one.
struct PreferenceStatement {
  AltId left{};
  AltId right{};
  bool strict = false;

  friend bool operator==(const PreferenceStatement&, const PreferenceStatement&) = default;
};

using Statements = std::vector<PreferenceStatement>;

/// not(a <= b) is b < a, and not(a < b) is b <= a.
constexpr PreferenceStatement negate(const PreferenceStatement& stmt) noexcept {
  return {stmt.right, stmt.left, !stmt.strict};
}

constexpr PreferenceStatement weakened(const PreferenceStatement& stmt) noexcept {
  return {stmt.left, stmt.right, false};
}

inline std::string_view relation_symbol(bool strict) { return strict ? "<" : "<="; }

inline std::string to_string(const CostTable& table, const PreferenceStatement& stmt) {
  return table.name(stmt.left) + " " + std::string(relation_symbol(stmt.strict)) + " " + table.name(stmt.right);
}

inline PreferenceStatement make_statement(const CostTable& table, std::string_view left, std::string_view rel,
                                          std::string_view right) {
  bool strict = false;
  if (rel == "<") {
    strict = true;
  } else if (rel != "<=") {
    throw Error(ErrorCode::InvalidStatement, "unknown relation \"" + std::string(rel) + "\"");
  }
  return {table.alternative(left), table.alternative(right), strict};
}

/// Relation of a textual query. `Equivalent` (`==`) is only meaningful for
/// queries over complete sequence models.
enum class QueryRelation { NonStrict, Strict, Equivalent };

struct QueryText {
  std::string left;
  QueryRelation relation = QueryRelation::NonStrict;
  std::string right;

  friend bool operator==(const QueryText&, const QueryText&) = default;
};

inline std::string_view relation_symbol(QueryRelation rel) {
  switch (rel) {
    case QueryRelation::Strict: return "<";
    case QueryRelation::Equivalent: return "==";
    default: return "<=";
  }
}

inline std::string to_string(const QueryText& q) {
  return q.left + " " + std::string(relation_symbol(q.relation)) + " " + q.right;
}

/// Grammar: NAME (<=|<|==) NAME, whitespace tolerant.
inline QueryText parse_query_text(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::InvalidStatement, "cannot parse statement \"" + std::string(text) + "\": " + why);
  };
  auto is_name_char = [](char ch) { return is_identifier(std::string_view(&ch, 1)); };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_name = [&]() -> std::string {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (start == pos) throw fail("expected a name at offset " + std::to_string(start));
    return std::string(text.substr(start, pos - start));
  };

  QueryText q;
  q.left = read_name();
  skip_ws();
  if (text.substr(pos, 2) == "<=") {
    q.relation = QueryRelation::NonStrict;
    pos += 2;
  } else if (text.substr(pos, 2) == "==") {
    q.relation = QueryRelation::Equivalent;
    pos += 2;
  } else if (text.substr(pos, 1) == "<") {
    q.relation = QueryRelation::Strict;
    pos += 1;
  } else {
    throw fail("expected <=, < or == at offset " + std::to_string(pos));
  }
  q.right = read_name();
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters at offset " + std::to_string(pos));
  return q;
}

/// Parses `NAME (<=|<) NAME` against the table's alternatives.
inline PreferenceStatement parse_statement(const CostTable& table, std::string_view text) {
  QueryText q = parse_query_text(text);
  if (q.relation == QueryRelation::Equivalent)
    throw Error(ErrorCode::InvalidStatement, "\"==\" is not a preference statement: " + std::string(text));
  return {table.alternative(q.left), table.alternative(q.right), q.relation == QueryRelation::Strict};
}

}  // namespace hclp

#endif  // HCLP_STATEMENT_HPP
