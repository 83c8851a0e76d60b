#include <gtest/gtest.h>

#include <random>

#include "hclp/problem_io.hpp"
#include "test_support.hpp"

using namespace hclp;
using hclp::io::Problem;
using hclp::io::parse_problem;
using hclp::io::serialize_problem;
using hclp::testing::evals;
using hclp::testing::st;
using hclp::testing::worked_example;

namespace {

const char* kWorked = R"({
  "operator": "sum",
  "alternatives": ["alpha", "beta", "gamma"],
  "evaluations": {
    "c1": {"alpha": 0, "beta": 2, "gamma": 1},
    "c2": {"alpha": 2, "beta": 0, "gamma": 2},
    "c3": {"alpha": 1, "beta": 0, "gamma": 0}
  },
  "statements": [{"left": "alpha", "rel": "<=", "right": "beta"}]
})";

// kWorked with one substring replaced.
std::string variant(const std::string& from, const std::string& to) {
  std::string text = kWorked;
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

Error parse_failure(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return Error(ErrorCode::Io, "");
}

}  // namespace

TEST(ProblemFile, ParsesTheWorkedExample) {
  const Problem p = parse_problem(kWorked);
  EXPECT_EQ(p.table, worked_example());
  ASSERT_EQ(p.statements.size(), 1u);
  EXPECT_EQ(std::get<PreferenceStatement>(p.statements[0]), st(p.table, "alpha <= beta"));
  EXPECT_FALSE(p.equivalence || p.max_level_size || p.query);
}

TEST(ProblemFile, ParsesOptionalFieldsAndOrderings) {
  const Problem p = parse_problem(variant(R"("statements": [)", R"("query": " gamma<beta", "equivalence": [["c2", "c1"], ["c3"]],
    "statements": [{"left": ["c3"], "rel": "<", "right": ["c1", "c2"]}, )"));
  ASSERT_TRUE(p.query.has_value());
  EXPECT_EQ(to_string(*p.query), "gamma < beta");
  ASSERT_TRUE(p.equivalence.has_value());
  EXPECT_EQ(p.equivalence->at(0), evals(p.table, {"c2", "c1"}));
  ASSERT_EQ(p.statements.size(), 2u);
  const auto& o = std::get<OrderingStatement>(p.statements[0]);
  EXPECT_EQ(o.right, evals(p.table, {"c1", "c2"}));
  const auto resolved = io::resolve_statements(p);
  EXPECT_EQ(resolved.table.num_alternatives(), 5u);
  EXPECT_EQ(to_string(resolved.table, resolved.gamma[0]), "alpha#ord1 < beta#ord1");
  EXPECT_EQ(to_string(resolved.table, resolved.gamma[1]), "alpha <= beta");
}

TEST(ProblemFile, RationalCosts) {
  const Problem p = parse_problem(variant(R"("alpha": 1, "beta": 0)", R"("alpha": "6/4", "beta": "0/3")"));
  EXPECT_EQ(p.table.cost(p.table.evaluation("c3"), p.table.alternative("alpha")), Rational(3, 2));
  EXPECT_NE(serialize_problem(p).find("\"3/2\""), std::string::npos);
}

TEST(ProblemFile, ErrorsCarryCodesAndLocations) {
  struct Case {
    std::string text;
    ErrorCode code;
    std::string location;
    std::string message;
  };
  const std::vector<Case> cases{
      {variant(R"("beta": 0, "gamma": 2})", R"("beta": 0})"), ErrorCode::MissingCost, "/evaluations/c2", "missing cost c2/gamma"},
      {variant(R"("gamma": 0})", R"("gamma": "3/0"})"), ErrorCode::ZeroDenominator, "/evaluations/c3/gamma", ""},
      {variant(R"("gamma": 0})", R"("gamma": "x"})"), ErrorCode::MalformedRational, "/evaluations/c3/gamma", ""},
      {variant(R"("gamma": 0})", R"("gamma": 0.5})"), ErrorCode::MalformedRational, "/evaluations/c3/gamma", ""},
      {variant(R"("gamma": 0})", R"("gamma": -1})"), ErrorCode::NegativeCost, "/evaluations/c3/gamma", ""},
      {variant(R"("gamma": 0})", R"("gamma": "-1/2"})"), ErrorCode::NegativeCost, "/evaluations/c3/gamma", ""},
      {variant(R"("gamma": 0})", R"("gamma": 0, "delta": 1})"), ErrorCode::NameResolution, "/evaluations/c3/delta", ""},
      {variant(R"("right": "beta")", R"("right": "delta")"), ErrorCode::NameResolution, "/statements/0/right", ""},
      {variant(R"("rel": "<=")", R"("rel": ">")"), ErrorCode::InvalidStatement, "/statements/0/rel", ""},
      {variant(R"(["alpha", "beta", "gamma"])", R"(["alpha", "beta", "alpha"])"), ErrorCode::DuplicateName,
       "/alternatives/2", ""},
      {variant(R"("c3": {)", R"("c1": {)"), ErrorCode::DuplicateName, "/evaluations", ""},
      {variant(R"("operator": "sum")", R"("operator": "min")"), ErrorCode::InvalidParameter, "/operator", ""},
      {variant(R"("operator": "sum",)", ""), ErrorCode::MissingField, "/", ""},
      {variant(R"("statements": [)", R"("max_level_size": 2, "equivalence": [["c1", "c2", "c3"]], "statements": [)"),
       ErrorCode::ConflictingOptions, "/", ""},
      {variant(R"("statements": [)", R"("equivalence": [["c1", "c2"]], "statements": [)"),
       ErrorCode::InvalidPartition, "/equivalence", ""},
      {variant(R"("statements": [)", R"("max_level_size": 0, "statements": [)"), ErrorCode::InvalidParameter,
       "/max_level_size", ""},
      {variant(R"("statements": [)", R"("query": "alpha <= zeta", "statements": [)"), ErrorCode::NameResolution,
       "/query", ""},
      {variant(R"("statements": [)", R"("extra": 1, "statements": [)"), ErrorCode::Syntax, "/extra", ""},
      {variant(R"(["alpha", "beta", "gamma"])", "3"), ErrorCode::WrongType, "/alternatives", ""},
      {variant(R"("left": "alpha")", R"("left": ["c1"])"), ErrorCode::WrongType, "/statements/0/right", ""},
      {variant(R"("left": "alpha", "rel": "<=", "right": "beta")", R"("left": ["c1"], "rel": "<=", "right": ["c1"])"),
       ErrorCode::InvalidStatement, "/statements/0", ""},
      {variant(R"("c2": {)", "\n  \"c2\": {,"), ErrorCode::Syntax, "line 7:10", ""},
  };
  for (const auto& c : cases) {
    const Error e = parse_failure(c.text);
    EXPECT_EQ(e.code(), c.code) << c.text << "\n" << e.what();
    EXPECT_EQ(e.location(), c.location) << e.what();
    if (!c.message.empty()) {
      EXPECT_NE(std::string(e.what()).find(c.message), std::string::npos) << e.what();
    }
  }
}

TEST(ProblemFile, SerializationRoundTrips) {
  const Problem p = parse_problem(variant(R"("statements": [)", R"("query": "gamma < beta", "max_level_size": 3,
    "statements": [{"left": [], "rel": "<=", "right": ["c2"]}, )"));
  const std::string text = serialize_problem(p);
  EXPECT_EQ(parse_problem(text), p);
  EXPECT_EQ(serialize_problem(parse_problem(text)), text);
}

TEST(ProblemFile, RandomProblemsRoundTrip) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 300; ++i) {
    Problem p;
    const std::size_t n = 1 + rng() % 4;
    auto rows = hclp::testing::random_table(rng, 1 + rng() % 3, n, 5, i % 2 ? Combiner::Max : Combiner::Sum).rows();
    for (auto& row : rows)
      for (auto& cost : row.costs) cost = cost / Rational(1 + static_cast<std::int64_t>(rng() % 4));
    std::vector<std::string> alts;
    for (std::size_t a = 0; a < rows[0].costs.size(); ++a) alts.push_back("a" + std::to_string(a));
    p.table = CostTable(alts, rows, i % 2 ? Combiner::Max : Combiner::Sum);
    for (const auto& s : hclp::testing::random_statements(rng, alts.size(), rng() % 4)) p.statements.push_back(s);
    if (rng() % 2) {
      std::vector<EvalId> l, r;
      for (std::size_t c = 0; c < n; ++c) {
        if (rng() % 3 == 0) l.push_back(eval_at(c));
        else if (rng() % 2) r.push_back(eval_at(c));
      }
      p.statements.push_back(make_ordering(p.table, l, r, rng() % 2));
    }
    switch (rng() % 3) {
      case 0: p.max_level_size = 1 + rng() % 3; break;
      case 1: p.equivalence = hclp::testing::set_partitions(n, 2).back(); break;
      default: break;
    }
    if (rng() % 2) p.query = QueryText{"a0", QueryRelation::Strict, alts.back()};
    EXPECT_EQ(parse_problem(serialize_problem(p)), p) << serialize_problem(p);
  }
}

TEST(ProblemFile, FileHelpers) {
  EXPECT_THROW(io::read_file("/nonexistent/problem.json"), Error);
  const std::string path = ::testing::TempDir() + "hclp_problem_io_test.json";
  io::write_file(path, kWorked);
  EXPECT_EQ(io::load_problem(path).table, worked_example());
}
