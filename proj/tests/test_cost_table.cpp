#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hclp;
using hclp::testing::evals;
using hclp::testing::model;
using hclp::testing::st;
using hclp::testing::worked_example;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::Io;
}

}  // namespace

TEST(CostTable, ResolvesNamesAndCells) {
  const auto t = worked_example();
  EXPECT_EQ(t.num_alternatives(), 3u);
  EXPECT_EQ(t.num_evaluations(), 3u);
  EXPECT_EQ(t.combiner(), Combiner::Sum);
  EXPECT_EQ(t.cost(t.evaluation("c1"), t.alternative("gamma")), Rational(1));
  EXPECT_EQ(t.cost(t.evaluation("c3"), t.alternative("alpha")), Rational(1));
  EXPECT_FALSE(t.find_alternative("delta").has_value());
  EXPECT_EQ(code_of([&] { t.alternative("delta"); }), ErrorCode::NameResolution);
  EXPECT_EQ(code_of([&] { t.evaluation("c4"); }), ErrorCode::NameResolution);
}

TEST(CostTable, RanksMirrorCostOrderWithinAnEvaluation) {
  const CostTable t({"x", "y", "z"}, {{"c", {Rational(1, 2), Rational(3), Rational(1, 2)}}});
  const EvalId c = t.evaluation("c");
  EXPECT_EQ(t.rank(c, t.alternative("x")), t.rank(c, t.alternative("z")));
  EXPECT_LT(t.rank(c, t.alternative("x")), t.rank(c, t.alternative("y")));
}

TEST(CostTable, RejectsInvalidStructures) {
  EXPECT_EQ(code_of([] { CostTable({"a", "a"}, {}); }), ErrorCode::DuplicateName);
  EXPECT_EQ(code_of([] { CostTable({"a"}, {{"c", {1}}, {"c", {2}}}); }), ErrorCode::DuplicateName);
  EXPECT_EQ(code_of([] { CostTable({"a", "b"}, {{"c", {1}}}); }), ErrorCode::MissingCost);
  EXPECT_EQ(code_of([] { CostTable({"a"}, {{"c", {Rational(-1, 2)}}}); }), ErrorCode::NegativeCost);
  EXPECT_EQ(code_of([] { CostTable({"a b"}, {}); }), ErrorCode::InvalidParameter);
}

TEST(CostTable, AcceptsGeneratedIdentifierCharacters) {
  EXPECT_TRUE(is_identifier("alpha#ord1"));
  EXPECT_TRUE(is_identifier("gamma1^2"));
  EXPECT_TRUE(is_identifier("q+1"));
  EXPECT_TRUE(is_identifier("q-1_x"));
  EXPECT_FALSE(is_identifier(""));
  EXPECT_FALSE(is_identifier("a<b"));
}

TEST(CostTable, DerivedTablesKeepNamesAndCosts) {
  const auto t = worked_example();
  const std::vector<EvalId> keep{t.evaluation("c3"), t.evaluation("c1")};
  const auto r = t.restricted_to(keep);
  ASSERT_EQ(r.num_evaluations(), 2u);
  EXPECT_EQ(r.name(eval_at(0)), "c3");
  EXPECT_EQ(r.cost(eval_at(1), r.alternative("beta")), Rational(2));

  const std::vector<std::string> names{"delta"};
  const std::vector<std::vector<Rational>> columns{{5, 6, 7}};
  const auto w = t.with_alternatives(names, columns);
  EXPECT_EQ(w.cost(w.evaluation("c2"), w.alternative("delta")), Rational(6));
  EXPECT_EQ(w.with_combiner(Combiner::Max).combiner(), Combiner::Max);
  EXPECT_EQ(t, worked_example());
  EXPECT_NE(t, w);
}

TEST(Statement, NegationSwapsSidesAndStrictness) {
  const auto t = worked_example();
  EXPECT_EQ(negate(st(t, "alpha <= beta")), st(t, "beta < alpha"));
  EXPECT_EQ(negate(st(t, "alpha < gamma")), st(t, "gamma <= alpha"));
  for (const auto& s : hclp::testing::all_statements(3, true)) EXPECT_EQ(negate(negate(s)), s);
}

TEST(Statement, QueryGrammarToleratesWhitespace) {
  const auto t = worked_example();
  EXPECT_EQ(st(t, "  alpha<beta "), (PreferenceStatement{alt_at(0), alt_at(1), true}));
  EXPECT_EQ(st(t, "gamma\t<=  alpha"), (PreferenceStatement{alt_at(2), alt_at(0), false}));
  EXPECT_EQ(to_string(t, st(t, "gamma<=alpha")), "gamma <= alpha");
  const auto eq = parse_query_text("a == b");
  EXPECT_EQ(eq.relation, QueryRelation::Equivalent);
  EXPECT_EQ(to_string(eq), "a == b");
}

TEST(Statement, RejectsMalformedText) {
  const auto t = worked_example();
  EXPECT_EQ(code_of([&] { st(t, "alpha > beta"); }), ErrorCode::InvalidStatement);
  EXPECT_EQ(code_of([&] { st(t, "alpha <= "); }), ErrorCode::InvalidStatement);
  EXPECT_EQ(code_of([&] { st(t, "alpha <= beta gamma"); }), ErrorCode::InvalidStatement);
  EXPECT_EQ(code_of([&] { st(t, "alpha == beta"); }), ErrorCode::InvalidStatement);
  EXPECT_EQ(code_of([&] { st(t, "alpha <= delta"); }), ErrorCode::NameResolution);
  EXPECT_EQ(code_of([&] { make_statement(t, "alpha", "=<", "beta"); }), ErrorCode::InvalidStatement);
}

TEST(Model, SigmaAndUse) {
  const auto t = worked_example();
  const auto m = model(t, {{"c1", "c2"}, {"c3"}});
  EXPECT_EQ(m.sigma(), evals(t, {"c1", "c2", "c3"}));
  EXPECT_TRUE(m.uses(t.evaluation("c3")));
  EXPECT_FALSE(HclpModel{}.uses(t.evaluation("c3")));
  EXPECT_EQ(to_string(t, m), "({c1,c2},{c3})");
  EXPECT_EQ(to_string(t, HclpModel{}), "()");
}

TEST(Model, ValidationUnderLevelSizeBounds) {
  const auto t = worked_example();
  const auto m = model(t, {{"c1", "c2"}, {"c3"}});
  EXPECT_FALSE(validate_model(t, m, LevelSizeAtMost{2}).has_value());
  const auto v = validate_model(t, m, LevelSizeAtMost{1});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, ViolationKind::LevelTooLarge);
  EXPECT_EQ(v->level, 0u);
  EXPECT_EQ(validate_model(t, m, LevelSizeAtMost{0})->kind, ViolationKind::InvalidBound);
}

TEST(Model, ValidationReportsFirstStructuralProblem) {
  const auto t = worked_example();
  EXPECT_EQ(validate_model(t, model(t, {{"c1"}, {"c1"}}))->kind, ViolationKind::OverlappingLevels);
  EXPECT_EQ(validate_model(t, HclpModel{{{}}})->kind, ViolationKind::EmptyLevel);
  EXPECT_EQ(validate_model(t, HclpModel{{{eval_at(7)}}})->kind, ViolationKind::UnknownEvaluation);
  EXPECT_FALSE(validate_model(t, HclpModel{}).has_value());
}

TEST(Model, ValidationUnderEquivalenceClasses) {
  const auto t = worked_example();
  const EquivalenceClasses eq{{evals(t, {"c1", "c2"}), evals(t, {"c3"})}};
  EXPECT_FALSE(validate_model(t, model(t, {{"c3"}, {"c2", "c1"}}), eq).has_value());
  EXPECT_EQ(validate_model(t, model(t, {{"c1"}}), eq)->kind, ViolationKind::NotAnEquivalenceClass);
  EXPECT_EQ(validate_model(t, model(t, {{"c1", "c2", "c3"}}), eq)->kind, ViolationKind::NotAnEquivalenceClass);
  const EquivalenceClasses gap{{evals(t, {"c1"}), evals(t, {"c3"})}};
  EXPECT_EQ(validate_model(t, model(t, {{"c1"}}), gap)->kind, ViolationKind::MalformedPartition);
  EXPECT_TRUE(partition_problem(t, {evals(t, {"c1", "c2"}), evals(t, {"c2", "c3"})}).has_value());
}
