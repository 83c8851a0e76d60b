// Builds a small cost table in code, asks a few questions about it, and
// prints the answers.

#include <iostream>

#include "hclp/hclp.hpp"

int main() {
  using namespace hclp;
  const CostTable table({"alpha", "beta", "gamma"},
                        {{"c1", {0, 2, 1}}, {"c2", {2, 0, 2}}, {"c3", {1, 0, 0}}});
  const Statements gamma{parse_statement(table, "alpha <= beta")};

  const auto run = cons_check(table, gamma);
  std::cout << "greedy model: " << to_string(table, run.model()) << "\n";
  std::cout << "consistent: " << std::boolalpha << is_consistent(table, gamma) << "\n";

  for (const char* query : {"alpha <= gamma", "beta <= gamma", "gamma <= beta"}) {
    const auto q = parse_statement(table, query);
    std::cout << query << ": sequences " << deduce(table, gamma, q) << ", levels of size <= 3 "
              << oracle::brute_deduce(table, gamma, q, oracle::ModelClassSpec::level_size(3)) << "\n";
  }

  const Statements clash{parse_statement(table, "alpha <= beta"), parse_statement(table, "gamma < alpha")};
  const auto base = mib(table, clash);
  std::cout << "inconsistent statements:";
  for (std::size_t j : base.statements) std::cout << " [" << to_string(table, clash[j]) << "]";
  std::cout << "\nrepaired:";
  for (const auto& s : repair(table, clash)) std::cout << " [" << to_string(table, s) << "]";
  std::cout << "\n";
}
