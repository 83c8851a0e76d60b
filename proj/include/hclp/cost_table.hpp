#ifndef HCLP_COST_TABLE_HPP
#define HCLP_COST_TABLE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hclp/combiner.hpp"
#include "hclp/error.hpp"
#include "hclp/rational.hpp"

namespace hclp {

/// Dense handle of an alternative within one CostTable.
enum class AltId : std::uint32_t {};
/// Dense handle of an evaluation within one CostTable.
enum class EvalId : std::uint32_t {};

constexpr std::size_t to_index(AltId a) noexcept { return static_cast<std::size_t>(a); }
constexpr std::size_t to_index(EvalId c) noexcept { return static_cast<std::size_t>(c); }
constexpr AltId alt_at(std::size_t i) noexcept { return AltId{static_cast<std::uint32_t>(i)}; }
constexpr EvalId eval_at(std::size_t i) noexcept { return EvalId{static_cast<std::uint32_t>(i)}; }

/// Bare identifiers: [A-Za-z0-9_+#^-]+
constexpr bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (char ch : name) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                    ch == '_' || ch == '+' || ch == '#' || ch == '^' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

/// The structure <A, combiner, C>: named alternatives, named evaluations and a
/// non-negative exact cost for every (evaluation, alternative) cell.
///
/// Immutable once built. Alongside the costs the table keeps, for every cell,
/// the dense rank of the cost within its evaluation; two cells of the same
/// evaluation compare exactly as their ranks do, which lets the engine
/// classify statements with integer comparisons.
class CostTable {
 public:
  struct Row {
    std::string evaluation;
    std::vector<Rational> costs;  // one per alternative, in alternative order
  };

  CostTable() = default;

  CostTable(std::vector<std::string> alternatives, std::vector<Row> rows, Combiner combiner = Combiner::Sum)
      : alternatives_(std::move(alternatives)), combiner_(combiner) {
    index_names(alternatives_, alt_index_, "alternative");
    evaluations_.reserve(rows.size());
    costs_.reserve(rows.size() * alternatives_.size());
    for (Row& row : rows) {
      if (row.costs.size() != alternatives_.size())
        throw Error(ErrorCode::MissingCost, "evaluation " + row.evaluation + " has " +
                                                std::to_string(row.costs.size()) + " costs for " +
                                                std::to_string(alternatives_.size()) + " alternatives");
      for (std::size_t a = 0; a < row.costs.size(); ++a) {
        if (row.costs[a].sign() < 0)
          throw Error(ErrorCode::NegativeCost,
                      "negative cost " + row.evaluation + "/" + alternatives_[a] + " = " + row.costs[a].to_string());
        costs_.push_back(std::move(row.costs[a]));
      }
      evaluations_.push_back(std::move(row.evaluation));
    }
    index_names(evaluations_, eval_index_, "evaluation");
    build_ranks();
  }

  std::size_t num_alternatives() const noexcept { return alternatives_.size(); }
  std::size_t num_evaluations() const noexcept { return evaluations_.size(); }
  Combiner combiner() const noexcept { return combiner_; }

  std::span<const std::string> alternatives() const noexcept { return alternatives_; }
  std::span<const std::string> evaluations() const noexcept { return evaluations_; }

  const std::string& name(AltId a) const { return alternatives_.at(to_index(a)); }
  const std::string& name(EvalId c) const { return evaluations_.at(to_index(c)); }

  bool contains(AltId a) const noexcept { return to_index(a) < alternatives_.size(); }
  bool contains(EvalId c) const noexcept { return to_index(c) < evaluations_.size(); }

  std::optional<AltId> find_alternative(std::string_view name) const {
    auto it = alt_index_.find(name);
    if (it == alt_index_.end()) return std::nullopt;
    return alt_at(it->second);
  }

  std::optional<EvalId> find_evaluation(std::string_view name) const {
    auto it = eval_index_.find(name);
    if (it == eval_index_.end()) return std::nullopt;
    return eval_at(it->second);
  }

  AltId alternative(std::string_view name) const {
    if (auto a = find_alternative(name)) return *a;
    throw Error(ErrorCode::NameResolution, "unknown alternative \"" + std::string(name) + "\"");
  }

  EvalId evaluation(std::string_view name) const {
    if (auto c = find_evaluation(name)) return *c;
    throw Error(ErrorCode::NameResolution, "unknown evaluation \"" + std::string(name) + "\"");
  }

  const Rational& cost(EvalId c, AltId a) const noexcept {
    return costs_[to_index(c) * alternatives_.size() + to_index(a)];
  }

  std::uint32_t rank(EvalId c, AltId a) const noexcept {
    return ranks_[to_index(a) * evaluations_.size() + to_index(c)];
  }

  /// Ranks of alternative `a` under every evaluation, in evaluation order.
  std::span<const std::uint32_t> rank_row(AltId a) const noexcept {
    return {ranks_.data() + to_index(a) * evaluations_.size(), evaluations_.size()};
  }

  std::vector<EvalId> evaluation_ids() const {
    std::vector<EvalId> ids(evaluations_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = eval_at(i);
    return ids;
  }

  std::vector<AltId> alternative_ids() const {
    std::vector<AltId> ids(alternatives_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = alt_at(i);
    return ids;
  }

  std::vector<Row> rows() const {
    std::vector<Row> out;
    out.reserve(evaluations_.size());
    for (std::size_t c = 0; c < evaluations_.size(); ++c) {
      auto first = costs_.begin() + static_cast<std::ptrdiff_t>(c * alternatives_.size());
      out.push_back({evaluations_[c], std::vector<Rational>(first, first + static_cast<std::ptrdiff_t>(alternatives_.size()))});
    }
    return out;
  }

  /// The same structure restricted to `keep` (in the order given).
  CostTable restricted_to(std::span<const EvalId> keep) const {
    std::vector<Row> kept;
    kept.reserve(keep.size());
    auto all = rows();
    for (EvalId c : keep) kept.push_back(all.at(to_index(c)));
    return CostTable(alternatives_, std::move(kept), combiner_);
  }

  /// The same structure with extra alternatives; `columns[k][c]` is the cost
  /// of new alternative k under evaluation c.
  CostTable with_alternatives(std::span<const std::string> names,
                              std::span<const std::vector<Rational>> columns) const {
    std::vector<std::string> alts = alternatives_;
    alts.insert(alts.end(), names.begin(), names.end());
    auto all = rows();
    for (std::size_t c = 0; c < all.size(); ++c)
      for (const auto& column : columns) all[c].costs.push_back(column.at(c));
    return CostTable(std::move(alts), std::move(all), combiner_);
  }

  CostTable with_combiner(Combiner combiner) const {
    CostTable copy = *this;
    copy.combiner_ = combiner;
    return copy;
  }

  friend bool operator==(const CostTable& x, const CostTable& y) {
    return x.combiner_ == y.combiner_ && x.alternatives_ == y.alternatives_ && x.evaluations_ == y.evaluations_ &&
           x.costs_ == y.costs_;
  }

 private:
  using NameIndex = std::map<std::string, std::uint32_t, std::less<>>;

  static void index_names(const std::vector<std::string>& names, NameIndex& index, const char* kind) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!is_identifier(names[i]))
        throw Error(ErrorCode::InvalidParameter, std::string("invalid ") + kind + " name \"" + names[i] + "\"");
      if (!index.emplace(names[i], static_cast<std::uint32_t>(i)).second)
        throw Error(ErrorCode::DuplicateName, std::string("duplicate ") + kind + " \"" + names[i] + "\"");
    }
  }

  void build_ranks() {
    const std::size_t n_alt = alternatives_.size();
    const std::size_t n_eval = evaluations_.size();
    ranks_.assign(n_alt * n_eval, 0);
    std::vector<Rational> distinct;
    for (std::size_t c = 0; c < n_eval; ++c) {
      auto first = costs_.begin() + static_cast<std::ptrdiff_t>(c * n_alt);
      distinct.assign(first, first + static_cast<std::ptrdiff_t>(n_alt));
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t a = 0; a < n_alt; ++a) {
        const auto pos = std::lower_bound(distinct.begin(), distinct.end(), costs_[c * n_alt + a]) - distinct.begin();
        ranks_[a * n_eval + c] = static_cast<std::uint32_t>(pos);
      }
    }
  }

  std::vector<std::string> alternatives_;
  std::vector<std::string> evaluations_;
  std::vector<Rational> costs_;       // evaluation-major
  std::vector<std::uint32_t> ranks_;  // alternative-major
  NameIndex alt_index_;
  NameIndex eval_index_;
  Combiner combiner_ = Combiner::Sum;
};

}  // namespace hclp

#endif  // HCLP_COST_TABLE_HPP
