#pragma once

#include <optional>

#include "e510/verma.hpp"

namespace e510 {

// Exact kernel of the stacked L_1 action on a degree block, split by weight
// (the spanning elements are weight vectors, so the kernel decomposes).
struct SingularReport {
  Weight lambda{};
  int degree = 0;
  std::optional<Weight> weight_filter;
  int kernel_dim = 0;
  std::vector<VermaVector> basis;                 // reduced echelon over Q
  std::vector<std::pair<Weight, int>> per_weight;  // sorted by weight, dims > 0
};

inline bool is_singular(const VermaModule& mod, const VermaVector& v) {
  for (const auto& op : mod.l1_ops())
    if (!mod.act_with(*op, v).is_zero()) return false;
  return true;
}

inline bool is_S5_singular(const VermaModule& mod, const VermaVector& v) {
  for (const auto& op : mod.l2_ops())
    if (!mod.act_with(*op, v).is_zero()) return false;
  return true;
}

inline SingularReport find_singular(const VermaModule& mod, int p,
                                    std::optional<Weight> weight_filter = {},
                                    const std::vector<GradedElement>& spanning = {},
                                    int full_search_degree_cap = 4) {
  if (!weight_filter && p > full_search_degree_cap)
    throw BudgetExceeded("find_singular: full searches are capped at degree " +
                         std::to_string(full_search_degree_cap) +
                         "; restrict to a weight block or raise the cap");
  SingularReport rep;
  rep.lambda = mod.lambda();
  rep.degree = p;
  rep.weight_filter = weight_filter;

  std::map<Weight, std::vector<PBWKey>> by_weight;
  if (weight_filter) {
    by_weight[*weight_filter] = mod.enumerate_weight_block(p, *weight_filter);
  } else {
    for (const auto& k : mod.enumerate_basis(p)) by_weight[mod.weight_of_key(k)].push_back(k);
  }

  std::vector<std::unique_ptr<VermaModule::ActOp>> compiled;
  std::vector<const VermaModule::ActOp*> ops;
  if (spanning.empty()) {
    for (const auto& op : mod.l1_ops()) ops.push_back(op.get());
  } else {
    for (const auto& y : spanning) compiled.push_back(mod.compile(y));
    for (const auto& op : compiled) ops.push_back(op.get());
  }

  for (const auto& [w, keys] : by_weight) {
    if (weight_filter && !(w == *weight_filter)) continue;
    const int ncols = static_cast<int>(keys.size());
    SparseMatrix stacked(0, ncols);
    for (const auto* op : ops) {
      std::map<PBWKey, int> rowmap;
      std::vector<SparseVector> rows;
      for (int ci = 0; ci < ncols; ++ci) {
        VermaVector unit = mod.zero();
        unit.add(keys[ci], Rational(1));
        VermaVector img = mod.act_with(*op, unit);
        for (const auto& [tk, c] : img.terms) {
          auto [it, fresh] = rowmap.try_emplace(tk, static_cast<int>(rows.size()));
          if (fresh) rows.push_back(SparseVector(ncols));
          rows[it->second].set(ci, c);
        }
      }
      for (const auto& r : rows) stacked.append_row(r);
    }
    std::vector<SparseVector> kernel = nullspace(stacked);
    if (kernel.empty()) continue;
    rep.per_weight.push_back({w, static_cast<int>(kernel.size())});
    rep.kernel_dim += static_cast<int>(kernel.size());
    for (const auto& kv : kernel) {
      VermaVector v = mod.zero();
      for (const auto& [ci, c] : kv.entries()) v.add(keys[ci], c);
      rep.basis.push_back(std::move(v));
    }
  }
  return rep;
}

inline nlohmann::json to_json(const VermaModule& mod, const SingularReport& rep) {
  nlohmann::json j;
  j["lambda"] = {rep.lambda[0], rep.lambda[1], rep.lambda[2], rep.lambda[3]};
  j["degree"] = rep.degree;
  if (rep.weight_filter) {
    const Weight& w = *rep.weight_filter;
    j["weight_filter"] = {w[0], w[1], w[2], w[3]};
  }
  j["kernel_dim"] = rep.kernel_dim;
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [w, d] : rep.per_weight)
    table.push_back({{"weight", {w[0], w[1], w[2], w[3]}}, {"dim", d}});
  j["per_weight"] = table;
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& v : rep.basis) basis.push_back(mod.to_json(v));
  j["basis"] = basis;
  return j;
}

}  // namespace e510
