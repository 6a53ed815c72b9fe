#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "e510/character.hpp"

namespace e510 {

// s = L_{-1} as an sl5-module, s* its dual; fixed by the computed highest
// weights of the graded pieces (see the algebra tests).
inline const Weight kWeightS{0, 1, 0, 0};
inline const Weight kWeightSStar{0, 0, 1, 0};

namespace detail {

inline const Character& sstar_exterior_layer(int m) {
  static std::mutex mtx;
  static std::vector<Character> layers;
  std::lock_guard<std::mutex> lock(mtx);
  if (layers.empty()) layers = exterior_layers(irr_character(kWeightSStar), 10);
  return layers.at(m);
}

}  // namespace detail

// Decomposition of L^m(s*) (x) V(omega_i) for any 0 <= m <= 10.
inline Decomposition sstar_cell(int m, int i) {
  if (m < 0 || m > 10 || i < 0 || i > 4)
    throw std::invalid_argument("sstar_cell: index out of range");
  static std::mutex mtx;
  static std::map<std::pair<int, int>, Decomposition> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(m, i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Decomposition d = decompose_character(
      char_product(detail::sstar_exterior_layer(m), irr_character(kOmega[i])));
  cache.emplace(key, d);
  return d;
}

// The published table covers j = 6..10 only.
inline Decomposition table_cell(int j, int i) {
  if (j < 6 || j > 10) throw std::invalid_argument("table_cell: j must be 6..10");
  return sstar_cell(j, i);
}

// Supports of the printed table, j = 6..9, i = 0..4 (82 entries); used only
// as a test oracle, never as a computation input.
inline const std::vector<Weight>& published_table_cell(int j, int i) {
  using W = Weight;
  using Row = std::vector<Weight>;
  static const std::map<std::pair<int, int>, Row> table = {
      {{9, 0}, {W{0, 1, 0, 0}}},
      {{9, 1}, {W{0, 0, 1, 0}, W{1, 1, 0, 0}}},
      {{9, 2}, {W{0, 0, 0, 1}, W{0, 2, 0, 0}, W{1, 0, 1, 0}}},
      {{9, 3}, {W{0, 0, 0, 0}, W{0, 1, 1, 0}, W{1, 0, 0, 1}}},
      {{9, 4}, {W{0, 1, 0, 1}, W{1, 0, 0, 0}}},
      {{8, 0}, {W{1, 0, 1, 0}}},
      {{8, 1}, {W{0, 1, 1, 0}, W{1, 0, 0, 1}, W{2, 0, 1, 0}}},
      {{8, 2}, {W{0, 0, 2, 0}, W{0, 1, 0, 1}, W{1, 0, 0, 0}, W{1, 1, 1, 0}, W{2, 0, 0, 1}}},
      {{8, 3}, {W{0, 0, 1, 1}, W{0, 1, 0, 0}, W{1, 0, 2, 0}, W{1, 1, 0, 1}, W{2, 0, 0, 0}}},
      {{8, 4}, {W{0, 0, 1, 0}, W{1, 0, 1, 1}, W{1, 1, 0, 0}}},
      {{7, 0}, {W{0, 0, 2, 0}, W{2, 0, 0, 1}}},
      {{7, 1}, {W{0, 0, 1, 1}, W{1, 0, 2, 0}, W{1, 1, 0, 1}, W{2, 0, 0, 0}, W{3, 0, 0, 1}}},
      {{7, 2},
       {W{0, 0, 1, 0}, W{0, 1, 2, 0}, W{1, 0, 1, 1}, W{1, 1, 0, 0}, W{2, 1, 0, 1},
        W{3, 0, 0, 0}}},
      {{7, 3},
       {W{0, 0, 3, 0}, W{0, 1, 1, 1}, W{1, 0, 0, 2}, W{1, 0, 1, 0}, W{2, 0, 1, 1},
        W{2, 1, 0, 0}}},
      {{7, 4},
       {W{0, 0, 2, 1}, W{0, 1, 1, 0}, W{1, 0, 0, 1}, W{2, 0, 0, 2}, W{2, 0, 1, 0}}},
      {{6, 0}, {W{1, 0, 1, 1}, W{3, 0, 0, 0}}},
      {{6, 1},
       {W{0, 1, 1, 1}, W{1, 0, 0, 2}, W{1, 0, 1, 0}, W{2, 0, 1, 1}, W{2, 1, 0, 0},
        W{4, 0, 0, 0}}},
      {{6, 2},
       {W{0, 0, 2, 1}, W{0, 1, 0, 2}, W{0, 1, 1, 0}, W{1, 0, 0, 1}, W{1, 1, 1, 1},
        W{2, 0, 0, 2}, W{2, 0, 1, 0}, W{3, 1, 0, 0}}},
      {{6, 3},
       {W{0, 0, 1, 2}, W{0, 0, 2, 0}, W{0, 1, 0, 1}, W{1, 0, 2, 1}, W{1, 1, 0, 2},
        W{1, 1, 1, 0}, W{2, 0, 0, 1}, W{3, 0, 1, 0}}},
      {{6, 4},
       {W{0, 0, 1, 1}, W{1, 0, 1, 2}, W{1, 0, 2, 0}, W{1, 1, 0, 1}, W{2, 0, 0, 0},
        W{3, 0, 0, 1}}},
  };
  return table.at({j, i});
}

// Published candidate lists (test oracles, never computation inputs).  The
// degree-11 entry is the list as published; the mechanical filter
// additionally retains [0,0,0,0], which the candidate report flags.
inline const std::vector<Weight>& published_candidates(int degree) {
  using W = Weight;
  static const std::map<int, std::vector<Weight>> lists = {
      {14, {}},
      {13, {}},
      {12, {W{0, 0, 1, 0}}},
      {11,
       {W{0, 0, 0, 1}, W{0, 0, 1, 0}, W{0, 1, 0, 0}, W{1, 0, 0, 0}, W{0, 1, 1, 0},
        W{1, 0, 0, 1}}},
      {10,
       {W{0, 0, 0, 0}, W{1, 0, 0, 0}, W{0, 0, 0, 1}, W{0, 0, 1, 0}, W{0, 1, 0, 0},
        W{1, 1, 0, 0}, W{0, 1, 1, 0}, W{1, 0, 0, 1}, W{0, 0, 1, 1}, W{1, 0, 1, 0},
        W{0, 1, 0, 1}, W{1, 1, 0, 1}, W{0, 2, 0, 0}, W{2, 0, 0, 0}, W{1, 0, 2, 0},
        W{3, 0, 0, 1}}},
  };
  return lists.at(degree);
}

// Top-bidegree constraints coming from the degree bound for singular vectors
// of tensor modules: even degree n = 0 is unconstrained, n = 1 needs V inside
// L^m(s*) (x) V(omega_i) for some i, n = 2 the same with i = 1 only, n >= 3
// is impossible.
struct TopCondition {
  int n = 0;
  int m = 0;
  enum Kind { kNone, kAnyOmega, kOmegaOneOnly, kImpossible } kind = kImpossible;
};

inline TopCondition top_condition(int n, int m) {
  if (m < 0 || m > 10) throw std::invalid_argument("top_condition: m out of range");
  TopCondition t;
  t.n = n;
  t.m = m;
  if (n == 0)
    t.kind = TopCondition::kNone;
  else if (n == 1)
    t.kind = TopCondition::kAnyOmega;
  else if (n == 2)
    t.kind = TopCondition::kOmegaOneOnly;
  else
    t.kind = TopCondition::kImpossible;
  return t;
}

// All (n,m) with 2n + m = p, 0 <= m <= 10, 0 <= n <= 2, ordered by n.
inline std::vector<std::pair<int, int>> admissible_tops(int p) {
  if (p < 0) throw std::invalid_argument("admissible_tops: negative degree");
  std::vector<std::pair<int, int>> tops;
  for (int n = 0; n <= 2; ++n) {
    int m = p - 2 * n;
    if (m >= 0 && m <= 10) tops.push_back({n, m});
  }
  return tops;
}

// Returns the admitting omega index (0..4), -1 for "no membership required",
// or nullopt when the condition fails.
inline std::optional<int> top_condition_witness(int n, int m, const Weight& lambda) {
  TopCondition t = top_condition(n, m);
  switch (t.kind) {
    case TopCondition::kNone:
      return -1;
    case TopCondition::kAnyOmega:
      for (int i = 0; i <= 4; ++i)
        if (contains(sstar_cell(m, i), lambda)) return i;
      return std::nullopt;
    case TopCondition::kOmegaOneOnly:
      if (contains(sstar_cell(m, 1), lambda)) return 1;
      return std::nullopt;
    case TopCondition::kImpossible:
      return std::nullopt;
  }
  return std::nullopt;
}

inline bool top_condition_holds(int n, int m, const Weight& lambda) {
  return top_condition_witness(n, m, lambda).has_value();
}

struct Witness {
  int n = -1, m = -1, i = -1;
};

// Pass 1: some admissible top bidegree of degree p can carry a singular top
// term for highest weight lambda.
inline std::optional<Witness> pass1_witness(int p, const Weight& lambda) {
  for (auto [n, m] : admissible_tops(p)) {
    if (auto i = top_condition_witness(n, m, lambda)) return Witness{n, m, *i};
  }
  return std::nullopt;
}

inline bool pass1(int p, const Weight& lambda) { return pass1_witness(p, lambda).has_value(); }

// The xi-trick: if v of degree p were singular, xi*v of degree p+1 would be
// S(5)-singular, so its tops must pass the same conditions at p+1; failure for
// every top forces xi*v = 0 for all xi and hence v = 0.
inline bool xi_pass(int p, const Weight& lambda) { return pass1(p + 1, lambda); }

struct CandidateReport {
  int degree = 0;
  // p <= 9: both passes admit an n = 0 top, so the argument bounds nothing.
  bool unbounded_by_this_argument = false;
  // p == 10: pass 1 admits every weight via the (0|10) top.
  bool pass1_admits_all = false;
  std::vector<Weight> pass1_set;  // empty and meaningless when pass1_admits_all
  std::vector<Weight> candidates;
  std::map<Weight, std::pair<Witness, Witness>> witnesses;  // pass1 top, xi top
};

// Exact two-pass filter: top-bidegree conditions at degree p intersected
// with the xi-pass at p+1.  Candidates are drawn from the supports of the
// finitely many decompositions the required conditions can reference, so
// the result is complete, not sampled.
//
// xi_passes > 1 is an experimental sharpening that iterates the xi-pass
// (requiring pass1 at p+2, ...); only the single pass carries the argument's
// justification, so everything official uses the default.
inline CandidateReport candidates(int p, int xi_passes = 1) {
  if (p < 0) throw std::invalid_argument("candidates: negative degree");
  if (xi_passes < 1) throw std::invalid_argument("candidates: need at least one xi-pass");
  CandidateReport rep;
  rep.degree = p;
  if (p + xi_passes - 1 <= 9) {
    rep.unbounded_by_this_argument = true;
    return rep;
  }
  rep.pass1_admits_all = (p <= 10);

  std::set<Weight> pool;
  auto collect = [&pool](int q) {
    for (auto [n, m] : admissible_tops(q)) {
      if (n == 0) continue;
      int imax = (n == 1) ? 4 : 1, imin = (n == 1) ? 0 : 1;
      for (int i = imin; i <= imax; ++i)
        for (const Weight& w : sstar_cell(m, i).support()) pool.insert(w);
    }
  };
  for (int q = p; q <= p + xi_passes; ++q)
    if (q >= 11) collect(q);

  for (const Weight& lambda : pool) {
    auto w1 = pass1_witness(p, lambda);
    if (!w1) continue;
    if (p >= 11) rep.pass1_set.push_back(lambda);
    auto w2 = pass1_witness(p + 1, lambda);
    if (!w2) continue;
    bool extra_ok = true;
    for (int q = p + 2; q <= p + xi_passes; ++q) extra_ok = extra_ok && pass1(q, lambda);
    if (!extra_ok) continue;
    rep.candidates.push_back(lambda);
    rep.witnesses[lambda] = {*w1, *w2};
  }
  return rep;
}

// Degree-11 surplus of the mechanical filter over the published list.
inline std::vector<Weight> degree11_discrepancy() {
  std::vector<Weight> extra;
  const auto& printed = published_candidates(11);
  for (const Weight& w : candidates(11).candidates) {
    if (std::find(printed.begin(), printed.end(), w) == printed.end()) extra.push_back(w);
  }
  return extra;
}

struct BoundReport {
  int global_bound = 0;
  int default_bound = 10;  // every weight admits at least the degree-10 outcome
  std::vector<std::pair<Weight, int>> exceptional;  // weights with bound > 10

  int bound_for(const Weight& lambda) const {
    for (const auto& [w, b] : exceptional)
      if (w == lambda) return b;
    return default_bound;
  }
};

inline BoundReport degree_bound_report() {
  BoundReport rep;
  std::map<Weight, int> best;
  for (int p = 11; p <= 14; ++p) {
    for (const Weight& w : candidates(p).candidates) {
      auto it = best.find(w);
      if (it == best.end() || it->second < p) best[w] = p;
    }
  }
  rep.global_bound = rep.default_bound;
  for (const auto& [w, b] : best) {
    rep.exceptional.push_back({w, b});
    rep.global_bound = std::max(rep.global_bound, b);
  }
  return rep;
}

}  // namespace e510
