#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "e510/character.hpp"
#include "e510/sparse.hpp"
#include "e510/weight.hpp"

namespace e510 {

// Column-sparse linear operator on a module given by basis index.
struct SparseOp {
  int dim = 0;
  std::vector<std::vector<std::pair<int, Rational>>> col;

  SparseVector apply(const SparseVector& v) const {
    SparseVector out(dim);
    for (const auto& [k, c] : v.entries())
      for (const auto& [r, a] : col[k]) out.set(r, out.get(r) + c * a);
    return out;
  }
};

// Explicit realization of the irreducible V(lambda).  Generators follow the
// e^i_j = "basis vector i to basis vector j" convention, so the matrices
// satisfy [e^i_j, e^k_l] = d_il e^k_j - d_jk e^i_l, e^i_j with i < j raise,
// and h_i acts on a weight vector by the i-th fundamental coordinate.
struct RepMatrices {
  Weight lambda{};
  int dim = 0;
  int hw_index = 0;
  std::vector<Weight> basis_weight;
  std::map<std::pair<int, int>, SparseOp> e;  // keys (i,j), i != j, 1-based
  std::array<SparseOp, 4> h;

  const SparseOp& gen_e(int i, int j) const { return e.at({i, j}); }
  const SparseOp& gen_h(int i) const { return h.at(i - 1); }
};

namespace irrep_detail {

// One fundamental factor Lambda^k(C^5): basis = k-subsets of {1..5} in lex
// order; e^i_j acts on the 5-dim factor by x_k -> -d_jk x_i and extends as a
// derivation.
struct Fundamental {
  int k = 1;
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> index;
  std::vector<Weight> weights;

  explicit Fundamental(int kk) : k(kk) {
    std::vector<int> cur;
    build(1, cur);
    for (const auto& s : subsets) {
      Weight w = kTrivial;
      for (int a : s) w = add(w, weight_of_x(a));
      weights.push_back(w);
    }
  }
  void build(int from, std::vector<int>& cur) {
    if (static_cast<int>(cur.size()) == k) {
      index[cur] = static_cast<int>(subsets.size());
      subsets.push_back(cur);
      return;
    }
    for (int a = from; a <= 5; ++a) {
      cur.push_back(a);
      build(a + 1, cur);
      cur.pop_back();
    }
  }

  // image of basis s under e^i_j (i != j): replace one j by i, signed.
  std::vector<std::pair<int, Rational>> act_e(int i, int j, int s) const {
    const auto& sub = subsets[s];
    auto itj = std::find(sub.begin(), sub.end(), j);
    if (itj == sub.end()) return {};
    if (std::find(sub.begin(), sub.end(), i) != sub.end()) return {};
    std::vector<int> t;
    t.reserve(sub.size());
    for (int a : sub)
      if (a != j) t.push_back(a);
    // wedge sign: remove j from its position, insert i at sorted position
    int pos_j = static_cast<int>(itj - sub.begin());
    auto ins = std::lower_bound(t.begin(), t.end(), i);
    int pos_i = static_cast<int>(ins - t.begin());
    t.insert(ins, i);
    int sign = ((pos_j + pos_i) % 2 == 0) ? 1 : -1;
    return {{index.at(t), Rational(-sign)}};
  }

  Rational h_eigen(int i, int s) const { return Rational(weights[s][i - 1]); }
};

struct Ambient {
  std::vector<const Fundamental*> factors;
  std::vector<long> stride;
  long dim = 1;

  void finish() {
    stride.resize(factors.size());
    for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
      stride[f] = dim;
      dim *= static_cast<long>(factors[f]->subsets.size());
    }
  }
  int local(long idx, int f) const {
    return static_cast<int>((idx / stride[f]) %
                            static_cast<long>(factors[f]->subsets.size()));
  }

  // derivation action of e^i_j (i != j) or of h_i (i > 0, j == 0)
  SparseVector act(int i, int j, const SparseVector& v) const {
    SparseVector out(static_cast<int>(dim));
    for (const auto& [idx, c] : v.entries()) {
      for (size_t f = 0; f < factors.size(); ++f) {
        int loc = local(idx, static_cast<int>(f));
        if (j != 0) {
          for (const auto& [r, a] : factors[f]->act_e(i, j, loc)) {
            long nidx = idx + (r - loc) * stride[f];
            int ni = static_cast<int>(nidx);
            out.set(ni, out.get(ni) + c * a);
          }
        } else {
          Rational a = factors[f]->h_eigen(i, loc);
          if (a != 0) out.set(static_cast<int>(idx), out.get(idx) + c * a);
        }
      }
    }
    return out;
  }

  Weight weight_of_index(long idx) const {
    Weight w = kTrivial;
    for (size_t f = 0; f < factors.size(); ++f)
      w = add(w, factors[f]->weights[local(idx, static_cast<int>(f))]);
    return w;
  }
};

struct WeightOrder {
  bool operator()(const Weight& a, const Weight& b) const {
    long la = level(a), lb = level(b);
    if (la != lb) return la > lb;
    return a > b;
  }
};

}  // namespace irrep_detail

// Builds V(lambda) as the cyclic span of the product of fundamental highest
// weight vectors inside Lambda^1(C^5)^(a1) x ... x Lambda^4(C^5)^(a4), closing
// under the lowering operators with exact rank bookkeeping.  The computed
// dimension must equal weyl_dim(lambda) or the construction aborts.
inline RepMatrices build_irrep(const Weight& lambda, long long dim_budget = 4000) {
  if (!is_dominant(lambda)) throw std::invalid_argument("build_irrep: non-dominant weight");
  const long long want = weyl_dim(lambda);
  if (want > dim_budget)
    throw BudgetExceeded("build_irrep: weyl_dim " + std::to_string(want) +
                         " exceeds budget " + std::to_string(dim_budget));

  using namespace irrep_detail;
  static const Fundamental f1(1), f2(2), f3(3), f4(4);
  static const std::array<const Fundamental*, 4> funds{&f1, &f2, &f3, &f4};

  Ambient amb;
  for (int k = 0; k < 4; ++k)
    for (int rep = 0; rep < lambda[k]; ++rep) amb.factors.push_back(funds[k]);
  const bool trivial = amb.factors.empty();
  amb.finish();

  struct Block {
    std::vector<SparseVector> rows;  // echelon over ambient coordinates
    std::map<int, int> pivot_row;
  };
  std::map<Weight, Block, WeightOrder> blocks;

  auto reduce = [](const Block& blk, SparseVector v) {
    while (!v.empty()) {
      auto [lead, val] = v.leading();
      auto it = blk.pivot_row.find(lead);
      if (it == blk.pivot_row.end()) break;
      v.axpy(-val, blk.rows[it->second]);
    }
    return v;
  };
  auto express = [&](const Block& blk, SparseVector v) {
    std::vector<std::pair<int, Rational>> coords;
    while (!v.empty()) {
      auto [lead, val] = v.leading();
      auto it = blk.pivot_row.find(lead);
      check(it != blk.pivot_row.end(), "build_irrep: vector escapes the cyclic span");
      coords.push_back({it->second, val});
      v.axpy(-val, blk.rows[it->second]);
    }
    return coords;
  };

  SparseVector hw(static_cast<int>(amb.dim));
  hw.set(0, Rational(1));  // every factor's first basis element is its hw
  blocks[lambda].rows.push_back(hw);
  blocks[lambda].pivot_row[0] = 0;

  std::vector<std::pair<Weight, int>> queue{{lambda, 0}};
  long long total = 1;
  while (!queue.empty()) {
    auto [w, li] = queue.back();
    queue.pop_back();
    if (trivial) break;
    SparseVector v = blocks[w].rows[li];
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j < i; ++j) {  // lowering: e^i_j with i > j
        SparseVector u = amb.act(i, j, v);
        if (u.empty()) continue;
        Weight wu = add(w, add(weight_of_x(i), weight_of_del(j)));
        Block& blk = blocks[wu];
        SparseVector r = reduce(blk, std::move(u));
        if (r.empty()) continue;
        r.scale(1 / r.leading().second);
        blk.pivot_row[r.leading().first] = static_cast<int>(blk.rows.size());
        blk.rows.push_back(r);
        queue.push_back({wu, static_cast<int>(blk.rows.size()) - 1});
        ++total;
        check(total <= want, "build_irrep: dimension exceeds the Weyl value");
      }
  }
  check(total == want, "build_irrep: dimension mismatch against the Weyl formula");

  RepMatrices rep;
  rep.lambda = lambda;
  rep.dim = static_cast<int>(total);
  std::map<Weight, int, WeightOrder> offset;
  {
    int off = 0;
    for (const auto& [w, blk] : blocks) {
      offset[w] = off;
      for (size_t t = 0; t < blk.rows.size(); ++t) rep.basis_weight.push_back(w);
      off += static_cast<int>(blk.rows.size());
    }
  }
  rep.hw_index = offset.at(lambda);  // == 0: lambda leads the block order

  auto columns_for = [&](int i, int j) {
    SparseOp op;
    op.dim = rep.dim;
    op.col.resize(rep.dim);
    for (const auto& [w, blk] : blocks) {
      Weight wu = (j != 0) ? add(w, add(weight_of_x(i), weight_of_del(j))) : w;
      for (size_t t = 0; t < blk.rows.size(); ++t) {
        SparseVector u = trivial ? SparseVector(1) : amb.act(i, j, blk.rows[t]);
        if (u.empty()) continue;
        auto bit = blocks.find(wu);
        check(bit != blocks.end(), "build_irrep: image weight block missing");
        int base = offset.at(wu);
        for (const auto& [local, c] : express(bit->second, std::move(u)))
          op.col[offset.at(w) + static_cast<int>(t)].push_back({base + local, c});
      }
    }
    for (auto& col : op.col)
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    return op;
  };

  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (i != j) rep.e[{i, j}] = columns_for(i, j);
  for (int i = 1; i <= 4; ++i) rep.h[i - 1] = columns_for(i, 0);
  return rep;
}

// Shared, memoized instances for module construction.
inline const RepMatrices& irrep(const Weight& lambda, long long dim_budget = 4000) {
  static std::mutex mtx;
  static std::map<Weight, RepMatrices> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  return cache.emplace(lambda, build_irrep(lambda, dim_budget)).first->second;
}

// Action on V(lambda) of an L0 element z = sum c_ij x_i d_j, via
// sl5_of(z) = -sum c_ij e^i_j: off-diagonals map through -M(e^i_j), the
// traceless diagonal part through the Cartan matrices (x_i d_i - x_{i+1} d_{i+1}
// acts as h_i).
inline SparseOp l0_action(const RepMatrices& rep,
                          const std::array<std::array<Rational, 5>, 5>& c) {
  Rational trace(0);
  for (int i = 0; i < 5; ++i) trace += c[i][i];
  check(trace == 0, "l0_action: element has nonzero divergence");
  SparseOp op;
  op.dim = rep.dim;
  op.col.resize(rep.dim);
  std::map<int, Rational> accum;
  for (int k = 0; k < rep.dim; ++k) {
    accum.clear();
    auto fold = [&](const SparseOp& gen, const Rational& scale) {
      if (scale == 0) return;
      for (const auto& [r, a] : gen.col[k]) {
        accum[r] += scale * a;
      }
    };
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        if (i != j) fold(rep.gen_e(i, j), -c[i - 1][j - 1]);
    // diagonal: sum c_ii x_i d_i = sum d_i t_i with d_i = c_11 + ... + c_ii
    Rational partial(0);
    for (int i = 1; i <= 4; ++i) {
      partial += c[i - 1][i - 1];
      fold(rep.gen_h(i), partial);
    }
    for (const auto& [r, a] : accum)
      if (a != 0) op.col[k].push_back({r, a});
  }
  return op;
}

}  // namespace e510
