#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "e510/algebra.hpp"
#include "e510/irrep.hpp"
#include "json.hpp"

// Generalized Verma modules T(V(lambda)) = U(L_-) (x) V with the divided-power
// PBW basis d^(I) xi^K (all d's before all xi's, xi's in lexicographic order).
namespace e510 {

struct PBWKey {
  std::array<int, 5> I{};  // divided-power exponents of d_1..d_5
  uint16_t K = 0;          // square-free xi exponents as a bit mask over xi_pairs()
  int v = 0;               // basis index into V(lambda)

  auto operator<=>(const PBWKey&) const = default;

  int even_part() const { return I[0] + I[1] + I[2] + I[3] + I[4]; }
  int odd_part() const { return std::popcount(K); }
  int degree() const { return 2 * even_part() + odd_part(); }
};

struct VermaVector {
  Weight lambda{};
  std::map<PBWKey, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const PBWKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  VermaVector& operator+=(const VermaVector& o) {
    check(lambda == o.lambda, "VermaVector: mixed modules");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
  }
  VermaVector operator*(const Rational& c) const {
    VermaVector out{lambda, {}};
    if (c != 0)
      for (const auto& [k, q] : terms) out.terms[k] = q * c;
    return out;
  }
  VermaVector operator-() const { return *this * Rational(-1); }
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) {
    return a += -b;
  }
  bool operator==(const VermaVector&) const = default;
};

// Image of a vector in the filtration quotient G_m / G_{m-1}: exactly the
// |K| = m terms, viewed in U(d) (x) (Lambda^m(s) (x) V).
struct QuotientClass {
  Weight lambda{};
  int m = 0;
  std::map<PBWKey, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const PBWKey& k, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool operator==(const QuotientClass&) const = default;
};

class VermaModule {
 public:
  explicit VermaModule(const Weight& lambda, long long basis_budget = 200000)
      : lambda_(lambda), rep_(irrep(lambda)), budget_(basis_budget) {}

  const Weight& lambda() const { return lambda_; }
  const RepMatrices& rep() const { return rep_; }

  // ---- basis -----------------------------------------------------------

  long long block_count(int p) const {
    auto binom = [](long long n, long long k) {
      if (k < 0 || k > n) return 0LL;
      long long b = 1;
      for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
      return b;
    };
    long long total = 0;
    for (int n = 0; 2 * n <= p; ++n) {
      int m = p - 2 * n;
      if (m > 10) continue;
      total += binom(n + 4, 4) * binom(10, m) * rep_.dim;
    }
    return total;
  }

  std::vector<PBWKey> enumerate_basis(int p) const {
    if (p < 0) throw std::invalid_argument("enumerate_basis: negative degree");
    long long count = block_count(p);
    if (count > budget_)
      throw BudgetExceeded("enumerate_basis: degree " + std::to_string(p) + " block has " +
                           std::to_string(count) + " elements, budget " +
                           std::to_string(budget_));
    std::vector<PBWKey> out;
    out.reserve(count);
    walk_degree_block(p, [&out](const PBWKey& k) { out.push_back(k); });
    return out;
  }

  // One weight slice of a degree block.  The walk is linear in the block but
  // only the slice is materialized, so large degrees stay reachable when a
  // weight restriction is given; the budget applies to the slice.
  std::vector<PBWKey> enumerate_weight_block(int p, const Weight& w) const {
    if (p < 0) throw std::invalid_argument("enumerate_weight_block: negative degree");
    std::vector<PBWKey> out;
    walk_degree_block(p, [&](const PBWKey& k) {
      if (weight_of_key(k) == w) {
        if (static_cast<long long>(out.size()) >= budget_)
          throw BudgetExceeded("enumerate_weight_block: slice exceeds budget " +
                               std::to_string(budget_));
        out.push_back(k);
      }
    });
    return out;
  }

  // ---- weights ----------------------------------------------------------

  Weight weight_of_key(const PBWKey& k) const {
    Weight w = rep_.basis_weight[k.v];
    for (int a = 1; a <= 5; ++a)
      for (int t = 0; t < k.I[a - 1]; ++t) w = add(w, weight_of_del(a));
    for (int p = 0; p < 10; ++p)
      if (k.K & (1 << p)) {
        auto [a, b] = xi_pairs()[p];
        w = add(w, weight_of_xi(a, b));
      }
    return w;
  }

  Weight weight_of(const VermaVector& v) const {
    check(!v.is_zero(), "weight_of: zero vector");
    std::optional<Weight> w;
    for (const auto& [k, c] : v.terms) {
      Weight wk = weight_of_key(k);
      if (w && *w != wk) throw CheckFailure("weight_of: vector is not a weight vector");
      w = wk;
    }
    return *w;
  }

  // ---- structure maps ----------------------------------------------------

  VermaVector zero() const { return VermaVector{lambda_, {}}; }

  VermaVector constant(int v) const {
    VermaVector out = zero();
    out.add(PBWKey{{}, 0, v}, Rational(1));
    return out;
  }

  static int top_odd_level(const VermaVector& v) {
    check(!v.is_zero(), "top_odd_level: zero vector");
    int m = 0;
    for (const auto& [k, c] : v.terms) m = std::max(m, k.odd_part());
    return m;
  }

  VermaVector bidegree_component(const VermaVector& v, int n, int m) const {
    VermaVector out = zero();
    for (const auto& [k, c] : v.terms)
      if (k.even_part() == n && k.odd_part() == m) out.add(k, c);
    return out;
  }

  QuotientClass project_to_quotient(const VermaVector& v, int m) const {
    if (!v.is_zero())
      check(top_odd_level(v) <= m, "project_to_quotient: vector is not in Gamma_m");
    QuotientClass out{lambda_, m, {}};
    for (const auto& [k, c] : v.terms)
      if (k.odd_part() == m) out.add(k, c);
    return out;
  }

  VermaVector lift(const QuotientClass& c) const {
    VermaVector out = zero();
    for (const auto& [k, q] : c.terms) out.add(k, q);
    return out;
  }

  // Left multiplication by a constant-coefficient 2-form sum c_p xi_p.
  // Reordering uses xi_ab xi_cd = -xi_cd xi_ab + eps_(abcd) d_(abcd) with the
  // d-term central in U(L_-), and xi^2 = 0.
  VermaVector multiply_xi(const OddForm& xi, const VermaVector& v) const {
    std::array<Rational, 10> c{};
    for (int p = 0; p < 10; ++p) {
      for (const auto& [e, q] : xi.comp[p].terms()) {
        check(e == Exp5{}, "multiply_xi: form must have constant coefficients");
        c[p] = q;
      }
    }
    VermaVector out = zero();
    for (const auto& [k, q] : v.terms)
      for (int p = 0; p < 10; ++p)
        if (c[p] != 0) xi_left_mult(p, k, q * c[p], out);
    return out;
  }

  VermaVector multiply_xi(int a, int b, const VermaVector& v) const {
    OddForm f;
    Rational s(1);
    if (a > b) {
      std::swap(a, b);
      s = -s;
    }
    f.comp[xi_index(a, b)] = Poly(s);
    return multiply_xi(f, v);
  }

  // ---- the action of L_0, L_1, L_2 ---------------------------------------
  //
  // Strategy: peel the PBW monomial one generator at a time.
  //   y d_a u = [y, d_a] u + d_a (y u)          (d even)
  //   y xi_p u = [y, xi_p] u -/+ xi_p (y u)     (minus when y is odd)
  // Brackets drop the Z-degree, ending in L_0 (acts on V through sl5_of),
  // L_{-1} (xi left multiplication) or L_{-2} (d left multiplication, central
  // in U(L_-)).  All brackets are precomputed once per y into an operator
  // tree, so acting on a whole degree block reuses them.
  struct ActOp {
    int zdeg = 0;
    SparseOp vmat;  // zdeg == 0 only
    struct Child {
      enum Kind { kZero, kOp, kXi, kDel } kind = kZero;
      std::unique_ptr<ActOp> op;
      std::array<Rational, 10> xi{};
      std::array<Rational, 5> del{};
    };
    std::array<Child, 5> d;
    std::array<Child, 10> x;
  };

  std::unique_ptr<ActOp> compile(const GradedElement& y) const {
    int deg = grading_degree(y);
    if (deg < 0 || deg > 2)
      throw std::invalid_argument("act: only Z-degrees 0, 1, 2 are supported");
    bool odd_expected = (deg % 2 != 0);
    check(odd_expected ? y.ev.is_zero() : y.od.is_zero(),
          "act: parity inconsistent with Z-degree");
    if (!y.od.is_zero()) check(is_closed(y.od), "act: odd element is not closed");
    if (!y.ev.is_zero()) check(divergence(y.ev).is_zero(), "act: even element has divergence");
    return compile_unchecked(y, deg);
  }

  VermaVector act(const GradedElement& y, const VermaVector& v) const {
    return act_with(*compile(y), v);
  }

  // Compiled operator trees for the standard spanning sets, built on first
  // use; purely a cache, results are identical to compiling per call.
  const std::vector<std::unique_ptr<ActOp>>& l1_ops() const {
    std::lock_guard<std::mutex> lock(ops_mutex_);
    if (l1_ops_.empty())
      for (const auto& y : l1_spanning()) l1_ops_.push_back(compile(y));
    return l1_ops_;
  }
  const std::vector<std::unique_ptr<ActOp>>& l2_ops() const {
    std::lock_guard<std::mutex> lock(ops_mutex_);
    if (l2_ops_.empty())
      for (const auto& y : l2_spanning()) l2_ops_.push_back(compile(y));
    return l2_ops_;
  }

  VermaVector act_with(const ActOp& op, const VermaVector& v) const {
    check(v.lambda == lambda_, "act: vector from another module");
    VermaVector out = zero();
    for (const auto& [k, c] : v.terms) apply(op, k.I, k.K, k.v, c, out);
    return out;
  }

  // Direct tensor-module action of y in L_2 on a quotient class, never
  // touching the odd reordering: y d^(I) = sum over J <= I, |J| <= 2 of
  // d^(I-J) ad^J(y)/J!; the J = 0 term dies (positive part kills the inducing
  // space), |J| = 1 gives an sl5 wedge-plus-V action, |J| = 2 lands in
  // L_{-2} and multiplies back into U(d).
  QuotientClass quotient_act_L2(const GradedElement& y, const QuotientClass& cls) const {
    check(grading_degree(y) == 2 && y.od.is_zero(), "quotient_act_L2: need y in L_2");
    check(divergence(y.ev).is_zero(), "quotient_act_L2: y has divergence");

    std::array<GradedElement, 5> za;
    std::array<SparseOp, 5> za_mat;
    std::array<std::array<std::array<Rational, 10>, 10>, 5> za_wedge{};
    std::array<std::array<std::array<Rational, 5>, 5>, 5> zab{};
    for (int a = 1; a <= 5; ++a) {
      za[a - 1] = super_bracket(y, GradedElement::del(a));
      if (!za[a - 1].is_zero()) {
        za_mat[a - 1] = l0_action(rep_, linear_coeffs(za[a - 1].ev));
        for (int p = 0; p < 10; ++p) {
          auto [c, d] = xi_pairs()[p];
          GradedElement w = super_bracket(za[a - 1], GradedElement::xi(c, d));
          for (int r = 0; r < 10; ++r)
            for (const auto& [e, q] : w.od.comp[r].terms()) za_wedge[a - 1][p][r] = q;
        }
      }
      for (int b = 1; b <= 5; ++b) {
        GradedElement g = super_bracket(za[a - 1], GradedElement::del(b));
        for (int r = 0; r < 5; ++r)
          for (const auto& [e, q] : g.ev.comp[r].terms()) zab[a - 1][b - 1][r] = q;
      }
    }

    QuotientClass out{lambda_, cls.m, {}};
    for (const auto& [k, coeff] : cls.terms) {
      // |J| = 1
      for (int a = 1; a <= 5; ++a) {
        if (k.I[a - 1] == 0 || za[a - 1].is_zero()) continue;
        PBWKey base = k;
        base.I[a - 1] -= 1;
        // V part
        for (const auto& [r, q] : za_mat[a - 1].col[k.v]) {
          PBWKey nk = base;
          nk.v = r;
          out.add(nk, coeff * q);
        }
        // wedge part on xi^K
        int pos = 0;
        for (int p = 0; p < 10; ++p) {
          if (!(k.K & (1 << p))) continue;
          for (int r = 0; r < 10; ++r) {
            const Rational& q = za_wedge[a - 1][p][r];
            if (q == 0) continue;
            uint16_t rest = k.K & ~(1 << p);
            if (rest & (1 << r)) continue;
            int pos_r = std::popcount(static_cast<uint16_t>(rest & ((1 << r) - 1)));
            int sign = ((pos + pos_r) % 2 == 0) ? 1 : -1;
            PBWKey nk = base;
            nk.K = rest | (1 << r);
            out.add(nk, coeff * q * Rational(sign));
          }
          ++pos;
        }
      }
      // |J| = 2
      for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
          std::array<int, 5> need{};
          need[a - 1] += 1;
          need[b - 1] += 1;
          bool ok = true;
          for (int i = 0; i < 5; ++i) ok = ok && k.I[i] >= need[i];
          if (!ok) continue;
          Rational factor = (a == b) ? Rational(1, 2) : Rational(1);
          for (int r = 0; r < 5; ++r) {
            const Rational& q = zab[a - 1][b - 1][r];
            if (q == 0) continue;
            PBWKey nk = k;
            nk.I[a - 1] -= 1;
            nk.I[b - 1] -= 1;
            nk.I[r] += 1;
            out.add(nk, coeff * factor * q * Rational(nk.I[r]));
          }
        }
    }
    return out;
  }

  // ---- serialization ------------------------------------------------------

  nlohmann::json to_json(const VermaVector& v) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : v.terms) {
      nlohmann::json pairs = nlohmann::json::array();
      for (int p = 0; p < 10; ++p)
        if (k.K & (1 << p)) {
          auto [a, b] = xi_pairs()[p];
          pairs.push_back({a, b});
        }
      arr.push_back({{"I", k.I}, {"K", pairs}, {"v", k.v}, {"c", rat_to_string(c)}});
    }
    return arr;
  }

  VermaVector from_json(const nlohmann::json& arr) const {
    VermaVector out = zero();
    for (const auto& t : arr) {
      PBWKey k;
      for (int i = 0; i < 5; ++i) k.I[i] = t.at("I").at(i).get<int>();
      for (const auto& pr : t.at("K"))
        k.K |= (1 << xi_index(pr.at(0).get<int>(), pr.at(1).get<int>()));
      k.v = t.at("v").get<int>();
      check(k.v >= 0 && k.v < rep_.dim, "from_json: V index out of range");
      out.add(k, rat_from_string(t.at("c").get<std::string>()));
    }
    return out;
  }

 private:
  template <typename F>
  void walk_degree_block(int p, F&& visit) const {
    for (int n = 0; 2 * n <= p; ++n) {
      int m = p - 2 * n;
      if (m > 10) continue;
      std::vector<std::array<int, 5>> exps;
      std::array<int, 5> cur{};
      enumerate_exponents(n, 0, cur, exps);
      for (const auto& I : exps)
        for (uint16_t K = 0; K < (1 << 10); ++K) {
          if (std::popcount(K) != m) continue;
          for (int v = 0; v < rep_.dim; ++v) visit(PBWKey{I, K, v});
        }
    }
  }

  static void enumerate_exponents(int total, int from, std::array<int, 5>& cur,
                                  std::vector<std::array<int, 5>>& out) {
    if (from == 4) {
      cur[4] = total;
      out.push_back(cur);
      return;
    }
    for (int t = 0; t <= total; ++t) {
      cur[from] = t;
      enumerate_exponents(total - t, from + 1, cur, out);
    }
    cur[from] = 0;
  }

  std::unique_ptr<ActOp> compile_unchecked(const GradedElement& y, int deg) const {
    auto op = std::make_unique<ActOp>();
    op->zdeg = deg;
    if (deg == 0) op->vmat = l0_action(rep_, linear_coeffs(y.ev));
    auto classify = [this](const GradedElement& z, int zdeg, ActOp::Child& child) {
      if (z.is_zero()) {
        child.kind = ActOp::Child::kZero;
        return;
      }
      if (zdeg >= 0) {
        child.kind = ActOp::Child::kOp;
        child.op = compile_unchecked(z, zdeg);
      } else if (zdeg == -1) {
        child.kind = ActOp::Child::kXi;
        for (int p = 0; p < 10; ++p)
          for (const auto& [e, q] : z.od.comp[p].terms()) child.xi[p] = q;
      } else {
        child.kind = ActOp::Child::kDel;
        for (int r = 0; r < 5; ++r)
          for (const auto& [e, q] : z.ev.comp[r].terms()) child.del[r] = q;
      }
    };
    for (int a = 1; a <= 5; ++a)
      classify(super_bracket(y, GradedElement::del(a)), deg - 2, op->d[a - 1]);
    for (int p = 0; p < 10; ++p) {
      auto [a, b] = xi_pairs()[p];
      classify(super_bracket(y, GradedElement::xi(a, b)), deg - 1, op->x[p]);
    }
    return op;
  }

  // xi_p * d^(I) xi^K (x) e_v, accumulated into out with the given coefficient.
  void xi_left_mult(int p, const PBWKey& k, const Rational& coeff, VermaVector& out) const {
    auto [a, b] = xi_pairs()[p];
    int before = 0;
    for (int q = 0; q < p; ++q) {
      if (!(k.K & (1 << q))) continue;
      auto [c, d] = xi_pairs()[q];
      SignedIndex s = complement_index(a, b, c, d);
      if (s.l != 0) {
        PBWKey nk = k;
        nk.K &= ~(1 << q);
        nk.I[s.l - 1] += 1;
        Rational val = coeff * Rational(s.eps * ((before % 2 == 0) ? 1 : -1)) *
                       Rational(nk.I[s.l - 1]);
        out.add(nk, val);
      }
      ++before;
    }
    if (!(k.K & (1 << p))) {
      PBWKey nk = k;
      nk.K |= (1 << p);
      out.add(nk, coeff * Rational((before % 2 == 0) ? 1 : -1));
    }
  }

  void del_left_mult(const std::array<Rational, 5>& c, const PBWKey& k, const Rational& coeff,
                     VermaVector& out) const {
    for (int r = 0; r < 5; ++r) {
      if (c[r] == 0) continue;
      PBWKey nk = k;
      nk.I[r] += 1;
      out.add(nk, coeff * c[r] * Rational(nk.I[r]));
    }
  }

  void apply_child(const ActOp::Child& child, const std::array<int, 5>& I, uint16_t K, int v,
                   const Rational& coeff, VermaVector& out) const {
    switch (child.kind) {
      case ActOp::Child::kZero:
        return;
      case ActOp::Child::kOp:
        apply(*child.op, I, K, v, coeff, out);
        return;
      case ActOp::Child::kXi: {
        PBWKey k{I, K, v};
        for (int p = 0; p < 10; ++p)
          if (child.xi[p] != 0) xi_left_mult(p, k, coeff * child.xi[p], out);
        return;
      }
      case ActOp::Child::kDel: {
        PBWKey k{I, K, v};
        del_left_mult(child.del, k, coeff, out);
        return;
      }
    }
  }

  void apply(const ActOp& op, std::array<int, 5> I, uint16_t K, int v, const Rational& coeff,
             VermaVector& out) const {
    for (int a = 1; a <= 5; ++a) {
      if (I[a - 1] == 0) continue;
      Rational scale = coeff / I[a - 1];
      I[a - 1] -= 1;
      apply_child(op.d[a - 1], I, K, v, scale, out);
      // pass-through d_a * (y . rest): collect recursively, then left-multiply
      VermaVector tail = zero();
      apply(op, I, K, v, scale, tail);
      for (const auto& [k, c] : tail.terms) {
        PBWKey nk = k;
        nk.I[a - 1] += 1;
        out.add(nk, c * Rational(nk.I[a - 1]));
      }
      return;
    }
    if (K != 0) {
      int p = std::countr_zero(K);
      uint16_t rest = K & ~(1 << p);
      apply_child(op.x[p], I, rest, v, coeff, out);
      Rational sign((op.zdeg % 2 != 0) ? -1 : 1);
      VermaVector tail = zero();
      apply(op, I, rest, v, coeff * sign, tail);
      for (const auto& [k, c] : tail.terms) xi_left_mult(p, k, c, out);
      return;
    }
    if (op.zdeg == 0) {
      for (const auto& [r, q] : op.vmat.col[v]) out.add(PBWKey{I, K, r}, coeff * q);
    }
    // zdeg > 0 kills constants: T^{-1} = 0
  }

  Weight lambda_;
  const RepMatrices& rep_;
  long long budget_;
  mutable std::mutex ops_mutex_;
  mutable std::vector<std::unique_ptr<ActOp>> l1_ops_;
  mutable std::vector<std::unique_ptr<ActOp>> l2_ops_;
};

}  // namespace e510
