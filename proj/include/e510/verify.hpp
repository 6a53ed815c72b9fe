#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "e510/pseudo.hpp"
#include "e510/singular.hpp"
#include "e510/verma.hpp"

// Property suites behind `verify` and the acceptance gate.  Everything is
// exact; a failure records a short counterexample string.
namespace e510 {

struct VerifyResult {
  std::string suite;
  long long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& dump) {
    ++checks;
    if (!cond && failures.size() < 16) failures.push_back(dump);
  }
  void merge(const VerifyResult& o) {
    checks += o.checks;
    for (const auto& f : o.failures)
      if (failures.size() < 16) failures.push_back(o.suite + ": " + f);
  }
};

// Linearly independent sub-list of a graded spanning set.
inline std::vector<GradedElement> graded_basis(const std::vector<GradedElement>& spanning) {
  std::map<std::tuple<int, int, Exp5>, int> coords;
  auto touch = [&coords](const GradedElement& g) {
    for (int a = 0; a < 5; ++a)
      for (const auto& [e, c] : g.ev.comp[a].terms()) coords.try_emplace({0, a, e}, 0);
    for (int p = 0; p < 10; ++p)
      for (const auto& [e, c] : g.od.comp[p].terms()) coords.try_emplace({1, p, e}, 0);
  };
  for (const auto& g : spanning) touch(g);
  int n = 0;
  for (auto& [k, idx] : coords) idx = n++;
  auto vec = [&](const GradedElement& g) {
    SparseVector v(n);
    for (int a = 0; a < 5; ++a)
      for (const auto& [e, c] : g.ev.comp[a].terms()) v.set(coords.at({0, a, e}), c);
    for (int p = 0; p < 10; ++p)
      for (const auto& [e, c] : g.od.comp[p].terms()) v.set(coords.at({1, p, e}), c);
    return v;
  };
  SpanBuilder sb(n);
  std::vector<GradedElement> basis;
  for (const auto& g : spanning)
    if (sb.add(vec(g))) basis.push_back(g);
  return basis;
}

// Super-Jacobi over all unordered basis triples of L_{-2}..L_2 with total
// Z-degree in [-4, 4] (skew-symmetry, checked on all pairs, covers the other
// orderings), plus odd-odd symmetry, the wedge/volume-form cross-check and
// the sl5 identification.
inline VerifyResult verify_e510() {
  VerifyResult res;
  res.suite = "e510";

  std::vector<std::pair<GradedElement, int>> basis;  // element, parity
  for (const auto& g : lm2_basis()) basis.push_back({g, 0});
  for (const auto& g : lm1_basis()) basis.push_back({g, 1});
  for (const auto& g : l0_basis()) basis.push_back({g, 0});
  for (const auto& g : graded_basis(l1_spanning())) basis.push_back({g, 1});
  for (const auto& g : graded_basis(l2_spanning())) basis.push_back({g, 0});
  res.expect(basis.size() == 5 + 10 + 24 + 40 + 70, "graded basis sizes");

  std::vector<int> deg(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) deg[i] = grading_degree(basis[i].first);

  // skew-symmetry on all pairs, and degree additivity of nonzero brackets
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      const auto& [a, pa] = basis[i];
      const auto& [b, pb] = basis[j];
      GradedElement ab = super_bracket(a, b);
      GradedElement rhs = super_bracket(b, a);
      if (pa * pb == 0) rhs = -rhs;
      res.expect(ab == rhs, "skew failed at " + to_string(a) + " , " + to_string(b));
      if (!ab.is_zero())
        res.expect(grading_degree(ab) == deg[i] + deg[j],
                   "degree additivity at " + to_string(a) + " , " + to_string(b));
    }

  // graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j)
      for (size_t k = j; k < basis.size(); ++k) {
        int total = deg[i] + deg[j] + deg[k];
        if (total < -4 || total > 4) continue;
        const auto& [a, pa] = basis[i];
        const auto& [b, pb] = basis[j];
        const auto& [c, pc] = basis[k];
        GradedElement lhs = super_bracket(a, super_bracket(b, c));
        GradedElement rhs = super_bracket(super_bracket(a, b), c);
        GradedElement mid = super_bracket(b, super_bracket(a, c));
        if (pa * pb == 1) mid = -mid;
        rhs += mid;
        res.expect(lhs == rhs, "Jacobi failed at " + to_string(a) + " , " + to_string(b) +
                                   " , " + to_string(c));
      }

  // wedge route vs epsilon formula on monomial pairs through degree 2
  std::vector<Poly> monos{Poly(Rational(1))};
  for (int a = 1; a <= 5; ++a) monos.push_back(Poly::var(a));
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) monos.push_back(Poly::var(a) * Poly::var(b));
  for (int p = 0; p < 10; ++p)
    for (int q = 0; q < 10; ++q)
      for (const auto& f : monos)
        for (const auto& g : monos) {
          OddForm w1, w2;
          w1.comp[p] = f;
          w2.comp[q] = g;
          res.expect(bracket_odd_odd(w1, w2) == bracket_odd_odd_via_wedge(w1, w2),
                     "wedge route mismatch");
        }

  // sl5_of is an isomorphism on the 24-element basis of L0
  for (const auto& a : l0_basis())
    for (const auto& b : l0_basis())
      res.expect(sl5_of(super_bracket(a, b).ev) == mat_bracket(sl5_of(a.ev), sl5_of(b.ev)),
                 "sl5_of homomorphism");
  return res;
}

// Representation property of act over all L0 x L1 and L1 x L1 pairs against
// random vectors of degree <= 4 in T(V([0,0,0,1])), the parity or the degree
// law, and never-raising of the odd filtration by even elements.
inline VerifyResult verify_verma(uint64_t seed, int nvectors = 50) {
  VerifyResult res;
  res.suite = "verma";
  std::mt19937_64 rng(seed);
  VermaModule mod({0, 0, 0, 1});

  std::vector<GradedElement> l1 = graded_basis(l1_spanning());
  std::vector<GradedElement> l0 = l0_basis();
  std::vector<std::unique_ptr<VermaModule::ActOp>> ops1, ops0;
  for (const auto& y : l1) ops1.push_back(mod.compile(y));
  for (const auto& z : l0) ops0.push_back(mod.compile(z));

  // brackets compile once; empty pointer marks a zero bracket
  std::vector<std::vector<std::unique_ptr<VermaModule::ActOp>>> b01(l0.size());
  for (size_t i = 0; i < l0.size(); ++i) {
    b01[i].resize(l1.size());
    for (size_t j = 0; j < l1.size(); ++j) {
      GradedElement g = super_bracket(l0[i], l1[j]);
      if (!g.is_zero()) b01[i][j] = mod.compile(g);
    }
  }
  std::vector<std::vector<std::unique_ptr<VermaModule::ActOp>>> b11(l1.size());
  for (size_t i = 0; i < l1.size(); ++i) {
    b11[i].resize(l1.size());
    for (size_t j = i; j < l1.size(); ++j) {
      GradedElement g = super_bracket(l1[i], l1[j]);
      if (!g.is_zero()) b11[i][j] = mod.compile(g);
    }
  }

  std::uniform_int_distribution<int> degree_dist(0, 4);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < nvectors; ++trial) {
    int p = degree_dist(rng);
    auto block = mod.enumerate_basis(p);
    std::uniform_int_distribution<size_t> pick(0, block.size() - 1);
    VermaVector v = mod.zero();
    for (int t = 0; t < 3; ++t) v.add(block[pick(rng)], rat(coeff(rng)));
    if (v.is_zero()) continue;

    std::vector<VermaVector> img1;
    img1.reserve(l1.size());
    for (const auto& op : ops1) img1.push_back(mod.act_with(*op, v));
    std::vector<VermaVector> img0;
    img0.reserve(l0.size());
    for (const auto& op : ops0) img0.push_back(mod.act_with(*op, v));

    for (const auto& [k, c] : v.terms) {
      (void)c;
      res.expect(k.degree() == p, "degree bookkeeping");
      break;
    }
    for (size_t i = 0; i < l0.size(); ++i)
      for (size_t j = 0; j < l1.size(); ++j) {
        VermaVector lhs = mod.act_with(*ops0[i], img1[j]) - mod.act_with(*ops1[j], img0[i]);
        VermaVector rhs = b01[i][j] ? mod.act_with(*b01[i][j], v) : mod.zero();
        res.expect(lhs == rhs, "representation property (L0 x L1) at vector trial " +
                                   std::to_string(trial));
      }
    for (size_t i = 0; i < l1.size(); ++i)
      for (size_t j = i; j < l1.size(); ++j) {
        VermaVector lhs = mod.act_with(*ops1[i], img1[j]) + mod.act_with(*ops1[j], img1[i]);
        VermaVector rhs = b11[i][j] ? mod.act_with(*b11[i][j], v) : mod.zero();
        res.expect(lhs == rhs, "representation property (L1 x L1) at vector trial " +
                                   std::to_string(trial));
      }
    // degree shift and odd-level monotonicity
    int top = VermaModule::top_odd_level(v);
    for (size_t j = 0; j < l1.size(); ++j)
      for (const auto& [k, c] : img1[j].terms)
        res.expect(k.degree() == p - 1, "L1 degree shift");
    for (size_t i = 0; i < l0.size(); ++i) {
      if (img0[i].is_zero()) continue;
      res.expect(VermaModule::top_odd_level(img0[i]) <= top, "even action raised odd level");
    }
  }
  return res;
}

// Tensor-module consistency: the direct quotient action of L_2 agrees with
// project-after-act, across all odd levels.
inline VerifyResult verify_quotient(uint64_t seed, int samples_per_level = 20) {
  VerifyResult res;
  res.suite = "quotient";
  std::mt19937_64 rng(seed);
  VermaModule mod({0, 0, 0, 1});
  auto l2 = graded_basis(l2_spanning());
  std::uniform_int_distribution<size_t> pick(0, l2.size() - 1);
  std::uniform_int_distribution<int> ndist(0, 2), var(0, 4), vdist(0, mod.rep().dim - 1);
  std::uniform_int_distribution<long> coeff(1, 3);
  for (int m = 1; m <= 10; ++m) {
    for (int t = 0; t < samples_per_level; ++t) {
      PBWKey k;
      int n = ndist(rng);
      for (int s = 0; s < n; ++s) k.I[var(rng)] += 1;
      std::array<int, 10> bits{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
      std::shuffle(bits.begin(), bits.end(), rng);
      for (int s = 0; s < m; ++s) k.K |= (1 << bits[s]);
      k.v = vdist(rng);
      VermaVector v = mod.zero();
      v.add(k, rat(coeff(rng)));
      QuotientClass cls = mod.project_to_quotient(v, m);
      const GradedElement& y = l2[pick(rng)];
      res.expect(mod.quotient_act_L2(y, cls) == mod.project_to_quotient(mod.act(y, v), m),
                 "quotient action mismatch at level " + std::to_string(m));
    }
  }
  return res;
}

// Hopf axioms, annihilation Jacobi on the full |I| <= 2 basis cube,
// div-Leibniz, phi properties, and the conformal correspondence.
inline VerifyResult verify_pseudo(uint64_t seed, int max_support = 3, int samples = 20) {
  using namespace pseudo;
  VerifyResult res;
  res.suite = "pseudo";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  std::uniform_int_distribution<int> dir(1, 5);

  auto random_idx = [&](int max_total) {
    std::uniform_int_distribution<int> d(0, max_total);
    std::uniform_int_distribution<int> cd(0, 4);
    Idx i{};
    int budget = d(rng);
    for (int t = 0; t < budget; ++t) i[cd(rng)] += 1;
    return i;
  };
  auto random_x = [&](int mt, int terms) {
    XElement x;
    for (int t = 0; t < terms; ++t) x.add(random_idx(mt), rat(coeff(rng)));
    return x;
  };
  auto random_h = [&](int mt, int terms) {
    HElement h;
    for (int t = 0; t < terms; ++t) h.add(random_idx(mt), rat(coeff(rng)));
    return h;
  };
  auto random_ann = [&](int mt, int terms) {
    AnnElement a;
    for (int t = 0; t < terms; ++t) a += AnnElement::basis(random_x(mt, 1), dir(rng));
    return a;
  };
  auto random_wd = [&](int mt, int terms) {
    WdElement w;
    for (int t = 0; t < terms; ++t) w.comp[dir(rng) - 1] += random_h(mt, 1);
    return w;
  };

  // Hopf axioms on all d^(I), |I| <= 3
  std::vector<Idx> cube3;
  {
    Idx i{};
    std::function<void(int, int)> gen = [&](int from, int left) {
      if (from == 5) {
        cube3.push_back(i);
        return;
      }
      for (int t = 0; t <= left; ++t) {
        i[from] = t;
        gen(from + 1, left - t);
      }
      i[from] = 0;
    };
    gen(0, 3);
  }
  for (const Idx& i : cube3) {
    HElement h = HElement::basis(i);
    std::vector<std::array<Idx, 3>> left, right;
    for (const auto& [h1, h2] : coproduct(h))
      for (const auto& [h11, h12] : coproduct(h1))
        left.push_back({h11.terms.begin()->first, h12.terms.begin()->first,
                        h2.terms.begin()->first});
    for (const auto& [h1, h2] : coproduct(h))
      for (const auto& [h21, h22] : coproduct(h2))
        right.push_back({h1.terms.begin()->first, h21.terms.begin()->first,
                         h22.terms.begin()->first});
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    res.expect(left == right, "coassociativity");
    HElement counit_side;
    for (const auto& [h1, h2] : coproduct(h)) counit_side += h2 * counit(h1);
    res.expect(counit_side == h, "counit law");
    HElement conv;
    for (const auto& [h1, h2] : coproduct(h)) conv += antipode(h1) * h2;
    res.expect(conv == HElement(counit(h)), "antipode law");
  }

  // annihilation bracket: Jacobi on all unordered basis triples with |I| <= 2
  std::vector<AnnElement> basis2;
  for (const Idx& i : cube3) {
    if (total(i) > 2) continue;
    for (int a = 1; a <= 5; ++a) basis2.push_back(AnnElement::basis(XElement::basis(i), a));
  }
  for (size_t i = 0; i < basis2.size(); ++i)
    for (size_t j = i; j < basis2.size(); ++j) {
      res.expect(annihilation_bracket(basis2[i], basis2[j]) ==
                     -annihilation_bracket(basis2[j], basis2[i]),
                 "annihilation skew");
    }
  for (size_t i = 0; i < basis2.size(); ++i)
    for (size_t j = i; j < basis2.size(); ++j) {
      AnnElement bij = annihilation_bracket(basis2[i], basis2[j]);
      for (size_t k = j; k < basis2.size(); ++k) {
        AnnElement lhs = annihilation_bracket(basis2[i], annihilation_bracket(basis2[j], basis2[k]));
        AnnElement rhs = annihilation_bracket(bij, basis2[k]) +
                         annihilation_bracket(basis2[j], annihilation_bracket(basis2[i], basis2[k]));
        res.expect(lhs == rhs, "annihilation Jacobi");
      }
    }

  // div-Leibniz, pseudobracket axioms, phi, conformal correspondence
  for (int t = 0; t < samples; ++t) {
    AnnElement A = random_ann(max_support, 2), B = random_ann(max_support, 2);
    res.expect(ann_div(annihilation_bracket(A, B)) ==
                   act_on_X(A, ann_div(B)) + -act_on_X(B, ann_div(A)),
               "div Leibniz");
    WdElement u = random_wd(2, 1), v = random_wd(2, 1);
    res.expect(wd_pseudobracket(v, u) == (-wd_pseudobracket(u, v)).swap_factors(),
               "pseudobracket skew");
    HElement f = random_h(2, 1), g = random_h(2, 1);
    WdElement fu, gv;
    for (int k = 0; k < 5; ++k) {
      fu.comp[k] = f * u.comp[k];
      gv.comp[k] = g * v.comp[k];
    }
    res.expect(wd_pseudobracket(fu, gv) == wd_pseudobracket(u, v).left_mul(f, g),
               "pseudobracket H-bilinearity");

    if (!A.is_zero() && !B.is_zero()) {
      AnnElement C = annihilation_bracket(A, B);
      if (!C.is_zero())
        res.expect(filtration_degree(C, Algebra::kW) >=
                       filtration_degree(A, Algebra::kW) + filtration_degree(B, Algebra::kW),
                   "filtration shift law");
      int p = filtration_degree(A, Algebra::kW);
      res.expect(field_min_coeff_degree(phi(A, 8)) >= p + 1, "phi filtration");
    }

    const int trunc = 4;
    EvenField lhs = bracket_even_even(phi(A, trunc), phi(B, trunc));
    EvenField rhs = phi(annihilation_bracket(A, B), trunc);
    bool match = true;
    for (int a = 0; a < 5; ++a) {
      for (const auto& [e, c] : lhs.comp[a].terms()) {
        int d = e[0] + e[1] + e[2] + e[3] + e[4];
        if (d <= trunc - 1 && rhs.comp[a].get_coeff(e) != c) match = false;
      }
      for (const auto& [e, c] : rhs.comp[a].terms()) {
        int d = e[0] + e[1] + e[2] + e[3] + e[4];
        if (d <= trunc - 1 && lhs.comp[a].get_coeff(e) != c) match = false;
      }
    }
    res.expect(match, "phi bracket compatibility");

    // phi leading term
    for (int i = 1; i <= 5; ++i) {
      EvenField lead = phi(AnnElement::basis(XElement::one(), i), 4);
      res.expect(lead.comp[i - 1] == Poly(Rational(-1)), "phi leading term");
    }

    // conformal action reconstructs the pseudoaction on the module H
    WdElement a = random_wd(2, 1);
    HElement vv = random_h(2, 1);
    res.expect(pseudoaction(a, vv) == reconstruct_pseudoaction(a, vv, 8),
               "conformal reconstruction");

    // annihilation module on X (x)_H H is act_on_X
    XElement x = XElement::basis(random_idx(2)), y = XElement::basis(random_idx(2));
    HElement g2 = random_h(2, 1);
    XElement lhs2;
    for (int c = 1; c <= 5; ++c) {
      if (a.comp[c - 1].is_zero()) continue;
      XElement xf;
      for (const auto& [i, q] : a.comp[c - 1].terms)
        xf += h_action_on_X(HElement::basis(i, q), x, Side::kRight);
      XElement yg;
      for (const auto& [i, q] : (g2 * HElement::del(c)).terms)
        yg += h_action_on_X(HElement::basis(i, q), y, Side::kRight);
      lhs2 += -(xf * yg);
    }
    XElement z;
    for (const auto& [i, q] : g2.terms)
      z += h_action_on_X(HElement::basis(i, q), y, Side::kRight);
    res.expect(lhs2 == act_on_X(iota(x, a), z), "conformal action vs act_on_X");
  }
  return res;
}

}  // namespace e510
