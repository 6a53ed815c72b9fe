#pragma once

#include <array>
#include <map>
#include <vector>

#include "e510/algebra.hpp"
#include "e510/rational.hpp"

// Desk-scale model of the Hopf algebra H = U(d) for abelian d of rank 5, its
// restricted dual X (finitely supported functionals), the pseudoalgebras
// W(d) >= S(d) and their annihilation algebras.  All brackets simplify
// through [a,b] = 0 in d.
namespace e510 {

namespace pseudo {

using Idx = std::array<int, 5>;

inline int total(const Idx& i) { return i[0] + i[1] + i[2] + i[3] + i[4]; }
inline Idx idx_add(const Idx& a, const Idx& b) {
  Idx r;
  for (int k = 0; k < 5; ++k) r[k] = a[k] + b[k];
  return r;
}
inline Idx unit(int a) {
  Idx r{};
  r[a - 1] = 1;
  return r;
}

// product coefficient of divided powers: d^(I) d^(J) = C(I+J, I) d^(I+J)
inline Rational divided_binom(const Idx& i, const Idx& j) {
  Integer b(1);
  for (int k = 0; k < 5; ++k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(i[k] + j[k]),
                 static_cast<unsigned long>(i[k]));
    b *= c;
  }
  return Rational(b);
}

// Element of H over the divided-power PBW basis d^(I).
struct HElement {
  std::map<Idx, Rational> terms;

  HElement() = default;
  explicit HElement(const Rational& c) {
    if (c != 0) terms[Idx{}] = c;
  }
  static HElement basis(const Idx& i, const Rational& c = Rational(1)) {
    HElement h;
    if (c != 0) h.terms[i] = c;
    return h;
  }
  static HElement del(int a) { return basis(unit(a)); }

  bool is_zero() const { return terms.empty(); }
  void add(const Idx& i, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(i);
    if (it == terms.end()) {
      terms[i] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  HElement& operator+=(const HElement& o) {
    for (const auto& [i, c] : o.terms) add(i, c);
    return *this;
  }
  friend HElement operator+(HElement a, const HElement& b) { return a += b; }
  HElement operator*(const Rational& c) const {
    HElement out;
    if (c != 0)
      for (const auto& [i, q] : terms) out.terms[i] = q * c;
    return out;
  }
  HElement operator-() const { return *this * Rational(-1); }
  friend HElement operator*(const HElement& a, const HElement& b) {
    HElement out;
    for (const auto& [i, ci] : a.terms)
      for (const auto& [j, cj] : b.terms)
        out.add(idx_add(i, j), ci * cj * divided_binom(i, j));
    return out;
  }
  bool operator==(const HElement&) const = default;
};

inline HElement antipode(const HElement& h) {
  HElement out;
  for (const auto& [i, c] : h.terms)
    out.add(i, (total(i) % 2 == 0) ? c : -c);
  return out;
}

inline Rational counit(const HElement& h) {
  auto it = h.terms.find(Idx{});
  return it == h.terms.end() ? Rational(0) : it->second;
}

// Delta(d^(I)) = sum over J + K = I of d^(J) (x) d^(K)
inline std::vector<std::pair<HElement, HElement>> coproduct(const HElement& h) {
  std::vector<std::pair<HElement, HElement>> out;
  for (const auto& [i, c] : h.terms) {
    // enumerate componentwise splits J + K = I
    std::vector<std::pair<Idx, Idx>> parts{{Idx{}, Idx{}}};
    std::vector<std::pair<Idx, Idx>> next;
    for (int k = 0; k < 5; ++k) {
      next.clear();
      for (const auto& [j, rest] : parts)
        for (int t = 0; t <= i[k]; ++t) {
          Idx jj = j, rr = rest;
          jj[k] = t;
          rr[k] = i[k] - t;
          next.push_back({jj, rr});
        }
      parts = next;
    }
    for (const auto& [j, k2] : parts)
      out.push_back({HElement::basis(j, c), HElement::basis(k2)});
  }
  return out;
}

// Element of X = H^* with dual basis x_I, <x_I, d^(J)> = delta; the product is
// x_I x_J = x_{I+J}.
struct XElement {
  std::map<Idx, Rational> terms;

  XElement() = default;
  static XElement basis(const Idx& i, const Rational& c = Rational(1)) {
    XElement x;
    if (c != 0) x.terms[i] = c;
    return x;
  }
  static XElement one() { return basis(Idx{}); }

  bool is_zero() const { return terms.empty(); }
  void add(const Idx& i, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(i);
    if (it == terms.end()) {
      terms[i] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  XElement& operator+=(const XElement& o) {
    for (const auto& [i, c] : o.terms) add(i, c);
    return *this;
  }
  friend XElement operator+(XElement a, const XElement& b) { return a += b; }
  XElement operator*(const Rational& c) const {
    XElement out;
    if (c != 0)
      for (const auto& [i, q] : terms) out.terms[i] = q * c;
    return out;
  }
  XElement operator-() const { return *this * Rational(-1); }
  friend XElement operator*(const XElement& a, const XElement& b) {
    XElement out;
    for (const auto& [i, ci] : a.terms)
      for (const auto& [j, cj] : b.terms) out.add(idx_add(i, j), ci * cj);
    return out;
  }
  bool operator==(const XElement&) const = default;

  int min_degree() const {
    check(!terms.empty(), "min_degree of zero");
    int m = 1 << 20;
    for (const auto& [i, c] : terms) m = std::min(m, total(i));
    return m;
  }
};

inline Rational pairing(const XElement& x, const HElement& h) {
  Rational s(0);
  for (const auto& [i, c] : x.terms) {
    auto it = h.terms.find(i);
    if (it != h.terms.end()) s += c * it->second;
  }
  return s;
}

// Both module actions of H on X; they coincide since H is commutative and
// cocommutative: d^(I) . x_J = (-1)^|I| C(J, I) x_{J-I}.
enum class Side { kLeft, kRight };

inline XElement h_action_on_X(const HElement& h, const XElement& x, Side) {
  XElement out;
  for (const auto& [i, ch] : h.terms)
    for (const auto& [j, cx] : x.terms) {
      bool ok = true;
      Idx r{};
      for (int k = 0; k < 5; ++k) {
        r[k] = j[k] - i[k];
        ok = ok && r[k] >= 0;
      }
      if (!ok) continue;
      Rational c = ch * cx * divided_binom(i, r);
      out.add(r, (total(i) % 2 == 0) ? c : -c);
    }
  return out;
}

inline XElement x_mul_h(const XElement& x, const HElement& h) {
  return h_action_on_X(h, x, Side::kRight);
}

// W(d) = H (x) d, coordinates over the basis 1 (x) d_a.
struct WdElement {
  std::array<HElement, 5> comp;

  bool is_zero() const {
    for (const auto& h : comp)
      if (!h.is_zero()) return false;
    return true;
  }
  WdElement& operator+=(const WdElement& o) {
    for (int a = 0; a < 5; ++a) comp[a] += o.comp[a];
    return *this;
  }
  WdElement operator*(const Rational& c) const {
    WdElement out;
    for (int a = 0; a < 5; ++a) out.comp[a] = comp[a] * c;
    return out;
  }
  WdElement operator-() const { return *this * Rational(-1); }
  bool operator==(const WdElement&) const = default;

  static WdElement basis(const HElement& h, int a) {
    WdElement w;
    w.comp[a - 1] = h;
    return w;
  }
};

// Right-normalized element of (H (x) H) (x)_H M for a free module M with
// basis indexed by c: a sum of (A (x) 1) (x)_H (d^(M) (x) e_c), stored as
// (M, c) -> A.  Normalization uses
//   (f (x) g) (x)_H e  =  sum (f S(g_(1)) (x) 1) (x)_H g_(2) e.
struct PseudoTensor {
  std::map<std::pair<Idx, int>, HElement> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const PseudoTensor&) const = default;

  void add_part(const Idx& m, int c, const HElement& left) {
    if (left.is_zero()) return;
    auto key = std::make_pair(m, c);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms[key] = left;
    } else {
      it->second += left;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  // accumulate (f (x) g) (x)_H (h (x) e_c)
  void add_term(const HElement& f, const HElement& g, const HElement& h, int c) {
    // absorb h across the tensor-over-H: (f h_(1) (x) g h_(2)) (x)_H (1 (x) e_c)
    for (const auto& [h1, h2] : coproduct(h)) {
      HElement fa = f * h1;
      HElement gb = g * h2;
      // push the right factor into the module: A = fa * S(gb_(1)), M = gb_(2)
      for (const auto& [g1, g2] : coproduct(gb)) {
        check(g2.terms.size() <= 1, "coproduct split must be monomial");
        if (g2.terms.empty()) continue;
        const auto& [m, cm] = *g2.terms.begin();
        add_part(m, c, (fa * antipode(g1)) * cm);
      }
    }
  }

  PseudoTensor left_mul(const HElement& f, const HElement& g) const {
    PseudoTensor out;
    for (const auto& [key, left] : terms)
      out.add_term(f * left, g, HElement::basis(key.first), key.second);
    return out;
  }

  PseudoTensor swap_factors() const {  // sigma (x)_H 1
    PseudoTensor out;
    for (const auto& [key, left] : terms)
      out.add_term(HElement(Rational(1)), left, HElement::basis(key.first), key.second);
    return out;
  }

  PseudoTensor operator-() const {
    PseudoTensor out;
    for (const auto& [key, left] : terms) out.terms[key] = -left;
    return out;
  }
};

// [(f (x) a) * (g (x) b)] = -(f (x) ga) (x)_H (1 (x) b) + (f b (x) g) (x)_H (1 (x) a)
// (the [a,b] term vanishes for abelian d).
inline PseudoTensor wd_pseudobracket(const WdElement& u, const WdElement& v) {
  PseudoTensor out;
  for (int a = 1; a <= 5; ++a) {
    if (u.comp[a - 1].is_zero()) continue;
    for (int b = 1; b <= 5; ++b) {
      if (v.comp[b - 1].is_zero()) continue;
      out.add_term(-u.comp[a - 1], v.comp[b - 1] * HElement::del(a), HElement(Rational(1)), b);
      out.add_term(u.comp[a - 1] * HElement::del(b), v.comp[b - 1], HElement(Rational(1)), a);
    }
  }
  return out;
}

// s_ab = a (x) b - b (x) a for a, b in d.
inline WdElement sab(int a, int b) {
  WdElement w;
  w.comp[b - 1] += HElement::del(a);
  w.comp[a - 1] += -HElement::del(b);
  return w;
}

inline HElement div_pseudo(const WdElement& w) {
  HElement out;
  for (int a = 1; a <= 5; ++a) out += w.comp[a - 1] * HElement::del(a);
  return out;
}

// Annihilation algebra W = X (x) d.
struct AnnElement {
  std::array<XElement, 5> comp;

  bool is_zero() const {
    for (const auto& x : comp)
      if (!x.is_zero()) return false;
    return true;
  }
  AnnElement& operator+=(const AnnElement& o) {
    for (int a = 0; a < 5; ++a) comp[a] += o.comp[a];
    return *this;
  }
  AnnElement operator*(const Rational& c) const {
    AnnElement out;
    for (int a = 0; a < 5; ++a) out.comp[a] = comp[a] * c;
    return out;
  }
  AnnElement operator-() const { return *this * Rational(-1); }
  friend AnnElement operator+(AnnElement a, const AnnElement& b) { return a += b; }
  friend AnnElement operator-(AnnElement a, const AnnElement& b) { return a += -b; }
  bool operator==(const AnnElement&) const = default;

  static AnnElement basis(const XElement& x, int a) {
    AnnElement out;
    out.comp[a - 1] = x;
    return out;
  }
};

// iota: X (x)_H S(d) -> W = X (x) d through the right action.
inline AnnElement iota(const XElement& x, const WdElement& s) {
  AnnElement out;
  for (int a = 1; a <= 5; ++a)
    if (!s.comp[a - 1].is_zero()) out.comp[a - 1] += x_mul_h(x, s.comp[a - 1]);
  return out;
}

// [x (x) a, y (x) b] = -x(y a) (x) b + (x b) y (x) a for abelian d.
inline AnnElement annihilation_bracket(const AnnElement& A, const AnnElement& B) {
  AnnElement out;
  for (int a = 1; a <= 5; ++a) {
    if (A.comp[a - 1].is_zero()) continue;
    for (int b = 1; b <= 5; ++b) {
      if (B.comp[b - 1].is_zero()) continue;
      out.comp[b - 1] += -(A.comp[a - 1] * x_mul_h(B.comp[b - 1], HElement::del(a)));
      out.comp[a - 1] += x_mul_h(A.comp[a - 1], HElement::del(b)) * B.comp[b - 1];
    }
  }
  return out;
}

inline XElement ann_div(const AnnElement& A) {
  XElement out;
  for (int a = 1; a <= 5; ++a) out += x_mul_h(A.comp[a - 1], HElement::del(a));
  return out;
}

// (x (x) a) y = -x (y a)
inline XElement act_on_X(const AnnElement& A, const XElement& y) {
  XElement out;
  for (int a = 1; a <= 5; ++a)
    if (!A.comp[a - 1].is_zero())
      out += -(A.comp[a - 1] * x_mul_h(y, HElement::del(a)));
  return out;
}

// phi realizes W on O_5 = C[t1..t5]: with the identification x_I -> (-t)^I,
// phi(x_J (x) d_a) = -(-t)^J d/dt_a exactly, so phi(1 (x) d_a) = -d/dt_a and
// phi(W_p) lands in F_p W(5).  The result reuses the polynomial vector-field
// type (variables read as t's); terms above the truncation degree are dropped.
inline EvenField phi(const AnnElement& A, int truncation_degree) {
  EvenField out;
  for (int a = 1; a <= 5; ++a)
    for (const auto& [j, c] : A.comp[a - 1].terms) {
      if (total(j) > truncation_degree) continue;
      Exp5 e;
      for (int k = 0; k < 5; ++k) e[k] = j[k];
      Rational coeff = (total(j) % 2 == 0) ? -c : c;  // -(-1)^|J|
      out.comp[a - 1].add_term(e, coeff);
    }
  return out;
}

inline int field_min_coeff_degree(const EvenField& f) {
  int m = 1 << 20;
  for (int a = 0; a < 5; ++a)
    for (const auto& [e, c] : f.comp[a].terms()) {
      int t = 0;
      for (int k = 0; k < 5; ++k) t += e[k];
      m = std::min(m, t);
    }
  return m;
}

enum class Algebra { kW, kS };

// Filtration degree: W_p = F_p X (x) d with F_p X spanned by x_I, |I| > p, so
// the degree of A is (min |I| over the support) - 1.  For S the same number
// labels S_p = S-bar intersect W_p; membership additionally needs div = 0.
inline int filtration_degree(const AnnElement& A, Algebra which) {
  check(!A.is_zero(), "filtration_degree: zero element");
  if (which == Algebra::kS)
    check(ann_div(A).is_zero(), "filtration_degree: element is not in S-bar");
  int m = 1 << 20;
  for (int a = 0; a < 5; ++a)
    if (!A.comp[a].is_zero()) m = std::min(m, A.comp[a].min_degree());
  return m - 1;
}

// Conformal action of x (x)_H a on v in the W(d)-module H, where the
// pseudoaction is (f (x) a) * g = -(f (x) g a) (x)_H 1:
//   (x (x)_H a) v = sum <x, S(f_i g_i(-1))> g_i(2) v_i.
inline HElement conformal_action(const XElement& x, const WdElement& a, const HElement& g) {
  HElement out;
  for (int c = 1; c <= 5; ++c) {
    if (a.comp[c - 1].is_zero()) continue;
    const HElement& f = a.comp[c - 1];
    HElement w = g * HElement::del(c);  // g_i; v_i = -1
    for (const auto& [g1, g2] : coproduct(w)) {
      Rational scalar = pairing(x, antipode(f * antipode(g1)));
      if (scalar != 0) out += g2 * (-scalar);
    }
  }
  return out;
}

// The converse reconstruction of the pseudoaction from the conformal action:
// a * v = sum_I (S(d^(I)) (x) 1) (x)_H ((x_I (x)_H a) v), a finite sum here.
inline PseudoTensor reconstruct_pseudoaction(const WdElement& a, const HElement& v,
                                             int max_support) {
  PseudoTensor out;
  std::vector<Idx> idxs{Idx{}};
  for (int k = 0; k < 5; ++k) {
    std::vector<Idx> next;
    for (const auto& i : idxs)
      for (int t = 0; total(i) + t <= max_support; ++t) {
        Idx j = i;
        j[k] = t;
        next.push_back(j);
      }
    idxs = next;
  }
  for (const auto& i : idxs) {
    HElement w = conformal_action(XElement::basis(i), a, v);
    if (w.is_zero()) continue;
    out.add_term(antipode(HElement::basis(i)), HElement(Rational(1)), w, 0);
  }
  return out;
}

// Direct normalization of the pseudoaction a * v for the same module.
inline PseudoTensor pseudoaction(const WdElement& a, const HElement& v) {
  PseudoTensor out;
  for (int c = 1; c <= 5; ++c)
    if (!a.comp[c - 1].is_zero())
      out.add_term(-a.comp[c - 1], v * HElement::del(c), HElement(Rational(1)), 0);
  return out;
}

}  // namespace pseudo

}  // namespace e510
