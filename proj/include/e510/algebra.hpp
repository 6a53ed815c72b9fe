#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "e510/rational.hpp"
#include "e510/sparse.hpp"
#include "e510/weight.hpp"

// The Lie superalgebra E(5,10) with polynomial coefficients.  Even part:
// zero-divergence vector fields sum f_a d_a; odd part: closed 2-forms
// sum f_p xi_p with xi_ab = dx_a ^ dx_b.  Grading: deg x_a = 2, deg d_a = -2,
// deg xi = -1.
namespace e510 {

using Exp5 = std::array<int, 5>;

// Sparse multivariate polynomial in x1..x5 over Q; std::map keeps term order
// deterministic and never holds zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) terms_[Exp5{}] = c;
  }

  static Poly monomial(const Exp5& e, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static Poly var(int a, const Rational& c = Rational(1)) {
    Exp5 e{};
    e[a - 1] = 1;
    return monomial(e, c);
  }

  const std::map<Exp5, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational get_coeff(const Exp5& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exp5& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp5 e;
        for (int i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly operator*(const Rational& c) const {
    Poly out;
    for (const auto& [e, k] : terms_) out.add_term(e, k * c);
    return out;
  }
  Poly operator-() const { return *this * Rational(-1); }

  Poly derivative(int a) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[a - 1] == 0) continue;
      Exp5 d = e;
      d[a - 1] -= 1;
      out.add_term(d, c * e[a - 1]);
    }
    return out;
  }

  bool operator==(const Poly&) const = default;

 private:
  std::map<Exp5, Rational> terms_;
};

// Lexicographic list of the 10 index pairs; the PBW/wedge order of the xi's.
inline const std::array<std::pair<int, int>, 10>& xi_pairs() {
  static const std::array<std::pair<int, int>, 10> pairs = {
      std::pair<int, int>{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
      {2, 4},                    {2, 5}, {3, 4}, {3, 5}, {4, 5}};
  return pairs;
}

inline int xi_index(int a, int b) {
  for (int p = 0; p < 10; ++p)
    if (xi_pairs()[p] == std::make_pair(a, b)) return p;
  throw std::invalid_argument("xi_index: need 1 <= a < b <= 5");
}

struct EvenField {
  std::array<Poly, 5> comp;  // coefficient of d_a at comp[a-1]
  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  EvenField& operator+=(const EvenField& o) {
    for (int i = 0; i < 5; ++i) comp[i] += o.comp[i];
    return *this;
  }
  EvenField operator*(const Rational& c) const {
    EvenField out;
    for (int i = 0; i < 5; ++i) out.comp[i] = comp[i] * c;
    return out;
  }
  bool operator==(const EvenField&) const = default;
};

struct OddForm {
  std::array<Poly, 10> comp;  // coefficient of xi_p at comp[p]
  bool is_zero() const {
    for (const auto& p : comp)
      if (!p.is_zero()) return false;
    return true;
  }
  OddForm& operator+=(const OddForm& o) {
    for (int i = 0; i < 10; ++i) comp[i] += o.comp[i];
    return *this;
  }
  OddForm operator*(const Rational& c) const {
    OddForm out;
    for (int i = 0; i < 10; ++i) out.comp[i] = comp[i] * c;
    return out;
  }
  bool operator==(const OddForm&) const = default;
};

struct GradedElement {
  EvenField ev;
  OddForm od;

  bool is_zero() const { return ev.is_zero() && od.is_zero(); }
  GradedElement& operator+=(const GradedElement& o) {
    ev += o.ev;
    od += o.od;
    return *this;
  }
  GradedElement operator*(const Rational& c) const { return {ev * c, od * c}; }
  GradedElement operator-() const { return *this * Rational(-1); }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) {
    return a += -b;
  }
  bool operator==(const GradedElement&) const = default;

  static GradedElement even(EvenField f) { return {std::move(f), {}}; }
  static GradedElement odd(OddForm f) { return {{}, std::move(f)}; }
  static GradedElement del(int a, const Rational& c = Rational(1)) {
    EvenField f;
    f.comp[a - 1] = Poly(c);
    return even(std::move(f));
  }
  static GradedElement xi(int a, int b, const Rational& c = Rational(1)) {
    Rational s = c;
    if (a > b) {
      std::swap(a, b);
      s = -s;
    }
    OddForm f;
    f.comp[xi_index(a, b)] = Poly(s);
    return odd(std::move(f));
  }
  // x_i d_j with polynomial coefficient x^e
  static GradedElement field(int i, int j) {
    EvenField f;
    f.comp[j - 1] = Poly::var(i);
    return even(std::move(f));
  }
};

struct SignedIndex {
  int l = 0;    // complementary index, 0 when indices repeat
  int eps = 0;  // sign of the permutation (i j h k l), 0 when l == 0
};

// (ijhk): zero on a repeated index, otherwise the missing fifth index with the
// sign of the permutation (i j h k l) of (1..5).
inline SignedIndex complement_index(int i, int j, int h, int k) {
  std::array<int, 4> v{i, j, h, k};
  for (int a : v)
    if (a < 1 || a > 5) throw std::invalid_argument("complement_index: index out of range");
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (v[a] == v[b]) return {0, 0};
  int l = 15 - (i + j + h + k);
  std::array<int, 5> perm{i, j, h, k, l};
  int inversions = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (perm[a] > perm[b]) ++inversions;
  return {l, inversions % 2 == 0 ? 1 : -1};
}

inline Poly divergence(const EvenField& f) {
  Poly d;
  for (int a = 1; a <= 5; ++a) d += f.comp[a - 1].derivative(a);
  return d;
}

// Exterior derivative of a 2-form, as coefficients of dx_a ^ dx_b ^ dx_c
// (a < b < c); used for closedness checks.
inline std::map<std::array<int, 3>, Poly> exterior_derivative(const OddForm& w) {
  std::map<std::array<int, 3>, Poly> out;
  auto add = [&out](int a, int b, int c, const Poly& p) {
    // sort (a,b,c) with sign
    std::array<int, 3> t{a, b, c};
    int sign = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (t[i] > t[j]) {
          std::swap(t[i], t[j]);
          sign = -sign;
        }
    if (t[0] == t[1] || t[1] == t[2]) return;
    Poly q = p * Rational(sign);
    auto it = out.find(t);
    if (it == out.end())
      out[t] = q;
    else {
      it->second += q;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (int p = 0; p < 10; ++p) {
    auto [b, c] = xi_pairs()[p];
    for (int a = 1; a <= 5; ++a) {
      Poly d = w.comp[p].derivative(a);
      if (!d.is_zero()) add(a, b, c, d);
    }
  }
  return out;
}

inline bool is_closed(const OddForm& w) { return exterior_derivative(w).empty(); }

// [D1, D2], the vector-field bracket; preserves zero divergence.
inline EvenField bracket_even_even(const EvenField& d1, const EvenField& d2) {
  EvenField out;
  for (int j = 0; j < 5; ++j) {
    Poly c;
    for (int a = 1; a <= 5; ++a) {
      c += d1.comp[a - 1] * d2.comp[j].derivative(a);
      c -= d2.comp[a - 1] * d1.comp[j].derivative(a);
    }
    out.comp[j] = c;
  }
  return out;
}

// [D, w] = L_D(w) = d(i_D(w)) for closed w.
inline OddForm bracket_even_odd(const EvenField& d, const OddForm& w) {
  // contraction: 1-form alpha = i_D(w)
  std::array<Poly, 5> alpha;
  for (int p = 0; p < 10; ++p) {
    const auto [a, b] = xi_pairs()[p];
    if (w.comp[p].is_zero()) continue;
    alpha[b - 1] += w.comp[p] * d.comp[a - 1];
    alpha[a - 1] -= w.comp[p] * d.comp[b - 1];
  }
  OddForm out;
  for (int p = 0; p < 10; ++p) {
    const auto [a, b] = xi_pairs()[p];
    out.comp[p] = alpha[b - 1].derivative(a) - alpha[a - 1].derivative(b);
  }
  return out;
}

// [f xi_ij, g xi_hk] = f g eps_(ijhk) d_(ijhk); coefficient-bilinear.
inline EvenField bracket_odd_odd(const OddForm& w1, const OddForm& w2) {
  EvenField out;
  for (int p = 0; p < 10; ++p) {
    if (w1.comp[p].is_zero()) continue;
    const auto [i, j] = xi_pairs()[p];
    for (int q = 0; q < 10; ++q) {
      if (w2.comp[q].is_zero()) continue;
      const auto [h, k] = xi_pairs()[q];
      SignedIndex s = complement_index(i, j, h, k);
      if (s.l == 0) continue;
      out.comp[s.l - 1] += w1.comp[p] * w2.comp[q] * Rational(s.eps);
    }
  }
  return out;
}

// Same bracket through the defining route: i_D(dx1^...^dx5) = w1 ^ w2.
inline EvenField bracket_odd_odd_via_wedge(const OddForm& w1, const OddForm& w2) {
  // 4-form coefficients by missing index
  std::array<Poly, 5> four{};
  for (int p = 0; p < 10; ++p) {
    if (w1.comp[p].is_zero()) continue;
    const auto [i, j] = xi_pairs()[p];
    for (int q = 0; q < 10; ++q) {
      if (w2.comp[q].is_zero()) continue;
      const auto [h, k] = xi_pairs()[q];
      SignedIndex s = complement_index(i, j, h, k);
      if (s.l == 0) continue;
      // dx_i^dx_j^dx_h^dx_k = sgn * dx_{ascending complement of l}; that sign
      // equals eps_(ijhkl) * sgn(l to last position) = eps * (-1)^(5-l)
      int sign = s.eps * (((5 - s.l) % 2 == 0) ? 1 : -1);
      four[s.l - 1] += w1.comp[p] * w2.comp[q] * Rational(sign);
    }
  }
  // i_D(volume) = sum f_m (-1)^(m-1) dx1^..^(no dx_m)^..^dx5
  EvenField out;
  for (int m = 1; m <= 5; ++m)
    out.comp[m - 1] = four[m - 1] * Rational((m - 1) % 2 == 0 ? 1 : -1);
  return out;
}

inline GradedElement super_bracket(const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  out.ev = bracket_even_even(a.ev, b.ev);
  out.ev += bracket_odd_odd(a.od, b.od);
  OddForm eo = bracket_even_odd(a.ev, b.od);
  OddForm oe = bracket_even_odd(b.ev, a.od);  // [w, D] = -[D, w]
  out.od += eo;
  out.od += oe * Rational(-1);
  return out;
}

// Z-degree of a homogeneous element (deg x = 2, deg d = -2, deg xi = -1).
inline int grading_degree(const GradedElement& g) {
  std::optional<int> deg;
  auto feed = [&deg](int d) {
    if (deg && *deg != d) throw CheckFailure("grading_degree: non-homogeneous element");
    deg = d;
  };
  for (int a = 0; a < 5; ++a)
    for (const auto& [e, c] : g.ev.comp[a].terms()) {
      int t = 0;
      for (int i = 0; i < 5; ++i) t += e[i];
      feed(2 * t - 2);
    }
  for (int p = 0; p < 10; ++p)
    for (const auto& [e, c] : g.od.comp[p].terms()) {
      int t = 0;
      for (int i = 0; i < 5; ++i) t += e[i];
      feed(2 * t - 1);
    }
  if (!deg) throw CheckFailure("grading_degree: zero element");
  return *deg;
}

inline bool is_homogeneous(const GradedElement& g, int degree) {
  if (g.is_zero()) return true;
  try {
    return grading_degree(g) == degree;
  } catch (const CheckFailure&) {
    return false;
  }
}

// L0-weight of x_i d_j is eps_i - eps_j; elements here are weight vectors
// when each monomial carries the same weight.
inline Weight weight_of_field_monomial(const Exp5& e, int comp_del) {
  Weight w = weight_of_del(comp_del);
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k < e[i]; ++k) w = add(w, weight_of_x(i + 1));
  return w;
}

// --- spanning sets for the graded pieces -----------------------------------

// L_{-2}: constant fields d_1..d_5.
inline std::vector<GradedElement> lm2_basis() {
  std::vector<GradedElement> out;
  for (int a = 1; a <= 5; ++a) out.push_back(GradedElement::del(a));
  return out;
}

// L_{-1}: constant 2-forms xi_ab.
inline std::vector<GradedElement> lm1_basis() {
  std::vector<GradedElement> out;
  for (int p = 0; p < 10; ++p) {
    auto [a, b] = xi_pairs()[p];
    out.push_back(GradedElement::xi(a, b));
  }
  return out;
}

// L_0: x_i d_j (i != j) and the traceless diagonals t_i = x_i d_i - x_{i+1} d_{i+1}.
inline std::vector<GradedElement> l0_basis() {
  std::vector<GradedElement> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (i != j) out.push_back(GradedElement::field(i, j));
  for (int i = 1; i <= 4; ++i) {
    GradedElement t = GradedElement::field(i, i);
    t += -GradedElement::field(i + 1, i + 1);
    out.push_back(t);
  }
  return out;
}

inline GradedElement cartan_t(int i) {
  GradedElement t = GradedElement::field(i, i);
  t += -GradedElement::field(i + 1, i + 1);
  return t;
}

// L_1 spanning set: y = x_h xi_kl + x_k xi_hl (always closed).  Spans the
// 40-dimensional degree-1 piece; x_1 xi_12 = y(1,1,2)/2 sits inside.
inline std::vector<GradedElement> l1_spanning() {
  std::vector<GradedElement> out;
  for (int h = 1; h <= 5; ++h)
    for (int k = h; k <= 5; ++k)
      for (int l = 1; l <= 5; ++l) {
        GradedElement y;
        if (k != l) {
          OddForm f;
          f.comp[xi_index(std::min(k, l), std::max(k, l))] =
              Poly::var(h, Rational(k < l ? 1 : -1));
          y += GradedElement::odd(f);
        }
        if (h != l) {
          OddForm f;
          f.comp[xi_index(std::min(h, l), std::max(h, l))] =
              Poly::var(k, Rational(h < l ? 1 : -1));
          y += GradedElement::odd(f);
        }
        if (!y.is_zero()) out.push_back(y);
      }
  return out;
}

// L_2 spanning set: quadratic-coefficient zero-divergence fields.
inline std::vector<GradedElement> l2_spanning() {
  std::vector<GradedElement> out;
  auto xx = [](int a, int b) { return Poly::var(a) * Poly::var(b); };
  // x_a x_b d_c with c not in {a,b}: divergence-free monomials
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c) {
        if (c == a || c == b) continue;
        EvenField f;
        f.comp[c - 1] = xx(a, b);
        out.push_back(GradedElement::even(f));
      }
  // x_a x_b d_b - x_a x_c d_c (b, c != a)
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) {
        if (b == a || c == a) continue;
        EvenField f;
        f.comp[b - 1] = xx(a, b);
        f.comp[c - 1] = -xx(a, c);
        out.push_back(GradedElement::even(f));
      }
  // x_a^2 d_a - 2 x_a x_b d_b (b != a)
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      if (b == a) continue;
      EvenField f;
      f.comp[a - 1] = xx(a, a);
      f.comp[b - 1] = xx(a, b) * Rational(-2);
      out.push_back(GradedElement::even(f));
    }
  return out;
}

// --- the L0 = sl5 identification --------------------------------------------
//
// Convention (matching the worked computations in the source construction):
// e^i_j denotes the matrix unit taking the i-th basis vector to the j-th, so
// as a matrix it has its 1 in row j, column i, and x_i d_j |-> -e^i_j is a
// Lie algebra isomorphism.  The bracket satisfied by these units is
// [e^i_j, e^k_l] = d_il e^k_j - d_jk e^i_l.
using Mat5 = std::array<std::array<Rational, 5>, 5>;

// Linear coefficients c[i][j] of x_i d_j (1-based in the math, 0-based here).
inline std::array<std::array<Rational, 5>, 5> linear_coeffs(const EvenField& f) {
  std::array<std::array<Rational, 5>, 5> c{};
  for (int j = 1; j <= 5; ++j) {
    for (const auto& [e, v] : f.comp[j - 1].terms()) {
      int total = 0, var = -1;
      for (int i = 0; i < 5; ++i) {
        total += e[i];
        if (e[i] > 0) var = i;
      }
      if (total != 1) throw CheckFailure("linear_coeffs: element is not in L0");
      c[var][j - 1] = v;
    }
  }
  return c;
}

inline Mat5 sl5_of(const EvenField& z) {
  if (!divergence(z).is_zero()) throw CheckFailure("sl5_of: nonzero divergence");
  auto c = linear_coeffs(z);
  Mat5 m{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[j][i] = -c[i][j];  // -e^i_j has -1 at (row j, col i)
  return m;
}

inline Mat5 mat_bracket(const Mat5& a, const Mat5& b) {
  Mat5 out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Rational s(0);
      for (int k = 0; k < 5; ++k) s += a[i][k] * b[k][j] - b[i][k] * a[k][j];
      out[i][j] = s;
    }
  return out;
}

// --- textual element format --------------------------------------------------
// Terms like "3/2*x1^2*x3*d2" and "-x1*xi45", joined by " + " / " - ".

inline std::string to_string(const GradedElement& g) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& tail) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool coeff_one = (a == 1) && !tail.empty();
    if (!coeff_one) os << rat_to_string(a);
    if (!coeff_one && !tail.empty()) os << "*";
    os << tail;
  };
  auto mono_str = [](const Exp5& e, const std::string& gen) {
    std::string s;
    for (int i = 0; i < 5; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    if (!s.empty() && !gen.empty()) s += "*";
    return s + gen;
  };
  for (int a = 1; a <= 5; ++a)
    for (const auto& [e, c] : g.ev.comp[a - 1].terms())
      emit(c, mono_str(e, "d" + std::to_string(a)));
  for (int p = 0; p < 10; ++p) {
    auto [a, b] = xi_pairs()[p];
    for (const auto& [e, c] : g.od.comp[p].terms())
      emit(c, mono_str(e, "xi" + std::to_string(a) + std::to_string(b)));
  }
  if (first) os << "0";
  return os.str();
}

// Parses the printer's format (plus optional whitespace variations).
inline GradedElement parse_element(const std::string& input) {
  GradedElement out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < input.size() && input[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos == input.size()) throw std::invalid_argument("parse_element: empty input");
  if (input.compare(pos, 1, "0") == 0 && pos + 1 == input.size()) return out;
  bool first = true;
  while (pos < input.size()) {
    skip_ws();
    int sign = 1;
    if (input[pos] == '+' || input[pos] == '-') {
      if (input[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("parse_element: expected +/- between terms");
    }
    first = false;
    // term: factors separated by '*'
    Rational coeff(sign);
    Exp5 exp{};
    int del = 0, xia = 0, xib = 0;
    bool any = false;
    while (true) {
      size_t start = pos;
      while (pos < input.size() && input[pos] != '*' && input[pos] != '+' &&
             input[pos] != '-' && input[pos] != ' ')
        ++pos;
      std::string tok = input.substr(start, pos - start);
      if (tok.empty()) throw std::invalid_argument("parse_element: empty factor");
      any = true;
      if (tok[0] == 'x' && tok.size() >= 2 && tok[1] == 'i') {
        if (tok.size() != 4) throw std::invalid_argument("parse_element: bad xi factor " + tok);
        xia = tok[2] - '0';
        xib = tok[3] - '0';
      } else if (tok[0] == 'x') {
        int var = 0, power = 1;
        auto caret = tok.find('^');
        var = std::stoi(tok.substr(1, caret == std::string::npos ? caret : caret - 1));
        if (caret != std::string::npos) power = std::stoi(tok.substr(caret + 1));
        if (var < 1 || var > 5 || power < 1)
          throw std::invalid_argument("parse_element: bad variable " + tok);
        exp[var - 1] += power;
      } else if (tok[0] == 'd') {
        del = std::stoi(tok.substr(1));
        if (del < 1 || del > 5) throw std::invalid_argument("parse_element: bad d factor");
      } else {
        coeff *= rat_from_string(tok);
      }
      skip_ws();
      if (pos < input.size() && input[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any || (del == 0) == (xia == 0))
      throw std::invalid_argument("parse_element: each term needs exactly one of dN / xiNM");
    if (del != 0) {
      out.ev.comp[del - 1].add_term(exp, coeff);
    } else {
      if (xia < 1 || xib > 5 || xia >= xib)
        throw std::invalid_argument("parse_element: bad xi indices");
      out.od.comp[xi_index(xia, xib)].add_term(exp, coeff);
    }
    skip_ws();
  }
  return out;
}

}  // namespace e510
