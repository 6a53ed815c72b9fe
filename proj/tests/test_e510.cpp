#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "e510/algebra.hpp"

using namespace e510;

namespace {

// Flattens graded elements over a shared coordinatization so span arguments
// can go through the exact linear algebra.
struct Linearizer {
  std::map<std::tuple<int, int, Exp5>, int> coords;  // (0=even/1=odd, comp, mono)

  void scan(const GradedElement& g) {
    for (int a = 0; a < 5; ++a)
      for (const auto& [e, c] : g.ev.comp[a].terms()) touch({0, a, e});
    for (int p = 0; p < 10; ++p)
      for (const auto& [e, c] : g.od.comp[p].terms()) touch({1, p, e});
  }
  void touch(const std::tuple<int, int, Exp5>& k) {
    if (!coords.count(k)) {
      int n = static_cast<int>(coords.size());
      coords[k] = n;
    }
  }
  SparseVector vec(const GradedElement& g) const {
    SparseVector v(static_cast<int>(coords.size()));
    for (int a = 0; a < 5; ++a)
      for (const auto& [e, c] : g.ev.comp[a].terms()) v.set(coords.at({0, a, e}), c);
    for (int p = 0; p < 10; ++p)
      for (const auto& [e, c] : g.od.comp[p].terms()) v.set(coords.at({1, p, e}), c);
    return v;
  }
};

int span_rank(const std::vector<GradedElement>& gens) {
  Linearizer lin;
  for (const auto& g : gens) lin.scan(g);
  SpanBuilder sb(static_cast<int>(lin.coords.size()));
  for (const auto& g : gens) sb.add(lin.vec(g));
  return sb.rank();
}

bool in_graded_span(const GradedElement& g, const std::vector<GradedElement>& gens) {
  Linearizer lin;
  lin.scan(g);
  for (const auto& h : gens) lin.scan(h);
  SpanBuilder sb(static_cast<int>(lin.coords.size()));
  for (const auto& h : gens) sb.add(lin.vec(h));
  return sb.contains(lin.vec(g));
}

GradedElement el(const std::string& s) { return parse_element(s); }

}  // namespace

TEST_CASE("complement_index") {
  auto s = complement_index(1, 2, 3, 4);
  CHECK(s.l == 5);
  CHECK(s.eps == 1);
  s = complement_index(2, 1, 3, 4);
  CHECK(s.l == 5);
  CHECK(s.eps == -1);
  s = complement_index(1, 2, 1, 3);
  CHECK(s.l == 0);
  CHECK(s.eps == 0);
  CHECK_THROWS_AS(complement_index(0, 2, 3, 4), std::invalid_argument);
}

TEST_CASE("odd-odd bracket examples") {
  CHECK(super_bracket(el("xi12"), el("xi34")) == el("d5"));
  CHECK(super_bracket(el("xi12"), el("xi13")).is_zero());
  CHECK(super_bracket(el("x1*xi12"), el("xi34")) == el("x1*d5"));
  // symmetry on all basis pairs
  auto xs = lm1_basis();
  for (const auto& a : xs)
    for (const auto& b : xs) CHECK(super_bracket(a, b) == super_bracket(b, a));
}

TEST_CASE("even-odd bracket examples") {
  CHECK(super_bracket(el("d5"), el("xi12")).is_zero());
  CHECK(super_bracket(el("x1*d2"), el("xi23")) == el("xi13"));
  CHECK(super_bracket(el("x1*d2"), el("xi45")).is_zero());
  // results of even-odd brackets are closed
  for (const auto& y : l1_spanning())
    for (const auto& d : lm2_basis()) CHECK(is_closed(super_bracket(d, y).od));
}

TEST_CASE("even-even bracket examples") {
  CHECK(super_bracket(el("d1"), el("d2")).is_zero());
  CHECK(super_bracket(el("x1*d2"), el("x2*d1")) == el("x1*d1 - x2*d2"));
  CHECK(super_bracket(el("x1*d2"), el("d1")) == el("-d2"));
  CHECK(divergence(super_bracket(el("x1*x2*d3"), el("x3^2*d3 - 2*x3*x4*d4")).ev).is_zero());
}

TEST_CASE("super bracket dispatch and grading") {
  GradedElement z = super_bracket(el("x1*xi12"), el("xi34"));
  CHECK(z == el("x1*d5"));
  CHECK(grading_degree(z) == 0);
  CHECK(super_bracket(el("d1"), el("x1*xi12")) == el("xi12"));
  GradedElement even = el("x1*d2");
  CHECK(super_bracket(even, even).is_zero());
  CHECK(grading_degree(el("d1")) == -2);
  CHECK(grading_degree(el("xi12")) == -1);
  CHECK(grading_degree(el("x1*xi12")) == 1);
  CHECK_THROWS_AS(grading_degree(el("d1 + xi12")), CheckFailure);
}

TEST_CASE("degree additivity of the bracket") {
  std::vector<GradedElement> sample{el("d3"),       el("xi25"),       el("x1*d2"),
                                    el("x4*xi45"),  el("x1*x2*d3"),   el("x2*xi13"),
                                    el("x5*xi15")};
  for (const auto& a : sample)
    for (const auto& b : sample) {
      GradedElement c = super_bracket(a, b);
      if (c.is_zero()) continue;
      CHECK(grading_degree(c) == grading_degree(a) + grading_degree(b));
    }
}

TEST_CASE("wedge route agrees with the epsilon formula") {
  // all monomial coefficient pairs up to degree 2
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
          CHECK(bracket_odd_odd(w1, w2) == bracket_odd_odd_via_wedge(w1, w2));
        }
}

TEST_CASE("super Jacobi on a mixed sample") {
  std::vector<std::pair<GradedElement, int>> sample{
      {el("d2"), 0},        {el("xi13"), 1},      {el("x1*d2"), 0},
      {el("x3*xi34"), 1},   {el("x1*x2*d4"), 0},  {el("x1*xi12"), 1},
      {el("x2*xi25"), 1},   {el("x1*d1 - x2*d2"), 0}};
  for (const auto& [a, pa] : sample)
    for (const auto& [b, pb] : sample)
      for (const auto& [c, pc] : sample) {
        GradedElement lhs = super_bracket(a, super_bracket(b, c));
        GradedElement rhs = super_bracket(super_bracket(a, b), c);
        GradedElement mid = super_bracket(b, super_bracket(a, c));
        if (pa * pb == 1) mid = -mid;
        rhs += mid;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("l1_spanning spans the 40-dimensional L1") {
  auto l1 = l1_spanning();
  CHECK(span_rank(l1) == 40);
  for (const auto& y : l1) {
    CHECK(grading_degree(y) == 1);
    CHECK(is_closed(y.od));
  }
  CHECK(in_graded_span(el("x1*xi12"), l1));
  CHECK(in_graded_span(el("x5*xi45"), l1));
}

TEST_CASE("l2_spanning spans the 70-dimensional L2") {
  auto l2 = l2_spanning();
  CHECK(span_rank(l2) == 70);
  for (const auto& y : l2) {
    CHECK(grading_degree(y) == 2);
    CHECK(divergence(y.ev).is_zero());
  }
  CHECK(in_graded_span(el("x1*x2*d3"), l2));
  CHECK(in_graded_span(el("x1*x2*d2 - x1*x3*d3"), l2));
  CHECK_FALSE(in_graded_span(el("x1^2*d1"), l2));
  // [L1, L1] generates the same space
  std::vector<GradedElement> brackets;
  auto l1 = l1_spanning();
  for (size_t i = 0; i < l1.size(); ++i)
    for (size_t j = i; j < l1.size(); ++j) {
      GradedElement b = super_bracket(l1[i], l1[j]);
      if (!b.is_zero()) brackets.push_back(b);
    }
  CHECK(span_rank(brackets) == 70);
  auto both = l2;
  both.insert(both.end(), brackets.begin(), brackets.end());
  CHECK(span_rank(both) == 70);
}

TEST_CASE("sl5_of is a Lie algebra isomorphism on L0") {
  CHECK_THROWS_AS(sl5_of(el("x1*d1").ev), CheckFailure);
  Mat5 m = sl5_of(el("x1*d2").ev);
  // -e^1_2 has a -1 in row 2, column 1
  CHECK(m[1][0] == -1);
  m[1][0] = 0;
  for (auto& row : m)
    for (auto& v : row) CHECK(v == 0);

  Mat5 t = sl5_of(el("x1*d1 - x2*d2").ev);
  CHECK(t[0][0] == -1);
  CHECK(t[1][1] == 1);

  auto l0 = l0_basis();
  CHECK(span_rank(l0) == 24);
  for (const auto& a : l0) {
    Rational trace(0);
    Mat5 ma = sl5_of(a.ev);
    for (int i = 0; i < 5; ++i) trace += ma[i][i];
    CHECK(trace == 0);
    for (const auto& b : l0) {
      Mat5 lhs = sl5_of(super_bracket(a, b).ev);
      Mat5 rhs = mat_bracket(sl5_of(a.ev), sl5_of(b.ev));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("highest weights of the graded pieces") {
  // raising operators x_i d_j, i < j
  std::vector<GradedElement> raising;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) raising.push_back(GradedElement::field(i, j));

  // L_{-2}: d_5 is killed by all raising ops and has weight [0,0,0,1]
  for (const auto& r : raising) CHECK(super_bracket(r, el("d5")).is_zero());
  for (int i = 1; i <= 4; ++i) {
    GradedElement h = super_bracket(cartan_t(i), el("d5"));
    CHECK(h == el("d5") * Rational(weight_of_del(5)[i - 1]));
  }
  CHECK(weight_of_del(5) == Weight{0, 0, 0, 1});

  // L_{-1}: xi_12 is killed by all raising ops and has weight [0,1,0,0]
  for (const auto& r : raising) CHECK(super_bracket(r, el("xi12")).is_zero());
  CHECK(weight_of_xi(1, 2) == Weight{0, 1, 0, 0});
  for (int i = 1; i <= 4; ++i) {
    GradedElement h = super_bracket(cartan_t(i), el("xi12"));
    CHECK(h == el("xi12") * Rational(weight_of_xi(1, 2)[i - 1]));
  }

  // L_1: x1 xi12 is a highest weight vector of weight [1,1,0,0]
  for (const auto& r : raising) CHECK(super_bracket(r, el("x1*xi12")).is_zero());
  for (int i = 1; i <= 4; ++i) {
    GradedElement h = super_bracket(cartan_t(i), el("x1*xi12"));
    Weight w = add(weight_of_x(1), weight_of_xi(1, 2));
    CHECK(h == el("x1*xi12") * Rational(w[i - 1]));
    CHECK(w == Weight{1, 1, 0, 0});
  }
  // and the lowest weight vector x5 xi45 is killed by the lowering ops
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j < i; ++j)
      CHECK(super_bracket(GradedElement::field(i, j), el("x5*xi45")).is_zero());
}

TEST_CASE("printer-parser round trip") {
  std::vector<std::string> forms{"x1*d2", "x1^2*xi45", "3/2*x1*x2*d3 - xi12",
                                 "d1 + x2^3*x3*d4 - 7*x1*xi25", "0"};
  for (const auto& s : forms) {
    GradedElement g = parse_element(s);
    CHECK(parse_element(to_string(g)) == g);
  }
  CHECK(to_string(parse_element("x1*d2")) == "x1*d2");
  CHECK(to_string(GradedElement{}) == "0");
  CHECK_THROWS_AS(parse_element("x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("x6*d1"), std::invalid_argument);
}
