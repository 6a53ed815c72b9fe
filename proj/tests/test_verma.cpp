#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "e510/verma.hpp"

using namespace e510;

namespace {

GradedElement el(const std::string& s) { return parse_element(s); }

VermaVector tensor(const VermaModule& mod, std::array<int, 5> I,
                   std::vector<std::pair<int, int>> pairs, const SparseVector& vpart) {
  PBWKey k;
  k.I = I;
  for (auto [a, b] : pairs) k.K |= (1 << xi_index(a, b));
  VermaVector out = mod.zero();
  for (const auto& [idx, c] : vpart.entries()) {
    PBWKey kk = k;
    kk.v = idx;
    out.add(kk, c);
  }
  return out;
}

// psi identifies d_1..d_5 with vectors of V([0,0,0,1]), as in the source
// computations: psi(d5) = hw, psi(d_k) = e^{k+1}_k psi(d_{k+1}).
std::array<SparseVector, 6> psi_basis(const RepMatrices& rep) {
  std::array<SparseVector, 6> psi;
  psi[5] = SparseVector(rep.dim);
  psi[5].set(rep.hw_index, Rational(1));
  for (int k = 4; k >= 1; --k) psi[k] = rep.gen_e(k + 1, k).apply(psi[k + 1]);
  return psi;
}

VermaVector example_2_6_vector(const VermaModule& mod) {
  auto psi = psi_basis(mod.rep());
  VermaVector v = mod.zero();
  for (int i = 2; i <= 5; ++i) v += tensor(mod, {}, {{1, i}}, psi[i]);
  return v;
}

std::mt19937_64 rng(987654321);

VermaVector random_vector(const VermaModule& mod, int degree, int terms) {
  auto basis = mod.enumerate_basis(degree);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> coeff(-3, 3);
  VermaVector v = mod.zero();
  for (int t = 0; t < terms; ++t) v.add(basis[pick(rng)], rat(coeff(rng)));
  return v;
}

}  // namespace

TEST_CASE("basis enumeration counts") {
  VermaModule m4({0, 0, 0, 1});
  CHECK(m4.enumerate_basis(0).size() == 5);
  CHECK(m4.enumerate_basis(1).size() == 50);   // T^1 = s (x) V
  CHECK(m4.enumerate_basis(2).size() == 250);  // (d + L^2 s) (x) V = (5+45)*5

  VermaModule m0({0, 0, 0, 0});
  CHECK(m0.enumerate_basis(2).size() == 50);
  for (int p = 0; p <= 6; ++p)
    CHECK(static_cast<long long>(m0.enumerate_basis(p).size()) == m0.block_count(p));

  VermaModule tight({0, 0, 0, 1}, 100);
  CHECK_THROWS_AS(tight.enumerate_basis(2), BudgetExceeded);
}

TEST_CASE("act by L0: straightening against hand values") {
  VermaModule mod({0, 0, 0, 1});
  auto psi = psi_basis(mod.rep());
  GradedElement y = el("x1*d2");

  // [x1 d2, d2] = 0, so only the V part moves: d2 (x) psi(d1) -> d2 (x) (-e^1_2 psi(d1))
  VermaVector v = tensor(mod, {0, 1, 0, 0, 0}, {}, psi[1]);
  VermaVector expect = -tensor(mod, {0, 1, 0, 0, 0}, {}, psi[2]);
  CHECK(mod.act(y, v) == expect);

  // [x1 d2, d1] = -d2 contributes a PBW shift
  v = tensor(mod, {1, 0, 0, 0, 0}, {}, psi[1]);
  expect = -tensor(mod, {0, 1, 0, 0, 0}, {}, psi[1]) - tensor(mod, {1, 0, 0, 0, 0}, {}, psi[2]);
  CHECK(mod.act(y, v) == expect);

  // divided powers: y d1^(2) = d1^(2) y + d1^(1) [y, d1]
  v = tensor(mod, {2, 0, 0, 0, 0}, {}, psi[1]);
  expect = -tensor(mod, {2, 0, 0, 0, 0}, {}, psi[2]) - tensor(mod, {1, 1, 0, 0, 0}, {}, psi[1]);
  CHECK(mod.act(y, v) == expect);
}

TEST_CASE("unsupported degrees are rejected") {
  VermaModule mod({0, 0, 0, 0});
  CHECK_THROWS_AS(mod.act(el("d1"), mod.constant(0)), std::invalid_argument);
  CHECK_THROWS_AS(mod.act(el("xi12"), mod.constant(0)), std::invalid_argument);
  CHECK_THROWS_AS(mod.act(el("d1 + xi12"), mod.constant(0)), CheckFailure);
  CHECK_THROWS_AS(mod.act(el("x1*d1"), mod.constant(0)), CheckFailure);  // divergence
}

TEST_CASE("L1 kills constants") {
  VermaModule mod({0, 1, 0, 0});
  for (const auto& y : l1_spanning())
    for (int v = 0; v < mod.rep().dim; ++v) CHECK(mod.act(y, mod.constant(v)).is_zero());
}

TEST_CASE("Example 2.6: the degree-1 singular vector of T(V([0,0,0,1]))") {
  VermaModule mod({0, 0, 0, 1});
  VermaVector v = example_2_6_vector(mod);
  REQUIRE_FALSE(v.is_zero());
  CHECK(v.terms.size() == 4);  // xi_11 = 0 leaves four terms
  for (const auto& y : l1_spanning()) CHECK(mod.act(y, v).is_zero());
  // the footnote's lowest weight vector of L1 in particular
  GradedElement lw = el("x5*xi45");
  CHECK(mod.act(lw, v).is_zero());
  // it is a weight vector of dominant weight [1,0,0,0]
  Weight w = mod.weight_of(v);
  CHECK(w == Weight{1, 0, 0, 0});
  CHECK(is_dominant(w));
  CHECK(VermaModule::top_odd_level(v) == 1);
  CHECK(mod.bidegree_component(v, 0, 1) == v);
}

TEST_CASE("degree shift: L_j maps T^p to T^{p-j}") {
  VermaModule mod({1, 0, 0, 0});
  std::vector<GradedElement> ys{el("x1*d2"), el("x2*d1"), el("x1*xi12"),
                                el("x3*xi45 + x4*xi35"), el("x1*x2*d3"),
                                el("x2^2*d2 - 2*x2*x3*d3")};
  for (int p = 1; p <= 4; ++p) {
    VermaVector v = random_vector(mod, p, 4);
    for (const auto& y : ys) {
      int j = grading_degree(y);
      VermaVector img = mod.act(y, v);
      for (const auto& [k, c] : img.terms) CHECK(k.degree() == p - j);
    }
  }
}

TEST_CASE("multiply_xi straightening") {
  VermaModule mod({0, 0, 0, 1});
  VermaVector v0 = mod.constant(0);

  CHECK(mod.multiply_xi(1, 2, v0) == tensor(mod, {}, {{1, 2}}, [&] {
          SparseVector s(mod.rep().dim);
          s.set(0, Rational(1));
          return s;
        }()));
  CHECK(mod.multiply_xi(1, 2, mod.multiply_xi(1, 2, v0)).is_zero());

  // xi34 . (xi12 (x) v0) = -xi12 xi34 (x) v0 + d5 (x) v0
  VermaVector in = mod.multiply_xi(1, 2, v0);
  VermaVector got = mod.multiply_xi(3, 4, in);
  VermaVector expect = mod.zero();
  {
    PBWKey k;
    k.K = (1 << xi_index(1, 2)) | (1 << xi_index(3, 4));
    k.v = 0;
    expect.add(k, Rational(-1));
    PBWKey k2;
    k2.I = {0, 0, 0, 0, 1};
    k2.v = 0;
    expect.add(k2, Rational(1));
  }
  CHECK(got == expect);

  // degree rises by one, and xi^2 = 0 across random vectors
  for (int p = 0; p <= 3; ++p) {
    VermaVector v = random_vector(mod, p, 3);
    for (int pi = 0; pi < 10; ++pi) {
      auto [a, b] = xi_pairs()[pi];
      VermaVector once = mod.multiply_xi(a, b, v);
      for (const auto& [k, c] : once.terms) CHECK(k.degree() == p + 1);
      CHECK(mod.multiply_xi(a, b, once).is_zero());
    }
  }
  CHECK_THROWS_AS(mod.multiply_xi(el("x1*xi12").od, v0), CheckFailure);
}

TEST_CASE("representation property on L0 x L1 and L1 x L1 samples") {
  VermaModule mod({0, 0, 0, 1});
  auto l1 = l1_spanning();
  auto l0 = l0_basis();
  std::uniform_int_distribution<size_t> pick1(0, l1.size() - 1), pick0(0, l0.size() - 1);
  for (int trial = 0; trial < 12; ++trial) {
    VermaVector v = random_vector(mod, 2 + trial % 3, 3);
    GradedElement a = l0[pick0(rng)], b = l1[pick1(rng)], c = l1[pick1(rng)];
    // [even, odd]
    VermaVector lhs = mod.act(a, mod.act(b, v)) - mod.act(b, mod.act(a, v));
    GradedElement ab = super_bracket(a, b);
    CHECK(lhs == (ab.is_zero() ? mod.zero() : mod.act(ab, v)));
    // [odd, odd]: anticommutator
    VermaVector lhs2 = mod.act(b, mod.act(c, v)) + mod.act(c, mod.act(b, v));
    GradedElement bc = super_bracket(b, c);
    CHECK(lhs2 == (bc.is_zero() ? mod.zero() : mod.act(bc, v)));
  }
}

TEST_CASE("weights") {
  VermaModule mod({0, 1, 0, 0});
  VermaVector hw = mod.constant(mod.rep().hw_index);
  CHECK(mod.weight_of(hw) == Weight{0, 1, 0, 0});
  // additivity over the PBW part
  PBWKey k;
  k.I = {1, 0, 0, 2, 0};
  k.K = (1 << xi_index(2, 3));
  k.v = mod.rep().hw_index;
  VermaVector v = mod.zero();
  v.add(k, Rational(1));
  Weight expect = add(add(add(mod.lambda(), weight_of_del(1)),
                          add(weight_of_del(4), weight_of_del(4))),
                      weight_of_xi(2, 3));
  CHECK(mod.weight_of(v) == expect);
  // Cartan equivariance: t_i acts by the weight coordinate
  for (int i = 1; i <= 4; ++i) {
    VermaVector img = mod.act(cartan_t(i), v);
    CHECK(img == v * Rational(expect[i - 1]));
  }
  CHECK_THROWS_AS(mod.weight_of(mod.zero()), CheckFailure);
}

TEST_CASE("bidegrees, filtration, quotient projection") {
  VermaModule mod({0, 0, 0, 1});
  VermaVector a = tensor(mod, {1, 0, 0, 0, 0}, {}, psi_basis(mod.rep())[3]);
  VermaVector b = mod.multiply_xi(1, 2, mod.multiply_xi(3, 4, mod.constant(1)));
  VermaVector v = a + b;
  CHECK(mod.bidegree_component(v, 1, 0) == a);
  CHECK(mod.bidegree_component(v, 0, 2) == b);
  CHECK(VermaModule::top_odd_level(v) == 2);
  CHECK(mod.project_to_quotient(v, 2).terms == b.terms);
  CHECK(mod.project_to_quotient(a, 1).is_zero());
  CHECK_THROWS_AS(mod.project_to_quotient(v, 1), CheckFailure);
  CHECK(mod.lift(mod.project_to_quotient(v, 2)) == b);
}

TEST_CASE("even action never raises the top odd level") {
  VermaModule mod({1, 0, 0, 0});
  auto l2 = l2_spanning();
  std::uniform_int_distribution<size_t> pick(0, l2.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    VermaVector v = random_vector(mod, 3, 4);
    if (v.is_zero()) continue;
    int top = VermaModule::top_odd_level(v);
    for (int reps = 0; reps < 3; ++reps) {
      VermaVector img = mod.act(l2[pick(rng)], v);
      if (!img.is_zero()) CHECK(VermaModule::top_odd_level(img) <= top);
    }
    VermaVector img0 = mod.act(el("x1*d2"), v);
    if (!img0.is_zero()) CHECK(VermaModule::top_odd_level(img0) <= top);
  }
}

TEST_CASE("quotient L2 action agrees with project after act") {
  VermaModule mod({0, 0, 0, 1});
  auto l2 = l2_spanning();
  std::uniform_int_distribution<size_t> pick(0, l2.size() - 1);
  std::uniform_int_distribution<int> ndist(0, 2);
  std::uniform_int_distribution<int> var(0, 4), vdist(0, mod.rep().dim - 1);
  auto random_level_key = [&](int n, int m) {
    PBWKey k;
    for (int t = 0; t < n; ++t) k.I[var(rng)] += 1;
    std::vector<int> bits{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(bits.begin(), bits.end(), rng);
    for (int t = 0; t < m; ++t) k.K |= (1 << bits[t]);
    k.v = vdist(rng);
    return k;
  };
  for (int m = 1; m <= 10; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      // random vector with top odd level exactly m
      VermaVector v = mod.zero();
      for (int t = 0; t < 3; ++t) v.add(random_level_key(ndist(rng), m), rat(1 + t));
      QuotientClass cls = mod.project_to_quotient(v, m);
      GradedElement y = l2[pick(rng)];
      QuotientClass direct = mod.quotient_act_L2(y, cls);
      QuotientClass via_act = mod.project_to_quotient(mod.act(y, v), m);
      CHECK(direct == via_act);
    }
  }
}

TEST_CASE("quotient action: unit coefficient dies, single straightening survives") {
  VermaModule mod({0, 0, 0, 0});
  GradedElement y = el("x1*x2*d3");
  // u = 1: [y, 1] = 0
  PBWKey unit;
  unit.K = (1 << xi_index(1, 2)) | (1 << xi_index(4, 5));
  QuotientClass cls{mod.lambda(), 2, {}};
  cls.add(unit, Rational(1));
  CHECK(mod.quotient_act_L2(y, cls).is_zero());
  // u = d3 xi^K: the single commutator [x1 x2 d3, d3] itself vanishes
  PBWKey k = unit;
  k.I = {0, 0, 1, 0, 0};
  QuotientClass cls2{mod.lambda(), 2, {}};
  cls2.add(k, Rational(1));
  CHECK(mod.quotient_act_L2(y, cls2).is_zero());
  CHECK(mod.project_to_quotient(mod.act(y, mod.lift(cls2)), 2).is_zero());
  // u = d1 xi13 xi45: [y, d1] = -x2 d3 rewrites xi13 into -xi12 in the wedge
  PBWKey k3;
  k3.I = {1, 0, 0, 0, 0};
  k3.K = (1 << xi_index(1, 3)) | (1 << xi_index(4, 5));
  QuotientClass cls3{mod.lambda(), 2, {}};
  cls3.add(k3, Rational(1));
  QuotientClass direct = mod.quotient_act_L2(y, cls3);
  QuotientClass expect{mod.lambda(), 2, {}};
  expect.add(unit, Rational(-1));
  CHECK(direct == expect);
  CHECK(direct == mod.project_to_quotient(mod.act(y, mod.lift(cls3)), 2));
}

TEST_CASE("VermaVector JSON round trip") {
  VermaModule mod({0, 0, 0, 1});
  VermaVector v = example_2_6_vector(mod) + random_vector(mod, 2, 3);
  nlohmann::json j = mod.to_json(v);
  CHECK(mod.from_json(j) == v);
  VermaVector simple = mod.multiply_xi(1, 2, mod.constant(2)) * rat(3, 2);
  nlohmann::json js = mod.to_json(simple);
  REQUIRE(js.size() == 1);
  CHECK(js[0]["c"] == "3/2");
  CHECK(js[0]["K"] == nlohmann::json::array({{1, 2}}));
  CHECK(js[0]["v"] == 2);
}

TEST_CASE("weight classes modulo the root lattice are constant per degree") {
  // wt(d_a) = -eps, wt(xi_ab) = 2 eps mod the root lattice, so every key of
  // degree p = 2n + m sits in class(lambda) + 2p - 5n = class(lambda) + 2p (mod 5).
  VermaModule mod({0, 0, 1, 0});
  auto cls = [](const Weight& w) {
    return ((w[0] + 2 * w[1] + 3 * w[2] + 4 * w[3]) % 5 + 5) % 5;
  };
  for (int p = 0; p <= 5; ++p) {
    for (const auto& k : mod.enumerate_basis(p)) {
      CHECK(cls(mod.weight_of_key(k)) == (cls(mod.lambda()) + 2 * p) % 5);
    }
  }
}
