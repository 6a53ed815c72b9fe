// Acceptance gate: every numbered criterion below runs exactly (no floating
// point anywhere) and prints one PASS/FAIL line.  Nonzero exit on any
// failure.
#include <chrono>
#include <iostream>
#include <sstream>

#include "e510/bound.hpp"
#include "e510/verify.hpp"

using namespace e510;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title, double time_limit_s = 0)
      : number_(number), title_(std::move(title)), limit_(time_limit_s),
        start_(std::chrono::steady_clock::now()) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (details_.size() < 6) details_.push_back(what);
    }
  }

  ~Criterion() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (limit_ > 0 && secs > limit_) {
      ok_ = false;
      details_.push_back("time limit exceeded");
    }
    std::ostringstream line;
    line << "criterion " << number_ << " (" << title_ << "): " << (ok_ ? "PASS" : "FAIL");
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " [" << secs << "s]";
    std::cout << line.str() << "\n";
    for (const auto& d : details_) std::cout << "    " << d << "\n";
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  double limit_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_;
};

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
  for (int i = 2; i <= 5; ++i)
    for (const auto& [idx, c] : psi[i].entries()) {
      PBWKey k;
      k.K = (1 << xi_index(1, i));
      k.v = idx;
      v.add(k, c);
    }
  return v;
}

bool in_verma_span(const VermaVector& v, const std::vector<VermaVector>& gens) {
  std::map<PBWKey, int> coords;
  auto scan = [&coords](const VermaVector& u) {
    for (const auto& [k, c] : u.terms) coords.try_emplace(k, 0);
  };
  scan(v);
  for (const auto& g : gens) scan(g);
  int n = 0;
  for (auto& [k, idx] : coords) idx = n++;
  auto vec = [&](const VermaVector& u) {
    SparseVector s(n);
    for (const auto& [k, c] : u.terms) s.set(coords.at(k), c);
    return s;
  };
  SpanBuilder sb(n);
  for (const auto& g : gens) sb.add(vec(g));
  return sb.contains(vec(v));
}

long long binom(int n, int k) {
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int main() {
  {
    Criterion c(1, "table reproduction, 20 cells / 82 entries", 120);
    int entries = 0;
    for (int j = 6; j <= 9; ++j)
      for (int i = 0; i <= 4; ++i) {
        auto support = sorted(table_cell(j, i).support());
        auto expected = sorted(published_table_cell(j, i));
        c.expect(support == expected,
                 "cell j=" + std::to_string(j) + " i=" + std::to_string(i) + " differs");
        entries += static_cast<int>(expected.size());
      }
    c.expect(entries == 82, "expected 82 published entries");
  }

  {
    Criterion c(2, "Lambda^10 column collapses to V(omega_i)");
    for (int i = 0; i <= 4; ++i) {
      Decomposition d = table_cell(10, i);
      c.expect(d.parts.size() == 1 && d.parts[0].first == kOmega[i] && d.parts[0].second == 1,
               "Lambda^10 x omega_" + std::to_string(i));
    }
  }

  {
    Criterion c(3, "dimension audits, exact");
    for (int j = 6; j <= 10; ++j)
      for (int i = 0; i <= 4; ++i)
        c.expect(table_cell(j, i).dimension() == binom(10, j) * weyl_dim(kOmega[i]),
                 "dimension audit j=" + std::to_string(j) + " i=" + std::to_string(i));
  }

  {
    Criterion c(4, "bound reproduction: degrees 14/13/12/10 and the global bound", 60);
    c.expect(candidates(14).candidates.empty(), "candidates(14) nonempty");
    c.expect(candidates(13).candidates.empty(), "candidates(13) nonempty");
    auto c12 = candidates(12).candidates;
    c.expect(c12.size() == 1 && c12[0] == Weight{0, 0, 1, 0}, "candidates(12)");
    c.expect(sorted(candidates(10).candidates) == sorted(published_candidates(10)),
             "candidates(10) differs from the 16-weight list");
    c.expect(degree_bound_report().global_bound == 12, "global bound is not 12");
  }

  {
    Criterion c(5, "degree-11 list with the documented discrepancy flag");
    auto mech = sorted(candidates(11).candidates);
    for (const Weight& w : published_candidates(11))
      c.expect(std::find(mech.begin(), mech.end(), w) != mech.end(),
               "missing published weight " + to_string(w));
    auto extra = degree11_discrepancy();
    for (const Weight& w : extra)
      c.expect(w == kTrivial, "unexpected surplus weight " + to_string(w));
    c.expect(mech.size() == published_candidates(11).size() + extra.size(),
             "surplus bookkeeping is inconsistent");
    c.expect(!extra.empty(), "discrepancy flag not emitted");
  }

  {
    Criterion c(6, "Example 2.6 singular vector", 30);
    VermaModule mod({0, 0, 0, 1});
    VermaVector v = example_2_6_vector(mod);
    c.expect(is_singular(mod, v), "sum xi_1i (x) d_i is not L1-singular");
    SingularReport rep = find_singular(mod, 1);
    c.expect(in_verma_span(v, rep.basis), "vector missing from the degree-1 kernel");
    bool weight_ok = false;
    try {
      weight_ok = (mod.weight_of(v) == Weight{1, 0, 0, 0});
    } catch (const CheckFailure&) {
    }
    c.expect(weight_ok, "vector is not a weight vector of weight [1,0,0,0]");
  }

  {
    Criterion c(7, "structural suites: super-Jacobi, odd-odd symmetry, representation property");
    VerifyResult alg = verify_e510();
    c.expect(alg.ok(), alg.failures.empty() ? "" : alg.failures.front());
    VerifyResult vm = verify_verma(20260810, 50);
    c.expect(vm.ok(), vm.failures.empty() ? "" : vm.failures.front());
  }

  {
    Criterion c(8, "xi times a singular vector stays S(5)-singular");
    for (const Weight& lambda :
         {Weight{0, 0, 0, 0}, Weight{1, 0, 0, 0}, Weight{0, 1, 0, 0}, Weight{0, 0, 1, 0},
          Weight{0, 0, 0, 1}}) {
      VermaModule mod(lambda);
      for (int p = 0; p <= 2; ++p) {
        SingularReport rep = find_singular(mod, p);
        for (const auto& v : rep.basis) {
          c.expect(is_S5_singular(mod, v),
                   "found vector not S(5)-singular at " + to_string(lambda));
          for (int pi = 0; pi < 10; ++pi) {
            auto [a, b] = xi_pairs()[pi];
            VermaVector xv = mod.multiply_xi(a, b, v);
            if (xv.is_zero()) continue;
            c.expect(is_S5_singular(mod, xv), "xi * v not S(5)-singular at " +
                                                  to_string(lambda) + " degree " +
                                                  std::to_string(p));
          }
        }
      }
    }
  }

  {
    Criterion c(9, "quotient action consistency, 20 samples per odd level");
    VerifyResult q = verify_quotient(20260811, 20);
    c.expect(q.ok(), q.failures.empty() ? "" : q.failures.front());
  }

  {
    Criterion c(10, "pseudoalgebra suite", 60);
    VerifyResult ps = verify_pseudo(20260812, 3, 20);
    c.expect(ps.ok(), ps.failures.empty() ? "" : ps.failures.front());
  }

  if (g_failures == 0) {
    std::cout << "ACCEPTANCE: all 10 criteria passed\n";
    return 0;
  }
  std::cout << "ACCEPTANCE: " << g_failures << " criteria FAILED\n";
  return 1;
}
