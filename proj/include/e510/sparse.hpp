#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "e510/rational.hpp"

namespace e510 {

// Sparse vector over Q. Entries are kept sorted by index and never hold zeros.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }

  void set(int i, const Rational& v) {
    if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector::set index");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const auto& e, int j) { return e.first < j; });
    if (it != entries_.end() && it->first == i) {
      if (v == 0)
        entries_.erase(it);
      else
        it->second = v;
    } else if (v != 0) {
      entries_.insert(it, {i, v});
    }
  }

  Rational get(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const auto& e, int j) { return e.first < j; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Rational(0);
  }

  // Leading (smallest-index) entry; vector must be nonzero.
  std::pair<int, Rational> leading() const { return entries_.front(); }

  // this += c * other
  void axpy(const Rational& c, const SparseVector& other) {
    if (c == 0) return;
    std::vector<std::pair<int, Rational>> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == entries_.end() || b->first < a->first) {
        Rational v = c * b->second;
        if (v != 0) out.push_back({b->first, v});
        ++b;
      } else {
        Rational v = a->second + c * b->second;
        if (v != 0) out.push_back({a->first, v});
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const Rational& c) {
    if (c == 0) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second *= c;
  }

  bool operator==(const SparseVector& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

 private:
  int dim_ = 0;
  std::vector<std::pair<int, Rational>> entries_;
};

// Row-major sparse matrix over Q.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : cols_(cols), rows_(rows, SparseVector(cols)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  SparseVector& row(int r) { return rows_[r]; }
  const SparseVector& row(int r) const { return rows_[r]; }
  void set(int r, int c, const Rational& v) { rows_[r].set(c, v); }
  Rational get(int r, int c) const { return rows_[r].get(c); }

  void append_row(const SparseVector& v) {
    if (cols_ == 0 && rows_.empty()) cols_ = v.dim();
    if (v.dim() != cols_) throw std::invalid_argument("append_row: dimension mismatch");
    rows_.push_back(v);
  }

  SparseVector apply(const SparseVector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    SparseVector out(rows());
    for (int r = 0; r < rows(); ++r) {
      Rational s(0);
      for (const auto& [c, v] : rows_[r].entries()) s += v * x.get(c);
      if (s != 0) out.set(r, s);
    }
    return out;
  }

 private:
  int cols_ = 0;
  std::vector<SparseVector> rows_;
};

namespace detail {

// Integer row used inside the fraction-free elimination.
using IntRow = std::vector<std::pair<int, Integer>>;

inline IntRow to_int_row(const SparseVector& v) {
  Integer l(1);
  for (const auto& [i, q] : v.entries()) l = lcm(l, q.get_den());
  IntRow row;
  row.reserve(v.entries().size());
  Integer g(0);
  for (const auto& [i, q] : v.entries()) {
    Integer n = q.get_num() * (l / q.get_den());
    g = gcd(g, n);
    row.push_back({i, n});
  }
  if (!row.empty()) {
    if (sgn(row.front().second) < 0) g = -g;
    for (auto& [i, n] : row) n /= g;
  }
  return row;
}

// row := (p*row - a*pivot) / content, all over Z.  p is pivot's leading value,
// a is row's value in pivot's leading column.
inline IntRow eliminate(const IntRow& row, const Integer& a, const IntRow& piv,
                        const Integer& p) {
  IntRow out;
  out.reserve(row.size() + piv.size());
  auto x = row.begin();
  auto y = piv.begin();
  Integer g(0);
  auto push = [&](int i, Integer v) {
    if (sgn(v) != 0) {
      g = gcd(g, v);
      out.push_back({i, std::move(v)});
    }
  };
  while (x != row.end() || y != piv.end()) {
    if (y == piv.end() || (x != row.end() && x->first < y->first)) {
      push(x->first, p * x->second);
      ++x;
    } else if (x == row.end() || y->first < x->first) {
      push(y->first, -a * y->second);
      ++y;
    } else {
      push(x->first, p * x->second - a * y->second);
      ++x;
      ++y;
    }
  }
  if (!out.empty()) {
    if (sgn(out.front().second) < 0) g = -g;
    for (auto& [i, n] : out) n /= g;
  }
  return out;
}

}  // namespace detail

// Reduced row echelon form over Q with the pivot columns, computed by
// fraction-free elimination on integer-scaled rows (content stripped after
// every update) followed by one rational normalization pass.
// Pivot rule: leftmost column first, earliest remaining row wins.
struct Echelon {
  int cols = 0;
  std::vector<SparseVector> rows;  // leading entry 1, pivot columns cleared elsewhere
  std::vector<int> pivot_cols;
};

inline Echelon rref(const SparseMatrix& m) {
  // Incremental row-space echelon: each input row reduces against the rows
  // kept so far (one per pivot column) and is dropped as soon as it hits
  // zero, so the working set never exceeds the column count.  The final
  // reduced form is the canonical RREF, independent of this ordering.
  std::map<int, detail::IntRow> by_pivot;
  for (int r = 0; r < m.rows(); ++r) {
    detail::IntRow row = detail::to_int_row(m.row(r));
    while (!row.empty()) {
      auto it = by_pivot.find(row.front().first);
      if (it == by_pivot.end()) {
        by_pivot.emplace(row.front().first, std::move(row));
        break;
      }
      row = detail::eliminate(row, row.front().second, it->second, it->second.front().second);
    }
  }

  Echelon e;
  e.cols = m.cols();
  e.rows.reserve(by_pivot.size());
  for (const auto& [pc, row] : by_pivot) {
    SparseVector v(m.cols());
    Rational lead(row.front().second);
    for (const auto& [i, n] : row) v.set(i, Rational(n) / lead);
    e.pivot_cols.push_back(pc);
    e.rows.push_back(std::move(v));
  }
  // Back-substitution: clear pivot columns above each pivot.
  for (int k = static_cast<int>(e.rows.size()) - 1; k >= 0; --k) {
    for (int j = 0; j < k; ++j) {
      Rational c = e.rows[j].get(e.pivot_cols[k]);
      if (c != 0) e.rows[j].axpy(-c, e.rows[k]);
    }
  }
  return e;
}

inline int rank(const SparseMatrix& m) { return static_cast<int>(rref(m).rows.size()); }

// Kernel basis from the RREF: one vector per free column f, with v[f] = 1 and
// v[pivot_k] = -R[k][f].  Deterministic and itself in reduced echelon shape.
inline std::vector<SparseVector> nullspace(const SparseMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<SparseVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVector v(m.cols());
    v.set(f, Rational(1));
    for (size_t k = 0; k < e.rows.size(); ++k) {
      Rational c = e.rows[k].get(f);
      if (c != 0) v.set(e.pivot_cols[k], -c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental echelon set, for span membership and rank-building.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector>& rows() const { return rows_; }

  // Reduces v against the current echelon set; returns the remainder.
  SparseVector reduce(SparseVector v) const {
    if (v.dim() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
    while (!v.empty()) {
      auto [lead, val] = v.leading();
      auto it = pivot_row_.find(lead);
      if (it == pivot_row_.end()) break;
      v.axpy(-val, rows_[it->second]);
    }
    return v;
  }

  // Adds v to the span; returns true if the rank grew.
  bool add(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Rational inv = 1 / r.leading().second;
    r.scale(inv);
    pivot_row_[r.leading().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

 private:
  int dim_;
  std::vector<SparseVector> rows_;
  std::map<int, int> pivot_row_;
};

inline bool in_span(const SparseVector& v, const std::vector<SparseVector>& basis) {
  if (!basis.empty()) {
    for (const auto& b : basis)
      if (b.dim() != v.dim()) throw std::invalid_argument("in_span: dimension mismatch");
  }
  SpanBuilder sb(v.dim());
  for (const auto& b : basis) sb.add(b);
  return sb.contains(v);
}

}  // namespace e510
