#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace e510 {

// Dominant integral weights of sl5 in fundamental-weight coordinates
// [a1,a2,a3,a4]; the same quadruples serve as general integral weights.
using Weight = std::array<int, 4>;

// epsilon coordinates: a weight is a 5-tuple modulo the diagonal; we fix the
// representative with last entry 0 when producing one, but all consumers only
// use shift-invariant expressions.
using Eps = std::array<long, 5>;

inline Eps to_eps(const Weight& w) {
  return {static_cast<long>(w[0]) + w[1] + w[2] + w[3],
          static_cast<long>(w[1]) + w[2] + w[3],
          static_cast<long>(w[2]) + w[3],
          static_cast<long>(w[3]),
          0};
}

inline Weight from_eps(const Eps& t) {
  return {static_cast<int>(t[0] - t[1]), static_cast<int>(t[1] - t[2]),
          static_cast<int>(t[2] - t[3]), static_cast<int>(t[3] - t[4])};
}

inline bool is_dominant(const Weight& w) {
  return w[0] >= 0 && w[1] >= 0 && w[2] >= 0 && w[3] >= 0;
}

inline Weight add(const Weight& a, const Weight& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Weight sub(const Weight& a, const Weight& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Weight dual_weight(const Weight& w) { return {w[3], w[2], w[1], w[0]}; }

// Strictly positive on every positive root; used as the peeling order.
// Equals <w, 2*rho-ish> up to normalization.
inline long level(const Weight& w) {
  return 2L * w[0] + 3L * w[1] + 3L * w[2] + 2L * w[3];
}

// 5x the W-invariant form, in integers; shift-invariant in both arguments.
inline long inner5(const Eps& s, const Eps& t) {
  long dot = 0, ss = 0, st = 0;
  for (int i = 0; i < 5; ++i) {
    dot += s[i] * t[i];
    ss += s[i];
    st += t[i];
  }
  return 5 * dot - ss * st;
}

inline Eps eps_add(const Eps& a, const Eps& b) {
  Eps r;
  for (int i = 0; i < 5; ++i) r[i] = a[i] + b[i];
  return r;
}

// Positive roots eps_i - eps_j, i < j, as fundamental quadruples.
inline const std::array<Weight, 10>& positive_roots() {
  static const std::array<Weight, 10> roots = [] {
    std::array<Weight, 10> r{};
    int n = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        Eps t{};
        t[i] = 1;
        t[j] = -1;
        r[n++] = from_eps(t);
      }
    return r;
  }();
  return roots;
}

// Weight of the coordinate function x_a (a in 1..5); del_a carries the
// negative, xi_ab the sum of two of these.
inline Weight weight_of_x(int a) {
  Eps t{};
  t[a - 1] = 1;
  return from_eps(t);
}

inline Weight weight_of_del(int a) {
  Eps t{};
  t[a - 1] = -1;
  return from_eps(t);
}

inline Weight weight_of_xi(int a, int b) { return add(weight_of_x(a), weight_of_x(b)); }

// Dominant representative under the Weyl group (sort eps descending).
inline Weight dominant_rep(const Weight& w) {
  Eps t = to_eps(w);
  std::array<long, 5> s = t;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (s[j] > s[i]) std::swap(s[i], s[j]);
  return from_eps(s);
}

inline std::string to_string(const Weight& w) {
  return "[" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + "," + std::to_string(w[3]) + "]";
}

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int a : w) {
      h ^= static_cast<uint64_t>(a + (1 << 20));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

inline const Weight kTrivial{0, 0, 0, 0};
inline const std::array<Weight, 5> kOmega{Weight{0, 0, 0, 0}, Weight{1, 0, 0, 0},
                                          Weight{0, 1, 0, 0}, Weight{0, 0, 1, 0},
                                          Weight{0, 0, 0, 1}};

// Parses "a,b,c,d".
inline Weight weight_from_string(const std::string& s) {
  Weight w{};
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    size_t next = s.find(',', pos);
    bool last = (i == 3);
    if ((next == std::string::npos) != last)
      throw std::invalid_argument("weight must be four comma-separated integers: " + s);
    w[i] = std::stoi(s.substr(pos, next == std::string::npos ? next : next - pos));
    pos = next + 1;
  }
  return w;
}

}  // namespace e510
