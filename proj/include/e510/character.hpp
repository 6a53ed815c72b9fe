#pragma once

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "e510/rational.hpp"
#include "e510/weight.hpp"
#include "json.hpp"

namespace e510 {

// Finitely supported weight -> multiplicity map. No zero entries are stored.
using Character = std::unordered_map<Weight, long long, WeightHash>;

inline long long character_mass(const Character& c) {
  long long m = 0;
  for (const auto& [w, k] : c) m += k;
  return m;
}

inline void char_add(Character& c, const Weight& w, long long k) {
  if (k == 0) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, k);
  } else {
    it->second += k;
    if (it->second == 0) c.erase(it);
  }
}

// Pointwise product of formal characters = convolution of the weight maps.
inline Character char_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ka] : a)
    for (const auto& [wb, kb] : b) char_add(out, add(wa, wb), ka * kb);
  return out;
}

inline long long weyl_dim(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim: non-dominant weight");
  Eps t = to_eps(lambda);
  std::array<long, 5> l;
  for (int i = 0; i < 5; ++i) l[i] = t[i] + (4 - i);
  Integer num(1);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) num *= Integer(l[i] - l[j]);
  Integer den(288);  // 1!*2!*3!*4!
  check(num % den == 0, "weyl_dim: non-integral value");
  Integer d = num / den;
  check(d.fits_slong_p(), "weyl_dim: overflow");
  return d.get_si();
}

namespace detail {

// Dominant weights <= lambda, found by walking positive-root covers down from
// lambda. Covers in type A differ by a positive root, so this reaches all of
// them.
inline std::vector<Weight> dominant_weights_below(const Weight& lambda) {
  std::unordered_map<Weight, bool, WeightHash> seen;
  std::vector<Weight> order{lambda};
  seen[lambda] = true;
  for (size_t head = 0; head < order.size(); ++head) {
    Weight w = order[head];
    for (const Weight& alpha : positive_roots()) {
      Weight u = sub(w, alpha);
      if (is_dominant(u) && !seen.count(u)) {
        seen[u] = true;
        order.push_back(u);
      }
    }
  }
  std::sort(order.begin(), order.end(), [](const Weight& a, const Weight& b) {
    long la = level(a), lb = level(b);
    if (la != lb) return la > lb;
    return a > b;
  });
  return order;
}

}  // namespace detail

// Freudenthal's recursion for the dominant multiplicities, extended to the
// full support via Weyl-orbit invariance. Everything is exact integer
// arithmetic in the scaled form inner5.
inline Character compute_irr_character(const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("irr_character: non-dominant weight");
  const Weight rho{1, 1, 1, 1};
  const Eps lam_rho = to_eps(add(lambda, rho));
  const long norm_top = inner5(lam_rho, lam_rho);

  std::vector<Weight> doms = detail::dominant_weights_below(lambda);
  std::unordered_map<Weight, long long, WeightHash> mult;
  mult[lambda] = 1;

  for (size_t k = 1; k < doms.size(); ++k) {
    const Weight& mu = doms[k];
    Integer num(0);
    for (const Weight& alpha : positive_roots()) {
      Eps ea = to_eps(alpha);
      for (int step = 1;; ++step) {
        Weight nu = add(mu, {alpha[0] * step, alpha[1] * step, alpha[2] * step,
                             alpha[3] * step});
        auto it = mult.find(dominant_rep(nu));
        if (it == mult.end()) break;  // weight strings are intervals
        Eps en = to_eps(nu);
        num += Integer(static_cast<long>(it->second)) * Integer(inner5(en, ea));
      }
    }
    const Eps mu_rho = to_eps(add(mu, rho));
    const long den = norm_top - inner5(mu_rho, mu_rho);
    check(den > 0, "Freudenthal: non-positive denominator");
    Integer m2 = 2 * num;
    check(m2 % Integer(den) == 0, "Freudenthal: non-integral multiplicity");
    Integer m = m2 / den;
    check(m.fits_slong_p() && m.get_si() >= 0, "Freudenthal: bad multiplicity");
    if (m != 0) mult[mu] = m.get_si();
  }

  Character full;
  for (const auto& [mu, m] : mult) {
    Eps t = to_eps(mu);
    std::sort(t.begin(), t.end());
    do {
      char_add(full, from_eps(t), m);
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return full;
}

inline const Character& irr_character(const Weight& lambda) {
  static std::mutex mu;
  static std::unordered_map<Weight, Character, WeightHash> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  Character c = compute_irr_character(lambda);
  return cache.emplace(lambda, std::move(c)).first->second;
}

// Multiset of (dominant weight, multiplicity), kept sorted lexicographically.
struct Decomposition {
  std::vector<std::pair<Weight, long long>> parts;

  long long multiplicity(const Weight& w) const {
    for (const auto& [u, m] : parts)
      if (u == w) return m;
    return 0;
  }
  long long dimension() const {
    long long d = 0;
    for (const auto& [w, m] : parts) d += m * weyl_dim(w);
    return d;
  }
  std::vector<Weight> support() const {
    std::vector<Weight> s;
    s.reserve(parts.size());
    for (const auto& [w, m] : parts) s.push_back(w);
    return s;
  }
  bool operator==(const Decomposition&) const = default;
};

inline bool contains(const Decomposition& d, const Weight& lambda) {
  if (!is_dominant(lambda)) throw std::invalid_argument("contains: non-dominant weight");
  return d.multiplicity(lambda) > 0;
}

// Greedy highest-weight peeling: repeatedly strip mult * V(top) where top is
// the level-maximal weight in the remaining support (ties: lexicographically
// greatest). Throws if the input is not a genuine character.
inline Decomposition decompose_character(Character c) {
  Decomposition d;
  while (!c.empty()) {
    Weight top = c.begin()->first;
    long best = level(top);
    for (const auto& [w, m] : c) {
      long l = level(w);
      if (l > best || (l == best && w > top)) {
        top = w;
        best = l;
      }
    }
    long long m = c.at(top);
    if (m < 0 || !is_dominant(top))
      throw CheckFailure("decompose_character: input is not a genuine character");
    for (const auto& [w, k] : irr_character(top)) {
      auto it = c.find(w);
      long long next = (it == c.end() ? 0 : it->second) - m * k;
      if (next < 0)
        throw CheckFailure("decompose_character: negative multiplicity while peeling");
      if (next == 0) {
        if (it != c.end()) c.erase(it);
      } else {
        c[w] = next;
      }
    }
    d.parts.push_back({top, m});
  }
  std::sort(d.parts.begin(), d.parts.end());
  return d;
}

inline Decomposition tensor_decompose(const Weight& lambda, const Weight& mu) {
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw std::invalid_argument("tensor_decompose: non-dominant weight");
  static std::mutex mtx;
  static std::map<std::pair<Weight, Weight>, Decomposition> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(lambda, mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Decomposition d = decompose_character(char_product(irr_character(lambda), irr_character(mu)));
  cache.emplace(key, d);
  return d;
}

// Elementary-symmetric layers of a character: E_k(c) is the character of the
// k-th exterior power. Computed by the standard one-item-at-a-time DP over
// the expanded weight multiset.
inline std::vector<Character> exterior_layers(const Character& c, int kmax) {
  std::vector<Character> layers(kmax + 1);
  layers[0][kTrivial] = 1;
  int processed = 0;
  for (const auto& [w, m] : c) {
    for (long long rep = 0; rep < m; ++rep) {
      ++processed;
      for (int j = std::min(kmax, processed); j >= 1; --j) {
        for (const auto& [u, k] : layers[j - 1]) char_add(layers[j], add(u, w), k);
      }
    }
  }
  return layers;
}

inline Decomposition exterior_power_decompose(const Weight& lambda, int k) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("exterior_power_decompose: non-dominant weight");
  long long dim = weyl_dim(lambda);
  if (k < 0 || k > dim)
    throw std::invalid_argument("exterior_power_decompose: k out of range");
  static std::mutex mtx;
  static std::map<std::pair<Weight, int>, Decomposition> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(lambda, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Character layer = exterior_layers(irr_character(lambda), k)[k];
  Decomposition d = decompose_character(std::move(layer));
  cache.emplace(key, d);
  return d;
}

inline nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, m] : d.parts)
    arr.push_back({{"weight", {w[0], w[1], w[2], w[3]}}, {"mult", m}});
  return arr;
}

}  // namespace e510
