#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "galcov/word.hpp"

namespace galcov {

/// Permutation of {0..n-1} acting on the right: point i goes to p[i], and
/// (p * q)[i] = q[p[i]], so word images multiply left to right.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

inline Perm transposition(int n, int a, int b) {
  Perm p = identity_perm(n);
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

inline Perm perm_mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline Perm perm_inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

/// Image of a word under generator images.
inline Perm perm_eval(const Word& w, const std::vector<Perm>& gens, int degree) {
  Perm r = identity_perm(degree);
  for (Letter l : w) {
    const Perm& g = gens.at(static_cast<std::size_t>(letter_gen(l)));
    r = perm_mul(r, l > 0 ? g : perm_inv(g));
  }
  return r;
}

/// Elements of the group generated by `gens`, by breadth-first closure.
/// Returns nullopt once more than `cap` elements have been found.
inline std::optional<std::vector<Perm>> perm_group_elements(const std::vector<Perm>& gens, int degree,
                                                            std::size_t cap) {
  std::set<Perm> seen;
  std::vector<Perm> order;
  Perm id = identity_perm(degree);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = perm_mul(order[head], g);
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap) return std::nullopt;
      }
    }
  }
  return order;
}

/// Cycle notation with 1-based points, e.g. "(1,2)(3,4)"; "()" for identity.
inline std::string perm_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace galcov
