#pragma once

// Independent reference implementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "galcov/fpgroup.hpp"
#include "galcov/perm.hpp"
#include "galcov/smith.hpp"

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

// Smith invariants by plain Euclidean row and column reduction: pivot on the
// first nonzero entry, reduce its row and column by division with remainder,
// repeat until the pivot divides everything below and to the right.
inline std::vector<long long> naive_smith(Mat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long long> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long long q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(a[t][t] < 0 ? -a[t][t] : a[t][t]);
  }
  return diag;
}

// Library Smith form of the same matrix, as machine integers.
inline std::vector<long long> library_smith(const Mat& m) {
  galcov::IntMatrix<galcov::BigInt> a(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m[i][j];
  const galcov::SmithForm<galcov::BigInt> s = galcov::smith_normal_form(a);
  std::vector<long long> out;
  for (const galcov::BigInt& d : s.invariants) out.push_back(static_cast<long long>(d));
  return out;
}

// A finite permutation group with its multiplication table and a complete
// presentation read off the Cayley graph.
struct TableGroup {
  std::vector<galcov::Perm> gens;
  std::vector<galcov::Perm> elements;    // elements[0] is the identity
  std::vector<std::vector<int>> right;   // right[e][g] = index of elements[e] * gens[g]
  std::vector<galcov::Word> words;       // spanning-tree word of each element
  galcov::FPGroup presentation;
};

inline TableGroup build_table(const std::vector<galcov::Perm>& gens, int degree) {
  TableGroup t;
  t.gens = gens;
  std::map<galcov::Perm, int> index;
  t.elements.push_back(galcov::identity_perm(degree));
  t.words.emplace_back();
  index[t.elements[0]] = 0;
  for (std::size_t head = 0; head < t.elements.size(); ++head) {
    std::vector<int> row;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const galcov::Perm next = galcov::perm_mul(t.elements[head], gens[g]);
      auto [it, fresh] = index.emplace(next, static_cast<int>(t.elements.size()));
      if (fresh) {
        t.elements.push_back(next);
        galcov::Word w = t.words[head];
        w.push_back(galcov::gen_letter(static_cast<int>(g)));
        t.words.push_back(std::move(w));
      }
      row.push_back(it->second);
    }
    t.right.push_back(std::move(row));
  }
  for (std::size_t g = 0; g < gens.size(); ++g) t.presentation.gens.push_back("x" + std::to_string(g + 1));
  for (std::size_t e = 0; e < t.elements.size(); ++e)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      galcov::Word r = t.words[e];
      r.push_back(galcov::gen_letter(static_cast<int>(g)));
      r = galcov::free_reduce(galcov::concat(r, galcov::inverse(t.words[static_cast<std::size_t>(t.right[e][g])])));
      if (!r.empty()) t.presentation.relators.push_back(r);
    }
  return t;
}

// Random permutation group of order at most max_order on up to 6 points.
inline TableGroup random_table_group(std::mt19937_64& rng, std::size_t max_order) {
  for (;;) {
    const int degree = static_cast<int>(rng() % 4) + 3;
    const int ngens = static_cast<int>(rng() % 2) + 1;
    std::vector<galcov::Perm> gens;
    for (int g = 0; g < ngens; ++g) {
      galcov::Perm p = galcov::identity_perm(degree);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const auto elts = galcov::perm_group_elements(gens, degree, max_order);
    if (elts) return build_table(gens, degree);
  }
}

// Shuffles relators and appends a random consequence, leaving the group unchanged.
inline galcov::FPGroup scramble(galcov::FPGroup g, std::mt19937_64& rng) {
  std::shuffle(g.relators.begin(), g.relators.end(), rng);
  if (g.relators.empty()) return g;
  galcov::Word extra;
  for (int k = 0; k < 2; ++k) {
    const galcov::Word& r = g.relators[rng() % g.relators.size()];
    galcov::Word c;
    for (int i = 0; i < 3; ++i)
      c.push_back(galcov::gen_letter(static_cast<int>(rng() % g.gens.size()), rng() % 2 ? 1 : -1));
    extra = galcov::concat(extra, galcov::conjugate(rng() % 2 ? r : galcov::inverse(r), c));
  }
  extra = galcov::free_reduce(extra);
  if (!extra.empty()) g.relators.push_back(extra);
  return g;
}

// True when the closed coset table over the trivial subgroup is the right
// regular action described by the multiplication table.
inline bool table_matches(const galcov::CosetTable& ct, const TableGroup& t) {
  if (!ct.closed || static_cast<std::size_t>(ct.cosets) != t.elements.size()) return false;
  std::vector<int> elem(static_cast<std::size_t>(ct.cosets), -1);
  std::vector<int> queue = {0};
  elem[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int c = queue[h];
    for (std::size_t g = 0; g < t.gens.size(); ++g) {
      const int d = ct.act(c, galcov::gen_letter(static_cast<int>(g)));
      const int want = t.right[static_cast<std::size_t>(elem[static_cast<std::size_t>(c)])][g];
      if (elem[static_cast<std::size_t>(d)] < 0) {
        elem[static_cast<std::size_t>(d)] = want;
        queue.push_back(d);
      } else if (elem[static_cast<std::size_t>(d)] != want) {
        return false;
      }
    }
  }
  if (queue.size() != t.elements.size()) return false;
  std::sort(elem.begin(), elem.end());
  return std::adjacent_find(elem.begin(), elem.end()) == elem.end();
}

}  // namespace oracle
