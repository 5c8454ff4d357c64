#include "galcov/properties.hpp"

#include <random>

#include "galcov/braid.hpp"
#include "galcov/fpgroup.hpp"
#include "galcov/smith.hpp"

namespace galcov {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_braid(Rng& rng, int p, int len) {
  BraidWord b;
  for (int i = 0; i < len; ++i) b.push_back(uniform(rng, 1, p - 1) * (uniform(rng, 0, 1) ? 1 : -1));
  return b;
}

PropertyResult braid_relations(Rng& rng, int trials) {
  PropertyResult r{"Artin action: braid relations and inverse cancellation", trials, true, {}};
  for (int t = 0; t < trials && r.passed; ++t) {
    const int p = uniform(rng, 3, 7);
    const int i = uniform(rng, 1, p - 2);
    const BraidWord ctx = random_braid(rng, p, uniform(rng, 0, 6));
    auto wrap = [&](const BraidWord& core) { return braid_concat(braid_concat(ctx, core), braid_inverse(ctx)); };
    if (!braid_equal(wrap({i, i + 1, i}), wrap({i + 1, i, i + 1}), p)) {
      r.passed = false;
      r.detail = "s" + std::to_string(i) + " s" + std::to_string(i + 1) + " s" + std::to_string(i) + " on " +
                 std::to_string(p) + " strands";
    }
    const int j = uniform(rng, 1, p - 1);
    const int k = uniform(rng, 1, p - 1);
    if (std::abs(j - k) >= 2 && !braid_equal({j, k}, {k, j}, p)) {
      r.passed = false;
      r.detail = "far commutation s" + std::to_string(j) + " s" + std::to_string(k);
    }
    const BraidWord b = random_braid(rng, p, uniform(rng, 1, 12));
    BraidWord both = b;
    const BraidWord inv = braid_inverse(b);
    both.insert(both.end(), inv.begin(), inv.end());
    if (artin_images(both, p) != artin_images({}, p)) {
      r.passed = false;
      r.detail = "b b^-1 acts nontrivially";
    }
  }
  return r;
}

PropertyResult half_twist_transpositions(Rng& rng, int trials) {
  PropertyResult r{"half twists swap their endpoints", trials, true, {}};
  for (int t = 0; t < trials && r.passed; ++t) {
    const int p = uniform(rng, 2, 9);
    const Frame f = Frame::plain(p);
    int a = uniform(rng, 0, p - 1);
    int b = uniform(rng, 0, p - 2);
    if (b >= a) ++b;
    Path path{f.labels[static_cast<std::size_t>(a)], f.labels[static_cast<std::size_t>(b)], {}};
    for (int c = 0; c < std::abs(a - b) - 1; ++c) path.passages.push_back(uniform(rng, 0, 1) ? Side::Above : Side::Below);
    const std::vector<int> perm = braid_permutation(compile_halftwist(path, f), p);
    const Perm want = transposition(p, a, b);
    if (perm != want) {
      r.passed = false;
      r.detail = "path " + path.from + "-" + path.to + " on " + std::to_string(p) + " punctures";
    }
  }
  return r;
}

PropertyResult smith_chain(Rng& rng, int trials) {
  PropertyResult r{"Smith form: divisibility chain and |det|", trials, true, {}};
  for (int t = 0; t < trials && r.passed; ++t) {
    IntMatrix<BigInt> m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = uniform(rng, -5, 5);
    // Cofactor expansion along the first row.
    BigInt det = 0;
    for (int c = 0; c < 4; ++c) {
      int cols[3];
      int k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != c) cols[k++] = j;
      const BigInt minor = m(1, cols[0]) * (m(2, cols[1]) * m(3, cols[2]) - m(2, cols[2]) * m(3, cols[1])) -
                           m(1, cols[1]) * (m(2, cols[0]) * m(3, cols[2]) - m(2, cols[2]) * m(3, cols[0])) +
                           m(1, cols[2]) * (m(2, cols[0]) * m(3, cols[1]) - m(2, cols[1]) * m(3, cols[0]));
      det += (c % 2 == 0 ? 1 : -1) * m(0, c) * minor;
    }
    const SmithForm<BigInt> s = smith_normal_form(m);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) {
      if (s.invariants[i] <= 0 || (i + 1 < s.invariants.size() && s.invariants[i + 1] % s.invariants[i] != 0)) {
        r.passed = false;
        r.detail = "broken divisibility chain";
      }
    }
    BigInt prod = 1;
    for (const BigInt& d : s.invariants) prod *= d;
    const BigInt adet = det < 0 ? BigInt(-det) : det;
    if ((s.rank == 4 && prod != adet) || (s.rank < 4 && det != 0)) {
      r.passed = false;
      r.detail = "product of invariants differs from |det|";
    }
  }
  return r;
}

PropertyResult closed_tables(Rng& rng, int trials) {
  PropertyResult r{"closed coset tables satisfy every relator", trials, true, {}};
  for (int t = 0; t < trials && r.passed; ++t) {
    FPGroup g;
    g.gens = {"a", "b"};
    const int m = uniform(rng, 2, 5);
    const int k = uniform(rng, 2, 5);
    const int l = uniform(rng, 2, 5);
    g.relators = {power({1}, m), power({2}, k), power({1, 2}, l)};
    if (uniform(rng, 0, 1)) g.relators.push_back(power({1, 2, -1, -2}, uniform(rng, 1, 3)));
    const CosetTable tab = todd_coxeter(g, {}, 20000);
    if (!tab.closed) continue;
    for (int c = 0; c < tab.cosets && r.passed; ++c)
      for (const Word& w : g.relators)
        if (tab.trace(c, w) != c) {
          r.passed = false;
          r.detail = "relator fails at coset " + std::to_string(c);
        }
  }
  return r;
}

}  // namespace

std::vector<PropertyResult> run_properties(std::uint64_t seed, int trials) {
  Rng rng(seed);
  return {braid_relations(rng, trials), half_twist_transpositions(rng, trials), smith_chain(rng, trials),
          closed_tables(rng, trials)};
}

}  // namespace galcov
