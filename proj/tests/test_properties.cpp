#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "galcov/catalog.hpp"
#include "galcov/properties.hpp"
#include "oracles.hpp"
#include "seed.hpp"

using namespace galcov;

namespace {

constexpr int kTrials = 200;

std::vector<std::pair<int, std::size_t>> sorted_profile(const FPGroup& g) {
  auto e = quotient_profile(g, 3, 1000).entries;
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST(Properties, LibrarySelfChecks) {
  for (const PropertyResult& r : run_properties(test_seed(), kTrials)) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_GE(r.trials, kTrials);
  }
}

TEST(Properties, SmithMatchesNaiveReduction) {
  std::mt19937_64 rng(test_seed());
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < kTrials; ++t) {
    oracle::Mat m(4, std::vector<long long>(4));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    const auto want = oracle::naive_smith(m);
    const auto got = oracle::library_smith(m);
    ASSERT_EQ(got, want) << "trial " << t;
    for (std::size_t i = 0; i + 1 < got.size(); ++i) ASSERT_EQ(got[i + 1] % got[i], 0);
  }
}

TEST(Properties, ToddCoxeterMatchesMultiplicationTable) {
  std::mt19937_64 rng(test_seed() + 1);
  for (int t = 0; t < kTrials; ++t) {
    const oracle::TableGroup grp = oracle::random_table_group(rng, 60);
    const FPGroup pres = oracle::scramble(grp.presentation, rng);
    const CosetTable ct = todd_coxeter(pres, {}, 100000);
    ASSERT_TRUE(oracle::table_matches(ct, grp)) << "trial " << t << ", order " << grp.elements.size();
    // Index of the cyclic subgroup generated by the first generator.
    const auto cyc = perm_group_elements({grp.gens[0]}, static_cast<int>(grp.gens[0].size()), 1000);
    const CosetTable sub = todd_coxeter(pres, {{1}}, 100000);
    ASSERT_TRUE(sub.closed);
    EXPECT_EQ(static_cast<std::size_t>(sub.cosets) * cyc->size(), grp.elements.size());
  }
}

TEST(Properties, TietzeKeepsFiniteQuotientsAndAbelianization) {
  std::mt19937_64 rng(test_seed() + 2);
  for (int t = 0; t < 60; ++t) {
    const oracle::TableGroup grp = oracle::random_table_group(rng, 60);
    const FPGroup pres = oracle::scramble(grp.presentation, rng);
    const TietzeResult tz = tietze_simplify(pres, 20000);
    EXPECT_EQ(abelianization(tz.group), abelianization(pres));
    EXPECT_EQ(sorted_profile(tz.group), sorted_profile(pres));
    Word w;
    for (int i = 0; i < 4; ++i)
      w.push_back(gen_letter(static_cast<int>(rng() % pres.gens.size()), rng() % 2 ? 1 : -1));
    const CosetTable a = todd_coxeter(pres, {free_reduce(w)}, 100000);
    const CosetTable b = todd_coxeter(tz.group, {substitute(w, tz.images)}, 100000);
    ASSERT_TRUE(a.closed && b.closed);
    EXPECT_EQ(a.cosets, b.cosets);
  }
}

TEST(Properties, KernelOntoZ2HasSchreierRank) {
  std::mt19937_64 rng(test_seed() + 3);
  for (int t = 0; t < 20; ++t) {
    const int r = static_cast<int>(rng() % 4) + 1;
    FPGroup f;
    std::vector<Perm> imgs;
    for (int i = 0; i < r; ++i) {
      f.gens.push_back("a" + std::to_string(i));
      imgs.push_back(i == 0 || rng() % 2 ? transposition(2, 0, 1) : identity_perm(2));
    }
    const CheckedHom h = sym_hom(f, imgs, 2);
    const KernelPresentation k = kernel_presentation(f, h, 1000);
    EXPECT_EQ(abelianization(k.group), (AbelianInvariants{2 * r - 1, {}}));
    for (const Word& w : k.in_parent) EXPECT_TRUE(is_identity(perm_eval(w, imgs, 2)));
  }
}

TEST(Properties, KernelGeneratorsMapToIdentity) {
  for (const std::string id : {"f1", "cayley", "p1xp1_12"}) {
    const CaseRecord rec = builtin_case(id);
    const FPGroup g = rec.displayed.group();
    const CheckedHom h = sym_hom(g, rec.sym_images(rec.displayed), rec.degree());
    const KernelPresentation k = kernel_presentation(g, h, 1000);
    EXPECT_EQ(static_cast<std::size_t>(k.index), h.image_order);
    for (const Word& w : k.in_parent) EXPECT_TRUE(is_identity(perm_eval(w, h.images, h.degree))) << id;
  }
}
