#include <gtest/gtest.h>

#include <random>

#include "galcov/fpgroup.hpp"
#include "galcov/smith.hpp"

using namespace galcov;

namespace {

FPGroup make(std::vector<std::string> gens, const std::vector<std::string>& rels) {
  FPGroup g;
  g.gens = std::move(gens);
  for (const auto& r : rels) g.relators.push_back(parse_word(r, g.gens));
  return g;
}

}  // namespace

TEST(ToddCoxeter, S3FromCoxeterPresentation) {
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "(ab)^3"});
  const CosetTable t = todd_coxeter(g, {}, 1000);
  ASSERT_TRUE(t.closed);
  EXPECT_EQ(t.cosets, 6);
}

TEST(ToddCoxeter, SubgroupIndex) {
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "(ab)^3"});
  const CosetTable t = todd_coxeter(g, {parse_word("a", g.gens)}, 1000);
  ASSERT_TRUE(t.closed);
  EXPECT_EQ(t.cosets, 3);
}

TEST(ToddCoxeter, TrivialGroupFromBraidAndSquares) {
  // <a,b | a = b^-1 a b, aba = bab> collapses to Z, squares kill it to Z2.
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "<a,b>", "[a,b]"});
  const CosetTable t = todd_coxeter(g, {}, 1000);
  ASSERT_TRUE(t.closed);
  EXPECT_EQ(t.cosets, 2);
}

TEST(ToddCoxeter, CapMeansUndecided) {
  const FPGroup g = make({"a", "b"}, {"[a,b]"});
  const CosetTable t = todd_coxeter(g, {}, 50);
  EXPECT_FALSE(t.closed);
}

TEST(ToddCoxeter, S5FromCoxeterPresentation) {
  const FPGroup g = make({"a", "b", "c", "d"}, {"a^2", "b^2", "c^2", "d^2", "(ab)^3", "(bc)^3", "(cd)^3", "(ac)^2", "(ad)^2", "(bd)^2"});
  const CosetTable t = todd_coxeter(g, {}, 10000);
  ASSERT_TRUE(t.closed);
  EXPECT_EQ(t.cosets, 120);
}

TEST(LowIndex, S3SubgroupsUpToIndex3) {
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "(ab)^3"});
  const auto subs = low_index_subgroups(g, 3);
  // Index 1: S3; index 2: A3; index 3: three conjugate subgroups of order 2.
  EXPECT_EQ(subs.size(), 5u);
}

TEST(LowIndex, FreeGroupRankTwoIndexTwo) {
  const FPGroup g = make({"a", "b"}, {});
  const auto subs = low_index_subgroups(g, 2);
  EXPECT_EQ(subs.size(), 4u);
}

TEST(Tietze, EliminatesEqualGenerator) {
  const FPGroup g = make({"a", "ap"}, {"a = ap", "a^5 ap^2"});
  const TietzeResult r = tietze_simplify(g, 100);
  ASSERT_EQ(r.group.ngens(), 1);
  EXPECT_EQ(abelianization(r.group).torsion, std::vector<std::int64_t>{7});
  EXPECT_EQ(r.images.size(), 2u);
}

TEST(Tietze, ImagesExpressInputGenerators) {
  const FPGroup g = make({"a", "b", "c"}, {"c = a b", "<a,b>", "a^2"});
  const TietzeResult r = tietze_simplify(g, 100);
  EXPECT_EQ(r.group.ngens(), 2);
  const CosetTable before = todd_coxeter(g, {}, 1000);
  const CosetTable after = todd_coxeter(r.group, {}, 1000);
  ASSERT_TRUE(before.closed && after.closed);
  EXPECT_EQ(before.cosets, after.cosets);
}

TEST(Tietze, KeyLemmaAddsIdentity) {
  FPGroup g = make({"x", "y", "yp"}, {"<x,y>", "<x,yp>", "<x, y^-1 yp y>", "[x, yp y]", "x^2", "y^2", "yp^2"});
  EXPECT_EQ(apply_key_lemma(g), 1);
  EXPECT_EQ(g.relators.back(), parse_word("y yp^-1", g.gens));
  const TietzeResult r = tietze_simplify(g, 1000);
  EXPECT_EQ(r.group.ngens(), 2);
}

TEST(SymHom, RejectsWrongMap) {
  const FPGroup g = make({"a", "b"}, {"<a,b>"});
  try {
    sym_hom(g, {transposition(4, 0, 1), transposition(4, 2, 3)}, 4);
    FAIL() << "expected HomError";
  } catch (const HomError& e) {
    EXPECT_EQ(e.witness(), parse_word("<a,b>", g.gens));
  }
}

TEST(SymHom, RejectsIntransitive) {
  const FPGroup g = make({"a"}, {});
  EXPECT_THROW(sym_hom(g, {transposition(3, 0, 1)}, 3), HomError);
}

TEST(Kernel, FreeGroupOntoZ2) {
  const FPGroup g = make({"a", "b"}, {});
  CheckedHom h;
  h.images = {transposition(2, 0, 1), transposition(2, 0, 1)};
  h.degree = 2;
  const KernelPresentation k = kernel_presentation(g, h, 100);
  EXPECT_EQ(k.index, 2);
  EXPECT_EQ(k.group.ngens(), 3);
  EXPECT_EQ(abelianization(k.group).rank, 3);
}

TEST(Kernel, CyclicOntoZ2) {
  const FPGroup g = make({"a"}, {});
  CheckedHom h;
  h.images = {transposition(2, 0, 1)};
  h.degree = 2;
  const KernelPresentation k = kernel_presentation(g, h, 100);
  ASSERT_EQ(k.group.ngens(), 1);
  EXPECT_EQ(k.in_parent[0], parse_word("a^2", g.gens));
}

TEST(Kernel, S3KernelOfSignIsCyclic3) {
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "(ab)^3"});
  CheckedHom h = sym_hom(g, {transposition(2, 0, 1), transposition(2, 0, 1)}, 2);
  const KernelPresentation k = kernel_presentation(g, h, 100);
  const CosetTable t = todd_coxeter(k.group, {}, 100);
  ASSERT_TRUE(t.closed);
  EXPECT_EQ(t.cosets, 3);
}

TEST(Abelianization, BraidRelatorRankOne) {
  const FPGroup g = make({"a", "b"}, {"<a,b>"});
  const AbelianInvariants inv = abelianization(g);
  EXPECT_EQ(inv.rank, 1);
  EXPECT_TRUE(inv.torsion.empty());
}

TEST(Abelianization, KleinFour) {
  const FPGroup g = make({"a", "b"}, {"a^2", "b^2", "[a,b]"});
  const AbelianInvariants inv = abelianization(g);
  EXPECT_EQ(inv.rank, 0);
  EXPECT_EQ(inv.torsion, (std::vector<std::int64_t>{2, 2}));
}

TEST(Abelianization, EmptyRelators) {
  EXPECT_EQ(abelianization(make({"a", "b", "c"}, {})).rank, 3);
}

TEST(Smith, KnownDiagonal) {
  IntMatrix<BigInt> m(2, 2);
  m << 2, 4, 6, 8;
  const auto s = smith_normal_form(m);
  ASSERT_EQ(s.invariants.size(), 2u);
  EXPECT_EQ(s.invariants[0], 2);
  EXPECT_EQ(s.invariants[1], 4);
}

TEST(Smith, WorksOverMachineIntegers) {
  IntMatrix<long> m(3, 3);
  m << 2, 0, 0, 0, 3, 0, 0, 0, 0;
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.invariants, (std::vector<long>{1, 6}));
}

TEST(Identify, KleinFourIsElementaryAbelian) {
  const GroupIdentity id = identify(make({"a", "b"}, {"a^2", "b^2", "[a,b]"}), {});
  EXPECT_EQ(id.verdict, Verdict::ElementaryAbelian2);
  EXPECT_EQ(id.order, 4u);
}

TEST(Identify, TrivialGroup) {
  const GroupIdentity id = identify(make({"a", "b"}, {"a", "b a^2"}), {});
  EXPECT_EQ(id.verdict, Verdict::Trivial);
}

TEST(Identify, FreeAbelianRankTwo) {
  const GroupIdentity id = identify(make({"a", "b"}, {"[a,b]"}), {});
  EXPECT_EQ(id.verdict, Verdict::FreeAbelian);
  EXPECT_EQ(id.invariants.rank, 2);
}

TEST(Identify, FreeGroupIsNotCertifiedAbelian) {
  const GroupIdentity id = identify(make({"a", "b"}, {}), {});
  EXPECT_EQ(id.verdict, Verdict::InvariantsOnly);
}
