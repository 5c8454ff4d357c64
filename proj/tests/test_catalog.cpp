#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "galcov/catalog.hpp"

using namespace galcov;

namespace {

using Edges = std::vector<std::array<int, 2>>;

Edges sorted_edges(const Edges& e, const std::vector<int>& relabel) {
  Edges out;
  for (const auto& t : e) {
    int a = relabel[static_cast<std::size_t>(t[0] - 1)];
    int b = relabel[static_cast<std::size_t>(t[1] - 1)];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Same transposition multiset after some renumbering of the planes.
bool isomorphic_maps(const Edges& a, const Edges& b, int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  const Edges target = sorted_edges(b, id);
  std::vector<int> perm = id;
  do {
    if (sorted_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool accepts(const CaseRecord& rec, Verdict v) {
  return std::find(rec.expected.accept.begin(), rec.expected.accept.end(), v) != rec.expected.accept.end();
}

}  // namespace

TEST(Catalog, TenCases) {
  const auto ids = case_ids();
  EXPECT_EQ(ids.size(), 10u);
  EXPECT_EQ(std::count_if(ids.begin(), ids.end(), is_parametric), 1);
  EXPECT_THROW(builtin_case("nonesuch"), StructuralError);
}

TEST(Catalog, SymMapsAreHomomorphismsOntoSn) {
  for (const std::string& id : case_ids()) {
    const CaseRecord rec = builtin_case(id);
    if (!rec.displayed.gens.empty()) {
      const CheckedHom h = sym_hom(rec.displayed.group(), rec.sym_images(rec.displayed), rec.degree());
      EXPECT_TRUE(h.surjective_on_symmetric) << id;
    }
    if (!rec.factorization.factors.empty()) {
      const Presentation p = assemble_presentation(rec.factorization);
      EXPECT_NO_THROW(sym_hom(p.group(), rec.sym_images(p), rec.degree())) << id;
    }
  }
}

TEST(Catalog, WrongMapIsRejectedWithBraidWitness) {
  const CaseRecord rec = builtin_case("f1");
  std::vector<Perm> imgs = {transposition(4, 0, 1), transposition(4, 0, 1), transposition(4, 2, 3), transposition(4, 2, 3)};
  try {
    sym_hom(rec.displayed.group(), imgs, 4);
    FAIL() << "accepted a map sending braided generators to disjoint transpositions";
  } catch (const HomError& e) {
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Catalog, LineMapsMatchArrangementMonodromy) {
  for (const std::string& id : case_ids()) {
    const CaseRecord rec = builtin_case(id);
    const SymMap m = monodromy_map(rec.arrangement);
    EXPECT_TRUE(m.surjective) << id;
    EXPECT_TRUE(isomorphic_maps(rec.line_map, m.transpositions, rec.degree())) << id;
  }
}

TEST(Catalog, ParametricFamilySizes) {
  for (int n = 1; n <= 4; ++n) {
    const CaseRecord rec = builtin_case("p1xp1_1n", n);
    EXPECT_EQ(rec.param, n);
    EXPECT_EQ(rec.degree(), 2 * n);
    EXPECT_EQ(rec.line_map.size(), static_cast<std::size_t>(2 * n - 1));
  }
}

TEST(Catalog, CubicParasiticNodesAreCommutators) {
  const CaseRecord rec = builtin_case("cubic_plus_plane");
  const FPGroup g = assemble_presentation(rec.factorization).group();
  auto idx = [&](const std::string& s) {
    return static_cast<int>(std::find(g.gens.begin(), g.gens.end(), s) - g.gens.begin());
  };
  for (const std::string a : {"G2", "G2p"})
    for (const std::string b : {"G4", "G4p"}) {
      const Word c = relator_canonical(commutator({gen_letter(idx(a))}, {gen_letter(idx(b))}));
      EXPECT_TRUE(std::any_of(g.relators.begin(), g.relators.end(), [&](const Word& r) { return relator_canonical(r) == c; }))
          << a << " " << b;
    }
}

TEST(Catalog, CayleyFactorizationDegreeButNotFullTwist) {
  const CaseResult r = compute_case(builtin_case("cayley"), Limits{});
  ASSERT_TRUE(r.factorization_degree && r.full_degree);
  EXPECT_EQ(*r.factorization_degree, 30);
  EXPECT_EQ(*r.full_degree, 30);
  // Degree matches, but the product of the printed blocks (paths read off the
  // figures) is not the full twist in B_6.
  ASSERT_TRUE(r.full_twist);
  EXPECT_FALSE(*r.full_twist);
  EXPECT_EQ(r.identity.verdict, Verdict::ElementaryAbelian2);
  EXPECT_EQ(r.identity.order, std::optional<std::size_t>(4));
  EXPECT_EQ(r.identity.invariants, (AbelianInvariants{0, {2, 2}}));
  EXPECT_EQ(r.outcome, Outcome::Agree);
}

TEST(Catalog, SmallCasesAreTrivial) {
  for (const std::string id : {"quadric", "f1", "four_point"}) {
    const CaseResult r = compute_case(builtin_case(id), Limits{});
    EXPECT_EQ(r.identity.verdict, Verdict::Trivial) << id;
    EXPECT_EQ(r.outcome, Outcome::Agree) << id;
  }
}

TEST(Catalog, FourPointSquareQuotientIsS4) {
  const CaseResult r = compute_case(builtin_case("four_point"), Limits{});
  EXPECT_EQ(r.square_quotient_order, std::optional<std::size_t>(24));
  EXPECT_TRUE(accepts(builtin_case("four_point"), Verdict::Trivial));
}

TEST(Catalog, ParametricSmallN) {
  const std::size_t want[] = {2, 24};
  for (int n = 1; n <= 2; ++n) {
    const CaseResult r = compute_case(builtin_case("p1xp1_1n", n), Limits{});
    EXPECT_EQ(r.square_quotient_order, std::optional<std::size_t>(want[n - 1]));
    EXPECT_EQ(r.outcome, Outcome::Agree);
  }
}

TEST(Catalog, TinyCapNeverDisagrees) {
  Limits tiny;
  tiny.coset_cap = 10;
  for (const std::string id : {"quadric", "f1", "cayley", "four_point"}) {
    const CaseResult r = compute_case(builtin_case(id), tiny);
    EXPECT_NE(r.outcome, Outcome::Disagree) << id;
    EXPECT_NE(r.outcome, Outcome::Error) << id;
  }
  // The regular action of S_4 does not fit in 10 cosets; cayley still closes through its order-4 kernel.
  EXPECT_EQ(compute_case(builtin_case("four_point"), tiny).outcome, Outcome::Indeterminate);
  EXPECT_EQ(compute_case(builtin_case("cayley"), tiny).outcome, Outcome::Agree);
}

TEST(Report, ExitCodes) {
  CaseResult ok;
  ok.outcome = Outcome::Agree;
  CaseResult maybe;
  maybe.outcome = Outcome::Indeterminate;
  CaseResult bad;
  bad.outcome = Outcome::Disagree;
  EXPECT_EQ((Report{{ok, ok}}).exit_code(), 0);
  EXPECT_EQ((Report{{ok, maybe}}).exit_code(), 3);
  EXPECT_EQ((Report{{maybe, bad}}).exit_code(), 1);
  CaseResult err;
  err.outcome = Outcome::Error;
  EXPECT_EQ((Report{{err}}).exit_code(), 1);
}

TEST(QuotientProfileTest, S3) {
  FPGroup g;
  g.gens = {"a", "b"};
  g.relators = {parse_word("a^2", g.gens), parse_word("b^2", g.gens), parse_word("(ab)^3", g.gens)};
  const QuotientProfile p = quotient_profile(g, 3, 1000);
  EXPECT_EQ(p.max_index, 3);
  EXPECT_EQ(p.entries.size(), 5u);
  for (const auto& [index, order] : p.entries) EXPECT_EQ(order, index == 1 ? 1u : (index == 2 ? 2u : 6u));
}
