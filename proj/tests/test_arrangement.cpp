#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "galcov/arrangement.hpp"
#include "galcov/catalog.hpp"

using namespace galcov;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::map<int, int> census(const Arrangement& a) {
  std::map<int, int> out;
  for (const SingularPoint& p : classify_points(a))
    if (p.multiplicity > 0) ++out[p.multiplicity];
  return out;
}

}  // namespace

TEST(Validate, TwoTrianglesSharingAnEdge) {
  EXPECT_TRUE(validate(Arrangement{{{1, 2, 3}, {2, 3, 4}}, {}}).admissible());
}

TEST(Validate, SingleTriangleHasNoBranchCurve) {
  const ValidationReport r = validate(Arrangement{{{1, 2, 3}}, {}});
  EXPECT_FALSE(r.admissible());
  EXPECT_TRUE(has_rule(r, "no-branch-curve"));
}

TEST(Validate, ThreePlanesThroughOneLine) {
  const ValidationReport r = validate(Arrangement{{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}, {}});
  EXPECT_TRUE(has_rule(r, "three-planes-in-a-line"));
}

TEST(Validate, DisconnectedPlanes) {
  const ValidationReport r = validate(Arrangement{{{1, 2, 3}, {2, 3, 4}, {5, 6, 7}, {6, 7, 8}}, {}});
  EXPECT_TRUE(has_rule(r, "dual-graph-disconnected"));
}

TEST(Validate, MalformedTriangleThrows) {
  EXPECT_THROW(validate(Arrangement{{{1, 1, 2}, {1, 2, 3}}, {}}), StructuralError);
  EXPECT_THROW(validate(Arrangement{{{1, 2, 3}, {3, 2, 1}}, {}}), StructuralError);
}

TEST(Validate, EveryCatalogArrangementIsAdmissible) {
  for (const std::string& id : case_ids()) EXPECT_TRUE(validate(builtin_case(id).arrangement).admissible()) << id;
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate(1).size(), 0u);
  EXPECT_EQ(enumerate(2).size(), 1u);
  EXPECT_EQ(enumerate(3).size(), 2u);
  EXPECT_EQ(enumerate(4).size(), 5u);
}

TEST(Enumerate, OutOfRangeIsCapacity) {
  EXPECT_THROW(enumerate(0), CapacityError);
  EXPECT_THROW(enumerate(9), CapacityError);
}

TEST(Enumerate, ResultsAreCanonicalAndDistinct) {
  const auto arrs = enumerate(4);
  for (const Arrangement& a : arrs) {
    EXPECT_EQ(canonical_form(a).triangles, a.triangles);
    EXPECT_TRUE(validate(a).admissible());
  }
  for (std::size_t i = 0; i < arrs.size(); ++i)
    for (std::size_t j = i + 1; j < arrs.size(); ++j) EXPECT_NE(arrs[i].triangles, arrs[j].triangles);
}

TEST(Enumerate, QuarticCatalogCasesAppear) {
  const auto arrs = enumerate(4);
  for (const std::string id : {"f2", "veronese", "p1xp1_12", "cubic_plus_plane", "four_point"}) {
    const Arrangement c = canonical_form(builtin_case(id).arrangement);
    EXPECT_TRUE(std::any_of(arrs.begin(), arrs.end(), [&](const Arrangement& a) { return a.triangles == c.triangles; }))
        << id;
  }
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  const Arrangement a{{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}, {}};
  const Arrangement b{{{50, 40, 30}, {20, 40, 30}, {10, 20, 30}}, {}};
  EXPECT_EQ(canonical_form(a).triangles, canonical_form(b).triangles);
}

TEST(Points, FourPointArrangement) {
  // Outer vertices lie on one line each; the text calls them 2-points.
  EXPECT_EQ(census(builtin_case("four_point").arrangement), (std::map<int, int>{{1, 4}, {4, 1}}));
}

TEST(Points, OneTwoDegeneration) {
  EXPECT_EQ(census(builtin_case("p1xp1_12").arrangement), (std::map<int, int>{{1, 2}, {2, 2}}));
}

TEST(Points, QuadricHasTwoOnePoints) {
  EXPECT_EQ(census(builtin_case("quadric").arrangement), (std::map<int, int>{{1, 2}}));
}

TEST(SymMap, QuadricLineSwapsTheTwoPlanes) {
  const SymMap m = monodromy_map(builtin_case("quadric").arrangement);
  ASSERT_EQ(m.transpositions.size(), 1u);
  EXPECT_EQ(m.transpositions[0], (std::array<int, 2>{1, 2}));
  EXPECT_TRUE(m.surjective);
}

TEST(SymMap, StripOfThreePlanes) {
  const SymMap m = monodromy_map(builtin_case("f1").arrangement);
  ASSERT_EQ(m.transpositions.size(), 2u);
  EXPECT_EQ(m.transpositions[0], (std::array<int, 2>{1, 2}));
  EXPECT_EQ(m.transpositions[1], (std::array<int, 2>{2, 3}));
  EXPECT_TRUE(m.surjective);
}

TEST(SymMap, VeroneseStar) {
  const SymMap m = monodromy_map(builtin_case("veronese").arrangement);
  ASSERT_EQ(m.transpositions.size(), 3u);
  EXPECT_TRUE(m.surjective);
  // Plane 2 sits in the middle and meets all others.
  for (const auto& t : m.transpositions) EXPECT_TRUE(t[0] == 2 || t[1] == 2);
}

TEST(SymMap, ParasiticPairsOfOneTwo) {
  const Arrangement& a = builtin_case("p1xp1_12").arrangement;
  const int m = static_cast<int>(interior_edges(a).size());
  EXPECT_EQ(m, 3);
  EXPECT_EQ(meeting_line_pairs(a).size(), 2u);
}
