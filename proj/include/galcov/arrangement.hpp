#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "galcov/perm.hpp"
#include "galcov/word.hpp"

namespace galcov {

/// Planar degeneration diagram: triangle i (0-based in the list) is plane
/// i + 1. Vertex ids are arbitrary positive integers.
struct Arrangement {
  std::vector<std::array<int, 3>> triangles;
  /// Optional embedding witnesses, vertex id -> (x, y) as rational strings.
  std::map<int, std::array<std::string, 2>> coords;

  int n() const { return static_cast<int>(triangles.size()); }
};

/// Edge shared by two or more planes. Admissible arrangements only have
/// edges with exactly two planes; those are the lines, labelled 1..m in
/// lexicographic order of their sorted endpoint pairs.
struct InteriorEdge {
  int u = 0;
  int v = 0;
  int label = 0;
  std::vector<int> planes;  // 1-based plane indices, ascending
};

std::vector<InteriorEdge> interior_edges(const Arrangement& arr);

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool admissible() const { return violations.empty(); }
};

/// Throws StructuralError for malformed input (non-3-set triangle, bad ids,
/// duplicate triangle); otherwise lists every violated admissibility rule.
ValidationReport validate(const Arrangement& arr);

/// Canonical relabelling: vertices renumbered 1.. and triangles reordered so
/// that isomorphic arrangements give identical results.
Arrangement canonical_form(const Arrangement& arr);

/// All admissible arrangements with n planes up to isomorphism, canonical
/// and sorted. Throws CapacityError outside 1 <= n <= 8.
std::vector<Arrangement> enumerate(int n);

struct SingularPoint {
  int vertex = 0;
  int multiplicity = 0;  // interior edges through the vertex
  int planes = 0;        // triangles through the vertex
  std::vector<int> lines;
};

std::vector<SingularPoint> classify_points(const Arrangement& arr);

struct SymMap {
  int n = 0;
  std::vector<std::array<int, 2>> transpositions;  // index = line label - 1, 1-based planes
  bool surjective = false;
  /// Orbit of plane 1 under the image (all of 1..n when surjective).
  std::vector<int> orbit;

  std::vector<Perm> perms() const;
};

SymMap monodromy_map(const Arrangement& arr);

/// Pairs of lines that share a vertex; the remaining pairs meet only after
/// projection (parasitic intersections).
std::vector<std::array<int, 2>> meeting_line_pairs(const Arrangement& arr);

}  // namespace galcov
