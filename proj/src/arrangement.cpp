#include "galcov/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace galcov {

namespace {

using Tri = std::array<int, 3>;
using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::map<EdgeKey, std::vector<int>> edge_planes(const std::vector<Tri>& tris) {
  std::map<EdgeKey, std::vector<int>> out;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const Tri& x = tris[t];
    for (int i = 0; i < 3; ++i) out[edge_key(x[i], x[(i + 1) % 3])].push_back(static_cast<int>(t));
  }
  return out;
}

void check_structure(const Arrangement& arr) {
  if (arr.triangles.empty()) throw StructuralError("arrangement has no triangles");
  std::set<Tri> seen;
  for (const Tri& t : arr.triangles) {
    if (t[0] <= 0 || t[1] <= 0 || t[2] <= 0) throw StructuralError("vertex ids must be positive");
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw StructuralError("triangle is not a 3-set");
    Tri s = t;
    std::sort(s.begin(), s.end());
    if (!seen.insert(s).second) throw StructuralError("duplicate triangle");
  }
  for (const auto& [v, xy] : arr.coords) {
    bool used = false;
    for (const Tri& t : arr.triangles) used = used || std::find(t.begin(), t.end(), v) != t.end();
    if (!used) throw StructuralError("coordinates given for dangling vertex " + std::to_string(v));
  }
}

bool dual_connected(const std::vector<Tri>& tris, const std::map<EdgeKey, std::vector<int>>& ep) {
  std::vector<std::vector<int>> adj(tris.size());
  for (const auto& [e, ts] : ep)
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        adj[static_cast<std::size_t>(ts[i])].push_back(ts[j]);
        adj[static_cast<std::size_t>(ts[j])].push_back(ts[i]);
      }
  std::vector<bool> seen(tris.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const int t = q.front();
    q.pop_front();
    for (int u : adj[static_cast<std::size_t>(t)])
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++count;
        q.push_back(u);
      }
  }
  return count == tris.size();
}

bool edge_graph_planar(const std::vector<Tri>& tris) {
  std::map<int, int> index;
  for (const Tri& t : tris)
    for (int v : t) index.emplace(v, static_cast<int>(index.size()));
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(index.size());
  std::set<EdgeKey> edges;
  for (const Tri& t : tris)
    for (int i = 0; i < 3; ++i) edges.insert(edge_key(index[t[i]], index[t[(i + 1) % 3]]));
  for (const auto& [a, b] : edges) boost::add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), g);
  return boost::boyer_myrvold_planarity_test(g);
}

// Triangles through v must be connected through edges containing v.
bool vertex_link_connected(int v, const std::vector<Tri>& tris, const std::map<EdgeKey, std::vector<int>>& ep) {
  std::vector<int> around;
  for (std::size_t t = 0; t < tris.size(); ++t)
    if (std::find(tris[t].begin(), tris[t].end(), v) != tris[t].end()) around.push_back(static_cast<int>(t));
  if (around.size() < 2) return true;
  std::set<int> reached{around[0]};
  std::deque<int> q{around[0]};
  while (!q.empty()) {
    const Tri& t = tris[static_cast<std::size_t>(q.front())];
    q.pop_front();
    for (int w : t) {
      if (w == v) continue;
      for (int u : ep.at(edge_key(v, w)))
        if (reached.insert(u).second) q.push_back(u);
    }
  }
  return reached.size() == around.size();
}

// With every edge on at most two planes and connected vertex links the
// complex is a compact surface; it can be drawn in the plane exactly when it
// is orientable, has boundary, and has Euler characteristic 2 - #boundary.
bool embeds_in_plane(const std::vector<Tri>& tris, const std::map<EdgeKey, std::vector<int>>& ep) {
  std::vector<std::array<int, 3>> orient(tris.size());
  std::vector<bool> done(tris.size(), false);
  orient[0] = tris[0];
  done[0] = true;
  std::deque<int> q{0};
  auto directed = [](const Tri& t, int a, int b) {
    for (int i = 0; i < 3; ++i)
      if (t[i] == a && t[(i + 1) % 3] == b) return true;
    return false;
  };
  while (!q.empty()) {
    const int t = q.front();
    q.pop_front();
    const Tri& o = orient[static_cast<std::size_t>(t)];
    for (int i = 0; i < 3; ++i) {
      const int a = o[i];
      const int b = o[(i + 1) % 3];
      for (int u : ep.at(edge_key(a, b))) {
        if (u == t) continue;
        const Tri& x = tris[static_cast<std::size_t>(u)];
        int c = 0;
        for (int w : x)
          if (w != a && w != b) c = w;
        // Neighbour must run the shared edge as b -> a.
        const Tri want{b, a, c};
        if (!done[static_cast<std::size_t>(u)]) {
          orient[static_cast<std::size_t>(u)] = want;
          done[static_cast<std::size_t>(u)] = true;
          q.push_back(u);
        } else if (!directed(orient[static_cast<std::size_t>(u)], b, a)) {
          return false;
        }
      }
    }
  }
  std::map<int, std::vector<int>> boundary;
  for (const auto& [e, ts] : ep)
    if (ts.size() == 1) {
      boundary[e.first].push_back(e.second);
      boundary[e.second].push_back(e.first);
    }
  if (boundary.empty()) return false;
  int cycles = 0;
  std::set<int> seen;
  for (const auto& [v, nb] : boundary) {
    if (seen.count(v)) continue;
    ++cycles;
    std::deque<int> bq{v};
    seen.insert(v);
    while (!bq.empty()) {
      const int x = bq.front();
      bq.pop_front();
      for (int y : boundary[x])
        if (seen.insert(y).second) bq.push_back(y);
    }
  }
  std::set<int> verts;
  for (const Tri& t : tris) verts.insert(t.begin(), t.end());
  const long chi = static_cast<long>(verts.size()) - static_cast<long>(ep.size()) + static_cast<long>(tris.size());
  return chi == 2 - cycles;
}

}  // namespace

std::vector<InteriorEdge> interior_edges(const Arrangement& arr) {
  std::vector<InteriorEdge> out;
  for (const auto& [e, ts] : edge_planes(arr.triangles)) {
    if (ts.size() < 2) continue;
    InteriorEdge ie{e.first, e.second, 0, {}};
    for (int t : ts) ie.planes.push_back(t + 1);
    out.push_back(std::move(ie));
  }
  // std::map iteration is already lexicographic on (min, max).
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = static_cast<int>(i) + 1;
  return out;
}

ValidationReport validate(const Arrangement& arr) {
  check_structure(arr);
  ValidationReport rep;
  const auto ep = edge_planes(arr.triangles);
  int lines = 0;
  for (const auto& [e, ts] : ep) {
    if (ts.size() > 2)
      rep.violations.push_back({"three-planes-in-a-line", "edge " + std::to_string(e.first) + "-" +
                                                              std::to_string(e.second) + " lies on " +
                                                              std::to_string(ts.size()) + " planes"});
    if (ts.size() == 2) ++lines;
  }
  if (lines == 0) rep.violations.push_back({"no-branch-curve", "no interior edge, the degenerate branch curve is empty"});
  if (!dual_connected(arr.triangles, ep))
    rep.violations.push_back({"dual-graph-disconnected", "planes do not form one edge-connected piece"});
  std::set<int> verts;
  for (const Tri& t : arr.triangles) verts.insert(t.begin(), t.end());
  for (int v : verts)
    if (!vertex_link_connected(v, arr.triangles, ep))
      rep.violations.push_back({"planes-meet-only-at-point", "planes through vertex " + std::to_string(v) +
                                                                 " are not joined by lines through it"});
  // A plane meets another plane along a line; a triangle has three edges, so
  // the bound of three other planes is checked for the record only.
  for (std::size_t t = 0; t < arr.triangles.size(); ++t) {
    std::set<int> others;
    for (int i = 0; i < 3; ++i)
      for (int u : ep.at(edge_key(arr.triangles[t][i], arr.triangles[t][(i + 1) % 3])))
        if (u != static_cast<int>(t)) others.insert(u);
    if (others.size() > 3)
      rep.violations.push_back({"plane-meets-more-than-three", "plane " + std::to_string(t + 1)});
  }
  if (!edge_graph_planar(arr.triangles)) rep.violations.push_back({"non-planar", "edge graph is not planar"});
  if (rep.violations.empty() && !embeds_in_plane(arr.triangles, ep))
    rep.violations.push_back({"not-a-planar-region", "the planes cannot be drawn as a region of the plane"});
  return rep;
}

namespace {

struct Labelled {
  std::vector<Tri> tris;  // sorted triangles, sorted list
  std::map<int, int> relabel;
};

Labelled bfs_labelling(const std::vector<Tri>& tris, const std::map<EdgeKey, std::vector<int>>& ep, int start,
                       const Tri& order) {
  Labelled out;
  std::map<int, int>& lab = out.relabel;
  int next = 1;
  for (int v : order) lab[v] = next++;
  std::vector<bool> queued(tris.size(), false);
  std::deque<int> q{start};
  queued[static_cast<std::size_t>(start)] = true;
  while (!q.empty()) {
    const Tri& t = tris[static_cast<std::size_t>(q.front())];
    q.pop_front();
    std::array<std::pair<EdgeKey, EdgeKey>, 3> edges;  // (label pair, original pair)
    for (int i = 0; i < 3; ++i) {
      const int a = t[i];
      const int b = t[(i + 1) % 3];
      edges[static_cast<std::size_t>(i)] = {edge_key(lab.at(a), lab.at(b)), edge_key(a, b)};
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [lk, ok] : edges) {
      for (int u : ep.at(ok)) {
        if (queued[static_cast<std::size_t>(u)]) continue;
        queued[static_cast<std::size_t>(u)] = true;
        for (int w : tris[static_cast<std::size_t>(u)])
          if (!lab.count(w)) lab[w] = next++;
        q.push_back(u);
      }
    }
  }
  for (const Tri& t : tris) {
    Tri r{lab.at(t[0]), lab.at(t[1]), lab.at(t[2])};
    std::sort(r.begin(), r.end());
    out.tris.push_back(r);
  }
  std::sort(out.tris.begin(), out.tris.end());
  return out;
}

std::vector<Tri> canonical_tris(const std::vector<Tri>& tris, std::map<int, int>* relabel) {
  const auto ep = edge_planes(tris);
  for (const auto& [e, ts] : ep)
    if (ts.size() > 2) throw StructuralError("canonical form needs at most two planes per edge");
  if (!dual_connected(tris, ep)) throw StructuralError("canonical form needs a connected dual graph");
  bool have = false;
  Labelled best;
  for (std::size_t s = 0; s < tris.size(); ++s) {
    Tri order = tris[s];
    std::sort(order.begin(), order.end());
    do {
      Labelled cand = bfs_labelling(tris, ep, static_cast<int>(s), order);
      if (!have || cand.tris < best.tris) {
        best = std::move(cand);
        have = true;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (relabel) *relabel = best.relabel;
  return best.tris;
}

}  // namespace

Arrangement canonical_form(const Arrangement& arr) {
  check_structure(arr);
  std::map<int, int> relabel;
  Arrangement out;
  out.triangles = canonical_tris(arr.triangles, &relabel);
  for (const auto& [v, xy] : arr.coords) out.coords[relabel.at(v)] = xy;
  return out;
}

std::vector<Arrangement> enumerate(int n) {
  if (n < 1 || n > 8) throw CapacityError("enumeration supports 1 <= n <= 8, got " + std::to_string(n));
  std::set<std::vector<Tri>> level{{Tri{1, 2, 3}}};
  for (int k = 1; k < n; ++k) {
    std::set<std::vector<Tri>> next;
    for (const std::vector<Tri>& tris : level) {
      const auto ep = edge_planes(tris);
      int top = 0;
      for (const Tri& t : tris) top = std::max({top, t[0], t[1], t[2]});
      for (const auto& [e, ts] : ep) {
        if (ts.size() != 1) continue;
        for (int w = 1; w <= top + 1; ++w) {
          if (w == e.first || w == e.second) continue;
          Tri t{e.first, e.second, w};
          std::sort(t.begin(), t.end());
          if (std::find(tris.begin(), tris.end(), t) != tris.end()) continue;
          std::vector<Tri> grown = tris;
          grown.push_back(t);
          const auto gep = edge_planes(grown);
          bool ok = true;
          for (const auto& [ge, gts] : gep) ok = ok && gts.size() <= 2;
          if (!ok || !edge_graph_planar(grown)) continue;
          next.insert(canonical_tris(grown, nullptr));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Arrangement> out;
  for (const std::vector<Tri>& tris : level) {
    Arrangement a;
    a.triangles = tris;
    if (validate(a).admissible()) out.push_back(std::move(a));
  }
  return out;
}

std::vector<SingularPoint> classify_points(const Arrangement& arr) {
  std::map<int, SingularPoint> pts;
  for (const InteriorEdge& e : interior_edges(arr)) {
    if (e.planes.size() != 2) continue;
    for (int v : {e.u, e.v}) {
      SingularPoint& p = pts[v];
      p.vertex = v;
      ++p.multiplicity;
      p.lines.push_back(e.label);
    }
  }
  std::vector<SingularPoint> out;
  for (auto& [v, p] : pts) {
    for (const Tri& t : arr.triangles) p.planes += std::find(t.begin(), t.end(), v) != t.end() ? 1 : 0;
    std::sort(p.lines.begin(), p.lines.end());
    out.push_back(p);
  }
  return out;
}

std::vector<Perm> SymMap::perms() const {
  std::vector<Perm> out;
  for (const auto& t : transpositions) out.push_back(transposition(n, t[0] - 1, t[1] - 1));
  return out;
}

SymMap monodromy_map(const Arrangement& arr) {
  SymMap m;
  m.n = arr.n();
  for (const InteriorEdge& e : interior_edges(arr)) {
    if (e.planes.size() != 2) throw StructuralError("line lies on more than two planes");
    m.transpositions.push_back({e.planes[0], e.planes[1]});
  }
  std::set<int> orbit{1};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : m.transpositions) {
      if (orbit.count(t[0]) != orbit.count(t[1])) {
        orbit.insert(t[0]);
        orbit.insert(t[1]);
        grew = true;
      }
    }
  }
  m.orbit.assign(orbit.begin(), orbit.end());
  m.surjective = static_cast<int>(orbit.size()) == m.n;
  return m;
}

std::vector<std::array<int, 2>> meeting_line_pairs(const Arrangement& arr) {
  const std::vector<InteriorEdge> lines = interior_edges(arr);
  std::vector<std::array<int, 2>> out;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const InteriorEdge& a = lines[i];
      const InteriorEdge& b = lines[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.push_back({a.label, b.label});
    }
  return out;
}

}  // namespace galcov
