#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "galcov/arrangement.hpp"
#include "galcov/braid.hpp"

namespace galcov {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct RealLine {
  Rational slope;
  Rational offset;
  Rational at(const Rational& x) const { return slope * x + offset; }
};

struct Crossing {
  Rational x;
  std::vector<int> lines;  // 0-based line indices
};

// Generic realization: vertices carrying two or more lines get random
// integer points, lines through two such points are determined by them, the
// rest get random slopes. Rejected when a coincidence appears that the
// arrangement does not prescribe.
std::optional<std::vector<Crossing>> realize(const std::vector<InteriorEdge>& lines,
                                             const std::map<int, std::vector<int>>& at_vertex, std::mt19937& rng,
                                             std::vector<RealLine>& out) {
  std::uniform_int_distribution<int> coord(-60, 60);
  std::uniform_int_distribution<int> den(1, 7);
  std::map<int, std::pair<Rational, Rational>> point;
  for (const auto& [v, ls] : at_vertex)
    if (ls.size() >= 2) point[v] = {Rational(coord(rng)), Rational(coord(rng))};
  out.clear();
  for (const InteriorEdge& e : lines) {
    const bool pu = point.count(e.u) > 0;
    const bool pv = point.count(e.v) > 0;
    RealLine l;
    if (pu && pv) {
      const auto& [x1, y1] = point[e.u];
      const auto& [x2, y2] = point[e.v];
      if (x1 == x2) return std::nullopt;
      l.slope = (y2 - y1) / (x2 - x1);
      l.offset = y1 - l.slope * x1;
    } else {
      l.slope = Rational(coord(rng), den(rng));
      if (pu || pv) {
        const auto& [x1, y1] = point[pu ? e.u : e.v];
        l.offset = y1 - l.slope * x1;
      } else {
        l.offset = Rational(coord(rng), den(rng));
      }
    }
    out.push_back(l);
  }
  const int m = static_cast<int>(lines.size());
  std::map<std::pair<Rational, Rational>, std::set<int>> meets;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const RealLine& a = out[static_cast<std::size_t>(i)];
      const RealLine& b = out[static_cast<std::size_t>(j)];
      if (a.slope == b.slope) return std::nullopt;
      const Rational x = (b.offset - a.offset) / (a.slope - b.slope);
      auto& s = meets[{x, a.at(x)}];
      s.insert(i);
      s.insert(j);
    }
  std::vector<Crossing> cr;
  std::set<Rational> xs;
  for (const auto& [pt, s] : meets) {
    std::vector<int> ls(s.begin(), s.end());
    bool prescribed = false;
    for (const auto& [v, vl] : at_vertex)
      if (vl.size() >= 2 && vl == ls && point.count(v) && point[v] == pt) prescribed = true;
    if (!prescribed) {
      if (ls.size() != 2) return std::nullopt;
      const InteriorEdge& a = lines[static_cast<std::size_t>(ls[0])];
      const InteriorEdge& b = lines[static_cast<std::size_t>(ls[1])];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return std::nullopt;
    }
    if (!xs.insert(pt.first).second) return std::nullopt;
    cr.push_back(Crossing{pt.first, ls});
  }
  std::sort(cr.begin(), cr.end(), [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
  return cr;
}

}  // namespace

Factorization line_arrangement_monodromy(const Arrangement& arr) {
  const std::vector<InteriorEdge> lines = interior_edges(arr);
  const int m = static_cast<int>(lines.size());
  if (m == 0) return Factorization{};
  std::map<int, std::vector<int>> at_vertex;
  for (int i = 0; i < m; ++i) {
    at_vertex[lines[static_cast<std::size_t>(i)].u].push_back(i);
    at_vertex[lines[static_cast<std::size_t>(i)].v].push_back(i);
  }
  std::mt19937 rng(20240917u);
  std::vector<RealLine> real;
  std::optional<std::vector<Crossing>> crossings;
  for (int attempt = 0; attempt < 1000 && !crossings; ++attempt) crossings = realize(lines, at_vertex, rng, real);
  if (!crossings) throw std::logic_error("no generic real realization found for the line arrangement");

  // Base fiber left of every crossing; positions are heights there.
  Rational x0 = crossings->empty() ? Rational(0) : crossings->front().x - 1;
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return real[static_cast<std::size_t>(a)].at(x0) < real[static_cast<std::size_t>(b)].at(x0);
  });
  Factorization f;
  for (int i : order) f.frame.labels.push_back(std::to_string(lines[static_cast<std::size_t>(i)].label));

  BraidWord travelled;  // braid of the path from the base fiber to the current crossing
  std::vector<int> cur = order;
  for (const Crossing& c : *crossings) {
    std::vector<int> pos;
    for (int l : c.lines)
      pos.push_back(static_cast<int>(std::find(cur.begin(), cur.end(), l) - cur.begin()) + 1);
    std::sort(pos.begin(), pos.end());
    const int lo = pos.front();
    const int hi = pos.back();
    if (hi - lo + 1 != static_cast<int>(pos.size())) throw std::logic_error("crossing strands not adjacent");
    std::vector<Conjugator> conj;
    for (int l : braid_inverse(travelled)) {
      const int k = std::abs(l);
      conj.push_back(Conjugator{Factor{Path{f.frame.labels[static_cast<std::size_t>(k - 1)],
                                            f.frame.labels[static_cast<std::size_t>(k)], {}},
                                       1, {}},
                                l > 0 ? 1 : -1});
    }
    for (int j = lo + 1; j <= hi; ++j)
      for (int i = lo; i < j; ++i) {
        Factor node{straight_path(f.frame, f.frame.labels[static_cast<std::size_t>(i - 1)],
                                  f.frame.labels[static_cast<std::size_t>(j - 1)]),
                    2, conj};
        f.factors.push_back(std::move(node));
      }
    // Passing a crossing on the chosen side undoes its half twist.
    const BraidWord pass = braid_inverse(half_twist_block(lo, hi));
    travelled.insert(travelled.end(), pass.begin(), pass.end());
    std::reverse(cur.begin() + lo - 1, cur.begin() + hi);
  }
  return f;
}

}  // namespace galcov
