// One line per acceptance criterion: PASS/FAIL, what was measured, wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "galcov/catalog.hpp"
#include "galcov/properties.hpp"
#include "oracles.hpp"

using namespace galcov;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool pass = true;
  std::ostringstream what;
  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      what << " [failed: " << msg << "]";
    }
  }
};

int failures = 0;

void criterion(int k, const std::string& name, const std::function<void(Line&)>& body) {
  Line line;
  const auto t0 = Clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.pass = false;
    line.what << " [exception: " << e.what() << "]";
  }
  const double s = since(t0);
  if (!line.pass) ++failures;
  std::printf("%s  %d. %-34s %8.2f s  %s\n", line.pass ? "PASS" : "FAIL", k, name.c_str(), s, line.what.str().c_str());
  std::fflush(stdout);
}

std::string order_str(const std::optional<std::size_t>& o) { return o ? std::to_string(*o) : "?"; }

}  // namespace

int main() {
  criterion(1, "enumeration counts", [](Line& l) {
    const std::size_t want[] = {1, 2, 5};
    for (int n = 2; n <= 4; ++n) {
      const auto t0 = Clock::now();
      const std::size_t got = enumerate(n).size();
      const double s = since(t0);
      l.what << "n=" << n << ":" << got << " (" << s << " s) ";
      l.require(got == want[n - 2], "count for n=" + std::to_string(n));
      l.require(s < 1.0, "runtime for n=" + std::to_string(n));
    }
  });

  criterion(2, "degree bookkeeping", [](Line& l) {
    const auto t0 = Clock::now();
    const CaseRecord cayley = builtin_case("cayley");
    const int printed = factorization_degree(cayley.factorization);
    const Factorization degenerate = line_arrangement_monodromy(cayley.arrangement);
    const int before = factorization_degree(degenerate);
    const bool is_delta = braid_equal(factorization_braid(degenerate), full_twist(3), 3);
    const int after = factorization_degree(regenerate(degenerate, {"1", "2", "3"}));
    l.what << "printed Cayley " << printed << ", degenerate " << before << (is_delta ? " (= Delta^2_3)" : "")
           << ", regenerated " << after;
    l.require(printed == 30, "printed degree");
    l.require(before == 6 && is_delta, "degenerate full twist");
    l.require(after == 30, "regenerated degree");
    l.require(since(t0) < 1.0, "runtime");
  });

  criterion(3, "Galois-cover verdict table", [](Line& l) {
    for (const std::string id : {"quadric", "f1", "cayley", "f2", "veronese", "p1xp1_12", "cubic_plus_plane", "four_point"}) {
      const CaseResult r = compute_case(builtin_case(id), Limits{});
      const GroupIdentity& g = r.identity;
      bool ok = r.outcome == Outcome::Agree && r.seconds < 60.0;
      if (id == "cayley") {
        ok = ok && g.order == std::optional<std::size_t>(4) && g.invariants == AbelianInvariants{0, {2, 2}};
      } else if (id == "veronese") {
        ok = ok && g.invariants_known && g.invariants == AbelianInvariants{4, {}} &&
             (g.verdict == Verdict::FreeAbelian || g.verdict == Verdict::InvariantsOnly);
      } else if (id == "cubic_plus_plane") {
        ok = ok && g.invariants_known && g.invariants == AbelianInvariants{0, {2, 2, 2, 2, 2, 2, 2}};
      } else {
        ok = ok && g.verdict == Verdict::Trivial;
      }
      l.what << id << "=" << verdict_name(g.verdict);
      if (g.invariants_known && g.verdict != Verdict::Trivial) l.what << " " << g.invariants.render();
      l.what << " (" << static_cast<int>(r.seconds * 100) / 100.0 << " s); ";
      l.require(ok, id);
    }
  });

  criterion(4, "(1,n) square quotients", [](Line& l) {
    const std::size_t want[] = {2, 24, 720};
    for (int n = 1; n <= 3; ++n) {
      const CaseResult r = compute_case(builtin_case("p1xp1_1n", n), Limits{});
      l.what << "n=" << n << ":" << order_str(r.square_quotient_order) << " (" << r.seconds << " s) ";
      l.require(r.square_quotient_order == std::optional<std::size_t>(want[n - 1]), "n=" + std::to_string(n));
      if (n == 3) l.require(r.seconds < 120.0, "runtime n=3");
    }
  });

  criterion(5, "(2,2) normal generator", [](Line& l) {
    const CaseResult r = compute_case(builtin_case("p1xp1_22"), Limits{});
    bool any = false;
    for (const ProbeResult& p : r.probes) {
      l.what << p.relator << " -> " << (p.closed ? std::to_string(p.cosets) : std::string("open")) << "; ";
      any = any || (p.closed && p.cosets == 40320);
    }
    l.what << "squares alone -> " << order_str(r.square_quotient_order);
    l.require(any, "no commutator closes at 40320");
    l.require(r.seconds < 600.0, "runtime");
  });

  criterion(6, "property suites", [](Line& l) {
    const auto t0 = Clock::now();
    const std::uint64_t seed = 20240917;
    const int trials = 200;
    for (const PropertyResult& p : run_properties(seed, trials)) l.require(p.passed && p.trials >= trials, p.name + " " + p.detail);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int t = 0; t < trials; ++t) {
      oracle::Mat m(4, std::vector<long long>(4));
      for (auto& row : m)
        for (auto& v : row) v = entry(rng);
      if (oracle::naive_smith(m) != oracle::library_smith(m)) {
        l.require(false, "Smith form differs from row reduction at trial " + std::to_string(t));
        break;
      }
    }
    for (int t = 0; t < trials; ++t) {
      const oracle::TableGroup g = oracle::random_table_group(rng, 60);
      if (!oracle::table_matches(todd_coxeter(oracle::scramble(g.presentation, rng), {}, 100000), g)) {
        l.require(false, "coset table differs from multiplication table at trial " + std::to_string(t));
        break;
      }
    }
    l.what << "4 library properties + Smith vs row reduction + Todd-Coxeter vs multiplication table, " << trials
           << " trials each, seed " << seed;
    l.require(since(t0) < 30.0, "runtime");
  });

  criterion(7, "cross-validation", [](Line& l) {
    for (const std::string id : {"cayley", "p1xp1_12"}) {
      const CaseResult r = compute_case(builtin_case(id), Limits{});
      const bool ok = r.cross && r.cross->agree;
      l.what << id << ": " << (r.cross ? r.cross->assembled.render() : std::string("not run")) << "; ";
      l.require(ok, id);
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
