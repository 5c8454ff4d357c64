#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "galcov/catalog.hpp"
#include "galcov/properties.hpp"
#include "galcov/serialize.hpp"

using namespace galcov;

namespace {

constexpr int kUsage = 2;

std::string render_case_text(const CaseRecord& rec, const CaseResult& r) {
  std::ostringstream os;
  os << rec.title << " [" << r.id << (r.param ? " n=" + std::to_string(r.param) : "") << "]\n";
  os << "  planes: " << rec.degree() << ", factorization: " << status_name(rec.status) << "\n";
  if (r.factorization_degree)
    os << "  factorization degree " << *r.factorization_degree << " (full twist needs " << *r.full_degree << ")"
       << (r.full_twist && *r.full_twist ? ", equals the full twist" : "") << "\n";
  if (r.hom) {
    os << "  map to S_" << r.hom->degree << ":";
    for (std::size_t i = 0; i < r.hom->images.size(); ++i) os << " " << r.group.gens[i] << "->" << perm_cycles(r.hom->images[i]);
    os << "\n";
  }
  os << "  presentation: " << r.group.gens.size() << " generators, " << r.group.relators.size() << " relators\n";
  if (r.square_quotient_order) os << "  |G/<squares>| = " << *r.square_quotient_order << "\n";
  for (const ProbeResult& p : r.probes)
    os << "  probe " << p.relator << ": " << (p.closed ? std::to_string(p.cosets) + " cosets" : "not closed") << "\n";
  os << "  certificates:\n";
  for (const std::string& c : r.certificates) os << "    - " << c << "\n";
  if (!r.error.empty()) os << "  error: " << r.error << "\n";
  os << "  verdict: " << (r.error.empty() ? r.identity.summary() : "none") << "\n";
  os << "  claim: " << r.claim << "\n";
  for (const std::string& n : rec.notes) os << "  note: " << n << "\n";
  os << "  outcome: " << outcome_name(r.outcome) << " (" << r.seconds << " s)\n";
  return os.str();
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Agree: return 0;
    case Outcome::Indeterminate: return 3;
    default: return 1;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw StructuralError("cannot write " + out);
  f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of Galois covers of degenerating surfaces"};
  app.require_subcommand(1);

  Limits limits;
  std::string format = "text";
  std::string out;
  int n = 3;
  std::uint64_t seed = 20240917;
  app.add_option("--coset-cap", limits.coset_cap, "maximum live cosets per enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tietze-budget", limits.tietze_budget, "maximum Tietze steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", out, "write output here instead of stdout (a directory for export)");
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

  int enum_n = 0;
  auto* en = app.add_subcommand("enumerate", "list admissible planar arrangements with n planes");
  en->add_option("n", enum_n, "number of planes (1..8)")->required();

  std::string case_id;
  auto* cs = app.add_subcommand("case", "run the pipeline on one case");
  cs->add_option("id", case_id, "case id")->required();
  cs->add_option("--n", n, "parameter of the (1,n) family")->check(CLI::Range(1, 4))->capture_default_str();

  auto* va = app.add_subcommand("verify-all", "run every case and compare with the printed claims");
  va->add_option("--n", n, "parameter of the (1,n) family")->check(CLI::Range(1, 4))->capture_default_str();

  auto* ex = app.add_subcommand("export", "write the case data files");

  int trials = 200;
  auto* pr = app.add_subcommand("properties", "randomized invariant checks");
  pr->add_option("--trials", trials, "trials per property")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (en->parsed()) {
      if (enum_n < 1 || enum_n > 8) {
        std::cerr << "enumerate: n must be between 1 and 8\n";
        return kUsage;
      }
      const auto arrs = enumerate(enum_n);
      std::ostringstream os;
      os << arrs.size() << " arrangement(s) with " << enum_n << " planes\n";
      int k = 0;
      for (const Arrangement& a : arrs) {
        os << "#" << ++k << " triangles:";
        for (const auto& t : a.triangles) os << " {" << t[0] << "," << t[1] << "," << t[2] << "}";
        std::map<int, int> census;
        for (const SingularPoint& p : classify_points(a))
          if (p.multiplicity > 0) ++census[p.multiplicity];
        os << "  points:";
        for (const auto& [m, c] : census) os << " " << c << "x" << m << "-point";
        os << "\n";
      }
      if (format == "json") {
        std::string body = "[";
        for (std::size_t i = 0; i < arrs.size(); ++i) body += (i ? "," : "") + arrangement_to_json(arrs[i]);
        emit(body + "]", out);
      } else {
        emit(os.str(), out);
      }
      return 0;
    }
    if (cs->parsed()) {
      const auto ids = case_ids();
      if (std::find(ids.begin(), ids.end(), case_id) == ids.end()) {
        std::cerr << "unknown case '" << case_id << "'; known:";
        for (const auto& id : ids) std::cerr << " " << id;
        std::cerr << "\n";
        return kUsage;
      }
      const CaseRecord rec = load_case(case_id, n);
      const CaseResult r = compute_case(rec, limits);
      emit(format == "json" ? case_result_to_json(r) : render_case_text(rec, r), out);
      return exit_for(r.outcome);
    }
    if (va->parsed()) {
      const Report rep = verify_all(limits, n);
      emit(format == "json" ? rep.render_json() : rep.render_text(), out);
      return rep.exit_code();
    }
    if (ex->parsed()) {
      const std::filesystem::path root = out.empty() ? std::filesystem::path(GALCOV_DEFAULT_DATA_DIR) : std::filesystem::path(out);
      export_cases(root);
      std::cout << "wrote " << (root / "cases").string() << "\n";
      return 0;
    }
    if (pr->parsed()) {
      const auto results = run_properties(seed, trials);
      bool ok = true;
      for (const PropertyResult& p : results) {
        std::cout << (p.passed ? "ok   " : "FAIL ") << p.name << " (" << p.trials << " trials)";
        if (!p.passed) std::cout << ": " << p.detail;
        std::cout << "\n";
        ok = ok && p.passed;
      }
      return ok ? 0 : 1;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
