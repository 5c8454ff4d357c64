#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galcov/arrangement.hpp"
#include "galcov/braid.hpp"
#include "galcov/fpgroup.hpp"
#include "galcov/vankampen.hpp"

namespace galcov {

enum class FactorizationStatus { Complete, Partial, Absent };
std::string status_name(FactorizationStatus s);
FactorizationStatus parse_status(const std::string& s);

/// A normal subgroup N of the kernel K with K/N elementary abelian of order
/// `index` and N of the given abelian invariants, as in Z^6 x| Z_2^2.
struct SectionClaim {
  int index = 0;
  AbelianInvariants invariants;
};

/// What the literature claims for a case, plus how close a computed
/// identity has to be to count as agreement.
struct Expectation {
  std::vector<Verdict> accept;
  std::optional<std::size_t> order;
  std::optional<AbelianInvariants> invariants;
  std::optional<SectionClaim> section;
  std::string claim;  // e.g. "Z_2 x Z_2"
  std::string quote;  // the sentence the claim is read from
};

struct CaseRecord {
  std::string id;
  std::string title;
  int param = 0;  // n for the (1,n) family, 0 otherwise

  Arrangement arrangement;
  Factorization factorization;
  FactorizationStatus status = FactorizationStatus::Absent;
  /// Factor blocks as printed, one string per block.
  std::vector<std::string> notation;
  /// Set when factor paths come from figures and were reconstructed.
  bool paths_reconstructed = false;

  /// Relations as printed. Empty gens means none are printed.
  Presentation displayed;
  /// Transposition (1-based planes) of each line; generators G_i and G_ip
  /// both map to entry i - 1.
  std::vector<std::array<int, 2>> line_map;

  /// Compare factorization-derived and printed relations on finite quotients.
  bool cross_validate = false;
  /// Candidate normal generators: each is added on its own to the
  /// square quotient and the result is enumerated.
  std::vector<std::string> probes;

  Expectation expected;
  std::vector<std::string> notes;

  int degree() const { return arrangement.n(); }
  /// Images of the generators of `pres` under line_map.
  std::vector<Perm> sym_images(const Presentation& pres) const;
};

std::vector<std::string> case_ids();
bool is_parametric(const std::string& id);

/// The compiled-in record. Throws StructuralError for unknown ids.
CaseRecord builtin_case(const std::string& id, int n = 3);

/// Builtin record, or the one under $GALCOV_DATA_DIR/cases when that
/// variable is set.
CaseRecord load_case(const std::string& id, int n = 3);

struct Limits {
  std::size_t coset_cap = 500000;
  int tietze_budget = 20000;
  int low_index_max = 12;
  std::size_t quotient_order_max = 1000;
  /// Index bound for the cross-validation scan.
  int cross_index = 4;
};

/// (index, order of the permutation image) for each subgroup found by the
/// low-index scan; orders above the bound are recorded as 0.
struct QuotientProfile {
  int max_index = 0;
  std::vector<std::pair<int, std::size_t>> entries;
  bool operator==(const QuotientProfile& o) const { return max_index == o.max_index && entries == o.entries; }
  std::string render() const;
};
QuotientProfile quotient_profile(const FPGroup& g, int max_index, std::size_t max_order);

struct CrossCheck {
  QuotientProfile assembled;
  QuotientProfile displayed;
  std::optional<std::size_t> assembled_square_order;
  std::optional<std::size_t> displayed_square_order;
  bool agree = false;
};

struct ProbeResult {
  std::string relator;
  bool closed = false;
  std::size_t cosets = 0;
};

enum class Outcome { Agree, Disagree, Indeterminate, Error };
std::string outcome_name(Outcome o);

struct CaseResult {
  std::string id;
  int param = 0;
  std::string claim;

  std::optional<int> factorization_degree;
  std::optional<int> full_degree;  // p(p-1)
  std::optional<bool> full_twist;   // product equals Delta^2
  std::optional<Presentation> assembled;
  FPGroup group;       // presentation fed to the pipeline
  FPGroup simplified;  // after squares and Tietze moves
  bool tietze_exhausted = false;

  std::optional<CheckedHom> hom;
  std::optional<std::size_t> square_quotient_order;
  std::optional<std::size_t> kernel_generators;
  std::vector<ProbeResult> probes;
  std::optional<CrossCheck> cross;
  /// Set when a section claim was checked; true when a matching one exists.
  std::optional<bool> section_found;

  GroupIdentity identity;
  Outcome outcome = Outcome::Indeterminate;
  std::string error;
  std::vector<std::string> certificates;
  double seconds = 0;
};

CaseResult compute_case(const CaseRecord& rec, const Limits& limits);

struct Report {
  std::vector<CaseResult> rows;
  std::string render_text() const;
  std::string render_json() const;
  /// 0 all agree, 1 some disagreement, 3 indeterminate rows and no disagreement.
  int exit_code() const;
};

Report verify_all(const Limits& limits, int n = 3);

}  // namespace galcov
