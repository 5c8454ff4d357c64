#include "galcov/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

namespace galcov {

std::string status_name(FactorizationStatus s) {
  switch (s) {
    case FactorizationStatus::Complete: return "complete";
    case FactorizationStatus::Partial: return "partial";
    case FactorizationStatus::Absent: return "absent";
  }
  return "absent";
}

FactorizationStatus parse_status(const std::string& s) {
  if (s == "complete") return FactorizationStatus::Complete;
  if (s == "partial") return FactorizationStatus::Partial;
  if (s == "absent") return FactorizationStatus::Absent;
  throw StructuralError("unknown factorization status '" + s + "'");
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Agree: return "agree";
    case Outcome::Disagree: return "disagree";
    case Outcome::Indeterminate: return "indeterminate";
    case Outcome::Error: return "error";
  }
  return "error";
}

std::vector<Perm> CaseRecord::sym_images(const Presentation& pres) const {
  const int n = degree();
  std::vector<Perm> out;
  for (const std::string& name : pres.gens) {
    const GenName gn = GenName::parse(name);
    if (gn.line < 1 || gn.line > static_cast<int>(line_map.size()))
      throw StructuralError("generator " + name + " has no line in the line map of " + id);
    const auto& t = line_map[static_cast<std::size_t>(gn.line - 1)];
    out.push_back(transposition(n, t[0] - 1, t[1] - 1));
  }
  return out;
}

std::string QuotientProfile::render() const {
  std::ostringstream os;
  os << "index<=" << max_index << ":";
  for (const auto& [idx, ord] : entries) os << " " << idx << "/" << (ord == 0 ? std::string("big") : std::to_string(ord));
  return os.str();
}

QuotientProfile quotient_profile(const FPGroup& g, int max_index, std::size_t max_order) {
  QuotientProfile q;
  q.max_index = max_index;
  for (const LowIndexSubgroup& s : low_index_subgroups(g, max_index)) {
    const auto elems = perm_group_elements(s.action, s.index, max_order);
    q.entries.emplace_back(s.index, elems ? elems->size() : 0);
  }
  std::sort(q.entries.begin(), q.entries.end());
  return q;
}

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

IdentifyLimits identify_limits(const Limits& l) {
  return IdentifyLimits{l.coset_cap, l.tietze_budget, l.low_index_max, l.quotient_order_max};
}

bool matches(const Expectation& e, const GroupIdentity& id, const std::optional<bool>& section) {
  if (std::find(e.accept.begin(), e.accept.end(), id.verdict) == e.accept.end()) return false;
  if (e.section && !(section && *section)) return false;
  if (e.order && id.order != e.order) return false;
  if (e.invariants && (!id.invariants_known || id.invariants != *e.invariants)) return false;
  return true;
}

/// Looks for a normal subgroup of `k` with elementary abelian quotient of the
/// claimed order and the claimed abelianization.
bool find_section(const FPGroup& k, const SectionClaim& claim, const Limits& limits, std::string& evidence) {
  std::size_t normal = 0;
  for (const LowIndexSubgroup& s : low_index_subgroups(k, claim.index)) {
    if (s.index != claim.index) continue;
    const auto elems = perm_group_elements(s.action, s.index, static_cast<std::size_t>(s.index));
    if (!elems || elems->size() != static_cast<std::size_t>(s.index)) continue;  // not normal
    if (!std::all_of(elems->begin(), elems->end(), [](const Perm& e) { return is_identity(perm_mul(e, e)); })) continue;
    ++normal;
    CheckedHom h;
    h.images = s.action;
    h.degree = s.index;
    h.image_order = elems->size();
    const KernelPresentation sub = kernel_presentation(k, h, limits.coset_cap);
    if (abelianization(sub.group) == claim.invariants) {
      evidence = "normal subgroup of index " + std::to_string(s.index) +
                 " with elementary abelian quotient and abelianization " + claim.invariants.render();
      return true;
    }
  }
  evidence = "none of the " + std::to_string(normal) + " normal subgroups of index " + std::to_string(claim.index) +
             " with elementary abelian quotient has abelianization " + claim.invariants.render();
  return false;
}

/// Order enumeration on a Tietze-simplified copy; with many generators the
/// raw presentation can need millions of cosets for a group of order 40320.
CosetTable enumerate_order(const FPGroup& g, const Limits& limits) {
  return todd_coxeter(tietze_simplify(g, limits.tietze_budget).group, {}, limits.coset_cap);
}

// Reidemeister-Schreier produces index * (ngens - 1) + 1 generators; past this
// the kernel is not formed at all.
constexpr std::size_t kKernelGeneratorLimit = 200000;

}  // namespace

CaseResult compute_case(const CaseRecord& rec, const Limits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseResult res;
  res.id = rec.id;
  res.param = rec.param;
  res.claim = rec.expected.claim;
  bool capped = false;
  try {
    const int n = rec.degree();
    if (rec.status != FactorizationStatus::Absent && !rec.factorization.factors.empty()) {
      const Factorization& f = rec.factorization;
      const int p = f.frame.size();
      res.factorization_degree = factorization_degree(f);
      res.full_degree = p * (p - 1);
      res.full_twist = *res.factorization_degree == *res.full_degree &&
                       braid_equal(factorization_braid(f), full_twist(p), p);
      res.assembled = assemble_presentation(f);
    }
    const Presentation& source = rec.displayed.gens.empty() ? *res.assembled : rec.displayed;
    res.group = source.group();
    const FPGroup squares = quotient_by_squares(res.group);
    res.simplified = squares;

    const CheckedHom hom = sym_hom(squares, rec.sym_images(source), n);
    res.hom = hom;
    res.certificates.push_back("relators map to the identity under the line transpositions; image of order " +
                               std::to_string(hom.image_order) +
                               (hom.surjective_on_symmetric ? " (all of S_" + std::to_string(n) + ")" : ""));
    if (!hom.surjective_on_symmetric) throw StructuralError("the line transpositions do not generate S_" + std::to_string(n));

    const CosetTable table = enumerate_order(squares, limits);
    if (table.closed) {
      res.square_quotient_order = static_cast<std::size_t>(table.cosets);
      res.certificates.push_back("G/<squares> enumerates to " + std::to_string(table.cosets) + " cosets");
    } else {
      res.certificates.push_back("G/<squares> exceeded " + std::to_string(limits.coset_cap) + " cosets");
    }

    for (const std::string& text : rec.probes) {
      FPGroup probe = squares;
      probe.relators.push_back(parse_word(text, probe.gens));
      const CosetTable t = enumerate_order(probe, limits);
      res.probes.push_back(ProbeResult{text, t.closed, static_cast<std::size_t>(t.cosets)});
      res.certificates.push_back("adding " + text + ": " +
                                 (t.closed ? "closes at " + std::to_string(t.cosets) + " cosets"
                                           : "exceeds " + std::to_string(limits.coset_cap) + " cosets"));
    }

    const std::size_t sym_order = factorial(n);
    GroupIdentity& id = res.identity;
    const auto probe_hit = std::find_if(res.probes.begin(), res.probes.end(),
                                        [&](const ProbeResult& p) { return p.closed && p.cosets == sym_order; });
    if (res.square_quotient_order && *res.square_quotient_order == sym_order) {
      id.verdict = Verdict::Trivial;
      id.order = 1;
      id.invariants = AbelianInvariants{};
      id.invariants_known = true;
      id.certificates.push_back("|G/<squares>| = |S_" + std::to_string(n) + "| and the map is onto, so the kernel is trivial");
      res.kernel_generators = 0;
    } else if (probe_hit != res.probes.end()) {
      id.verdict = Verdict::NormallyGenerated;
      id.certificates.push_back("the kernel is the normal closure of " + probe_hit->relator +
                                ": adding it leaves exactly S_" + std::to_string(n));
      if (res.square_quotient_order) id.order = *res.square_quotient_order / sym_order;
    } else {
      const std::size_t kgens = hom.image_order * static_cast<std::size_t>(squares.ngens() - 1) + 1;
      if (kgens > kKernelGeneratorLimit) {
        id.verdict = Verdict::InvariantsOnly;
        id.certificates.push_back("kernel would need " + std::to_string(kgens) + " Schreier generators; not formed");
        capped = true;
      } else {
        const KernelPresentation kernel = kernel_presentation(squares, hom, limits.coset_cap);
        res.kernel_generators = kernel.group.gens.size();
        const TietzeResult tz = tietze_simplify(kernel.group, limits.tietze_budget);
        res.tietze_exhausted = tz.budget_exhausted;
        res.certificates.push_back("kernel: Reidemeister-Schreier over " + std::to_string(kernel.index) + " cosets gives " +
                                   std::to_string(kernel.group.gens.size()) + " generators, " +
                                   std::to_string(tz.group.gens.size()) + " after Tietze moves");
        // The kernel's own low-index quotients; scanning the ambient group to the
        // same index costs minutes for six generators.
        id = identify(tz.group, identify_limits(limits));
        if (rec.expected.section) {
          std::string evidence;
          res.section_found = find_section(tz.group, *rec.expected.section, limits, evidence);
          res.certificates.push_back(evidence);
        }
        if (res.square_quotient_order && !id.order) {
          id.order = *res.square_quotient_order / sym_order;
          id.certificates.push_back("kernel order = |G/<squares>| / |S_" + std::to_string(n) + "|");
        }
        if (res.square_quotient_order && id.order && *id.order * sym_order != *res.square_quotient_order)
          throw StructuralError("kernel order and square quotient order disagree");
      }
    }
    for (const std::string& c : id.certificates)
      if (c.find("exceeded") != std::string::npos) capped = true;

    if (rec.cross_validate && res.assembled) {
      CrossCheck cc;
      const FPGroup a = quotient_by_squares(res.assembled->group());
      const FPGroup d = quotient_by_squares(rec.displayed.group());
      cc.assembled = quotient_profile(a, limits.cross_index, limits.quotient_order_max);
      cc.displayed = quotient_profile(d, limits.cross_index, limits.quotient_order_max);
      const CosetTable ta = enumerate_order(a, limits);
      const CosetTable td = enumerate_order(d, limits);
      if (ta.closed) cc.assembled_square_order = static_cast<std::size_t>(ta.cosets);
      if (td.closed) cc.displayed_square_order = static_cast<std::size_t>(td.cosets);
      cc.agree = cc.assembled == cc.displayed && cc.assembled_square_order == cc.displayed_square_order;
      res.certificates.push_back(std::string("cross-check of braid-derived and printed relations: ") +
                                 (cc.agree ? "same" : "different") + " finite quotients (" + cc.assembled.render() +
                                 " vs " + cc.displayed.render() + ")");
      res.cross = cc;
    }

    if (matches(rec.expected, id, res.section_found)) {
      res.outcome = Outcome::Agree;
    } else if (capped || id.verdict == Verdict::InvariantsOnly) {
      res.outcome = Outcome::Indeterminate;
    } else {
      res.outcome = Outcome::Disagree;
    }
  } catch (const HomError& e) {
    res.outcome = Outcome::Error;
    res.error = e.what();
  } catch (const CapacityError& e) {
    res.outcome = Outcome::Indeterminate;
    res.error = e.what();
  } catch (const StructuralError& e) {
    res.outcome = Outcome::Error;
    res.error = e.what();
  }
  res.certificates.insert(res.certificates.end(), res.identity.certificates.begin(), res.identity.certificates.end());
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << std::left << std::setw(20) << "case" << std::setw(22) << "verdict" << std::setw(14) << "outcome" << std::setw(10)
     << "seconds"
     << "claim\n";
  for (const CaseResult& r : rows) {
    const std::string name = r.param ? r.id + "(" + std::to_string(r.param) + ")" : r.id;
    os << std::setw(20) << name << std::setw(22) << (r.error.empty() ? verdict_name(r.identity.verdict) : "-")
       << std::setw(14) << outcome_name(r.outcome) << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds
       << r.claim << "\n";
    if (!r.error.empty()) os << "    error: " << r.error << "\n";
  }
  return os.str();
}

int Report::exit_code() const {
  bool indeterminate = false;
  for (const CaseResult& r : rows) {
    if (r.outcome == Outcome::Disagree || r.outcome == Outcome::Error) return 1;
    if (r.outcome == Outcome::Indeterminate) indeterminate = true;
  }
  return indeterminate ? 3 : 0;
}

Report verify_all(const Limits& limits, int n) {
  // Cases are independent; rows keep catalog order.
  std::vector<std::future<CaseResult>> jobs;
  for (const std::string& id : case_ids()) {
    jobs.push_back(std::async(std::launch::async, [id, n, limits] {
      try {
        return compute_case(load_case(id, n), limits);
      } catch (const std::exception& e) {
        CaseResult r;
        r.id = id;
        r.outcome = Outcome::Error;
        r.error = e.what();
        return r;
      }
    }));
  }
  Report rep;
  for (auto& j : jobs) rep.rows.push_back(j.get());
  return rep;
}

}  // namespace galcov
