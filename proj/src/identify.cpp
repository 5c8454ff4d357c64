#include <numeric>

#include "galcov/fpgroup.hpp"

namespace galcov {

namespace {

bool all_twos(const std::vector<std::int64_t>& t) {
  for (std::int64_t d : t)
    if (d != 2) return false;
  return true;
}

}  // namespace

GroupIdentity identify(const FPGroup& g, const IdentifyLimits& limits, const FPGroup* ambient, const std::vector<Word>* in_ambient) {
  GroupIdentity id;
  id.invariants = abelianization(g);
  id.invariants_known = true;
  id.certificates.push_back("abelianization (Smith normal form): " + id.invariants.render());

  if (id.invariants.rank == 0) {
    const CosetTable t = todd_coxeter(g, {}, limits.coset_cap);
    if (!t.closed) {
      id.certificates.push_back("coset enumeration over the trivial subgroup exceeded " + std::to_string(limits.coset_cap) + " cosets");
      id.verdict = Verdict::InvariantsOnly;
      return id;
    }
    const auto n = static_cast<std::size_t>(t.cosets);
    id.order = n;
    id.certificates.push_back("coset enumeration over the trivial subgroup closed at " + std::to_string(n) + " cosets (" +
                              std::to_string(t.defined) + " defined)");
    if (n == 1) {
      id.verdict = Verdict::Trivial;
      return id;
    }
    const std::int64_t prod = std::accumulate(id.invariants.torsion.begin(), id.invariants.torsion.end(), std::int64_t{1},
                                              [](std::int64_t a, std::int64_t b) { return a * b; });
    if (static_cast<std::size_t>(prod) == n) {
      id.certificates.push_back("order equals the abelianization order, so the group is abelian");
      id.verdict = all_twos(id.invariants.torsion) ? Verdict::ElementaryAbelian2 : Verdict::Finite;
    } else {
      id.verdict = Verdict::Finite;
    }
    return id;
  }

  if (!id.invariants.torsion.empty()) {
    id.certificates.push_back("infinite abelianization with torsion; no structural claim");
    id.verdict = Verdict::InvariantsOnly;
    return id;
  }

  // Torsion-free abelianization: look for a finite quotient in which two
  // generators fail to commute.
  const FPGroup& source = ambient ? *ambient : g;
  std::vector<Word> words;
  if (ambient && in_ambient) {
    words = *in_ambient;
  } else {
    for (int i = 0; i < g.ngens(); ++i) words.push_back({gen_letter(i)});
  }
  const auto subs = low_index_subgroups(source, limits.low_index_max, 20000);
  std::size_t used = 0;
  for (const LowIndexSubgroup& s : subs) {
    const auto elems = perm_group_elements(s.action, s.index, limits.quotient_order_max);
    if (!elems) continue;
    ++used;
    std::vector<Perm> img;
    for (const Word& w : words) img.push_back(perm_eval(w, s.action, s.index));
    for (std::size_t i = 0; i < img.size(); ++i)
      for (std::size_t j = i + 1; j < img.size(); ++j) {
        if (perm_mul(img[i], img[j]) == perm_mul(img[j], img[i])) continue;
        id.certificates.push_back("generators " + g.gens[i] + " and " + g.gens[j] + " do not commute in a quotient of order " +
                                  std::to_string(elems->size()));
        id.verdict = Verdict::InvariantsOnly;
        return id;
      }
  }
  id.certificates.push_back("all generator commutators vanish in " + std::to_string(used) + " finite quotients (low-index scan, index <= " +
                            std::to_string(limits.low_index_max) + ", image order <= " + std::to_string(limits.quotient_order_max) + ")");
  id.verdict = Verdict::FreeAbelian;
  return id;
}

}  // namespace galcov
