#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "galcov/fpgroup.hpp"
#include "galcov/smith.hpp"

namespace galcov {

std::size_t FPGroup::total_length() const {
  std::size_t n = 0;
  for (const Word& r : relators) n += r.size();
  return n;
}

std::string FPGroup::render() const {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << gens[i];
  out << " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out << (i ? ", " : "") << format_word(relators[i], gens);
  out << " >";
  return out.str();
}

FPGroup normalized(const FPGroup& g) {
  FPGroup out;
  out.gens = g.gens;
  std::set<Word> seen;
  for (const Word& r : g.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(relator_canonical(c)).second) out.relators.push_back(std::move(c));
  }
  return out;
}

FPGroup quotient_by_squares(const FPGroup& g, const std::vector<int>& targets) {
  FPGroup out = g;
  for (int t : targets) {
    if (t < 0 || t >= g.ngens()) throw StructuralError("square target out of range");
    out.relators.push_back({gen_letter(t), gen_letter(t)});
  }
  return out;
}

FPGroup quotient_by_squares(const FPGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.ngens()));
  for (int i = 0; i < g.ngens(); ++i) all[static_cast<std::size_t>(i)] = i;
  return quotient_by_squares(g, all);
}

CheckedHom sym_hom(const FPGroup& g, const std::vector<Perm>& images, int degree) {
  if (static_cast<int>(images.size()) != g.ngens()) throw StructuralError("one image per generator required");
  for (const Perm& p : images)
    if (static_cast<int>(p.size()) != degree) throw StructuralError("image of wrong degree");
  for (const Word& r : g.relators)
    if (!is_identity(perm_eval(r, images, degree))) throw HomError("not a homomorphism: relator " + format_word(r, g.gens) + " is not sent to the identity", r);

  std::vector<int> orbit{0};
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  if (degree > 0) seen[0] = true;
  for (std::size_t h = 0; h < orbit.size(); ++h)
    for (const Perm& p : images) {
      const int nx = p[static_cast<std::size_t>(orbit[h])];
      if (!seen[static_cast<std::size_t>(nx)]) {
        seen[static_cast<std::size_t>(nx)] = true;
        orbit.push_back(nx);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  if (static_cast<int>(orbit.size()) != degree) throw HomError("image is intransitive, so not onto S_n", {}, orbit);

  std::size_t full = 1;
  for (int i = 2; i <= degree; ++i) full *= static_cast<std::size_t>(i);
  CheckedHom hom;
  hom.images = images;
  hom.degree = degree;
  // A transitive group generated by transpositions is the full symmetric group.
  bool all_transpositions = true;
  for (const Perm& p : images) {
    int moved = 0;
    for (int i = 0; i < degree; ++i) moved += p[static_cast<std::size_t>(i)] != i;
    if (moved != 2 && moved != 0) all_transpositions = false;
  }
  if (all_transpositions) {
    hom.image_order = full;
  } else {
    auto elems = perm_group_elements(images, degree, full);
    hom.image_order = elems ? elems->size() : full + 1;
  }
  if (hom.image_order != full) throw HomError("image is a proper subgroup of S_n", {}, orbit);
  hom.surjective_on_symmetric = true;
  return hom;
}

KernelPresentation kernel_presentation(const FPGroup& g, const CheckedHom& hom, std::size_t limit) {
  auto elems = perm_group_elements(hom.images, hom.degree, limit);
  if (!elems) throw CapacityError("image group has more than " + std::to_string(limit) + " elements");
  const std::vector<Perm>& el = *elems;
  const int n = static_cast<int>(el.size());
  const int ng = g.ngens();
  std::map<Perm, int> index;
  for (int i = 0; i < n; ++i) index[el[static_cast<std::size_t>(i)]] = i;

  std::vector<int> fwd(static_cast<std::size_t>(n * ng));
  std::vector<int> back(static_cast<std::size_t>(n * ng));
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < ng; ++x) {
      const int d = index.at(perm_mul(el[static_cast<std::size_t>(c)], hom.images[static_cast<std::size_t>(x)]));
      fwd[static_cast<std::size_t>(c * ng + x)] = d;
      back[static_cast<std::size_t>(d * ng + x)] = c;
    }

  // Schreier transversal by breadth-first search.
  std::vector<Word> rep(static_cast<std::size_t>(n));
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::vector<bool> tree(static_cast<std::size_t>(n * ng), false);
  std::vector<int> queue{0};
  reached[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int c = queue[h];
    for (int x = 0; x < ng; ++x) {
      const int d = fwd[static_cast<std::size_t>(c * ng + x)];
      if (reached[static_cast<std::size_t>(d)]) continue;
      reached[static_cast<std::size_t>(d)] = true;
      tree[static_cast<std::size_t>(c * ng + x)] = true;
      rep[static_cast<std::size_t>(d)] = rep[static_cast<std::size_t>(c)];
      rep[static_cast<std::size_t>(d)].push_back(gen_letter(x));
      queue.push_back(d);
    }
  }

  KernelPresentation out;
  out.index = n;
  std::vector<int> sgen(static_cast<std::size_t>(n * ng), -1);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < ng; ++x) {
      if (tree[static_cast<std::size_t>(c * ng + x)]) continue;
      const int id = static_cast<int>(out.in_parent.size());
      sgen[static_cast<std::size_t>(c * ng + x)] = id;
      Word w = rep[static_cast<std::size_t>(c)];
      w.push_back(gen_letter(x));
      w = concat(w, inverse(rep[static_cast<std::size_t>(fwd[static_cast<std::size_t>(c * ng + x)])]));
      out.in_parent.push_back(free_reduce(w));
      out.group.gens.push_back("k" + std::to_string(id + 1));
    }

  for (int c = 0; c < n; ++c)
    for (const Word& r : g.relators) {
      Word w;
      int cur = c;
      for (Letter l : r) {
        const int x = letter_gen(l);
        if (l > 0) {
          const int id = sgen[static_cast<std::size_t>(cur * ng + x)];
          if (id >= 0) w.push_back(gen_letter(id));
          cur = fwd[static_cast<std::size_t>(cur * ng + x)];
        } else {
          const int prev = back[static_cast<std::size_t>(cur * ng + x)];
          const int id = sgen[static_cast<std::size_t>(prev * ng + x)];
          if (id >= 0) w.push_back(gen_letter(id, -1));
          cur = prev;
        }
      }
      if (cur != c) throw std::logic_error("relator does not lie in the kernel");
      out.group.relators.push_back(w);
    }
  out.group = normalized(out.group);
  return out;
}

std::string AbelianInvariants::render() const {
  std::ostringstream out;
  out << "rank " << rank << ", torsion (";
  for (std::size_t i = 0; i < torsion.size(); ++i) out << (i ? "," : "") << torsion[i];
  out << ")";
  return out.str();
}

AbelianInvariants abelianization(const FPGroup& g) {
  const int ng = g.ngens();
  AbelianInvariants inv;
  if (g.relators.empty() || ng == 0) {
    inv.rank = ng;
    return inv;
  }
  IntMatrix<BigInt> m(static_cast<Eigen::Index>(g.relators.size()), ng);
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    const auto sums = exponent_sums(g.relators[i], ng);
    for (int j = 0; j < ng; ++j) m(static_cast<Eigen::Index>(i), j) = BigInt(sums[static_cast<std::size_t>(j)]);
  }
  const SmithForm<BigInt> snf = smith_normal_form(m);
  inv.rank = ng - snf.rank;
  for (const BigInt& d : snf.invariants)
    if (d > 1) inv.torsion.push_back(d.convert_to<std::int64_t>());
  return inv;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "trivial";
    case Verdict::Finite:
      return "finite";
    case Verdict::FreeAbelian:
      return "free-abelian";
    case Verdict::ElementaryAbelian2:
      return "elementary-abelian-2";
    case Verdict::NormallyGenerated:
      return "normally-generated";
    case Verdict::InvariantsOnly:
      return "invariants-only";
  }
  return "?";
}

std::string GroupIdentity::summary() const {
  std::ostringstream out;
  out << verdict_name(verdict);
  if (order) out << " order " << *order;
  if (invariants_known) out << ", " << invariants.render();
  return out.str();
}

}  // namespace galcov
