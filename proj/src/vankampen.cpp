#include "galcov/vankampen.hpp"

#include <algorithm>
#include <cctype>

namespace galcov {

GenName GenName::parse(const std::string& s) {
  std::string body = s;
  GenName g;
  if (!body.empty() && body[0] == 'G') body = body.substr(1);
  if (!body.empty() && (body.back() == 'p' || body.back() == '\'')) {
    g.primed = true;
    body.pop_back();
  }
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw StructuralError("bad generator name '" + s + "'");
  g.line = std::stoi(body);
  return g;
}

Word Relation::relator() const {
  switch (kind) {
    case RelationKind::Equality:
      return concat(a, inverse(b));
    case RelationKind::Commutator:
      return commutator(a, b);
    case RelationKind::Braid:
      return braid_relator(a, b);
    case RelationKind::Word:
      return free_reduce(a);
  }
  return {};
}

std::string Relation::render(const std::vector<std::string>& gens) const {
  if (!text.empty()) return text;
  switch (kind) {
    case RelationKind::Equality:
      return format_word(a, gens) + " = " + format_word(b, gens);
    case RelationKind::Commutator:
      return "[" + format_word(a, gens) + ", " + format_word(b, gens) + "]";
    case RelationKind::Braid:
      return "<" + format_word(a, gens) + ", " + format_word(b, gens) + ">";
    case RelationKind::Word:
      return format_word(a, gens);
  }
  return {};
}

FPGroup Presentation::group() const {
  FPGroup g;
  g.gens = gens;
  for (const Relation& r : affine) g.relators.push_back(r.relator());
  if (projective) g.relators.push_back(projective->relator());
  return g;
}

Relation Presentation::parse_relation(const std::string& text) const {
  return Relation{RelationKind::Word, parse_word(text, gens), {}, text};
}

std::vector<Relation> relations_from_factor(const Factor& f, const Frame& frame) {
  const FactorNormalForm nf = factor_normal_form(f, frame);
  const int p = frame.size();
  const std::vector<Word> img = artin_images(nf.conjugator, p);
  const Word& a = img[static_cast<std::size_t>(nf.k - 1)];
  const Word& b = img[static_cast<std::size_t>(nf.k)];
  switch (std::abs(nf.eps)) {
    case 1:
      return {Relation{RelationKind::Equality, a, b, {}}};
    case 2:
      return {Relation{RelationKind::Commutator, a, b, {}}};
    default:
      return {Relation{RelationKind::Braid, a, b, {}}};
  }
}

Relation projective_relation(const std::vector<std::string>& gens) {
  std::vector<std::pair<GenName, int>> order;
  for (std::size_t i = 0; i < gens.size(); ++i) order.emplace_back(GenName::parse(gens[i]), static_cast<int>(i));
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first.line != y.first.line) return x.first.line > y.first.line;
    return x.first.primed && !y.first.primed;
  });
  Word w;
  for (const auto& [name, idx] : order) w.push_back(gen_letter(idx));
  return Relation{RelationKind::Word, w, {}, {}};
}

Presentation assemble_presentation(const Factorization& f) {
  Presentation pres;
  for (const std::string& label : f.frame.labels) pres.gens.push_back(GenName::parse(label).str());
  for (const Factor& x : f.factors) {
    std::vector<Relation> rs = relations_from_factor(x, f.frame);
    pres.affine.insert(pres.affine.end(), rs.begin(), rs.end());
  }
  if (!pres.gens.empty()) pres.projective = projective_relation(pres.gens);
  return pres;
}

}  // namespace galcov
