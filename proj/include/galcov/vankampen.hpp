#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcov/braid.hpp"
#include "galcov/fpgroup.hpp"
#include "galcov/word.hpp"

namespace galcov {

/// Generator Gamma_i or Gamma_i'. Written "G3" / "G3p" in files.
struct GenName {
  int line = 0;
  bool primed = false;

  std::string str() const { return "G" + std::to_string(line) + (primed ? "p" : ""); }
  /// From a frame label ("3", "3'") or a generator name ("G3", "G3p").
  static GenName parse(const std::string& s);
};

enum class RelationKind { Equality, Commutator, Braid, Word };

/// One relation over the generators of a presentation. `text`, when set, is
/// the relation as written in the source and is what gets displayed.
struct Relation {
  RelationKind kind = RelationKind::Word;
  Word a;
  Word b;
  std::string text;

  Word relator() const;
  std::string render(const std::vector<std::string>& gens) const;
};

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Relation> affine;
  std::optional<Relation> projective;

  /// Affine relators plus the projective one.
  FPGroup group() const;
  /// Parses a relation string of the word grammar against `gens`.
  Relation parse_relation(const std::string& text) const;
};

/// The relations a factor imposes: the two loops A, B around the ends of
/// its core path (after the conjugating braid acts) are equal for a branch
/// point, commute for a node, braid for a cusp.
std::vector<Relation> relations_from_factor(const Factor& f, const Frame& frame);

/// Gamma_m' Gamma_m ... Gamma_1' Gamma_1 = e over `gens` (generator names);
/// the product runs by descending line, primed first.
Relation projective_relation(const std::vector<std::string>& gens);

Presentation assemble_presentation(const Factorization& f);

}  // namespace galcov
