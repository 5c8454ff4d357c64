#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galcov/perm.hpp"
#include "galcov/word.hpp"

namespace galcov {

struct FPGroup {
  std::vector<std::string> gens;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(gens.size()); }
  std::size_t total_length() const;
  std::string render() const;
};

/// Cyclically reduced relators, empties dropped, duplicates (up to rotation
/// and inversion) removed, original order otherwise kept.
FPGroup normalized(const FPGroup& g);

/// Permutation action of the generators on the cosets of a subgroup.
/// Column 2g is generator g, column 2g+1 its inverse. Coset 0 is the
/// subgroup itself.
struct CosetTable {
  int ngens = 0;
  int cosets = 0;
  bool closed = false;           // complete table with all relators verified
  std::size_t defined = 0;       // cosets ever defined during enumeration
  std::vector<std::int32_t> data;

  int act(int coset, Letter l) const {
    const int col = 2 * letter_gen(l) + (l < 0 ? 1 : 0);
    return data[static_cast<std::size_t>(coset) * static_cast<std::size_t>(2 * ngens) + static_cast<std::size_t>(col)];
  }
  int trace(int coset, const Word& w) const;
  /// Generator permutations (requires a closed table).
  std::vector<Perm> perms() const;
};

/// Felsch-style enumeration with a deduction stack and coincidence
/// processing. When more than `limit` cosets are live at once the result has
/// closed == false; that means "undecided", never a wrong answer.
CosetTable todd_coxeter(const FPGroup& g, const std::vector<Word>& subgroup, std::size_t limit);

struct LowIndexSubgroup {
  int index = 0;
  std::vector<Perm> action;  // generator permutations on the cosets
};

/// Conjugacy-class-agnostic list of all subgroups of index <= max_index,
/// one standardized coset table each. Stops after `max_count` results.
std::vector<LowIndexSubgroup> low_index_subgroups(const FPGroup& g, int max_index, std::size_t max_count = 100000);

struct TietzeResult {
  FPGroup group;
  /// kept[i] = index in the input group of surviving generator i.
  std::vector<int> kept;
  /// images[j] = input generator j as a word in the surviving generators.
  std::vector<Word> images;
  bool budget_exhausted = false;
  int steps = 0;
};

/// Presentation-preserving simplification: free and cyclic reduction,
/// duplicate removal, elimination of generators occurring once in a relator
/// (accepted only when total length does not grow), and replacement of a
/// relator by a shorter one using another relator. Only input generators
/// survive.
TietzeResult tietze_simplify(const FPGroup& g, int budget);

/// Rewrite recognising, for generators x, y, y', the relators
/// <x,y>, <x,y'>, <x,y^-1 y' y>, [x, y' y], x^2, y^2, y'^2, and adding the
/// consequence y = y'. Returns the number of identities added.
int apply_key_lemma(FPGroup& g);

/// Homomorphism onto a permutation group, verified on every relator.
struct CheckedHom {
  std::vector<Perm> images;  // one per generator
  int degree = 0;
  bool surjective_on_symmetric = false;
  std::size_t image_order = 0;
};

/// Thrown by sym_hom with the offending relator, or the orbit when the image
/// is intransitive.
class HomError : public std::runtime_error {
 public:
  HomError(const std::string& what, Word witness, std::vector<int> orbit = {})
      : std::runtime_error(what), witness_(std::move(witness)), orbit_(std::move(orbit)) {}
  const Word& witness() const { return witness_; }
  const std::vector<int>& orbit() const { return orbit_; }

 private:
  Word witness_;
  std::vector<int> orbit_;
};

CheckedHom sym_hom(const FPGroup& g, const std::vector<Perm>& images, int degree);

struct KernelPresentation {
  FPGroup group;
  /// Each kernel generator as a word in the parent generators.
  std::vector<Word> in_parent;
  int index = 0;
};

/// Reidemeister-Schreier presentation of the kernel of a checked
/// homomorphism, using the regular action of the image on itself as coset
/// table. Throws CapacityError when the image has more than `limit` elements.
KernelPresentation kernel_presentation(const FPGroup& g, const CheckedHom& hom, std::size_t limit);

FPGroup quotient_by_squares(const FPGroup& g, const std::vector<int>& targets);
FPGroup quotient_by_squares(const FPGroup& g);

struct AbelianInvariants {
  int rank = 0;
  std::vector<std::int64_t> torsion;  // d1 | d2 | ..., each > 1

  bool operator==(const AbelianInvariants&) const = default;
  std::string render() const;
};

AbelianInvariants abelianization(const FPGroup& g);

enum class Verdict { Trivial, Finite, FreeAbelian, ElementaryAbelian2, NormallyGenerated, InvariantsOnly };

std::string verdict_name(Verdict v);

struct GroupIdentity {
  Verdict verdict = Verdict::InvariantsOnly;
  std::optional<std::size_t> order;
  AbelianInvariants invariants;
  bool invariants_known = false;
  /// Human-readable evidence lines: coset counts, quotient checks, caps hit.
  std::vector<std::string> certificates;

  std::string summary() const;
};

struct IdentifyLimits {
  std::size_t coset_cap = 500000;
  int tietze_budget = 20000;
  int low_index_max = 12;
  std::size_t quotient_order_max = 1000;
};

/// Verdict for a finitely presented group, backed by certificates. When
/// `ambient` is given (a group containing g with `in_ambient` the generator
/// words of g there), finite quotients for the commutator checks come from
/// low-index subgroups of the ambient group.
GroupIdentity identify(const FPGroup& g, const IdentifyLimits& limits, const FPGroup* ambient = nullptr,
                       const std::vector<Word>* in_ambient = nullptr);

}  // namespace galcov
