#pragma once

#include <string>
#include <vector>

#include "galcov/word.hpp"

namespace galcov {

/// Punctures on the real axis of the fiber, named left to right.
struct Frame {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }
  /// 0-based position of a label; throws StructuralError when absent.
  int position(const std::string& label) const;

  /// Frame "1", "1'", ..., "m", "m'" of m regenerated lines.
  static Frame doubled(int m);
  /// Frame "1", ..., "m" of m unregenerated lines.
  static Frame plain(int m);
  /// Copy with `label'` inserted right after `label`.
  Frame with_doubled(const std::string& label) const;
};

/// Signed generator indices: +i is the standard half-twist sigma_i swapping
/// positions i and i+1 (1-based), -i its inverse. Composition is left to
/// right: the first letter acts first.
using BraidWord = std::vector<int>;

BraidWord braid_inverse(const BraidWord& b);
BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_power(const BraidWord& b, int k);
BraidWord braid_free_reduce(const BraidWord& b);
/// Garside half twist on positions [lo, hi] (1-based, inclusive).
BraidWord half_twist_block(int lo, int hi);
BraidWord full_twist(int p);

enum class Side { Below, Above };

/// A path between two punctures, passing every puncture strictly between
/// them either below or above (left to right order).
struct Path {
  std::string from;
  std::string to;
  std::vector<Side> passages;
};

struct Conjugator;

/// Z^eps for the half twist along `core`, conjugated by the product of the
/// conjugator braids: with conj = [b1, b2] the factor is (Z^eps)^(b1 b2),
/// where a^b = b^-1 a b.
struct Factor {
  Path core;
  int eps = 1;
  std::vector<Conjugator> conj;
};

struct Conjugator {
  Factor factor;
  int power = 1;
};

struct Factorization {
  Frame frame;
  std::vector<Factor> factors;
};

/// Path along adjacent or distant punctures with all passages below.
Path straight_path(const Frame& frame, const std::string& a, const std::string& b, Side side = Side::Below);

BraidWord compile_halftwist(const Path& path, const Frame& frame);
BraidWord factor_braid(const Factor& f, const Frame& frame);
BraidWord factorization_braid(const Factorization& f);

/// Images of the free basis x_1..x_p under the braid. Action convention:
/// sigma_i sends x_i to x_{i+1} and x_{i+1} to x_{i+1} x_i x_{i+1}^-1, so the
/// product x_p ... x_1 is invariant and the full twist acts as conjugation by
/// it. Words over 0-based generator indices.
std::vector<Word> artin_images(const BraidWord& b, int p);
Word artin_action(const BraidWord& b, const Word& w, int p);
/// Equality in the braid group (the Artin representation is faithful).
bool braid_equal(const BraidWord& a, const BraidWord& b, int p);
/// Permutation of positions induced by the braid (0-based, right action).
std::vector<int> braid_permutation(const BraidWord& b, int p);

/// Conjugating braid W with f = W^-1 sigma_k^eps W, and the index k.
struct FactorNormalForm {
  BraidWord conjugator;
  int k = 0;
  int eps = 1;
};
FactorNormalForm factor_normal_form(const Factor& f, const Frame& frame);

/// Regeneration of one factor when puncture `line` doubles into
/// (`line`, `line'`). Paths are re-indexed against `frame.with_doubled(line)`.
std::vector<Factor> regenerate(const Factor& f, const Frame& frame, const std::string& line);
/// Doubles every label in `lines` and regenerates all factors; each doubled
/// line also contributes the two branch points of its conic.
Factorization regenerate(const Factorization& f, const std::vector<std::string>& lines);

int factorization_degree(const Factorization& f);

struct Arrangement;

/// Braid monodromy of the degenerate branch curve (the lines of `arr`),
/// from an exact real realization with generic slopes: each singular point
/// gives its full-twist block expanded into node factors, each parasitic
/// crossing one node factor. Frame labels are line labels ordered by height
/// at the base fiber.
Factorization line_arrangement_monodromy(const Arrangement& arr);

}  // namespace galcov
