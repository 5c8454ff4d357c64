#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

/// A word in a free group. Letter `g + 1` is generator `g`, letter `-(g + 1)`
/// its inverse. Zero never appears.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

/// Raised for malformed input that is not a mathematical failure: bad
/// generator names, unparsable words, ill-formed triangles.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a documented budget (enumeration size,
/// coset cap used as a hard limit, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Letter gen_letter(int g, int sign = 1) { return sign > 0 ? g + 1 : -(g + 1); }
inline int letter_gen(Letter l) { return (l > 0 ? l : -l) - 1; }

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);

/// b^-1 a b
Word conjugate(const Word& a, const Word& b);
/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);
/// a b a b^-1 a^-1 b^-1, the relator form of aba = bab
Word braid_relator(const Word& a, const Word& b);

/// Canonical representative of the cyclic class of w and w^-1 (after cyclic
/// reduction), used to deduplicate relators.
Word relator_canonical(const Word& w);

/// Exponent sum of each generator.
std::vector<std::int64_t> exponent_sums(const Word& w, int ngens);

/// Substitute every generator by a word (images[g]); result freely reduced.
Word substitute(const Word& w, const std::vector<Word>& images);

int max_generator(const Word& w);

/// Human-readable rendering, e.g. "G1 G2^-1 G1p".
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Parses a relator in the word grammar: generator names (longest match
/// against `names`), optional `^k` integer powers, parentheses, the macros
/// `[a,b]` (commutator) and `<a,b>` (braid relator), and a single top-level
/// `=` meaning lhs * rhs^-1. Whitespace is insignificant.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace galcov
