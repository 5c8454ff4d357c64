#include "galcov/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace galcov {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(const Word& w, int k) {
  const Word base = k >= 0 ? w : inverse(w);
  Word out;
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Word conjugate(const Word& a, const Word& b) {
  Word out = inverse(b);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word commutator(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  Word ai = inverse(a);
  Word bi = inverse(b);
  out.insert(out.end(), ai.begin(), ai.end());
  out.insert(out.end(), bi.begin(), bi.end());
  return free_reduce(out);
}

Word braid_relator(const Word& a, const Word& b) {
  const Word ai = inverse(a);
  const Word bi = inverse(b);
  Word out;
  for (const Word* part : {&a, &b, &a, &bi, &ai, &bi}) out.insert(out.end(), part->begin(), part->end());
  return free_reduce(out);
}

Word relator_canonical(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (const Word& base : {r, inverse(r)}) {
    Word rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
  }
  return best;
}

std::vector<std::int64_t> exponent_sums(const Word& w, int ngens) {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(ngens), 0);
  for (Letter l : w) sums[static_cast<std::size_t>(letter_gen(l))] += l > 0 ? 1 : -1;
  return sums;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (Letter l : w) {
    const Word& img = images.at(static_cast<std::size_t>(letter_gen(l)));
    if (l > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

int max_generator(const Word& w) {
  int m = -1;
  for (Letter l : w) m = std::max(m, letter_gen(l));
  return m;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<int>(j - i);
    const int g = letter_gen(w[i]);
    if (!first) os << ' ';
    first = false;
    os << (static_cast<std::size_t>(g) < names.size() ? names[static_cast<std::size_t>(g)] : "x" + std::to_string(g + 1));
    const int exp = w[i] > 0 ? run : -run;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Word parse_relation() {
    Word lhs = parse_expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = parse_expr();
      lhs.insert(lhs.end(), rhs.rbegin(), rhs.rend());
      for (std::size_t i = lhs.size() - rhs.size(); i < lhs.size(); ++i) lhs[i] = -lhs[i];
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return free_reduce(lhs);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("word parse error at offset " + std::to_string(pos_) + " (" + what + ") in \"" +
                          std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Word parse_expr() {
    Word out;
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '\0' || c == ')' || c == ']' || c == '>' || c == ',' || c == '=') break;
      Word t = parse_term();
      out.insert(out.end(), t.begin(), t.end());
    }
    return free_reduce(out);
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else if (peek() == '+') {
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      int k = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) k = k * 10 + (text_[pos_++] - '0');
      return power(atom, sign * k);
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '[' || c == '<') {
      ++pos_;
      Word a = parse_expr();
      expect(',');
      Word b = parse_expr();
      expect(c == '[' ? ']' : '>');
      return c == '[' ? commutator(a, b) : braid_relator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    std::size_t best_len = 0;
    int best = -1;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      const std::string& n = names_[g];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best_len = n.size();
        best = static_cast<int>(g);
      }
    }
    if (best < 0) fail("unknown generator");
    pos_ += best_len;
    return {gen_letter(best)};
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& names) {
  return WordParser(text, names).parse_relation();
}

}  // namespace galcov
