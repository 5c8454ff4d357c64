#include "galcov/braid.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <utility>

namespace galcov {

namespace {
// Longest image word tolerated by the Artin action.
constexpr std::size_t kArtinWordLimit = 2000000;
}  // namespace

int Frame::position(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw StructuralError("label '" + label + "' not in frame");
  return static_cast<int>(it - labels.begin());
}

Frame Frame::doubled(int m) {
  Frame f;
  for (int i = 1; i <= m; ++i) {
    f.labels.push_back(std::to_string(i));
    f.labels.push_back(std::to_string(i) + "'");
  }
  return f;
}

Frame Frame::plain(int m) {
  Frame f;
  for (int i = 1; i <= m; ++i) f.labels.push_back(std::to_string(i));
  return f;
}

Frame Frame::with_doubled(const std::string& label) const {
  Frame f = *this;
  const int pos = position(label);
  f.labels.insert(f.labels.begin() + pos + 1, label + "'");
  return f;
}

BraidWord braid_inverse(const BraidWord& b) {
  BraidWord out(b.rbegin(), b.rend());
  for (int& l : out) l = -l;
  return out;
}

BraidWord braid_free_reduce(const BraidWord& b) {
  BraidWord out;
  for (int l : b) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return braid_free_reduce(out);
}

BraidWord braid_power(const BraidWord& b, int k) {
  const BraidWord base = k >= 0 ? b : braid_inverse(b);
  BraidWord out;
  for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return braid_free_reduce(out);
}

BraidWord half_twist_block(int lo, int hi) {
  // (s_lo) (s_lo+1 s_lo) (s_lo+2 s_lo+1 s_lo) ...
  BraidWord out;
  for (int top = lo; top < hi; ++top)
    for (int i = top; i >= lo; --i) out.push_back(i);
  return out;
}

BraidWord full_twist(int p) { return braid_power(half_twist_block(1, p), 2); }

Path straight_path(const Frame& frame, const std::string& a, const std::string& b, Side side) {
  const int pa = frame.position(a);
  const int pb = frame.position(b);
  const int gap = std::abs(pa - pb) - 1;
  return Path{a, b, std::vector<Side>(static_cast<std::size_t>(std::max(gap, 0)), side)};
}

BraidWord compile_halftwist(const Path& path, const Frame& frame) {
  int a = frame.position(path.from);
  int b = frame.position(path.to);
  if (a == b) throw StructuralError("path endpoints coincide: " + path.from);
  if (a > b) std::swap(a, b);
  if (static_cast<int>(path.passages.size()) != b - a - 1)
    throw StructuralError("path " + path.from + "-" + path.to + " has " + std::to_string(path.passages.size()) +
                          " passages, expected " + std::to_string(b - a - 1));
  // Carry the left endpoint rightwards past each intermediate puncture, on
  // the requested side, then twist with the right endpoint and carry back.
  BraidWord carry;
  for (int c = a; c < b - 1; ++c) {
    const Side s = path.passages[static_cast<std::size_t>(c - a)];
    carry.push_back(s == Side::Below ? -(c + 1) : (c + 1));
  }
  BraidWord out = carry;
  out.push_back(b);
  BraidWord back = braid_inverse(carry);
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

namespace {

BraidWord conjugator_braid(const std::vector<Conjugator>& conj, const Frame& frame) {
  BraidWord c;
  for (const Conjugator& item : conj) {
    BraidWord piece = braid_power(factor_braid(item.factor, frame), item.power);
    c.insert(c.end(), piece.begin(), piece.end());
  }
  return braid_free_reduce(c);
}

}  // namespace

BraidWord factor_braid(const Factor& f, const Frame& frame) {
  const BraidWord h = braid_power(compile_halftwist(f.core, frame), f.eps);
  const BraidWord c = conjugator_braid(f.conj, frame);
  BraidWord out = braid_inverse(c);
  out.insert(out.end(), h.begin(), h.end());
  out.insert(out.end(), c.begin(), c.end());
  return braid_free_reduce(out);
}

BraidWord factorization_braid(const Factorization& f) {
  BraidWord out;
  for (const Factor& x : f.factors) {
    BraidWord b = factor_braid(x, f.frame);
    out.insert(out.end(), b.begin(), b.end());
  }
  return braid_free_reduce(out);
}

FactorNormalForm factor_normal_form(const Factor& f, const Frame& frame) {
  if (f.eps == 0 || std::abs(f.eps) > 3)
    throw StructuralError("factor exponent " + std::to_string(f.eps) + " outside {1,2,3} in absolute value");
  int a = frame.position(f.core.from);
  int b = frame.position(f.core.to);
  if (a > b) std::swap(a, b);
  // Half twist = w sigma_b w^-1 (1-based sigma index b = position of right end),
  // so the factor is (w^-1 C)^-1 sigma^eps (w^-1 C).
  const BraidWord h = compile_halftwist(f.core, frame);
  const std::size_t carry_len = (h.size() - 1) / 2;
  BraidWord w(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(carry_len));
  FactorNormalForm nf;
  nf.conjugator = braid_concat(braid_inverse(w), conjugator_braid(f.conj, frame));
  nf.k = b;
  nf.eps = f.eps;
  return nf;
}

std::vector<Word> artin_images(const BraidWord& b, int p) {
  std::vector<Word> img(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) img[static_cast<std::size_t>(j)] = {gen_letter(j)};
  std::vector<Word> step(static_cast<std::size_t>(p));
  for (int l : b) {
    const int i = std::abs(l);
    if (i < 1 || i >= p) throw StructuralError("braid letter " + std::to_string(l) + " outside frame of size " +
                                               std::to_string(p));
    for (int j = 0; j < p; ++j) step[static_cast<std::size_t>(j)] = {gen_letter(j)};
    const Letter xi = gen_letter(i - 1);
    const Letter xj = gen_letter(i);
    if (l > 0) {
      step[static_cast<std::size_t>(i - 1)] = {xj};
      step[static_cast<std::size_t>(i)] = {xj, xi, -xj};
    } else {
      step[static_cast<std::size_t>(i - 1)] = {-xi, xj, xi};
      step[static_cast<std::size_t>(i)] = {xi};
    }
    for (Word& w : img) {
      w = substitute(w, step);
      if (w.size() > kArtinWordLimit) throw CapacityError("Artin image longer than " + std::to_string(kArtinWordLimit));
    }
  }
  return img;
}

Word artin_action(const BraidWord& b, const Word& w, int p) {
  if (max_generator(w) >= p) throw StructuralError("word uses a generator outside the frame");
  return substitute(w, artin_images(b, p));
}

namespace {

constexpr std::uint64_t kBurauPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % kBurauPrime);
}

/// Unreduced Burau matrix of the braid at t, entries mod 2^61 - 1. Right
/// multiplication by each letter, so equal braids give equal matrices.
std::vector<std::uint64_t> burau(const BraidWord& b, int p, std::uint64_t t) {
  const std::size_t n = static_cast<std::size_t>(p);
  std::vector<std::uint64_t> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  // sigma_i acts on columns i-1, i by [[1-t, t], [1, 0]]; its inverse by
  // [[0, 1], [1/t, 1 - 1/t]].
  std::uint64_t tinv = 1;
  for (std::uint64_t e = kBurauPrime - 2, base = t; e; e >>= 1, base = mulmod(base, base))
    if (e & 1) tinv = mulmod(tinv, base);
  const std::uint64_t one_minus_t = (1 + kBurauPrime - t) % kBurauPrime;
  const std::uint64_t one_minus_tinv = (1 + kBurauPrime - tinv) % kBurauPrime;
  for (int l : b) {
    const std::size_t c = static_cast<std::size_t>(std::abs(l) - 1);
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint64_t u = m[r * n + c];
      const std::uint64_t v = m[r * n + c + 1];
      if (l > 0) {
        m[r * n + c] = (mulmod(u, one_minus_t) + v) % kBurauPrime;
        m[r * n + c + 1] = mulmod(u, t);
      } else {
        m[r * n + c] = mulmod(v, tinv);
        m[r * n + c + 1] = (u + mulmod(v, one_minus_tinv)) % kBurauPrime;
      }
    }
  }
  return m;
}

}  // namespace

bool braid_equal(const BraidWord& a, const BraidWord& b, int p) {
  for (std::uint64_t t : {3ULL, 1000003ULL, 987654321987ULL})
    if (burau(a, p, t) != burau(b, p, t)) return false;
  // Burau agrees; settle it with the faithful Artin action on each side.
  const std::vector<Word> ia = artin_images(a, p);
  const std::vector<Word> ib = artin_images(b, p);
  return ia == ib;
}

std::vector<int> braid_permutation(const BraidWord& b, int p) {
  // perm[i] = final position of the strand starting at position i.
  std::vector<int> at(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) at[static_cast<std::size_t>(i)] = i;
  for (int l : b) {
    const int i = std::abs(l) - 1;
    for (int& pos : at) {
      if (pos == i) {
        pos = i + 1;
      } else if (pos == i + 1) {
        pos = i;
      }
    }
  }
  return at;
}

namespace {

Path reindex_path(const Path& path, const Frame& old_frame, const Frame& new_frame, const std::string& line) {
  int a = old_frame.position(path.from);
  int b = old_frame.position(path.to);
  if (a > b) std::swap(a, b);
  std::map<std::string, Side> side;
  for (int c = a + 1; c < b; ++c)
    side[old_frame.labels[static_cast<std::size_t>(c)]] = path.passages[static_cast<std::size_t>(c - a - 1)];
  const std::string primed = line + "'";
  auto it = side.find(line);
  side[primed] = it != side.end() ? it->second : Side::Below;
  int na = new_frame.position(path.from);
  int nb = new_frame.position(path.to);
  if (na > nb) std::swap(na, nb);
  Path out{path.from, path.to, {}};
  for (int c = na + 1; c < nb; ++c) out.passages.push_back(side.at(new_frame.labels[static_cast<std::size_t>(c)]));
  return out;
}

Factor reindex_factor(const Factor& f, const Frame& old_frame, const Frame& new_frame, const std::string& line) {
  Factor out{reindex_path(f.core, old_frame, new_frame, line), f.eps, {}};
  for (const Conjugator& c : f.conj)
    out.conj.push_back(Conjugator{reindex_factor(c.factor, old_frame, new_frame, line), c.power});
  return out;
}

}  // namespace

std::vector<Factor> regenerate(const Factor& f, const Frame& frame, const std::string& line) {
  const int e = std::abs(f.eps);
  if (e < 1 || e > 3) throw StructuralError("factor exponent " + std::to_string(f.eps) + " cannot be regenerated");
  const Frame nf = frame.with_doubled(line);
  const Factor base = reindex_factor(f, frame, nf, line);
  if (base.core.from != line && base.core.to != line) return {base};

  const std::string primed = line + "'";
  const std::string other = base.core.from == line ? base.core.to : base.core.from;
  if (e == 3) {
    const Factor twist{Path{line, primed, {}}, 1, {}};
    Factor up = base;
    up.conj.push_back(Conjugator{twist, 1});
    Factor down = base;
    down.conj.push_back(Conjugator{twist, -1});
    return {base, up, down};
  }
  // Same singularity against the new puncture line'. The path keeps its
  // passages and goes below `line` when it has to cross it.
  Factor moved = base;
  moved.core = Path{other, primed, base.core.passages};
  if (nf.position(other) < nf.position(line)) {
    moved.core.passages.push_back(Side::Below);
  } else {
    moved.core.passages.erase(moved.core.passages.begin());
  }
  return {base, moved};
}

Factorization regenerate(const Factorization& f, const std::vector<std::string>& lines) {
  Factorization cur = f;
  for (const std::string& line : lines) {
    Factorization next;
    next.frame = cur.frame.with_doubled(line);
    for (const Factor& x : cur.factors) {
      std::vector<Factor> r = regenerate(x, cur.frame, line);
      next.factors.insert(next.factors.end(), r.begin(), r.end());
    }
    cur = std::move(next);
  }
  // Each regenerated line becomes a conic with two branch points.
  for (const std::string& line : lines) {
    const Factor branch{Path{line, line + "'", {}}, 1, {}};
    cur.factors.push_back(branch);
    cur.factors.push_back(branch);
  }
  return cur;
}

int factorization_degree(const Factorization& f) {
  int d = 0;
  for (const Factor& x : f.factors) d += std::abs(x.eps);
  return d;
}

}  // namespace galcov
