#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "galcov/fpgroup.hpp"

namespace galcov {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (Letter l : w) h = h * 1000003u ^ static_cast<std::size_t>(l + 0x40000);
    return h;
  }
};

std::size_t length_of(const std::vector<Word>& rels) {
  std::size_t n = 0;
  for (const Word& r : rels) n += r.size();
  return n;
}

void tidy(std::vector<Word>& rels) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : rels) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(relator_canonical(c)).second) out.push_back(std::move(c));
  }
  rels = std::move(out);
}

int occurrences(const Word& w, int g) {
  int n = 0;
  for (Letter l : w)
    if (letter_gen(l) == g) ++n;
  return n;
}

Word rotate(const Word& w, std::size_t k) {
  Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

class Simplifier {
 public:
  Simplifier(const FPGroup& g, int budget) : ngens_(g.ngens()), budget_(budget), rels_(g.relators), alive_(static_cast<std::size_t>(ngens_), true) {
    for (int i = 0; i < ngens_; ++i) images_.push_back({gen_letter(i)});
    tidy(rels_);
  }

  void run() {
    for (;;) {
      if (out_of_budget()) return;
      bool progress = false;
      while (eliminate_cheap()) {
        progress = true;
        if (out_of_budget()) return;
      }
      while (shorten_pass()) {
        progress = true;
        if (out_of_budget()) return;
      }
      if (!progress && !eliminate_trial()) return;
    }
  }

  TietzeResult result() const {
    TietzeResult res;
    std::vector<int> newindex(static_cast<std::size_t>(ngens_), -1);
    for (int i = 0; i < ngens_; ++i) {
      if (!alive_[static_cast<std::size_t>(i)]) continue;
      newindex[static_cast<std::size_t>(i)] = static_cast<int>(res.kept.size());
      res.kept.push_back(i);
    }
    std::vector<Word> renum(static_cast<std::size_t>(ngens_));
    for (int i = 0; i < ngens_; ++i)
      if (alive_[static_cast<std::size_t>(i)]) renum[static_cast<std::size_t>(i)] = {gen_letter(newindex[static_cast<std::size_t>(i)])};
    for (const Word& r : rels_) res.group.relators.push_back(substitute(r, renum));
    for (const Word& w : images_) res.images.push_back(substitute(w, renum));
    res.budget_exhausted = steps_ >= budget_;
    res.steps = steps_;
    return res;
  }

 private:
  bool out_of_budget() const { return steps_ >= budget_; }

  // g := replacement everywhere, removing relator `drop`.
  void eliminate(int g, const Word& replacement, std::size_t drop) {
    std::vector<Word> sub(static_cast<std::size_t>(ngens_));
    for (int i = 0; i < ngens_; ++i) sub[static_cast<std::size_t>(i)] = {gen_letter(i)};
    sub[static_cast<std::size_t>(g)] = replacement;
    std::vector<Word> next;
    for (std::size_t i = 0; i < rels_.size(); ++i)
      if (i != drop) next.push_back(substitute(rels_[i], sub));
    rels_ = std::move(next);
    tidy(rels_);
    for (Word& w : images_) w = substitute(w, sub);
    alive_[static_cast<std::size_t>(g)] = false;
    ++steps_;
  }

  // Solve relator r (containing g exactly once) for g.
  static Word solve(const Word& r, int g) {
    std::size_t pos = 0;
    while (letter_gen(r[pos]) != g) ++pos;
    const Word w = rotate(r, pos);
    const Word rest(w.begin() + 1, w.end());
    return w[0] > 0 ? inverse(rest) : rest;
  }

  struct Candidate {
    long growth = 0;
    int gen = -1;
    std::size_t rel = 0;
  };

  std::vector<Candidate> candidates() const {
    std::vector<Candidate> out;
    std::vector<int> total(static_cast<std::size_t>(ngens_), 0);
    for (const Word& r : rels_)
      for (Letter l : r) ++total[static_cast<std::size_t>(letter_gen(l))];
    std::vector<bool> taken(static_cast<std::size_t>(ngens_), false);
    std::vector<std::size_t> order(rels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rels_[a].size() < rels_[b].size(); });
    for (std::size_t ri : order) {
      const Word& r = rels_[ri];
      const long len = static_cast<long>(r.size());
      for (Letter l : r) {
        const int g = letter_gen(l);
        if (taken[static_cast<std::size_t>(g)] || occurrences(r, g) != 1) continue;
        const long k = total[static_cast<std::size_t>(g)] - 1;
        out.push_back({k * (len - 2) - len, g, ri});
        taken[static_cast<std::size_t>(g)] = true;
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.growth < b.growth; });
    return out;
  }

  bool eliminate_cheap() {
    for (const Candidate& c : candidates()) {
      if (c.growth > 0) break;
      eliminate(c.gen, solve(rels_[c.rel], c.gen), c.rel);
      return true;
    }
    return false;
  }

  // Eliminate with growth, kept only if shortening brings the total back
  // down to at most where it started.
  bool eliminate_trial() {
    const std::size_t before = length_of(rels_);
    for (const Candidate& c : candidates()) {
      if (out_of_budget()) return false;
      if (c.growth <= 0) continue;
      const std::vector<Word> saved_rels = rels_;
      const std::vector<Word> saved_images = images_;
      const int saved_steps = steps_;
      eliminate(c.gen, solve(rels_[c.rel], c.gen), c.rel);
      while (!out_of_budget() && shorten_pass()) {
      }
      if (length_of(rels_) <= before) return true;
      rels_ = saved_rels;
      images_ = saved_images;
      alive_[static_cast<std::size_t>(c.gen)] = true;
      steps_ = saved_steps + 1;
    }
    return false;
  }

  // One round of replacing a cyclic subword u of some relator by a shorter
  // equivalent v^-1 taken from another relator u v.
  bool shorten_pass() {
    std::size_t longest = 0;
    for (const Word& r : rels_) longest = std::max(longest, r.size());
    const std::size_t probe = std::min<std::size_t>(longest, 48);
    std::unordered_map<Word, std::vector<std::pair<std::size_t, std::size_t>>, WordHash> index;
    for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
      const Word& r = rels_[ri];
      const std::size_t len = r.size();
      for (std::size_t start = 0; start < len; ++start) {
        Word sub;
        for (std::size_t k = 1; k <= std::min(len, probe); ++k) {
          sub.push_back(r[(start + k - 1) % len]);
          if (k >= 2) index[sub].emplace_back(ri, start);
        }
      }
    }
    std::vector<bool> touched(rels_.size(), false);
    bool changed = false;
    for (std::size_t ri = 0; ri < rels_.size(); ++ri) {
      if (touched[ri] || rels_[ri].size() > probe) continue;
      const Word base = rels_[ri];
      const std::size_t len = base.size();
      bool done = false;
      for (const Word& form : {base, inverse(base)}) {
        for (std::size_t s = 0; s < len && !done; ++s) {
          const Word c = rotate(form, s);
          for (std::size_t k = len; k > len / 2 && !done; --k) {
            const Word u(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
            const auto it = index.find(u);
            if (it == index.end()) continue;
            for (const auto& [target, start] : it->second) {
              if (target == ri || touched[target]) continue;
              const Word& t = rels_[target];
              if (t.size() < k) continue;
              const Word rt = rotate(t, start);
              Word rep = inverse(Word(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
              rep.insert(rep.end(), rt.begin() + static_cast<std::ptrdiff_t>(k), rt.end());
              rels_[target] = cyclic_reduce(free_reduce(rep));
              touched[target] = true;
              touched[ri] = true;
              changed = true;
              done = true;
              ++steps_;
              break;
            }
          }
        }
        if (done) break;
      }
      if (out_of_budget()) break;
    }
    if (changed) tidy(rels_);
    return changed;
  }

  int ngens_;
  int budget_;
  int steps_ = 0;
  std::vector<Word> rels_;
  std::vector<bool> alive_;
  std::vector<Word> images_;
};

}  // namespace

TietzeResult tietze_simplify(const FPGroup& g, int budget) {
  FPGroup work = g;
  apply_key_lemma(work);
  Simplifier s(work, budget);
  s.run();
  TietzeResult res = s.result();
  for (int i : res.kept) res.group.gens.push_back(g.gens[static_cast<std::size_t>(i)]);
  return res;
}

int apply_key_lemma(FPGroup& g) {
  const int n = g.ngens();
  if (n > 40) return 0;
  std::set<Word> have;
  for (const Word& r : g.relators) {
    const Word c = cyclic_reduce(r);
    if (!c.empty()) have.insert(relator_canonical(c));
  }
  auto has = [&](const Word& w) { return have.count(relator_canonical(cyclic_reduce(w))) > 0; };
  auto sq = [](int x) { return Word{gen_letter(x), gen_letter(x)}; };
  int added = 0;
  for (int x = 0; x < n; ++x) {
    if (!has(sq(x))) continue;
    const Word X{gen_letter(x)};
    for (int y = 0; y < n; ++y) {
      if (y == x || !has(sq(y)) || !has(braid_relator(X, {gen_letter(y)}))) continue;
      for (int yp = 0; yp < n; ++yp) {
        if (yp == x || yp == y || !has(sq(yp))) continue;
        const Word Y{gen_letter(y)};
        const Word Yp{gen_letter(yp)};
        if (!has(braid_relator(X, Yp))) continue;
        if (!has(braid_relator(X, conjugate(Yp, Y)))) continue;
        if (!has(commutator(X, concat(Yp, Y)))) continue;
        const Word eq{gen_letter(y), gen_letter(yp, -1)};
        if (has(eq)) continue;
        g.relators.push_back(eq);
        have.insert(relator_canonical(eq));
        ++added;
      }
    }
  }
  return added;
}

}  // namespace galcov
