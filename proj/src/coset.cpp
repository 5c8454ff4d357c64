#include <algorithm>
#include <set>
#include <stdexcept>

#include "galcov/fpgroup.hpp"

namespace galcov {

namespace {

inline int column(Letter l) { return 2 * letter_gen(l) + (l < 0 ? 1 : 0); }

class Enumerator {
 public:
  Enumerator(const FPGroup& g, std::size_t limit) : ncols_(2 * g.ngens()), limit_(limit), by_col_(static_cast<std::size_t>(ncols_)) {
    std::set<std::vector<int>> seen;
    for (const Word& raw : g.relators) {
      const Word r = cyclic_reduce(raw);
      if (r.empty()) continue;
      for (const Word& w : {r, inverse(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> cols;
          cols.reserve(w.size());
          for (std::size_t i = 0; i < w.size(); ++i) cols.push_back(column(w[(s + i) % w.size()]));
          if (seen.insert(cols).second) by_col_[static_cast<std::size_t>(cols[0])].push_back(cols);
        }
      }
      relators_.push_back(r);
    }
    new_row();
  }

  bool run(const std::vector<Word>& subgroup) {
    for (const Word& w : subgroup) {
      const Word r = free_reduce(w);
      if (r.empty()) continue;
      if (!fill_subgroup_word(r)) return false;
    }
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        if (!alive(c)) break;
        if (at(c, col) >= 0) continue;
        if (live_ >= limit_) return false;
        maybe_compact(c);
        const int d = new_row();
        set(c, col, d);
        push(c, col);
        process();
      }
    }
    return true;
  }

  CosetTable table(const std::vector<Word>& subgroup) {
    std::vector<int> renum(static_cast<std::size_t>(rows()), -1);
    int n = 0;
    for (int c = 0; c < rows(); ++c)
      if (alive(c)) renum[static_cast<std::size_t>(c)] = n++;
    CosetTable t;
    t.ngens = ncols_ / 2;
    t.cosets = n;
    t.defined = defined_;
    t.data.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(ncols_), -1);
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        const int d = at(c, col);
        if (d < 0 || !alive(d)) throw std::logic_error("coset table incomplete after enumeration");
        t.data[static_cast<std::size_t>(renum[static_cast<std::size_t>(c)]) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)] =
            renum[static_cast<std::size_t>(d)];
      }
    }
    for (int c = 0; c < n; ++c) {
      for (int col = 0; col < ncols_; ++col) {
        const int d = t.data[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)];
        if (t.data[static_cast<std::size_t>(d) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col ^ 1)] != c)
          throw std::logic_error("coset table not a permutation action");
      }
      for (const Word& r : relators_)
        if (t.trace(c, r) != c) throw std::logic_error("coset table violates a relator");
    }
    for (const Word& w : subgroup)
      if (t.trace(0, free_reduce(w)) != 0) throw std::logic_error("coset table does not fix the subgroup");
    t.closed = true;
    return t;
  }

 private:
  int rows() const { return static_cast<int>(parent_.size()); }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::int32_t& at(int c, int col) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)];
  }
  void set(int c, int col, int d) {
    at(c, col) = d;
    at(d, col ^ 1) = c;
  }
  void push(int c, int col) { deductions_.emplace_back(c, col); }

  int new_row() {
    const int r = rows();
    parent_.push_back(r);
    table_.resize(table_.size() + static_cast<std::size_t>(ncols_), -1);
    ++live_;
    ++defined_;
    return r;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
    --live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (int col = 0; col < ncols_; ++col) {
        const int f = at(e, col);
        if (f < 0) continue;
        if (at(f, col ^ 1) == e) at(f, col ^ 1) = -1;
        const int e1 = rep(e);
        const int f1 = rep(f);
        const int x = at(e1, col);
        if (x >= 0) {
          merge(f1, x, queue);
          push(e1, col);
        } else {
          const int y = at(f1, col ^ 1);
          if (y >= 0) {
            merge(e1, y, queue);
          } else {
            set(e1, col, f1);
            push(e1, col);
          }
        }
      }
    }
  }

  // Scan one relator rotation at coset c, deducing a single missing entry or
  // a coincidence.
  void scan(int c, const std::vector<int>& s) {
    const int len = static_cast<int>(s.size());
    int f = c;
    int i = 0;
    while (i < len) {
      const int nx = at(f, s[static_cast<std::size_t>(i)]);
      if (nx < 0) break;
      f = nx;
      ++i;
    }
    if (i == len) {
      if (f != c) coincidence(f, c);
      return;
    }
    int b = c;
    int j = len - 1;
    while (j >= i) {
      const int nx = at(b, s[static_cast<std::size_t>(j)] ^ 1);
      if (nx < 0) break;
      b = nx;
      --j;
    }
    if (j < i) {
      if (f != b) coincidence(f, b);
    } else if (j == i) {
      set(f, s[static_cast<std::size_t>(i)], b);
      push(f, s[static_cast<std::size_t>(i)]);
    }
  }

  void process() {
    while (!deductions_.empty()) {
      const auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& s : by_col_[static_cast<std::size_t>(col)]) {
        if (!alive(c)) break;
        scan(c, s);
      }
      if (!alive(c)) continue;
      const int d = at(c, col);
      if (d < 0 || !alive(d)) continue;
      for (const auto& s : by_col_[static_cast<std::size_t>(col ^ 1)]) {
        if (!alive(d)) break;
        scan(d, s);
      }
    }
  }

  // Trace a subgroup word from coset 0 in both directions, defining cosets to
  // close the gap.
  bool fill_subgroup_word(const Word& w) {
    const int len = static_cast<int>(w.size());
    for (;;) {
      int f = 0;
      int i = 0;
      while (i < len) {
        const int nx = at(f, column(w[static_cast<std::size_t>(i)]));
        if (nx < 0) break;
        f = nx;
        ++i;
      }
      if (i == len) {
        if (f != 0) coincidence(f, 0);
        process();
        return true;
      }
      int b = 0;
      int j = len - 1;
      while (j >= i) {
        const int nx = at(b, column(w[static_cast<std::size_t>(j)]) ^ 1);
        if (nx < 0) break;
        b = nx;
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        process();
        return true;
      }
      if (j == i) {
        set(f, column(w[static_cast<std::size_t>(i)]), b);
        push(f, column(w[static_cast<std::size_t>(i)]));
        process();
        return true;
      }
      if (live_ >= limit_) return false;
      const int d = new_row();
      set(f, column(w[static_cast<std::size_t>(i)]), d);
      push(f, column(w[static_cast<std::size_t>(i)]));
      process();
    }
  }

  // Drop dead rows once they dominate; only called with an empty deduction
  // stack. `cursor` is renumbered in place.
  void maybe_compact(int& cursor) {
    if (rows() < 4096 || static_cast<std::size_t>(rows()) < 2 * live_) return;
    std::vector<int> renum(static_cast<std::size_t>(rows()), -1);
    int n = 0;
    for (int c = 0; c < rows(); ++c)
      if (alive(c)) renum[static_cast<std::size_t>(c)] = n++;
    std::vector<std::int32_t> fresh(static_cast<std::size_t>(n) * static_cast<std::size_t>(ncols_), -1);
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        const int d = at(c, col);
        fresh[static_cast<std::size_t>(renum[static_cast<std::size_t>(c)]) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)] =
            d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) parent_[static_cast<std::size_t>(c)] = c;
    cursor = renum[static_cast<std::size_t>(cursor)];
  }

  int ncols_;
  std::size_t limit_;
  std::vector<std::vector<std::vector<int>>> by_col_;
  std::vector<Word> relators_;
  std::vector<std::int32_t> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

int CosetTable::trace(int coset, const Word& w) const {
  for (Letter l : w) coset = act(coset, l);
  return coset;
}

std::vector<Perm> CosetTable::perms() const {
  if (!closed) throw std::logic_error("perms() needs a closed coset table");
  std::vector<Perm> out(static_cast<std::size_t>(ngens), Perm(static_cast<std::size_t>(cosets)));
  for (int g = 0; g < ngens; ++g)
    for (int c = 0; c < cosets; ++c) out[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = act(c, gen_letter(g));
  return out;
}

CosetTable todd_coxeter(const FPGroup& g, const std::vector<Word>& subgroup, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("coset limit must be positive");
  Enumerator e(g, limit);
  if (!e.run(subgroup)) {
    CosetTable t;
    t.ngens = g.ngens();
    return t;
  }
  return e.table(subgroup);
}

}  // namespace galcov
