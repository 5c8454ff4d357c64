#include <set>

#include "galcov/fpgroup.hpp"

namespace galcov {

namespace {

inline int column(Letter l) { return 2 * letter_gen(l) + (l < 0 ? 1 : 0); }

// Backtrack over standardized coset tables of bounded size. Entries are
// filled in row-major order; each choice is propagated by relator scanning
// and undone through a trail.
class LowIndex {
 public:
  LowIndex(const FPGroup& g, int max_index, std::size_t max_count)
      : ncols_(2 * g.ngens()), max_(max_index), max_count_(max_count), by_col_(static_cast<std::size_t>(ncols_)) {
    std::set<std::vector<int>> seen;
    for (const Word& raw : g.relators) {
      const Word r = cyclic_reduce(raw);
      if (r.empty()) continue;
      relators_.push_back(r);
      for (const Word& w : {r, inverse(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> cols;
          for (std::size_t i = 0; i < w.size(); ++i) cols.push_back(column(w[(s + i) % w.size()]));
          if (seen.insert(cols).second) by_col_[static_cast<std::size_t>(cols[0])].push_back(cols);
        }
      }
    }
    table_.assign(static_cast<std::size_t>(max_) * static_cast<std::size_t>(ncols_), -1);
  }

  std::vector<LowIndexSubgroup> run() {
    n_ = 1;
    search();
    return std::move(found_);
  }

 private:
  int& at(int c, int col) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)]; }

  void set(int c, int col, int d) {
    at(c, col) = d;
    trail_.push_back(c * ncols_ + col);
    at(d, col ^ 1) = c;
    trail_.push_back(d * ncols_ + (col ^ 1));
    pending_.emplace_back(c, col);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  // Returns false on a contradiction.
  bool scan(int c, const std::vector<int>& s) {
    const int len = static_cast<int>(s.size());
    int f = c;
    int i = 0;
    while (i < len) {
      const int nx = at(f, s[static_cast<std::size_t>(i)]);
      if (nx < 0) break;
      f = nx;
      ++i;
    }
    if (i == len) return f == c;
    int b = c;
    int j = len - 1;
    while (j >= i) {
      const int nx = at(b, s[static_cast<std::size_t>(j)] ^ 1);
      if (nx < 0) break;
      b = nx;
      --j;
    }
    if (j < i) return f == b;
    if (j == i) set(f, s[static_cast<std::size_t>(i)], b);
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      const auto [c, col] = pending_.back();
      pending_.pop_back();
      for (const auto& s : by_col_[static_cast<std::size_t>(col)])
        if (!scan(c, s)) return false;
      const int d = at(c, col);
      for (const auto& s : by_col_[static_cast<std::size_t>(col ^ 1)])
        if (!scan(d, s)) return false;
    }
    return true;
  }

  void record() {
    LowIndexSubgroup sub;
    sub.index = n_;
    for (int g = 0; g < ncols_ / 2; ++g) {
      Perm p(static_cast<std::size_t>(n_));
      for (int c = 0; c < n_; ++c) p[static_cast<std::size_t>(c)] = at(c, 2 * g);
      sub.action.push_back(std::move(p));
    }
    for (const Word& r : relators_)
      if (!is_identity(perm_eval(r, sub.action, n_))) return;
    found_.push_back(std::move(sub));
  }

  void search() {
    if (found_.size() >= max_count_) return;
    int c = -1;
    int col = -1;
    for (int r = 0; r < n_ && c < 0; ++r)
      for (int k = 0; k < ncols_; ++k)
        if (at(r, k) < 0) {
          c = r;
          col = k;
          break;
        }
    if (c < 0) {
      record();
      return;
    }
    for (int d = 0; d < n_; ++d) {
      if (at(d, col ^ 1) >= 0) continue;
      const std::size_t mark = trail_.size();
      pending_.clear();
      set(c, col, d);
      if (propagate()) search();
      undo(mark);
    }
    if (n_ < max_) {
      const std::size_t mark = trail_.size();
      pending_.clear();
      const int d = n_++;
      set(c, col, d);
      if (propagate()) search();
      undo(mark);
      --n_;
    }
  }

  int ncols_;
  int max_;
  std::size_t max_count_;
  std::vector<std::vector<std::vector<int>>> by_col_;
  std::vector<Word> relators_;
  std::vector<int> table_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<LowIndexSubgroup> found_;
  int n_ = 1;
};

}  // namespace

std::vector<LowIndexSubgroup> low_index_subgroups(const FPGroup& g, int max_index, std::size_t max_count) {
  if (max_index < 1) return {};
  return LowIndex(g, max_index, max_count).run();
}

}  // namespace galcov
