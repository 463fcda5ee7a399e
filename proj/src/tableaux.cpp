#include "crossnest/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace crossnest {

int IntegerPartition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool IntegerPartition::contains(const IntegerPartition& other) const {
  if (other.parts.size() > parts.size()) return false;
  for (std::size_t i = 0; i < other.parts.size(); ++i)
    if (other.parts[i] > parts[i]) return false;
  return true;
}

IntegerPartition IntegerPartition::conjugate() const {
  IntegerPartition out;
  if (parts.empty()) return out;
  out.parts.resize(static_cast<std::size_t>(parts.front()));
  for (std::size_t c = 0; c < out.parts.size(); ++c) {
    int count = 0;
    for (int p : parts)
      if (p > static_cast<int>(c)) ++count;
    out.parts[c] = count;
  }
  return out;
}

std::vector<int> RPartiteTableau::flatten_key() const {
  std::vector<int> key;
  for (const auto& step : steps) {
    for (const auto& comp : step) {
      key.insert(key.end(), comp.parts.begin(), comp.parts.end());
      key.push_back(-1);
    }
    key.push_back(-2);
  }
  return key;
}

IntegerPartition rsk_shape(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    int carry = x;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        carry = 0;
        break;
      }
      std::swap(*it, carry);
    }
    if (carry != 0) rows.push_back({carry});
  }
  IntegerPartition shape;
  for (const auto& row : rows) shape.parts.push_back(static_cast<int>(row.size()));
  return shape;
}

RPartiteTableau to_vacillating(const ColoredSetPartition& cp) {
  int n = cp.n();
  int r = cp.r();
  std::vector<ColoredArc> arcs = cp.colored_arcs();  // sorted by left endpoint
  RPartiteTableau t;
  t.r = r;
  t.steps.reserve(static_cast<std::size_t>(2 * n) + 1);
  std::vector<int> word;
  for (int k = 0; k <= 2 * n; ++k) {
    RPartitePartition step(static_cast<std::size_t>(r));
    for (int color = 1; color <= r; ++color) {
      word.clear();
      // Letter j enters at slot 2i and survives while k <= 2j - 2.
      for (const auto& a : arcs)
        if (a.color == color && 2 * a.left <= k && k <= 2 * a.right - 2)
          word.push_back(a.right);
      step[static_cast<std::size_t>(color - 1)] = rsk_shape(word);
    }
    t.steps.push_back(std::move(step));
  }
  return t;
}

std::pair<int, int> tableau_stats(const RPartiteTableau& t) {
  int max_cols = 0, max_rows = 0;
  for (const auto& step : t.steps)
    for (const auto& comp : step) {
      max_cols = std::max(max_cols, comp.cols());
      max_rows = std::max(max_rows, comp.rows());
    }
  return {max_cols, max_rows};
}

namespace {

enum class Step { stay, add, remove, invalid };

Step step_between(const RPartitePartition& a, const RPartitePartition& b) {
  if (a.size() != b.size()) return Step::invalid;
  int delta = 0;
  bool fwd = true, bwd = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    delta += b[i].size() - a[i].size();
    if (!b[i].contains(a[i])) fwd = false;
    if (!a[i].contains(b[i])) bwd = false;
  }
  if (delta == 0) return (fwd && bwd) ? Step::stay : Step::invalid;
  if (delta == 1 && fwd) return Step::add;
  if (delta == -1 && bwd) return Step::remove;
  return Step::invalid;
}

bool all_empty(const RPartitePartition& s) {
  for (const auto& c : s)
    if (!c.empty()) return false;
  return true;
}

}  // namespace

TableauClasses classify(const RPartiteTableau& t) {
  if (t.steps.empty()) throw NotATableau("no steps");
  for (const auto& step : t.steps)
    if (static_cast<int>(step.size()) != t.r) throw NotATableau("component count mismatch");
  if (!all_empty(t.steps.front()) || !all_empty(t.steps.back()))
    throw NotATableau("endpoints must be empty");
  TableauClasses cls{true, true, true};
  for (std::size_t i = 1; i < t.steps.size(); ++i) {
    Step s = step_between(t.steps[i - 1], t.steps[i]);
    if (s == Step::invalid) throw NotATableau("step changes more than one box");
    bool even = (i % 2 == 0);
    if (s == Step::stay) cls.oscillating = false;
    if (even && s == Step::remove) cls.vacillating = false;
    if (!even && s == Step::add) cls.vacillating = false;
  }
  return cls;
}

RPartiteTableau matching_to_semioscillating(const ColoredSetPartition& matching) {
  for (const auto& b : matching.base().blocks())
    if (b.size() > 2) throw NotAMatching("block larger than two elements");
  RPartiteTableau full = to_vacillating(matching);
  RPartiteTableau t;
  t.r = full.r;
  for (std::size_t k = 0; k < full.steps.size(); k += 2) t.steps.push_back(full.steps[k]);
  return t;
}

namespace {

struct TableauSearch {
  int length;
  int r;
  TableauClass cls;
  std::optional<int> max_rows, max_cols;
  std::vector<RPartitePartition> trail;
  std::vector<RPartiteTableau>* out;

  bool within_bounds(const IntegerPartition& p) const {
    if (max_rows && p.rows() > *max_rows) return false;
    if (max_cols && p.cols() > *max_cols) return false;
    return true;
  }

  int total_size(const RPartitePartition& s) const {
    int total = 0;
    for (const auto& c : s) total += c.size();
    return total;
  }

  void grow(int index) {
    // push_back below may reallocate trail, so keep a copy, not a reference
    RPartitePartition cur = trail.back();
    int remaining = length - index;
    if (total_size(cur) > remaining) return;
    if (index == length) {
      RPartiteTableau t;
      t.r = r;
      t.steps = trail;
      out->push_back(std::move(t));
      return;
    }
    int pos = index + 1;  // transition number, 1-based
    bool even = (pos % 2 == 0);
    bool allow_stay = cls != TableauClass::oscillating;
    bool allow_add = cls != TableauClass::vacillating || even;
    bool allow_remove = cls != TableauClass::vacillating || !even;

    if (allow_stay) {
      trail.push_back(cur);
      grow(index + 1);
      trail.pop_back();
    }
    if (allow_add) {
      for (std::size_t c = 0; c < cur.size(); ++c) {
        const auto& parts = cur[c].parts;
        for (std::size_t row = 0; row <= parts.size(); ++row) {
          bool existing = row < parts.size();
          if (existing && row > 0 && parts[row] >= parts[row - 1]) continue;
          RPartitePartition next = cur;
          if (existing)
            ++next[c].parts[row];
          else
            next[c].parts.push_back(1);
          if (!within_bounds(next[c])) continue;
          trail.push_back(std::move(next));
          grow(index + 1);
          trail.pop_back();
        }
      }
    }
    if (allow_remove) {
      for (std::size_t c = 0; c < cur.size(); ++c) {
        const auto& parts = cur[c].parts;
        for (std::size_t row = 0; row < parts.size(); ++row) {
          if (row + 1 < parts.size() && parts[row] <= parts[row + 1]) continue;
          RPartitePartition next = cur;
          if (--next[c].parts[row] == 0) next[c].parts.pop_back();
          trail.push_back(std::move(next));
          grow(index + 1);
          trail.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<RPartiteTableau> enumerate_tableaux(int length, int r, TableauClass cls,
                                                std::optional<int> max_rows,
                                                std::optional<int> max_cols) {
  if (length < 0 || r < 1) throw OutOfRange("bad tableau parameters");
  std::vector<RPartiteTableau> out;
  TableauSearch search{length, r, cls, max_rows, max_cols, {}, &out};
  search.trail.push_back(RPartitePartition(static_cast<std::size_t>(r)));
  search.grow(0);
  std::sort(out.begin(), out.end(),
            [](const RPartiteTableau& a, const RPartiteTableau& b) { return a < b; });
  return out;
}

RPartiteTableau transpose_tableau(const RPartiteTableau& t) {
  RPartiteTableau out;
  out.r = t.r;
  out.steps.reserve(t.steps.size());
  for (const auto& step : t.steps) {
    RPartitePartition s;
    s.reserve(step.size());
    for (const auto& comp : step) s.push_back(comp.conjugate());
    out.steps.push_back(std::move(s));
  }
  return out;
}

std::optional<ColoredSetPartition> invert_vacillating(const RPartiteTableau& t) {
  if (t.length() % 2 != 0) return std::nullopt;
  int n = t.length() / 2;
  std::optional<ColoredSetPartition> found;
  for_each_colored(n, t.r, std::nullopt, [&](const ColoredSetPartition& cp) {
    if (!found && to_vacillating(cp) == t) found = cp;
  });
  return found;
}

std::map<int, int> diagonal_profile(const IntegerPartition& p) {
  std::map<int, int> f;
  for (std::size_t a = 0; a < p.parts.size(); ++a)
    for (int b = 1; b <= p.parts[a]; ++b) ++f[b - static_cast<int>(a) - 1];
  return f;
}

IntegerPartition profile_to_partition(const std::map<int, int>& profile) {
  for (const auto& [d, v] : profile)
    if (v < 0) throw InvalidProfile("negative diagonal count");
  IntegerPartition p;
  for (int i = 1;; ++i) {
    // Diagonal d holds a cell in row i iff i <= f(d) (d >= 0) or
    // 1 - d <= i <= f(d) - d (d < 0); row length counts such diagonals.
    int len = 0;
    for (const auto& [d, v] : profile) {
      if (v == 0) continue;
      if (d >= 0 ? i <= v : (i >= 1 - d && i <= v - d)) ++len;
    }
    if (len == 0) break;
    p.parts.push_back(len);
  }
  for (std::size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i] > p.parts[i - 1]) throw InvalidProfile("profile is not a partition");
  std::map<int, int> check = diagonal_profile(p);
  for (const auto& [d, v] : profile)
    if (v != 0 && check[d] != v) throw InvalidProfile("profile is not realizable");
  for (const auto& [d, v] : check)
    if (profile.find(d) == profile.end() || profile.at(d) != v)
      throw InvalidProfile("profile is not realizable");
  return p;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntegerPartition fomin_stanton(const RPartitePartition& shape, int r) {
  if (static_cast<int>(shape.size()) != r || r < 1)
    throw OutOfRange("shape must have exactly r components");
  std::vector<std::map<int, int>> profiles;
  profiles.reserve(shape.size());
  int span = 1;
  for (const auto& comp : shape) {
    profiles.push_back(diagonal_profile(comp));
    span = std::max({span, comp.rows(), comp.cols()});
  }
  std::map<int, int> merged;
  for (int i = -r * (span + 1); i <= r * (span + 1); ++i) {
    int v = 0;
    for (int t = 1; t <= r; ++t) {
      auto it = profiles[static_cast<std::size_t>(t - 1)].find(floor_div(i + t - 1, r));
      if (it != profiles[static_cast<std::size_t>(t - 1)].end()) v += it->second;
    }
    if (v != 0) merged[i] = v;
  }
  return profile_to_partition(merged);
}

bool is_rimhook_addition(const IntegerPartition& mu, const IntegerPartition& la, int r) {
  if (!la.contains(mu) || la.size() != mu.size() + r) return false;
  std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
  for (int row = 0; row < la.rows(); ++row) {
    int lo = row < mu.rows() ? mu.parts[static_cast<std::size_t>(row)] : 0;
    for (int col = lo; col < la.parts[static_cast<std::size_t>(row)]; ++col)
      cells.push_back({row, col});
  }
  std::set<int> diagonals;
  for (const auto& [row, col] : cells)
    if (!diagonals.insert(col - row).second) return false;  // 2x2 square inside
  // Edge connectivity over the strip cells.
  std::set<std::pair<int, int>> pool(cells.begin(), cells.end());
  std::vector<std::pair<int, int>> queue{cells.front()};
  pool.erase(cells.front());
  while (!queue.empty()) {
    auto [row, col] = queue.back();
    queue.pop_back();
    for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      auto it = pool.find({row + dr, col + dc});
      if (it != pool.end()) {
        queue.push_back(*it);
        pool.erase(it);
      }
    }
  }
  return pool.empty();
}

std::vector<IntegerPartition> integer_partitions_of(int n) {
  std::vector<IntegerPartition> out;
  IntegerPartition cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.parts.push_back(p);
      self(self, rest - p, p);
      cur.parts.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<IntegerPartition> rimhook_closure(int r, int max_size) {
  std::set<IntegerPartition> known{IntegerPartition{}};
  std::vector<IntegerPartition> frontier{IntegerPartition{}};
  for (int s = r; s <= max_size; s += r) {
    std::vector<IntegerPartition> next;
    std::vector<IntegerPartition> candidates = integer_partitions_of(s);
    for (const auto& la : candidates) {
      for (const auto& mu : frontier) {
        if (is_rimhook_addition(mu, la, r)) {
          if (known.insert(la).second) next.push_back(la);
          break;
        }
      }
    }
    frontier = std::move(next);
  }
  return {known.begin(), known.end()};
}

std::vector<RPartitePartition> rpartite_partitions_of(int total, int r) {
  std::vector<RPartitePartition> out;
  RPartitePartition cur;
  auto rec = [&](auto&& self, int t, int rest) -> void {
    if (t == r) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int s = (t == r - 1) ? rest : 0; s <= rest; ++s) {
      for (const auto& p : integer_partitions_of(s)) {
        cur.push_back(p);
        self(self, t + 1, rest - s);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace crossnest
