#include "crossnest/partition.hpp"

#include <algorithm>
#include <set>

#include "crossnest/parallel.hpp"

namespace crossnest {

SetPartition SetPartition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n < 0) throw OutOfRange("partition size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int total = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw OutOfRange("empty block");
    for (int e : b) {
      if (e < 1 || e > n) throw OutOfRange("block element outside [1, n]");
      if (seen[static_cast<std::size_t>(e)]) throw DuplicateEntry("element in two blocks");
      seen[static_cast<std::size_t>(e)] = 1;
      ++total;
    }
    std::sort(b.begin(), b.end());
  }
  if (total != n) throw OutOfRange("blocks do not cover [1, n]");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  int n = static_cast<int>(rgs.size());
  int next = 0;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    int b = rgs[static_cast<std::size_t>(i)];
    if (b < 0 || b > next) throw OutOfRange("not a restricted growth string");
    if (b == next) {
      blocks.emplace_back();
      ++next;
    }
    blocks[static_cast<std::size_t>(b)].push_back(i + 1);
  }
  SetPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  return p;
}

std::vector<int> SetPartition::min_set() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SetPartition::max_set() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.back());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> arcs_of(const SetPartition& p) {
  std::vector<Arc> arcs;
  for (const auto& b : p.blocks())
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      arcs.push_back({b[i], b[i + 1]});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

SetPartition blocks_of(int n, const std::vector<Arc>& arcs) {
  if (n < 0) throw OutOfRange("partition size must be nonnegative");
  std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> is_right(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) {
    if (a.left < 1 || a.right > n || a.left >= a.right)
      throw OutOfRange("arc endpoints must satisfy 1 <= i < j <= n");
    if (succ[static_cast<std::size_t>(a.left)] != 0)
      throw DuplicateEndpoint("two arcs share a left endpoint");
    if (is_right[static_cast<std::size_t>(a.right)])
      throw DuplicateEndpoint("two arcs share a right endpoint");
    succ[static_cast<std::size_t>(a.left)] = a.right;
    is_right[static_cast<std::size_t>(a.right)] = 1;
  }
  std::vector<std::vector<int>> blocks;
  for (int e = 1; e <= n; ++e) {
    if (is_right[static_cast<std::size_t>(e)]) continue;  // not a block head
    std::vector<int> b;
    for (int cur = e; cur != 0; cur = succ[static_cast<std::size_t>(cur)]) b.push_back(cur);
    blocks.push_back(std::move(b));
  }
  return SetPartition::from_blocks(n, std::move(blocks));
}

ColoredSetPartition::ColoredSetPartition(SetPartition p, std::vector<int> colors, int r)
    : base_(std::move(p)), colors_(std::move(colors)), r_(r) {
  if (r_ < 1) throw OutOfRange("color count must be at least 1");
  std::size_t arc_count = 0;
  for (const auto& b : base_.blocks()) arc_count += b.size() - 1;
  if (colors_.size() != arc_count)
    throw OutOfRange("need one color per arc");
  for (int c : colors_)
    if (c < 1 || c > r_) throw OutOfRange("color outside [1, r]");
}

ColoredSetPartition ColoredSetPartition::from_arcs(int n, const std::vector<ColoredArc>& arcs,
                                                   int r) {
  std::vector<Arc> bare;
  bare.reserve(arcs.size());
  for (const auto& a : arcs) bare.push_back({a.left, a.right});
  SetPartition p = blocks_of(n, bare);
  std::vector<ColoredArc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colors;
  colors.reserve(sorted.size());
  for (const auto& a : sorted) colors.push_back(a.color);
  return ColoredSetPartition(std::move(p), std::move(colors), r);
}

std::vector<ColoredArc> ColoredSetPartition::colored_arcs() const {
  std::vector<Arc> bare = arcs_of(base_);
  std::vector<ColoredArc> out;
  out.reserve(bare.size());
  for (std::size_t i = 0; i < bare.size(); ++i)
    out.push_back({bare[i].left, bare[i].right, colors_[i]});
  return out;
}

namespace {

// Longest strictly increasing subsequence of rights, arcs presorted by left.
int longest_increasing_rights(const std::vector<Arc>& arcs) {
  std::vector<int> len(arcs.size(), 1);
  int best = arcs.empty() ? 0 : 1;
  for (std::size_t t = 0; t < arcs.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s)
      if (arcs[s].right < arcs[t].right) len[t] = std::max(len[t], len[s] + 1);
    best = std::max(best, len[t]);
  }
  return best;
}

}  // namespace

CrossNestStats chain_stats(const std::vector<Arc>& arcs) {
  if (arcs.empty()) return {0, 0};
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());

  // Crossing.  A pairwise-crossing family, listed by left endpoint, has
  // strictly increasing rights and its largest left below its smallest
  // right.  Fixing the first arc f, the remaining arcs are exactly those in
  // the window f.left < left < f.right < right, and within the window any
  // family with increasing rights qualifies.
  int cr = 1;
  for (std::size_t f = 0; f < sorted.size(); ++f) {
    std::vector<Arc> window;
    for (std::size_t t = f + 1; t < sorted.size(); ++t)
      if (sorted[t].left < sorted[f].right && sorted[t].right > sorted[f].right)
        window.push_back(sorted[t]);
    if (!window.empty()) cr = std::max(cr, 1 + longest_increasing_rights(window));
  }

  // Nesting is transitive along lefts: a family is pairwise nesting iff its
  // rights strictly decrease when lefts increase.
  std::vector<int> len(sorted.size(), 1);
  int ne = 1;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s)
      if (sorted[s].right > sorted[t].right) len[t] = std::max(len[t], len[s] + 1);
    ne = std::max(ne, len[t]);
  }
  return {cr, ne};
}

CrossNestStats chain_stats_subsets(const std::vector<Arc>& arcs) {
  if (arcs.size() > 20) throw Infeasible("subset oracle limited to 20 arcs");
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  int m = static_cast<int>(sorted.size());
  CrossNestStats best{0, 0};
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Arc> sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sub.push_back(sorted[static_cast<std::size_t>(i)]);
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < sub.size(); ++i) {
      if (sub[i].right >= sub[i + 1].right) inc = false;
      if (sub[i].right <= sub[i + 1].right) dec = false;
    }
    int k = static_cast<int>(sub.size());
    if (inc && sub.back().left < sub.front().right) best.cr = std::max(best.cr, k);
    if (dec) best.ne = std::max(best.ne, k);
  }
  return best;
}

std::vector<CrossNestStats> cr_ne_per_color(const ColoredSetPartition& cp) {
  std::vector<std::vector<Arc>> by_color(static_cast<std::size_t>(cp.r()));
  for (const auto& a : cp.colored_arcs())
    by_color[static_cast<std::size_t>(a.color - 1)].push_back({a.left, a.right});
  std::vector<CrossNestStats> out;
  out.reserve(by_color.size());
  for (const auto& arcs : by_color) out.push_back(chain_stats(arcs));
  return out;
}

CrossNestStats cr_ne(const ColoredSetPartition& cp) {
  CrossNestStats total{0, 0};
  for (const auto& s : cr_ne_per_color(cp)) {
    total.cr = std::max(total.cr, s.cr);
    total.ne = std::max(total.ne, s.ne);
  }
  return total;
}

CrossNestStats cr_ne(const SetPartition& p) { return chain_stats(arcs_of(p)); }

std::vector<SetPartition> split_colors(const ColoredSetPartition& cp) {
  std::vector<std::vector<Arc>> by_color(static_cast<std::size_t>(cp.r()));
  for (const auto& a : cp.colored_arcs())
    by_color[static_cast<std::size_t>(a.color - 1)].push_back({a.left, a.right});
  std::vector<SetPartition> out;
  out.reserve(by_color.size());
  for (const auto& arcs : by_color) out.push_back(blocks_of(cp.n(), arcs));
  return out;
}

ColoredSetPartition merge_colors(const std::vector<SetPartition>& classes) {
  if (classes.empty()) throw OutOfRange("need at least one color class");
  int n = classes.front().n();
  std::set<int> lefts, rights;
  std::vector<ColoredArc> arcs;
  for (std::size_t t = 0; t < classes.size(); ++t) {
    if (classes[t].n() != n) throw OutOfRange("color classes disagree on n");
    for (const Arc& a : arcs_of(classes[t])) {
      if (!lefts.insert(a.left).second)
        throw EndpointClash("two color classes share a left endpoint");
      if (!rights.insert(a.right).second)
        throw EndpointClash("two color classes share a right endpoint");
      arcs.push_back({a.left, a.right, static_cast<int>(t) + 1});
    }
  }
  return ColoredSetPartition::from_arcs(n, arcs, static_cast<int>(classes.size()));
}

std::vector<SetPartition> partitions_of(int n) {
  if (n < 0) throw OutOfRange("partition size must be nonnegative");
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // Lexicographic restricted-growth-string enumeration.
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n) {
      out.push_back(SetPartition::from_rgs(rgs));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

bool filter_matches(const SetPartition& p, const std::optional<MinMaxFilter>& filter) {
  if (!filter) return true;
  return p.min_set() == filter->min_set && p.max_set() == filter->max_set;
}

}  // namespace

void for_each_colored(int n, int r, const std::optional<MinMaxFilter>& filter,
                      const std::function<void(const ColoredSetPartition&)>& visit) {
  if (r < 1) throw OutOfRange("color count must be at least 1");
  for (const SetPartition& p : partitions_of(n)) {
    if (!filter_matches(p, filter)) continue;
    std::size_t m = arcs_of(p).size();
    std::vector<int> colors(m, 1);
    while (true) {
      visit(ColoredSetPartition(p, colors, r));
      // Lexicographic successor, last arc least significant.
      std::size_t i = m;
      while (i > 0 && colors[i - 1] == r) colors[--i] = 1;
      if (i == 0) break;
      ++colors[i - 1];
    }
  }
}

std::vector<ColoredSetPartition> colored_partitions_of(int n, int r,
                                                       const std::optional<MinMaxFilter>& filter) {
  std::vector<ColoredSetPartition> out;
  for_each_colored(n, r, filter, [&](const ColoredSetPartition& cp) { out.push_back(cp); });
  return out;
}

BigCount count_ncn_brute(int n, int r, std::optional<int> j, std::optional<int> k,
                         const std::optional<MinMaxFilter>& filter, int max_n) {
  if (n < 0) throw OutOfRange("n must be nonnegative");
  if (n > max_n) throw Infeasible("brute-force count limited to n <= " + std::to_string(max_n));
  std::vector<SetPartition> parts = partitions_of(n);
  auto run = [&](std::size_t lo, std::size_t hi) -> BigCount {
    BigCount sum = 0;
    std::vector<std::vector<Arc>> by_color(static_cast<std::size_t>(r));
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const SetPartition& p = parts[idx];
      if (!filter_matches(p, filter)) continue;
      std::vector<Arc> arcs = arcs_of(p);
      std::size_t m = arcs.size();
      if (!j && !k) {
        sum += big_pow(BigCount(r), static_cast<unsigned long>(m));
        continue;
      }
      std::vector<int> colors(m, 1);
      while (true) {
        for (auto& v : by_color) v.clear();
        for (std::size_t i = 0; i < m; ++i)
          by_color[static_cast<std::size_t>(colors[i] - 1)].push_back(arcs[i]);
        bool ok = true;
        for (const auto& fam : by_color) {
          CrossNestStats s = chain_stats(fam);
          if ((j && s.cr >= *j) || (k && s.ne >= *k)) {
            ok = false;
            break;
          }
        }
        if (ok) sum += 1;
        std::size_t i = m;
        while (i > 0 && colors[i - 1] == r) colors[--i] = 1;
        if (i == 0) break;
        ++colors[i - 1];
      }
    }
    return sum;
  };
  return chunk_reduce<BigCount>(
      parts.size(), run, [](BigCount& acc, BigCount&& part) { acc += part; }, BigCount(0));
}

JointDistribution joint_distribution(int n, int r, const MinMaxFilter& filter) {
  JointDistribution hist;
  for_each_colored(n, r, filter, [&](const ColoredSetPartition& cp) {
    CrossNestStats s = cr_ne(cp);
    hist[{s.cr, s.ne}] += 1;
  });
  return hist;
}

std::map<std::pair<unsigned, unsigned>, JointDistribution> joint_distribution_all(int n, int r) {
  if (n > 20) throw Infeasible("joint histogram limited to n <= 20");
  std::map<std::pair<unsigned, unsigned>, JointDistribution> out;
  for_each_colored(n, r, std::nullopt, [&](const ColoredSetPartition& cp) {
    unsigned mn = 0, mx = 0;
    for (int e : cp.min_set()) mn |= 1u << (e - 1);
    for (int e : cp.max_set()) mx |= 1u << (e - 1);
    CrossNestStats s = cr_ne(cp);
    out[{mn, mx}][{s.cr, s.ne}] += 1;
  });
  return out;
}

}  // namespace crossnest
