#include "crossnest/variants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crossnest {

void require_matching(const ColoredSetPartition& cp) {
  for (const auto& b : cp.base().blocks())
    if (b.size() > 2) throw NotAMatching("block larger than two elements");
}

ColoredSetPartition double_partition(const ColoredSetPartition& cp) {
  std::vector<ColoredArc> arcs;
  for (const auto& a : cp.colored_arcs())
    arcs.push_back({2 * a.left, 2 * a.right - 1, a.color});
  return ColoredSetPartition::from_arcs(2 * cp.n(), arcs, cp.r());
}

namespace {

void matchings_rec(int n, int r, bool complete, std::vector<char>& used,
                   std::vector<ColoredArc>& arcs, int from,
                   std::vector<ColoredSetPartition>& out) {
  int e = from;
  while (e <= n && used[static_cast<std::size_t>(e)]) ++e;
  if (e > n) {
    out.push_back(ColoredSetPartition::from_arcs(n, arcs, r));
    return;
  }
  used[static_cast<std::size_t>(e)] = 1;
  if (!complete) matchings_rec(n, r, complete, used, arcs, e + 1, out);
  for (int f = e + 1; f <= n; ++f) {
    if (used[static_cast<std::size_t>(f)]) continue;
    used[static_cast<std::size_t>(f)] = 1;
    for (int c = 1; c <= r; ++c) {
      arcs.push_back({e, f, c});
      matchings_rec(n, r, complete, used, arcs, e + 1, out);
      arcs.pop_back();
    }
    used[static_cast<std::size_t>(f)] = 0;
  }
  used[static_cast<std::size_t>(e)] = 0;
}

std::vector<ColoredSetPartition> enumerate_matchings_impl(int n, int r, bool complete) {
  if (n < 0 || r < 1) throw OutOfRange("bad matching parameters");
  std::vector<ColoredSetPartition> out;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<ColoredArc> arcs;
  matchings_rec(n, r, complete, used, arcs, 1, out);
  return out;
}

}  // namespace

std::vector<ColoredSetPartition> enumerate_matchings(int n, int r) {
  return enumerate_matchings_impl(n, r, false);
}

std::vector<ColoredSetPartition> enumerate_complete_matchings(int n, int r) {
  if (n % 2 != 0) return {};
  return enumerate_matchings_impl(n, r, true);
}

// --- enhanced partitions ----------------------------------------------------

namespace {

std::vector<Arc> enhanced_arc_skeleton(const SetPartition& p) {
  std::vector<Arc> arcs;
  for (const auto& b : p.blocks()) {
    if (b.size() == 1) arcs.push_back({b.front(), b.front()});
    for (std::size_t i = 0; i + 1 < b.size(); ++i) arcs.push_back({b[i], b[i + 1]});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

EnhancedColoredPartition::EnhancedColoredPartition(SetPartition base, std::vector<int> colors,
                                                   int r)
    : base_(std::move(base)), colors_(std::move(colors)), r_(r) {
  if (r_ < 1) throw OutOfRange("color count must be at least 1");
  if (colors_.size() != enhanced_arc_skeleton(base_).size())
    throw OutOfRange("need one color per enhanced arc");
  for (int c : colors_)
    if (c < 1 || c > r_) throw OutOfRange("color outside [1, r]");
}

EnhancedColoredPartition EnhancedColoredPartition::from_arcs(int n,
                                                             const std::vector<ColoredArc>& arcs,
                                                             int r) {
  std::vector<Arc> bare;
  for (const auto& a : arcs) {
    if (a.left < a.right) bare.push_back({a.left, a.right});
    else if (a.left != a.right) throw OutOfRange("arc with left > right");
  }
  SetPartition p = blocks_of(n, bare);
  // Loops must sit exactly on the singleton blocks of the rebuilt partition.
  std::set<int> loops;
  for (const auto& a : arcs)
    if (a.left == a.right && !loops.insert(a.left).second)
      throw DuplicateEndpoint("two loops at one point");
  std::set<int> singletons;
  for (const auto& b : p.blocks())
    if (b.size() == 1) singletons.insert(b.front());
  if (loops != singletons) throw OutOfRange("loops must cover exactly the isolated points");
  std::vector<ColoredArc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> colors;
  for (const auto& a : sorted) colors.push_back(a.color);
  return EnhancedColoredPartition(std::move(p), std::move(colors), r);
}

std::vector<ColoredArc> EnhancedColoredPartition::enhanced_arcs() const {
  std::vector<Arc> bare = enhanced_arc_skeleton(base_);
  std::vector<ColoredArc> out;
  for (std::size_t i = 0; i < bare.size(); ++i)
    out.push_back({bare[i].left, bare[i].right, colors_[i]});
  return out;
}

CrossNestStats enhanced_chain_stats(const std::vector<Arc>& arcs) {
  if (arcs.empty()) return {0, 0};
  std::vector<Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  // As for the strict statistics, but the largest left may equal the
  // smallest right (crossing) or the innermost pair may be a loop (nesting).
  int cr = 1;
  for (std::size_t f = 0; f < sorted.size(); ++f) {
    std::vector<int> rights;
    for (std::size_t t = f + 1; t < sorted.size(); ++t)
      if (sorted[t].left <= sorted[f].right && sorted[t].right > sorted[f].right)
        rights.push_back(sorted[t].right);
    std::vector<int> len(rights.size(), 1);
    for (std::size_t t = 0; t < rights.size(); ++t) {
      for (std::size_t s = 0; s < t; ++s)
        if (rights[s] < rights[t]) len[t] = std::max(len[t], len[s] + 1);
      cr = std::max(cr, 1 + len[t]);
    }
  }
  std::vector<int> len(sorted.size(), 1);
  int ne = 1;
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    for (std::size_t s = 0; s < t; ++s)
      if (sorted[s].left < sorted[t].left && sorted[s].right > sorted[t].right)
        len[t] = std::max(len[t], len[s] + 1);
    ne = std::max(ne, len[t]);
  }
  return {cr, ne};
}

CrossNestStats enhanced_stats(const EnhancedColoredPartition& e) {
  std::vector<std::vector<Arc>> by_color(static_cast<std::size_t>(e.r()));
  for (const auto& a : e.enhanced_arcs())
    by_color[static_cast<std::size_t>(a.color - 1)].push_back({a.left, a.right});
  CrossNestStats total{0, 0};
  for (const auto& fam : by_color) {
    CrossNestStats s = enhanced_chain_stats(fam);
    total.cr = std::max(total.cr, s.cr);
    total.ne = std::max(total.ne, s.ne);
  }
  return total;
}

ColoredSetPartition enhanced_to_matching(const EnhancedColoredPartition& e) {
  std::vector<ColoredArc> arcs;
  for (const auto& a : e.enhanced_arcs())
    arcs.push_back({2 * a.left - 1, 2 * a.right, a.color});
  return ColoredSetPartition::from_arcs(2 * e.n(), arcs, e.r());
}

std::vector<EnhancedColoredPartition> enumerate_enhanced(int n, int r) {
  std::vector<EnhancedColoredPartition> out;
  for (const SetPartition& p : partitions_of(n)) {
    std::size_t m = enhanced_arc_skeleton(p).size();
    std::vector<int> colors(m, 1);
    while (true) {
      out.emplace_back(p, colors, r);
      std::size_t i = m;
      while (i > 0 && colors[i - 1] == r) colors[--i] = 1;
      if (i == 0) break;
      ++colors[i - 1];
    }
  }
  return out;
}

// --- colored permutations ---------------------------------------------------

ColoredPermutation::ColoredPermutation(std::vector<int> word, std::vector<int> upper_colors,
                                       std::vector<int> lower_colors, int r)
    : word_(std::move(word)),
      upper_colors_(std::move(upper_colors)),
      lower_colors_(std::move(lower_colors)),
      r_(r) {
  if (r_ < 1) throw OutOfRange("color count must be at least 1");
  int n = static_cast<int>(word_.size());
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  std::size_t upper = 0;
  for (int i = 1; i <= n; ++i) {
    int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v)])
      throw OutOfRange("word is not a permutation");
    hit[static_cast<std::size_t>(v)] = 1;
    if (v >= i) ++upper;
  }
  if (upper_colors_.size() != upper ||
      lower_colors_.size() != static_cast<std::size_t>(n) - upper)
    throw OutOfRange("color lists must match the arc families");
  for (int c : upper_colors_)
    if (c < 1 || c > r_) throw OutOfRange("color outside [1, r]");
  for (int c : lower_colors_)
    if (c < 1 || c > r_) throw OutOfRange("color outside [1, r]");
}

std::vector<ColoredArc> ColoredPermutation::upper_arcs() const {
  std::vector<ColoredArc> out;
  std::size_t idx = 0;
  for (int i = 1; i <= n(); ++i) {
    int v = word_[static_cast<std::size_t>(i - 1)];
    if (v >= i) out.push_back({i, v, upper_colors_[idx++]});
  }
  return out;
}

std::vector<ColoredArc> ColoredPermutation::lower_arcs() const {
  std::vector<ColoredArc> out;
  for (int i = 1; i <= n(); ++i) {
    int v = word_[static_cast<std::size_t>(i - 1)];
    if (v < i) out.push_back({v, i, 0});
  }
  std::sort(out.begin(), out.end());
  for (std::size_t idx = 0; idx < out.size(); ++idx) out[idx].color = lower_colors_[idx];
  return out;
}

CrossNestStats permutation_stats(const ColoredPermutation& s) {
  std::vector<std::vector<Arc>> upper(static_cast<std::size_t>(s.r()));
  std::vector<std::vector<Arc>> lower(static_cast<std::size_t>(s.r()));
  for (const auto& a : s.upper_arcs())
    upper[static_cast<std::size_t>(a.color - 1)].push_back({a.left, a.right});
  for (const auto& a : s.lower_arcs())
    lower[static_cast<std::size_t>(a.color - 1)].push_back({a.left, a.right});
  CrossNestStats total{0, 0};
  for (const auto& fam : upper) {
    CrossNestStats st = enhanced_chain_stats(fam);
    total.cr = std::max(total.cr, st.cr);
    total.ne = std::max(total.ne, st.ne);
  }
  for (const auto& fam : lower) {
    CrossNestStats st = chain_stats(fam);
    total.cr = std::max(total.cr, st.cr);
    total.ne = std::max(total.ne, st.ne);
  }
  return total;
}

std::pair<ColoredSetPartition, ColoredSetPartition> permutation_to_matching_pair(
    const ColoredPermutation& s) {
  std::vector<ColoredArc> up, lo;
  for (const auto& a : s.upper_arcs()) up.push_back({2 * a.left - 1, 2 * a.right, a.color});
  for (const auto& a : s.lower_arcs()) lo.push_back({2 * a.left, 2 * a.right - 1, a.color});
  int m = 2 * s.n();
  return {ColoredSetPartition::from_arcs(m, up, s.r()),
          ColoredSetPartition::from_arcs(m, lo, s.r())};
}

ColoredPermutation matching_pair_to_permutation(const ColoredSetPartition& upper,
                                                const ColoredSetPartition& lower) {
  require_matching(upper);
  require_matching(lower);
  if (upper.n() != lower.n() || upper.n() % 2 != 0 || upper.r() != lower.r())
    throw NotAPermutationPair("matchings must share an even ground set and color count");
  int n = upper.n() / 2;
  // Odd positions must split into upper lefts and lower rights; even
  // positions into upper rights and lower lefts.
  std::set<int> odd_claim, even_claim;
  for (const auto& a : upper.colored_arcs()) {
    if (!odd_claim.insert(a.left).second || a.left % 2 == 0)
      throw NotAPermutationPair("upper left endpoints must claim distinct odd positions");
    if (!even_claim.insert(a.right).second || a.right % 2 != 0)
      throw NotAPermutationPair("upper right endpoints must claim distinct even positions");
  }
  for (const auto& a : lower.colored_arcs()) {
    if (!even_claim.insert(a.left).second || a.left % 2 != 0)
      throw NotAPermutationPair("lower left endpoints must claim distinct even positions");
    if (!odd_claim.insert(a.right).second || a.right % 2 == 0)
      throw NotAPermutationPair("lower right endpoints must claim distinct odd positions");
  }
  if (odd_claim.size() != static_cast<std::size_t>(n) ||
      even_claim.size() != static_cast<std::size_t>(n))
    throw NotAPermutationPair("every position must be claimed exactly once");

  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::map<int, int> upper_color_by_i, lower_color_by_left;
  for (const auto& a : upper.colored_arcs()) {
    int i = (a.left + 1) / 2, j = a.right / 2;
    word[static_cast<std::size_t>(i - 1)] = j;
    upper_color_by_i[i] = a.color;
  }
  for (const auto& a : lower.colored_arcs()) {
    int j = a.left / 2, i = (a.right + 1) / 2;
    word[static_cast<std::size_t>(i - 1)] = j;
    lower_color_by_left[j] = a.color;
  }
  std::vector<int> up_colors, lo_colors;
  for (int i = 1; i <= n; ++i) {
    int v = word[static_cast<std::size_t>(i - 1)];
    if (v >= i) up_colors.push_back(upper_color_by_i.at(i));
  }
  for (const auto& [left, color] : lower_color_by_left) {
    (void)left;
    lo_colors.push_back(color);
  }
  return ColoredPermutation(std::move(word), std::move(up_colors), std::move(lo_colors),
                            upper.r());
}

std::vector<ColoredPermutation> enumerate_permutations(int n, int r) {
  if (n < 0 || r < 1) throw OutOfRange("bad permutation parameters");
  std::vector<ColoredPermutation> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    std::size_t upper = 0;
    for (int i = 1; i <= n; ++i)
      if (word[static_cast<std::size_t>(i - 1)] >= i) ++upper;
    std::size_t m = static_cast<std::size_t>(n);
    std::vector<int> colors(m, 1);
    while (true) {
      std::vector<int> up(colors.begin(), colors.begin() + static_cast<long>(upper));
      std::vector<int> lo(colors.begin() + static_cast<long>(upper), colors.end());
      out.emplace_back(word, up, lo, r);
      std::size_t i = m;
      while (i > 0 && colors[i - 1] == r) colors[--i] = 1;
      if (i == 0) break;
      ++colors[i - 1];
    }
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// --- tangled diagrams -------------------------------------------------------

TangledDiagram::TangledDiagram(int n, std::vector<TangledArc> arcs, int r)
    : n_(n), arcs_(std::move(arcs)), r_(r) {
  if (n_ < 0 || r_ < 1) throw OutOfRange("bad diagram parameters");
  std::vector<char> slot_used(static_cast<std::size_t>(2 * n_) + 1, 0);
  // role per vertex slot: 0 free, 'd' departure, 'a' arrival
  std::vector<char> role(static_cast<std::size_t>(2 * n_) + 1, 0);
  for (const auto& a : arcs_) {
    if (a.from.vertex < 1 || a.from.vertex > n_ || a.to.vertex < 1 || a.to.vertex > n_)
      throw OutOfRange("vertex outside [1, n]");
    if (a.color < 1 || a.color > r_) throw OutOfRange("color outside [1, r]");
    int p = a.from.position(), q = a.to.position();
    if (p >= q) throw OutOfRange("arc endpoints out of order");
    if (slot_used[static_cast<std::size_t>(p)] || slot_used[static_cast<std::size_t>(q)])
      throw DuplicateEndpoint("slot used twice");
    slot_used[static_cast<std::size_t>(p)] = 1;
    slot_used[static_cast<std::size_t>(q)] = 1;
    bool loop = a.from.vertex == a.to.vertex;
    role[static_cast<std::size_t>(p)] = loop ? 'l' : 'd';
    role[static_cast<std::size_t>(q)] = loop ? 'l' : 'a';
  }
  for (int v = 1; v <= n_; ++v) {
    char first = role[static_cast<std::size_t>(2 * v - 1)];
    char second = role[static_cast<std::size_t>(2 * v)];
    // Allowed slot patterns: both free; lone departure on the second slot;
    // lone arrival on the first; a loop; or both slots in use.
    if (first != 0 && second != 0) continue;
    if (first == 0 && second == 0) continue;
    if (first == 0 && second == 'd') continue;
    if (first == 'a' && second == 0) continue;
    throw OutOfRange("vertex configuration not in the allowed table");
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const TangledArc& x, const TangledArc& y) {
    return x.from.position() < y.from.position();
  });
}

ColoredSetPartition inflate(const TangledDiagram& t) {
  std::vector<ColoredArc> arcs;
  for (const auto& a : t.arcs()) arcs.push_back({a.from.position(), a.to.position(), a.color});
  return ColoredSetPartition::from_arcs(2 * t.n(), arcs, t.r());
}

TangledDiagram deflate(const ColoredSetPartition& m) {
  require_matching(m);
  if (m.n() % 2 != 0) throw NotAnInflation("ground set size must be even");
  int n = m.n() / 2;
  std::vector<TangledArc> arcs;
  for (const auto& a : m.colored_arcs()) {
    TangledEnd from{(a.left + 1) / 2, a.left % 2 == 0};
    TangledEnd to{(a.right + 1) / 2, a.right % 2 == 0};
    arcs.push_back({from, to, a.color});
  }
  try {
    return TangledDiagram(n, std::move(arcs), m.r());
  } catch (const Error&) {
    throw NotAnInflation("matching violates the isolated-point conditions");
  }
}

CrossNestStats tangled_stats(const TangledDiagram& t) { return cr_ne(inflate(t)); }

std::vector<TangledDiagram> enumerate_tangled(int n, int r) {
  std::vector<TangledDiagram> out;
  for (const auto& m : enumerate_matchings(2 * n, r)) {
    try {
      out.push_back(deflate(m));
    } catch (const NotAnInflation&) {
    }
  }
  return out;
}

}  // namespace crossnest
