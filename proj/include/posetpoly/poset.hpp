#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetpoly/numeric.hpp"
#include "posetpoly/subset.hpp"

namespace posetpoly {

inline constexpr int kMaxElements = 62;
// Filter/antichain/linear-extension enumeration walks all 2^n subsets.
inline constexpr int kMaxEnumerationElements = 20;

/// Finite poset on elements 0..n-1, stored as its strict order relation.
/// The relation is kept transitively closed; construction validates
/// irreflexivity (antisymmetry then follows). Immutable after construction.
class Poset {
 public:
  Poset() = default;  // the empty poset

  /// Builds a poset from generating strict relations, applying transitive
  /// closure. Throws std::invalid_argument on out-of-range indices or if the
  /// closure turns out cyclic.
  static Poset from_relations(int n, std::span<const std::pair<int, int>> rels,
                              bool close = true) {
    if (n < 0 || n > kMaxElements) throw std::invalid_argument("poset: bad element count");
    Poset p;
    p.n_ = n;
    p.above_.assign(static_cast<std::size_t>(n), Subset{});
    for (auto [a, b] : rels) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("poset: relation index out of range");
      p.above_[static_cast<std::size_t>(a)] |= Subset::single(b);
    }
    if (close) p.close_transitively();
    p.validate();
    return p;
  }

  static Poset antichain(int k) {
    if (k < 0 || k > kMaxElements) throw std::invalid_argument("antichain: bad size");
    Poset p;
    p.n_ = k;
    p.above_.assign(static_cast<std::size_t>(k), Subset{});
    return p;
  }

  static Poset chain(int k) {
    if (k < 0 || k > kMaxElements) throw std::invalid_argument("chain: bad size");
    Poset p;
    p.n_ = k;
    p.above_.assign(static_cast<std::size_t>(k), Subset{});
    for (int i = 0; i < k; ++i)
      p.above_[static_cast<std::size_t>(i)] =
          Subset::full(k).minus(Subset::full(i + 1));
    return p;
  }

  /// The five-element poset with two minimal elements 0,1 below a middle
  /// element 2 below two maximal elements 3,4: the pattern the x-freeness
  /// test looks for, and the smallest poset whose two polytopes have
  /// different simplex counts.
  static Poset x_poset() {
    const std::pair<int, int> rels[] = {{0, 2}, {1, 2}, {2, 3}, {2, 4}};
    return from_relations(5, rels);
  }

  int size() const { return n_; }
  Subset all() const { return Subset::full(n_); }

  bool less(int p, int q) const { return above_[static_cast<std::size_t>(p)].contains(q); }
  bool comparable(int p, int q) const { return less(p, q) || less(q, p); }

  /// Strict up-set {q : p < q}.
  Subset above(int p) const { return above_[static_cast<std::size_t>(p)]; }
  /// Strict down-set {q : q < p}.
  Subset below(int p) const {
    Subset s;
    for (int q = 0; q < n_; ++q)
      if (less(q, p)) s |= Subset::single(q);
    return s;
  }
  Subset comparables(int p) const { return above(p) | below(p); }

  /// Principal filter {q : q >= p}.
  Subset principal_filter(int p) const {
    require_element(p);
    return above(p).with(p);
  }

  /// Cover pairs (p,q): p < q with nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n_; ++p)
      for (int q : above(p).elements())
        if ((above(p) & below(q)).empty()) out.emplace_back(p, q);
    return out;
  }

  Poset dual() const {
    Poset d;
    d.n_ = n_;
    d.above_.assign(static_cast<std::size_t>(n_), Subset{});
    for (int p = 0; p < n_; ++p)
      for (int q : above(p).elements())
        d.above_[static_cast<std::size_t>(q)] |= Subset::single(p);
    return d;
  }

  /// Subposet induced on s, elements renumbered in increasing index order.
  Poset induced(Subset s) const {
    std::vector<int> ids = s.elements();
    Poset sub;
    sub.n_ = static_cast<int>(ids.size());
    sub.above_.assign(ids.size(), Subset{});
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < ids.size(); ++j)
        if (less(ids[i], ids[j])) sub.above_[i] |= Subset::single(static_cast<int>(j));
    return sub;
  }

  /// True iff s is non-empty and the comparability graph restricted to s is
  /// connected. The empty set counts as disconnected.
  bool connected_subset(Subset s) const {
    if (s.empty()) return false;
    Subset reach = Subset::single(s.lowest());
    for (;;) {
      Subset next = reach;
      for (int p : reach.elements()) next |= comparables(p) & s;
      if (next == reach) break;
      reach = next;
    }
    return reach == s;
  }

  bool connected() const { return connected_subset(all()); }

  bool is_filter(Subset s) const {
    for (int p : s.elements())
      if (!above(p).subset_of(s)) return false;
    return true;
  }

  bool is_antichain(Subset s) const {
    for (int p : s.elements())
      if (comparables(p).intersects(s)) return false;
    return true;
  }

  bool is_chain_subset(Subset s) const {
    auto ids = s.elements();
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (!comparable(ids[i], ids[j])) return false;
    return true;
  }

  /// All up-closed subsets, sorted by bit encoding (so the empty set is
  /// first and the whole poset last).
  std::vector<Subset> filters() const {
    require_enumerable();
    std::vector<Subset> out;
    const std::uint64_t end = std::uint64_t{1} << n_;
    for (std::uint64_t m = 0; m < end; ++m) {
      Subset s = Subset::from_bits(m);
      if (is_filter(s)) out.push_back(s);
    }
    return out;
  }

  /// All antichains, sorted by bit encoding.
  std::vector<Subset> antichains() const {
    require_enumerable();
    std::vector<Subset> out;
    const std::uint64_t end = std::uint64_t{1} << n_;
    for (std::uint64_t m = 0; m < end; ++m) {
      Subset s = Subset::from_bits(m);
      if (is_antichain(s)) out.push_back(s);
    }
    return out;
  }

  /// Number of order-preserving bijections onto {1,...,n}; 1 for n = 0.
  Int linear_extension_count() const {
    require_enumerable();
    std::unordered_map<std::uint64_t, Int> memo;
    return count_extensions(all(), memo);
  }

  /// Maximum cardinality of a chain; 0 for the empty poset.
  int height() const {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) order[static_cast<std::size_t>(p)] = p;
    std::ranges::sort(order, [&](int a, int b) { return below(a).count() < below(b).count(); });
    std::vector<int> h(static_cast<std::size_t>(n_), 1);
    int best = n_ == 0 ? 0 : 1;
    for (int p : order) {
      for (int q : below(p).elements())
        h[static_cast<std::size_t>(p)] =
            std::max(h[static_cast<std::size_t>(p)], h[static_cast<std::size_t>(q)] + 1);
      best = std::max(best, h[static_cast<std::size_t>(p)]);
    }
    return best;
  }

  /// True iff no five elements induce a subposet with two incomparable
  /// elements below a common middle element below two incomparable ones.
  bool x_free() const {
    if (n_ < 5) return true;
    for (int m = 0; m < n_; ++m) {
      Subset lo = below(m), hi = above(m);
      if (lo.count() < 2 || hi.count() < 2) continue;
      auto los = lo.elements(), his = hi.elements();
      for (std::size_t i = 0; i < los.size(); ++i)
        for (std::size_t j = i + 1; j < los.size(); ++j) {
          if (comparable(los[i], los[j])) continue;
          for (std::size_t k = 0; k < his.size(); ++k)
            for (std::size_t l = k + 1; l < his.size(); ++l)
              if (!comparable(his[k], his[l])) return false;
        }
    }
    return true;
  }

  std::size_t relation_count() const {
    std::size_t c = 0;
    for (int p = 0; p < n_; ++p) c += static_cast<std::size_t>(above(p).count());
    return c;
  }

  /// Re-checks the representation invariants; used by generators and tests.
  bool valid() const {
    for (int p = 0; p < n_; ++p) {
      if (above(p).contains(p)) return false;
      for (int q : above(p).elements())
        if (!above(q).subset_of(above(p))) return false;
    }
    return true;
  }

  friend bool operator==(const Poset& a, const Poset& b) = default;

 private:
  void close_transitively() {
    for (bool changed = true; changed;) {
      changed = false;
      for (int p = 0; p < n_; ++p)
        for (int q : above(p).elements()) {
          Subset merged = above(p) | above(q);
          if (merged != above(p)) {
            above_[static_cast<std::size_t>(p)] = merged;
            changed = true;
          }
        }
    }
  }

  void validate() const {
    if (!valid()) throw std::invalid_argument("poset: relation is not a strict order");
  }

  void require_element(int p) const {
    if (p < 0 || p >= n_) throw std::invalid_argument("poset: element out of range");
  }

  void require_enumerable() const {
    if (n_ > kMaxEnumerationElements)
      throw std::invalid_argument("poset: enumeration requires at most " +
                                  std::to_string(kMaxEnumerationElements) + " elements");
  }

  // Remaining elements always form a down-closed set, so memoization is keyed
  // on the subset mask.
  Int count_extensions(Subset remaining, std::unordered_map<std::uint64_t, Int>& memo) const {
    if (remaining.empty()) return 1;
    auto it = memo.find(remaining.bits());
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (int p : remaining.elements())
      if ((above(p) & remaining).empty())  // maximal in the remainder
        total += count_extensions(remaining.without(p), memo);
    memo.emplace(remaining.bits(), total);
    return total;
  }

  int n_ = 0;
  std::vector<Subset> above_;
};

/// Elements of a keep their indices; elements of b are shifted past them.
inline Poset disjoint_union(const Poset& a, const Poset& b) {
  if (a.size() + b.size() > kMaxElements)
    throw std::invalid_argument("disjoint_union: too many elements");
  std::vector<std::pair<int, int>> rels;
  for (int p = 0; p < a.size(); ++p)
    for (int q : a.above(p).elements()) rels.emplace_back(p, q);
  for (int p = 0; p < b.size(); ++p)
    for (int q : b.above(p).elements()) rels.emplace_back(a.size() + p, a.size() + q);
  return Poset::from_relations(a.size() + b.size(), rels, /*close=*/false);
}

/// Disjoint union plus every element of a below every element of b.
inline Poset ordinal_sum(const Poset& a, const Poset& b) {
  if (a.size() + b.size() > kMaxElements)
    throw std::invalid_argument("ordinal_sum: too many elements");
  std::vector<std::pair<int, int>> rels;
  for (int p = 0; p < a.size(); ++p)
    for (int q : a.above(p).elements()) rels.emplace_back(p, q);
  for (int p = 0; p < b.size(); ++p)
    for (int q : b.above(p).elements()) rels.emplace_back(a.size() + p, a.size() + q);
  for (int p = 0; p < a.size(); ++p)
    for (int q = 0; q < b.size(); ++q) rels.emplace_back(p, a.size() + q);
  return Poset::from_relations(a.size() + b.size(), rels, /*close=*/false);
}

}  // namespace posetpoly
