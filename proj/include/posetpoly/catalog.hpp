#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "posetpoly/poset.hpp"

namespace posetpoly {

namespace detail {

// Iterative color refinement: a vertex's color absorbs the multisets of
// colors above and below it until the partition stabilizes.
inline std::vector<int> refine_colors(const Poset& p) {
  const int n = p.size();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int round = 0; round <= n; ++round) {
    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Sig> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> up, down;
      for (int q : p.above(v).elements()) up.push_back(col[static_cast<std::size_t>(q)]);
      for (int q : p.below(v).elements()) down.push_back(col[static_cast<std::size_t>(q)]);
      std::ranges::sort(up);
      std::ranges::sort(down);
      sig[static_cast<std::size_t>(v)] = {col[static_cast<std::size_t>(v)], std::move(up),
                                          std::move(down)};
    }
    std::vector<Sig> uniq = sig;
    std::ranges::sort(uniq);
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) -
          uniq.begin());
    if (next == col) break;
    col = std::move(next);
  }
  return col;
}

inline std::vector<std::uint64_t> relation_key(const Poset& p, const std::vector<int>& perm) {
  // perm[i] = original vertex placed at position i.
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint64_t> key(static_cast<std::size_t>(n) + 1);
  key[0] = static_cast<std::uint64_t>(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = 0;
    for (int q : p.above(perm[static_cast<std::size_t>(i)]).elements())
      row |= std::uint64_t{1} << pos[static_cast<std::size_t>(q)];
    key[static_cast<std::size_t>(i) + 1] = row;
  }
  return key;
}

}  // namespace detail

/// Canonical labeling key: the lexicographically smallest relation encoding
/// over all vertex orderings that list color classes in ascending order.
/// Isomorphic posets get equal keys. Intended for small posets; guarded.
inline std::vector<std::uint64_t> canonical_key(const Poset& p) {
  const int n = p.size();
  if (n > 12) throw std::invalid_argument("canonical_key: poset too large");
  if (n == 0) return {0};
  std::vector<int> col = detail::refine_colors(p);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::ranges::sort(order, [&](int a, int b) {
    return std::pair(col[static_cast<std::size_t>(a)], a) <
           std::pair(col[static_cast<std::size_t>(b)], b);
  });

  // Group class boundaries.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && col[static_cast<std::size_t>(order[j])] ==
                                   col[static_cast<std::size_t>(order[i])])
      ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint64_t> best;
  std::vector<int> perm = order;
  // Backtrack over per-class permutations; poset sizes here are small enough
  // that the product of class factorials stays tame.
  auto walk = [&](auto&& self, std::size_t ci) -> void {
    if (ci == classes.size()) {
      auto key = detail::relation_key(p, perm);
      if (best.empty() || key < best) best = std::move(key);
      return;
    }
    auto [lo, hi] = classes[ci];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo),
              perm.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, ci + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                   perm.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  walk(walk, 0);
  return best;
}

inline Poset poset_from_key(const std::vector<std::uint64_t>& key) {
  const int n = static_cast<int>(key[0]);
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((key[static_cast<std::size_t>(i) + 1] >> j) & 1) rels.emplace_back(i, j);
  return Poset::from_relations(n, rels, /*close=*/false);
}

inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.relation_count() != b.relation_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

/// One canonical representative per isomorphism class of n-element posets,
/// sorted by canonical key. Every class at level k+1 is reached by attaching
/// a new maximal element above each order ideal of a level-k representative.
inline std::vector<Poset> enumerate_posets_upto_iso(int n, int cap = 7) {
  if (n < 0) throw std::invalid_argument("enumerate_posets_upto_iso: negative size");
  if (n > cap)
    throw std::invalid_argument("enumerate_posets_upto_iso: size cap of " + std::to_string(cap) +
                                " exceeded");
  std::vector<Poset> level = {Poset()};
  for (int k = 0; k < n; ++k) {
    std::map<std::vector<std::uint64_t>, Poset> next;
    for (const Poset& p : level) {
      const Subset everything = p.all();
      for (Subset filt : p.filters()) {
        Subset ideal = everything.minus(filt);
        std::vector<std::pair<int, int>> rels;
        for (int a = 0; a < p.size(); ++a)
          for (int q : p.above(a).elements()) rels.emplace_back(a, q);
        for (int d : ideal.elements()) rels.emplace_back(d, k);
        Poset grown = Poset::from_relations(k + 1, rels, /*close=*/false);
        auto key = canonical_key(grown);
        Poset canon = poset_from_key(key);
        next.try_emplace(std::move(key), std::move(canon));
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& [key, poset] : next) level.push_back(std::move(poset));
  }
  return level;
}

/// Deterministic random poset: sample a permutation, orient every position
/// pair forward with a seeded density, close transitively. Acyclic by
/// construction.
inline Poset random_poset(int n, std::uint64_t seed) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("random_poset: bad size");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  const std::uint64_t density_percent = 15 + rng() % 71;  // 15..85
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 100 < density_percent)
        rels.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  return Poset::from_relations(n, rels);
}

}  // namespace posetpoly
