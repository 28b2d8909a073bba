#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetpoly/poset.hpp"

namespace posetpoly {

/// Connected components of the comparability graph, sorted by least element.
/// A connected poset yields a singleton list, the empty poset an empty one.
inline std::vector<Subset> parallel_components(const Poset& p) {
  std::vector<Subset> out;
  Subset seen;
  for (int v = 0; v < p.size(); ++v) {
    if (seen.contains(v)) continue;
    Subset comp = Subset::single(v);
    for (;;) {
      Subset next = comp;
      for (int q : comp.elements()) next |= p.comparables(q);
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    seen |= comp;
  }
  return out;
}

/// Finest ordered partition P = P_1 < P_2 < ... < P_m with every element of
/// an earlier block below every element of a later one. Blocks are the
/// connected components of the incomparability graph; should the layering
/// check ever fail the whole poset is returned as a single block.
inline std::vector<Subset> ordinal_decomposition(const Poset& p) {
  if (p.size() == 0) throw std::invalid_argument("ordinal_decomposition: empty poset");
  std::vector<Subset> blocks;
  Subset seen;
  for (int v = 0; v < p.size(); ++v) {
    if (seen.contains(v)) continue;
    Subset comp = Subset::single(v);
    for (;;) {
      Subset next = comp;
      for (int q : comp.elements())
        next |= p.all().minus(p.comparables(q));  // incomparability neighbours, q included
      if (next == comp) break;
      comp = next;
    }
    blocks.push_back(comp);
    seen |= comp;
  }

  // Every pair of blocks must relate uniformly; transitivity of the order
  // then makes the block relation a total order.
  auto all_below = [&p](Subset a, Subset b) {
    for (int x : a.elements())
      for (int y : b.elements())
        if (!p.less(x, y)) return false;
    return true;
  };
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!all_below(blocks[i], blocks[j]) && !all_below(blocks[j], blocks[i]))
        return {p.all()};

  std::ranges::sort(blocks, [&](Subset a, Subset b) { return all_below(a, b); });
  return blocks;
}

/// Witness that a poset lies in the family generated from x-free posets by
/// disjoint unions and ordinal sums. Each node covers a subset of the
/// original elements; parallel children partition with no cross relations,
/// ordinal children with all relations running earlier to later.
struct DecompositionTree {
  enum class Kind { leaf, parallel, ordinal };

  Kind kind = Kind::leaf;
  Subset elements;
  std::vector<DecompositionTree> children;
};

/// Membership test returning the decomposition witness, or nullopt when the
/// poset is outside the family. X-free posets are leaves; otherwise split
/// parallel, then ordinal; a connected, ordinally indecomposable poset that
/// is not x-free has no witness.
inline std::optional<DecompositionTree> family_f_membership(const Poset& p) {
  auto build = [&p](auto&& self, Subset elems) -> std::optional<DecompositionTree> {
    Poset sub = p.induced(elems);
    DecompositionTree node;
    node.elements = elems;
    if (sub.x_free()) {
      node.kind = DecompositionTree::Kind::leaf;
      return node;
    }
    auto attach = [&](const std::vector<Subset>& parts) -> bool {
      for (Subset local : parts) {
        // Lift the block back to original element ids.
        Subset global;
        auto ids = elems.elements();
        for (int b : local.elements()) global |= Subset::single(ids[static_cast<std::size_t>(b)]);
        auto child = self(self, global);
        if (!child) return false;
        node.children.push_back(std::move(*child));
      }
      return true;
    };
    auto comps = parallel_components(sub);
    if (comps.size() > 1) {
      node.kind = DecompositionTree::Kind::parallel;
      if (!attach(comps)) return std::nullopt;
      return node;
    }
    auto blocks = ordinal_decomposition(sub);
    if (blocks.size() > 1) {
      node.kind = DecompositionTree::Kind::ordinal;
      if (!attach(blocks)) return std::nullopt;
      return node;
    }
    return std::nullopt;
  };
  if (p.size() == 0) return DecompositionTree{DecompositionTree::Kind::leaf, Subset{}, {}};
  return build(build, p.all());
}

namespace detail {

inline bool is_total_order(const Poset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!p.comparable(a, b)) return false;
  return true;
}

inline std::string leaf_label(const Poset& leaf) {
  if (is_total_order(leaf)) return "C(" + std::to_string(leaf.size()) + ")";
  if (leaf.relation_count() == 0) return "A(" + std::to_string(leaf.size()) + ")";
  std::string s = "poset{" + std::to_string(leaf.size()) + ":";
  for (auto [a, b] : leaf.cover_pairs()) s += " " + std::to_string(a) + "<" + std::to_string(b);
  return s + "}";
}

}  // namespace detail

/// Structural rendering, e.g. "Parallel(Ordinal(A(2), C(1), A(2)), C(2))".
/// Leaves print as A(k)/C(k) when they are antichains or chains, otherwise
/// as an explicit cover list.
inline std::string decomposition_to_string(const DecompositionTree& t, const Poset& p) {
  if (t.kind == DecompositionTree::Kind::leaf)
    return detail::leaf_label(p.induced(t.elements));
  std::string s = t.kind == DecompositionTree::Kind::parallel ? "Parallel(" : "Ordinal(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ", ";
    s += decomposition_to_string(t.children[i], p);
  }
  return s + ")";
}

/// Grammar text for the decomposition ("(A(2) < C(1) < A(2)) + C(2)") when
/// every leaf is an antichain or a chain; nullopt otherwise.
inline std::optional<std::string> decomposition_to_expression(const DecompositionTree& t,
                                                              const Poset& p) {
  if (t.kind == DecompositionTree::Kind::leaf) {
    Poset leaf = p.induced(t.elements);
    if (detail::is_total_order(leaf)) return "C(" + std::to_string(leaf.size()) + ")";
    if (leaf.relation_count() == 0) return "A(" + std::to_string(leaf.size()) + ")";
    return std::nullopt;
  }
  std::string sep = t.kind == DecompositionTree::Kind::parallel ? " + " : " < ";
  std::string s;
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    auto part = decomposition_to_expression(t.children[i], p);
    if (!part) return std::nullopt;
    bool parens = t.kind == DecompositionTree::Kind::ordinal &&
                  t.children[i].kind == DecompositionTree::Kind::parallel;
    if (i) s += sep;
    s += parens ? "(" + *part + ")" : *part;
  }
  return s;
}

}  // namespace posetpoly
