#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetpoly/poset.hpp"
#include "posetpoly/spoly.hpp"

namespace posetpoly {

enum class PolytopeKind { order, chain };

inline const char* kind_name(PolytopeKind k) {
  return k == PolytopeKind::order ? "order" : "chain";
}

namespace detail {

/// Fixed-width bitset over graph vertices.
struct VertexSet {
  std::vector<std::uint64_t> w;

  explicit VertexSet(std::size_t nwords = 0) : w(nwords, 0) {}

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
  }
  bool empty() const {
    for (std::uint64_t x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  VertexSet intersect(const VertexSet& o) const {
    VertexSet r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w.size(); ++wi)
      for (std::uint64_t m = w[wi]; m != 0; m &= m - 1)
        fn(static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(m))));
  }
};

}  // namespace detail

/// Undirected graph on the polytope's vertices. Vertices are the filters or
/// antichains of the underlying poset in ascending bit-encoding order, so
/// the origin (the empty set) always sorts first.
struct SkeletonGraph {
  PolytopeKind kind = PolytopeKind::order;
  std::vector<Subset> vertices;
  int origin = 0;
  std::vector<detail::VertexSet> adj;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int i, int j) const { return adj[static_cast<std::size_t>(i)].test(j); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj) twice += static_cast<std::size_t>(row.count());
    return twice / 2;
  }
};

namespace detail {

inline bool order_edge(Subset f1, Subset f2, const std::function<bool(Subset)>& connected) {
  if (f1.subset_of(f2)) return connected(f2.minus(f1));
  if (f2.subset_of(f1)) return connected(f1.minus(f2));
  return false;
}

inline bool chain_edge(Subset a1, Subset a2, const std::function<bool(Subset)>& connected) {
  return connected(a1 ^ a2);
}

// Connectivity of every subset is table-driven for small posets; skeleton
// construction probes the same differences over and over.
inline std::function<bool(Subset)> connectivity_oracle(const Poset& p) {
  if (p.size() <= 16) {
    auto table = std::make_shared<std::vector<char>>();
    table->resize(std::size_t{1} << p.size());
    for (std::uint64_t m = 0; m < table->size(); ++m)
      (*table)[m] = p.connected_subset(Subset::from_bits(m)) ? 1 : 0;
    return [table](Subset s) { return (*table)[s.bits()] != 0; };
  }
  return [&p](Subset s) { return p.connected_subset(s); };
}

}  // namespace detail

/// Edge test from the combinatorial characterization: two filters span an
/// edge of the order polytope iff one contains the other with connected
/// difference; two antichains span an edge of the chain polytope iff their
/// symmetric difference is connected.
inline bool is_edge(const Poset& p, PolytopeKind kind, Subset s1, Subset s2) {
  if (s1 == s2) throw std::invalid_argument("is_edge: vertices must be distinct");
  if (!s1.subset_of(p.all()) || !s2.subset_of(p.all()))
    throw std::invalid_argument("is_edge: subset not within the poset");
  std::function<bool(Subset)> conn = [&p](Subset s) { return p.connected_subset(s); };
  if (kind == PolytopeKind::order) {
    if (!p.is_filter(s1) || !p.is_filter(s2))
      throw std::invalid_argument("is_edge: inputs must be filters");
    return detail::order_edge(s1, s2, conn);
  }
  if (!p.is_antichain(s1) || !p.is_antichain(s2))
    throw std::invalid_argument("is_edge: inputs must be antichains");
  return detail::chain_edge(s1, s2, conn);
}

inline SkeletonGraph build_skeleton(const Poset& p, PolytopeKind kind) {
  SkeletonGraph g;
  g.kind = kind;
  g.vertices = kind == PolytopeKind::order ? p.filters() : p.antichains();
  g.origin = static_cast<int>(
      std::lower_bound(g.vertices.begin(), g.vertices.end(), Subset{}) - g.vertices.begin());
  const int nv = g.vertex_count();
  const std::size_t nwords = (static_cast<std::size_t>(nv) + 63) / 64;
  g.adj.assign(static_cast<std::size_t>(nv), detail::VertexSet(nwords));
  auto conn = detail::connectivity_oracle(p);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      bool e = kind == PolytopeKind::order
                   ? detail::order_edge(g.vertices[static_cast<std::size_t>(i)],
                                        g.vertices[static_cast<std::size_t>(j)], conn)
                   : detail::chain_edge(g.vertices[static_cast<std::size_t>(i)],
                                        g.vertices[static_cast<std::size_t>(j)], conn);
      if (e) {
        g.adj[static_cast<std::size_t>(i)].set(j);
        g.adj[static_cast<std::size_t>(j)].set(i);
      }
    }
  return g;
}

namespace detail {

class BinomialTable {
 public:
  const Int& at(int n, int k) {
    while (static_cast<int>(rows_.size()) <= n) {
      std::size_t r = rows_.size();
      std::vector<Int> row(r + 1, 1);
      for (std::size_t j = 1; j < r; ++j) row[j] = rows_[r - 1][j - 1] + rows_[r - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<Int>> rows_;
};

/// Counts cliques of every size without materializing them. Recursion keeps
/// a candidate set plus the number of required and optional vertices chosen
/// so far; optional vertices come from pivots, whose subsets all extend to
/// cliques, so a closed-form binomial sum settles each leaf.
class CliqueCounter {
 public:
  CliqueCounter(const std::vector<VertexSet>& adj, int nverts)
      : adj_(adj), nverts_(nverts) {}

  // counts[k] = number of k-vertex cliques; counts[0] = 1 for the empty one.
  std::vector<Int> counts_by_size() {
    counts_.assign(1, Int(1));
    const std::size_t nwords = (static_cast<std::size_t>(nverts_) + 63) / 64;
    std::vector<int> order = degeneracy_order();
    std::vector<int> pos(static_cast<std::size_t>(nverts_));
    for (int i = 0; i < nverts_; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < nverts_; ++i) {
      int v = order[static_cast<std::size_t>(i)];
      VertexSet cand(nwords);
      adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
        if (pos[static_cast<std::size_t>(u)] > i) cand.set(u);
      });
      recurse(std::move(cand), 1, 0);
    }
    return counts_;
  }

 private:
  std::vector<int> degeneracy_order() const {
    std::vector<int> deg(static_cast<std::size_t>(nverts_));
    std::vector<bool> done(static_cast<std::size_t>(nverts_), false);
    for (int v = 0; v < nverts_; ++v)
      deg[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(nverts_));
    for (int step = 0; step < nverts_; ++step) {
      int best = -1;
      for (int v = 0; v < nverts_; ++v)
        if (!done[static_cast<std::size_t>(v)] &&
            (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
          best = v;
      done[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
      adj_[static_cast<std::size_t>(best)].for_each([&](int u) {
        if (!done[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
      });
    }
    return order;
  }

  void recurse(VertexSet cand, int required, int optional_count) {
    if (cand.empty()) {
      if (static_cast<int>(counts_.size()) <= required + optional_count)
        counts_.resize(static_cast<std::size_t>(required + optional_count) + 1);
      for (int i = 0; i <= optional_count; ++i)
        counts_[static_cast<std::size_t>(required + i)] += binom_.at(optional_count, i);
      return;
    }
    int pivot = -1, pivot_links = -1;
    cand.for_each([&](int u) {
      int links = adj_[static_cast<std::size_t>(u)].intersection_count(cand);
      if (links > pivot_links) {
        pivot_links = links;
        pivot = u;
      }
    });
    recurse(cand.intersect(adj_[static_cast<std::size_t>(pivot)]), required, optional_count + 1);
    VertexSet rest = cand.minus(adj_[static_cast<std::size_t>(pivot)]);
    rest.reset(pivot);
    rest.for_each([&](int v) {
      cand.reset(v);
      recurse(cand.intersect(adj_[static_cast<std::size_t>(v)]), required + 1, optional_count);
    });
  }

  const std::vector<VertexSet>& adj_;
  int nverts_;
  std::vector<Int> counts_;
  BinomialTable binom_;
};

inline std::vector<VertexSet> induced_adjacency(const std::vector<VertexSet>& adj,
                                                const std::vector<int>& keep) {
  const std::size_t nwords = (keep.size() + 63) / 64;
  std::vector<VertexSet> sub(keep.size(), VertexSet(nwords));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adj[static_cast<std::size_t>(keep[i])].test(keep[j])) {
        sub[i].set(static_cast<int>(j));
        sub[j].set(static_cast<int>(i));
      }
  return sub;
}

}  // namespace detail

/// counts[k] = number of k-vertex cliques of the graph, counts[0] = 1.
inline std::vector<Int> clique_size_counts(const std::vector<detail::VertexSet>& adj,
                                           int nverts) {
  detail::CliqueCounter counter(adj, nverts);
  return counter.counts_by_size();
}

/// The three simplex generating polynomials of the polytope behind g:
/// coefficient k of s counts the (k-1)-dimensional simplex faces, s0 keeps
/// the faces through the origin, s1 the rest. A set of vertices spans a
/// simplex face exactly when it is a clique of the skeleton.
inline SimplexPolys simplex_polys(const SkeletonGraph& g) {
  const int nv = g.vertex_count();
  auto to_poly = [](const std::vector<Int>& counts) {
    return SPoly(std::vector<Int>(counts.begin(), counts.end()));
  };

  SimplexPolys out;
  out.s = to_poly(clique_size_counts(g.adj, nv));

  if (nv == 0) {
    out.s0 = SPoly();
    out.s1 = out.s;
    return out;
  }

  std::vector<int> near;
  g.adj[static_cast<std::size_t>(g.origin)].for_each([&](int u) { near.push_back(u); });
  auto near_counts =
      clique_size_counts(detail::induced_adjacency(g.adj, near), static_cast<int>(near.size()));
  out.s0 = to_poly(near_counts).shifted_up();  // each clique gains the origin itself

  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(nv) - 1);
  for (int v = 0; v < nv; ++v)
    if (v != g.origin) rest.push_back(v);
  out.s1 = to_poly(
      clique_size_counts(detail::induced_adjacency(g.adj, rest), static_cast<int>(rest.size())));
  return out;
}

/// Largest simplex-face dimension: largest clique size minus one; -1 when
/// the graph has no vertices.
inline int max_simplex_dim(const SkeletonGraph& g) {
  SPoly s = simplex_polys(g).s;
  return s.degree() - 1;
}

/// Vertex-index sets of all cliques through the origin, origin included,
/// each sorted ascending. Materializes the cliques; callers should size-gate
/// via the s0 coefficient sum first.
inline std::vector<std::vector<int>> list_origin_cliques(const SkeletonGraph& g) {
  std::vector<std::vector<int>> out;
  if (g.vertex_count() == 0) return out;
  std::vector<int> current{g.origin};
  auto rec = [&](auto&& self, const detail::VertexSet& cand, int from) -> void {
    std::vector<int> sorted = current;
    std::ranges::sort(sorted);
    out.push_back(std::move(sorted));
    cand.for_each([&](int v) {
      if (v < from) return;
      current.push_back(v);
      self(self, cand.intersect(g.adj[static_cast<std::size_t>(v)]), v + 1);
      current.pop_back();
    });
  };
  rec(rec, g.adj[static_cast<std::size_t>(g.origin)], 0);
  return out;
}

/// Maps an origin-containing simplex face of the chain polytope, given by
/// its vertex set {∅, {p_1}, ..., {p_k}} with the p_i a chain, to the
/// vertex set {∅, ↑p_1, ..., ↑p_k} of an origin-containing simplex face of
/// the order polytope of the same dimension.
inline std::vector<Subset> lift_origin_simplex(const Poset& p,
                                               const std::vector<Subset>& vertices) {
  bool saw_origin = false;
  std::vector<int> elems;
  for (Subset v : vertices) {
    if (!v.subset_of(p.all()))
      throw std::invalid_argument("lift_origin_simplex: subset not within the poset");
    if (!p.is_antichain(v))
      throw std::invalid_argument("lift_origin_simplex: vertex is not an antichain");
    if (v.empty()) {
      if (saw_origin) throw std::invalid_argument("lift_origin_simplex: duplicate origin");
      saw_origin = true;
      continue;
    }
    if (v.count() != 1)
      throw std::invalid_argument(
          "lift_origin_simplex: non-origin vertices of an origin simplex must be singletons");
    elems.push_back(v.lowest());
  }
  if (!saw_origin)
    throw std::invalid_argument("lift_origin_simplex: vertex set must contain the origin");
  std::ranges::sort(elems);
  if (std::ranges::adjacent_find(elems) != elems.end())
    throw std::invalid_argument("lift_origin_simplex: duplicate vertex");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!p.comparable(elems[i], elems[j]))
        throw std::invalid_argument("lift_origin_simplex: elements must form a chain");

  std::vector<Subset> out;
  out.push_back(Subset{});
  for (int e : elems) out.push_back(p.principal_filter(e));
  std::ranges::sort(out);
  return out;
}

}  // namespace posetpoly
