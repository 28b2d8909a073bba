#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "posetpoly/expr.hpp"
#include "posetpoly/family.hpp"
#include "posetpoly/poset.hpp"
#include "posetpoly/skeleton.hpp"
#include "posetpoly/spoly.hpp"

namespace posetpoly {

/// Simplex-count polynomials of both polytopes of one poset, split at the
/// origin vertex, together with the classification flags.
struct PosetSimplexData {
  int n = 0;
  bool x_free = true;
  bool in_family = true;
  SimplexPolys order;  // polytope of filters
  SimplexPolys chain;  // polytope of antichains

  const SimplexPolys& polys(PolytopeKind kind) const {
    return kind == PolytopeKind::order ? order : chain;
  }
};

inline PosetSimplexData compute_simplex_data(const Poset& p) {
  PosetSimplexData d;
  d.n = p.size();
  d.x_free = p.x_free();
  d.in_family = family_f_membership(p).has_value();
  d.order = simplex_polys(build_skeleton(p, PolytopeKind::order));
  d.chain = simplex_polys(build_skeleton(p, PolytopeKind::chain));
  return d;
}

/// Simplex polynomials of a subdirect sum from those of its parts. Origin
/// faces multiply through a joint origin (one shared vertex, hence the
/// division by x); non-origin faces pair up as joins.
inline SimplexPolys subdirect_spolys(const SPoly& s0p, const SPoly& s1p, const SPoly& s0q,
                                     const SPoly& s1q) {
  if (s0p[0] != 0 || s0q[0] != 0)
    throw std::invalid_argument(
        "subdirect_spolys: an origin polynomial with a constant term is a caller bug");
  SimplexPolys out;
  out.s0 = (s0p * s0q).divided_by_x();
  out.s1 = s1p * s1q;
  out.s = out.s0 + out.s1;
  return out;
}

/// Total simplex polynomial of the polytope of an ordinal sum A < B.
/// For the order polytope the second slot must carry the data of the dual
/// of B, and only the total is meaningful: the subdirect-sum origin of
/// O(A < B) is the vertex of the filter B, not the empty filter, so the
/// component split does not transfer. The chain polytope has no such twist
/// (the chain data of a poset and its dual coincide).
inline SPoly ordinal_sum_spoly(PolytopeKind kind, const PosetSimplexData& a,
                               const PosetSimplexData& b_slot) {
  const SimplexPolys& pa = a.polys(kind);
  const SimplexPolys& pb = b_slot.polys(kind);
  return subdirect_spolys(pa.s0, pa.s1, pb.s0, pb.s1).s;
}

/// Simplex polynomials of a product polytope (the polytope of a disjoint
/// union). A simplex face of a product is a simplex of one factor times a
/// vertex of the other, so the counts combine bilinearly; the origin split
/// double-counts the shared origin vertex once.
struct ProductPolys {
  SPoly s, s0;
};

inline ProductPolys product_spoly(const PosetSimplexData& p, const PosetSimplexData& q,
                                  PolytopeKind kind) {
  const SimplexPolys& pp = p.polys(kind);
  const SimplexPolys& pq = q.polys(kind);
  const Int vp = pp.s[1], vq = pq.s[1];  // vertex counts
  std::size_t len = std::max(pp.s.size(), pq.s.size());
  std::vector<Int> c(len, Int(0));
  c[0] = 1;
  if (len > 1) c[1] = vp * vq;
  for (std::size_t k = 2; k < len; ++k) c[k] = pp.s[k] * vq + vp * pq.s[k];
  ProductPolys out;
  out.s = SPoly(std::move(c));
  auto s0 = SPoly::try_subtract(pp.s0 + pq.s0, SPoly::monomial(1));
  if (!s0)
    throw std::invalid_argument("product_spoly: inputs lack the origin vertex");
  out.s0 = std::move(*s0);
  return out;
}

/// The four normalized origin-split polynomials used by the ordinal-sum
/// inequality: origin ones shifted down by x, the off-origin ones as they
/// are.
struct TildePolys {
  SPoly chain_origin;   // s0 of the chain polytope / x
  SPoly order_origin;   // s0 of the order polytope / x
  SPoly order_free;     // s1 of the order polytope
  SPoly chain_free;     // s1 of the chain polytope
};

inline TildePolys tilde_polys(const PosetSimplexData& d) {
  return TildePolys{d.chain.s0.divided_by_x(), d.order.s0.divided_by_x(), d.order.s1, d.chain.s1};
}

struct CheckEntry {
  std::string name;
  bool ok = true;
  std::size_t witness = 0;  // first failing exponent when !ok

  explicit operator bool() const { return ok; }
};

struct AbcdReport {
  std::vector<CheckEntry> entries;

  bool all_ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return true;
  }
};

/// The two chains of coefficient-wise inequalities between the normalized
/// origin-split polynomials. They are guaranteed for every poset whose
/// order polytope has at most as many simplices as its chain polytope; a
/// failure under that hypothesis flags a counterexample (or a bug).
inline AbcdReport check_origin_split_inequalities(const PosetSimplexData& d) {
  TildePolys t = tilde_polys(d);
  AbcdReport r;
  auto add = [&r](std::string name, PolyLeVerdict v) {
    r.entries.push_back(CheckEntry{std::move(name), v.ok, v.first_violation});
  };
  // Differences of these polynomials may not be polynomials with
  // nonnegative coefficients, so compare as sums.
  add("chain_origin<=order_origin", poly_le(t.chain_origin, t.order_origin));
  add("gap_bound", poly_le(t.order_origin.shifted_up() + t.order_free,
                           t.chain_origin.shifted_up() + t.chain_free));
  add("order_origin<=order_free", poly_le(t.order_origin, t.order_free));
  add("order_free<=chain_free", poly_le(t.order_free, t.chain_free));
  return r;
}

/// Verdict of the central comparison for one poset.
struct MainVerdict {
  bool in_family = false;
  bool x_free = false;
  PolyLeVerdict le;   // S of the order polytope <= S of the chain polytope
  bool equal = false;
};

inline MainVerdict check_main(const PosetSimplexData& d) {
  MainVerdict v;
  v.in_family = d.in_family;
  v.x_free = d.x_free;
  v.le = poly_le(d.order.s, d.chain.s);
  v.equal = d.order.s == d.chain.s;
  return v;
}

inline MainVerdict check_main(const Poset& p) { return check_main(compute_simplex_data(p)); }

/// Origin-split chain-polytope polynomials computed structurally over an
/// expression: ordinal sums via the subdirect-sum recursion (the chain
/// polytope of an ordinal sum is the subdirect sum of the parts with the
/// origins aligned), disjoint unions via the product rules, duals are the
/// identity on chain data. Leaves fall back to direct enumeration.
struct ChainPolys {
  SPoly s0, s1;
};

inline ChainPolys chain_spolys_recursive(const PosetExpr& e) {
  switch (e.kind) {
    case PosetExpr::Kind::dual_of:
      return chain_spolys_recursive(e.children[0]);
    case PosetExpr::Kind::ordinal_sum: {
      ChainPolys l = chain_spolys_recursive(e.children[0]);
      ChainPolys r = chain_spolys_recursive(e.children[1]);
      SimplexPolys v = subdirect_spolys(l.s0, l.s1, r.s0, r.s1);
      return ChainPolys{v.s0, v.s1};
    }
    case PosetExpr::Kind::disjoint_union: {
      ChainPolys l = chain_spolys_recursive(e.children[0]);
      ChainPolys r = chain_spolys_recursive(e.children[1]);
      SPoly sl = l.s0 + l.s1, sr = r.s0 + r.s1;
      const Int vl = sl[1], vr = sr[1];
      std::size_t len = std::max(sl.size(), sr.size());
      std::vector<Int> c(len, Int(0));
      c[0] = 1;
      if (len > 1) c[1] = vl * vr;
      for (std::size_t k = 2; k < len; ++k) c[k] = sl[k] * vr + vl * sr[k];
      SPoly total(std::move(c));
      auto s0 = SPoly::try_subtract(l.s0 + r.s0, SPoly::monomial(1));
      auto s1 = s0 ? SPoly::try_subtract(total, *s0) : std::nullopt;
      if (!s0 || !s1)
        throw std::invalid_argument("chain_spolys_recursive: inconsistent child data");
      return ChainPolys{std::move(*s0), std::move(*s1)};
    }
    default: {
      SimplexPolys direct = simplex_polys(build_skeleton(elaborate(e), PolytopeKind::chain));
      return ChainPolys{direct.s0, direct.s1};
    }
  }
}

}  // namespace posetpoly
