#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posetpoly/poset.hpp"
#include "posetpoly/skeleton.hpp"
#include "posetpoly/spoly.hpp"

namespace posetpoly {

using Point = std::vector<Rat>;

/// coeffs · x <= rhs with exact rational entries.
struct LinearInequality {
  std::vector<Rat> coeffs;
  Rat rhs;
};

/// Defining inequalities straight from the polytope definitions: box bounds
/// plus one comparison per cover pair for the order polytope; nonnegativity
/// plus one sum bound per maximal chain for the chain polytope. Redundant
/// rows are permitted, faces never notice them.
inline std::vector<LinearInequality> h_rep(const Poset& p, PolytopeKind kind) {
  const int n = p.size();
  std::vector<LinearInequality> out;
  auto zero = [n] { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)); };
  for (int v = 0; v < n; ++v) {
    LinearInequality lower{zero(), Rat(0)};
    lower.coeffs[static_cast<std::size_t>(v)] = Rat(-1);
    out.push_back(std::move(lower));
  }
  if (kind == PolytopeKind::order) {
    for (int v = 0; v < n; ++v) {
      LinearInequality upper{zero(), Rat(1)};
      upper.coeffs[static_cast<std::size_t>(v)] = Rat(1);
      out.push_back(std::move(upper));
    }
    for (auto [a, b] : p.cover_pairs()) {
      LinearInequality cmp{zero(), Rat(0)};
      cmp.coeffs[static_cast<std::size_t>(a)] = Rat(1);
      cmp.coeffs[static_cast<std::size_t>(b)] = Rat(-1);
      out.push_back(std::move(cmp));
    }
    return out;
  }
  // Maximal chains by depth-first extension along covers.
  std::vector<Subset> chains;
  auto grow = [&](auto&& self, int last, Subset chain) -> void {
    Subset nexts;
    for (int q : p.above(last).elements())
      if ((p.above(last) & p.below(q)).empty()) nexts |= Subset::single(q);
    if (nexts.empty()) {
      chains.push_back(chain);
      return;
    }
    for (int q : nexts.elements()) self(self, q, chain.with(q));
  };
  for (int v = 0; v < n; ++v)
    if (p.below(v).empty()) grow(grow, v, Subset::single(v));
  for (Subset chain : chains) {
    LinearInequality sum{zero(), Rat(1)};
    for (int v : chain.elements()) sum.coeffs[static_cast<std::size_t>(v)] = Rat(1);
    out.push_back(std::move(sum));
  }
  return out;
}

/// Characteristic vectors of the filters (order) or antichains (chain), in
/// the same sorted order the skeleton uses.
inline std::vector<Point> vertex_points(const Poset& p, PolytopeKind kind) {
  std::vector<Subset> sets = kind == PolytopeKind::order ? p.filters() : p.antichains();
  std::vector<Point> pts;
  pts.reserve(sets.size());
  for (Subset s : sets) {
    Point x(static_cast<std::size_t>(p.size()), Rat(0));
    for (int v : s.elements()) x[static_cast<std::size_t>(v)] = Rat(1);
    pts.push_back(std::move(x));
  }
  return pts;
}

/// Exact affine dimension of a point set: rank of the difference vectors,
/// computed by fraction-free (Bareiss) elimination over integers after
/// clearing each row's denominators; -1 for no points, 0 for a single
/// point. Our vertices are 0/1, so the scaling is usually a no-op.
inline int affine_dim(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const std::size_t d = points[0].size();
  std::vector<std::vector<Int>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> diff(d);
    Int scale = 1;
    for (std::size_t c = 0; c < d; ++c) {
      diff[c] = points[i][c] - points[0][c];
      Int den = denominator(diff[c]);
      scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
    std::vector<Int> row(d);
    for (std::size_t c = 0; c < d; ++c) {
      Rat v = diff[c] * scale;
      row[c] = numerator(v);
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < d && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < d; ++c)
        rows[r][c] = (rows[r][c] * prow[col] - rows[r][col] * prow[c]) / prev;
      rows[r][col] = 0;
    }
    prev = prow[col];
    ++rank;
  }
  return rank;
}

/// A face as the set of vertices lying on it, plus its affine dimension.
struct Face {
  std::vector<int> vertices;  // sorted indices into the vertex list
  int dim = -1;

  friend bool operator==(const Face& a, const Face& b) = default;
};

struct FaceLattice {
  std::vector<Face> faces;  // sorted by (dim, vertex set); includes dim -1 and dim d
  int dim = -1;

  /// f[k+1] = number of k-dimensional faces, starting at f[0] = 1 for the
  /// empty face.
  std::vector<Int> f_vector() const {
    std::vector<Int> f(static_cast<std::size_t>(dim) + 2, Int(0));
    for (const Face& face : faces) f[static_cast<std::size_t>(face.dim + 1)] += 1;
    return f;
  }

  Int face_count(int k) const {
    Int c = 0;
    for (const Face& face : faces)
      if (face.dim == k) c += 1;
    return c;
  }

  /// Alternating sum over all faces, empty and full included, must vanish.
  bool euler_ok() const {
    Int sum = 0;
    for (const Face& face : faces) sum += (face.dim % 2 == 0) ? 1 : -1;
    return sum == 0;
  }
};

/// Full face lattice by downward closure: facet vertex sets are intersected
/// until stable, every face gets its exact affine dimension, and the empty
/// face is appended. Validates that V lies inside H and that every point of
/// V really is a vertex.
inline FaceLattice face_lattice(const std::vector<Point>& vertices,
                                const std::vector<LinearInequality>& ineqs) {
  const std::size_t nv = vertices.size();
  if (nv == 0) throw std::invalid_argument("face_lattice: no vertices");
  const std::size_t d = vertices[0].size();
  for (const auto& ineq : ineqs)
    if (ineq.coeffs.size() != d) throw std::invalid_argument("face_lattice: dimension mismatch");

  auto dot = [d](const std::vector<Rat>& c, const Point& x) {
    Rat s(0);
    for (std::size_t i = 0; i < d; ++i) s += c[i] * x[i];
    return s;
  };

  // Incidence: which vertices are tight on each inequality.
  std::vector<std::vector<int>> tight_on(ineqs.size());
  std::vector<std::vector<int>> tight_at(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (vertices[v].size() != d) throw std::invalid_argument("face_lattice: ragged vertex list");
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      Rat lhs = dot(ineqs[i].coeffs, vertices[v]);
      if (lhs > ineqs[i].rhs)
        throw std::invalid_argument("face_lattice: point " + std::to_string(v) +
                                    " violates inequality " + std::to_string(i));
      if (lhs == ineqs[i].rhs) {
        tight_on[i].push_back(static_cast<int>(v));
        tight_at[v].push_back(static_cast<int>(i));
      }
    }
  }

  // A point that shares its whole tight set with another point is not a
  // vertex of conv(V): the minimal face containing it is positive
  // dimensional, i.e. the point is an affine combination of others on it.
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t w = 0; w < nv; ++w) {
      if (v == w) continue;
      if (std::ranges::includes(tight_at[w], tight_at[v]))
        throw std::invalid_argument("face_lattice: point " + std::to_string(v) +
                                    " is not a vertex");
    }

  auto face_dim = [&](const std::vector<int>& vs) {
    std::vector<Point> pts;
    pts.reserve(vs.size());
    for (int v : vs) pts.push_back(vertices[static_cast<std::size_t>(v)]);
    return affine_dim(pts);
  };

  std::vector<int> everything(nv);
  for (std::size_t v = 0; v < nv; ++v) everything[v] = static_cast<int>(v);

  std::map<std::vector<int>, int> dims;  // face vertex set -> dimension
  std::deque<std::vector<int>> queue;
  dims.emplace(everything, face_dim(everything));
  queue.push_back(everything);
  while (!queue.empty()) {
    std::vector<int> face = std::move(queue.front());
    queue.pop_front();
    for (const auto& incidence : tight_on) {
      std::vector<int> child;
      std::ranges::set_intersection(face, incidence, std::back_inserter(child));
      if (child.empty() || child == face) continue;
      if (dims.contains(child)) continue;
      dims.emplace(child, face_dim(child));
      queue.push_back(child);
    }
  }

  FaceLattice fl;
  fl.dim = dims.at(everything);
  fl.faces.push_back(Face{{}, -1});
  for (auto& [verts, fd] : dims) fl.faces.push_back(Face{verts, fd});
  std::ranges::sort(fl.faces, [](const Face& a, const Face& b) {
    return std::pair(a.dim, a.vertices) < std::pair(b.dim, b.vertices);
  });
  return fl;
}

/// Simplex generating polynomials read off the face lattice: a face is a
/// simplex exactly when its vertex count exceeds its dimension by one, and
/// the split keys on membership of the origin vertex.
inline SimplexPolys oracle_simplex_polys(const FaceLattice& fl, const std::vector<Point>& vertices) {
  int origin = -1;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (std::ranges::all_of(vertices[v], [](const Rat& c) { return c == 0; })) {
      origin = static_cast<int>(v);
      break;
    }
  }
  if (origin < 0) throw std::invalid_argument("oracle_simplex_polys: origin is not a vertex");

  std::vector<Int> all(static_cast<std::size_t>(fl.dim) + 2, Int(0));
  std::vector<Int> with_origin(all.size(), Int(0));
  std::vector<Int> without_origin(all.size(), Int(0));
  for (const Face& f : fl.faces) {
    if (static_cast<int>(f.vertices.size()) != f.dim + 1) continue;
    auto k = static_cast<std::size_t>(f.dim + 1);
    all[k] += 1;
    if (std::ranges::binary_search(f.vertices, origin))
      with_origin[k] += 1;
    else
      without_origin[k] += 1;
  }
  return SimplexPolys{SPoly(std::move(all)), SPoly(std::move(with_origin)),
                      SPoly(std::move(without_origin))};
}

/// V-representation of the subdirect sum: both vertex sets embedded in
/// complementary coordinate blocks, sharing the origin once.
inline std::vector<Point> subdirect_sum_vrep(const std::vector<Point>& vp,
                                             const std::vector<Point>& vq) {
  auto is_origin = [](const Point& x) {
    return std::ranges::all_of(x, [](const Rat& c) { return c == 0; });
  };
  if (vp.empty() || std::ranges::none_of(vp, is_origin))
    throw std::invalid_argument("subdirect_sum_vrep: origin is not a vertex of the left input");
  if (vq.empty() || std::ranges::none_of(vq, is_origin))
    throw std::invalid_argument("subdirect_sum_vrep: origin is not a vertex of the right input");
  const std::size_t m = vp[0].size(), n = vq[0].size();
  std::vector<Point> out;
  out.reserve(vp.size() + vq.size() - 1);
  for (const Point& v : vp) {
    Point x(m + n, Rat(0));
    std::copy(v.begin(), v.end(), x.begin());
    out.push_back(std::move(x));
  }
  for (const Point& w : vq) {
    if (is_origin(w)) continue;
    Point x(m + n, Rat(0));
    std::copy(w.begin(), w.end(), x.begin() + static_cast<std::ptrdiff_t>(m));
    out.push_back(std::move(x));
  }
  return out;
}

inline nlohmann::json to_json(const FaceLattice& fl) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Face& f : fl.faces) arr.push_back({{"vertices", f.vertices}, {"dim", f.dim}});
  return arr;
}

inline nlohmann::json to_json(const SPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const std::string& c : p.coefficient_strings()) arr.push_back(c);
  return arr;
}

}  // namespace posetpoly
