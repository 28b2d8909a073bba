#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "posetpoly/catalog.hpp"
#include "posetpoly/expr.hpp"
#include "posetpoly/oracle.hpp"

using namespace posetpoly;

namespace {

std::vector<Int> fvec(const Poset& p, PolytopeKind kind) {
  return face_lattice(vertex_points(p, kind), h_rep(p, kind)).f_vector();
}

int origin_index(const std::vector<Point>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::ranges::all_of(v[i], [](const Rat& c) { return c == 0; })) return static_cast<int>(i);
  return -1;
}

// Face counts keyed by (contains origin, dimension).
std::map<std::pair<bool, int>, long> origin_split_counts(const FaceLattice& fl, int origin) {
  std::map<std::pair<bool, int>, long> counts;
  for (const Face& f : fl.faces)
    ++counts[{std::ranges::binary_search(f.vertices, origin), f.dim}];
  return counts;
}

// Substitute x_i -> 1 - x_i on a coordinate block. The order polytope of an
// ordinal sum turns into the subdirect sum of the factor polytopes under
// exactly this flip of the second block, so its inequality system carries
// over to the embedded points.
std::vector<LinearInequality> flip_block(std::vector<LinearInequality> ineqs, std::size_t from,
                                         std::size_t to) {
  for (auto& q : ineqs)
    for (std::size_t i = from; i < to; ++i) {
      q.rhs -= q.coeffs[i];
      q.coeffs[i] = -q.coeffs[i];
    }
  return ineqs;
}

}  // namespace

TEST_CASE("h-representations") {
  Poset x = Poset::x_poset();
  REQUIRE(h_rep(x, PolytopeKind::order).size() == 14);  // 5 + 5 bounds, 4 covers
  REQUIRE(h_rep(x, PolytopeKind::chain).size() == 9);   // 5 nonnegativity, 4 maximal chains
  REQUIRE(h_rep(Poset(), PolytopeKind::order).empty());
  REQUIRE(h_rep(Poset::chain(2), PolytopeKind::chain).size() == 3);
}

TEST_CASE("face lattices of the fixtures") {
  auto tri = fvec(Poset::chain(2), PolytopeKind::order);
  REQUIRE(tri == std::vector<Int>{1, 3, 3, 1});
  REQUIRE(fvec(Poset::chain(2), PolytopeKind::chain) == std::vector<Int>{1, 3, 3, 1});

  auto pyramid = fvec(elaborate(parse_expr("A(2) < C(1)")), PolytopeKind::order);
  REQUIRE(pyramid == std::vector<Int>{1, 5, 8, 5, 1});

  auto cube = fvec(Poset::antichain(3), PolytopeKind::order);
  REQUIRE(cube == std::vector<Int>{1, 8, 12, 6, 1});

  // The empty poset gives a single point.
  auto pt = face_lattice(vertex_points(Poset(), PolytopeKind::order),
                         h_rep(Poset(), PolytopeKind::order));
  REQUIRE(pt.dim == 0);
  REQUIRE(pt.f_vector() == std::vector<Int>{1, 1});
  REQUIRE(pt.euler_ok());
}

TEST_CASE("euler relation and extremal faces") {
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets_upto_iso(n))
      for (PolytopeKind kind : {PolytopeKind::order, PolytopeKind::chain}) {
        FaceLattice fl = face_lattice(vertex_points(p, kind), h_rep(p, kind));
        REQUIRE(fl.euler_ok());
        REQUIRE(fl.dim == p.size());
        REQUIRE(fl.face_count(-1) == 1);
        REQUIRE(fl.face_count(fl.dim) == 1);
      }
}

TEST_CASE("vertex validation") {
  Poset c2 = Poset::chain(2);
  auto verts = vertex_points(c2, PolytopeKind::order);
  auto ineqs = h_rep(c2, PolytopeKind::order);

  auto bad = verts;
  bad.push_back({Rat(0), Rat(1) / 2});  // midpoint of an edge
  REQUIRE_THROWS_AS(face_lattice(bad, ineqs), std::invalid_argument);

  auto outside = verts;
  outside.push_back({Rat(2), Rat(2)});  // violates the box
  REQUIRE_THROWS_AS(face_lattice(outside, ineqs), std::invalid_argument);
}

TEST_CASE("oracle simplex polynomials") {
  auto tri_pts = vertex_points(Poset::chain(2), PolytopeKind::order);
  auto tri = oracle_simplex_polys(face_lattice(tri_pts, h_rep(Poset::chain(2), PolytopeKind::order)),
                                  tri_pts);
  REQUIRE(tri.s == SPoly({1, 3, 3, 1}));
  REQUIRE(tri.s0 == SPoly({0, 1, 2, 1}));
  REQUIRE(tri.s1 == SPoly({1, 2, 1}));

  auto cube_pts = vertex_points(Poset::antichain(3), PolytopeKind::order);
  auto cube = oracle_simplex_polys(
      face_lattice(cube_pts, h_rep(Poset::antichain(3), PolytopeKind::order)), cube_pts);
  REQUIRE(cube.s == SPoly({1, 8, 12}));  // no triangular faces on a cube

  auto pyr_p = elaborate(parse_expr("A(2) < C(1)"));
  auto pyr_pts = vertex_points(pyr_p, PolytopeKind::order);
  auto pyr = oracle_simplex_polys(face_lattice(pyr_pts, h_rep(pyr_p, PolytopeKind::order)),
                                  pyr_pts);
  REQUIRE(pyr.s == SPoly({1, 5, 8, 4}));
  REQUIRE(pyr.s0 == SPoly({0, 1, 4, 4}));

  // Shift the polytope so the origin stops being a vertex.
  std::vector<Point> shifted;
  for (const Point& pt : tri_pts) {
    Point q = pt;
    for (Rat& c : q) c += 1;
    shifted.push_back(q);
  }
  REQUIRE_THROWS_AS(oracle_simplex_polys(face_lattice(tri_pts, h_rep(Poset::chain(2), PolytopeKind::order)), shifted),
                    std::invalid_argument);
}

TEST_CASE("irredundant facet counts of the x polytopes") {
  Poset x = Poset::x_poset();
  FaceLattice fo = face_lattice(vertex_points(x, PolytopeKind::order), h_rep(x, PolytopeKind::order));
  FaceLattice fc = face_lattice(vertex_points(x, PolytopeKind::chain), h_rep(x, PolytopeKind::chain));
  REQUIRE(fo.face_count(4) == 8);
  REQUIRE(fc.face_count(4) == 9);
}

TEST_CASE("affine dimension") {
  REQUIRE(affine_dim({}) == -1);
  REQUIRE(affine_dim({{Rat(3), Rat(4)}}) == 0);
  REQUIRE(affine_dim({{Rat(0)}, {Rat(1)}}) == 1);
  REQUIRE(affine_dim({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}}) == 1);
  // Rational coordinates: three collinear points and one off the line.
  REQUIRE(affine_dim({{Rat(1) / 3, Rat(1) / 5},
                      {Rat(2) / 3, Rat(2) / 5},
                      {Rat(1), Rat(3) / 5}}) == 1);
  REQUIRE(affine_dim({{Rat(1) / 3, Rat(1) / 5},
                      {Rat(2) / 3, Rat(2) / 5},
                      {Rat(1) / 2, Rat(7)}}) == 2);
  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets_upto_iso(n)) {
      REQUIRE(affine_dim(vertex_points(p, PolytopeKind::order)) == n);
      REQUIRE(affine_dim(vertex_points(p, PolytopeKind::chain)) == n);
    }
}

TEST_CASE("subdirect sums") {
  auto segment = vertex_points(Poset::chain(1), PolytopeKind::order);
  auto tri_pts = subdirect_sum_vrep(segment, segment);
  REQUIRE(tri_pts.size() == 3);
  FaceLattice tri =
      face_lattice(tri_pts, flip_block(h_rep(Poset::chain(2), PolytopeKind::order), 1, 2));
  REQUIRE(tri.f_vector() == std::vector<Int>{1, 3, 3, 1});

  // Vertex count is additive minus the shared origin.
  for (const char* a : {"C(2)", "A(2)", "X"})
    for (const char* b : {"C(1)", "A(2)"}) {
      auto va = vertex_points(elaborate(parse_expr(a)), PolytopeKind::order);
      auto vb = vertex_points(elaborate(parse_expr(b)), PolytopeKind::order);
      REQUIRE(subdirect_sum_vrep(va, vb).size() == va.size() + vb.size() - 1);
    }

  std::vector<Point> no_origin{{Rat(1)}, {Rat(2)}};
  REQUIRE_THROWS_AS(subdirect_sum_vrep(no_origin, segment), std::invalid_argument);
  REQUIRE_THROWS_AS(subdirect_sum_vrep(segment, {}), std::invalid_argument);
}

TEST_CASE("subdirect sum matches the ordinal sum polytope") {
  // O(A < B) is the subdirect sum of O(A) and O(B-dual); here B = C(1) is
  // self-dual. Compare through every combinatorial statistic the oracle has.
  Poset a2 = Poset::antichain(2), c1 = Poset::chain(1);
  auto sum_pts = subdirect_sum_vrep(vertex_points(a2, PolytopeKind::order),
                                    vertex_points(c1, PolytopeKind::order));
  Poset glued = ordinal_sum(a2, c1);

  auto direct = face_lattice(vertex_points(glued, PolytopeKind::order),
                             h_rep(glued, PolytopeKind::order));
  auto direct_polys = oracle_simplex_polys(direct, vertex_points(glued, PolytopeKind::order));

  auto embedded_system = flip_block(h_rep(glued, PolytopeKind::order), 2, 3);
  auto embedded = face_lattice(sum_pts, embedded_system);
  auto embedded_polys = oracle_simplex_polys(embedded, sum_pts);
  REQUIRE(direct.f_vector() == embedded.f_vector());
  REQUIRE(direct_polys.s == embedded_polys.s);
  REQUIRE(embedded_polys.s == SPoly({1, 5, 8, 4}));
}

TEST_CASE("faces of a subdirect sum split by origin membership") {
  // f_k of the sum decomposes into origin-face pairs with dimensions adding
  // to k and non-origin pairs adding to k - 1.
  std::vector<Poset> parts;
  for (int n = 1; n <= 2; ++n)
    for (const Poset& p : enumerate_posets_upto_iso(n)) parts.push_back(p);

  for (const Poset& a : parts)
    for (const Poset& b : parts) {
      if (a.size() + b.size() > 5) continue;
      for (PolytopeKind kind : {PolytopeKind::order, PolytopeKind::chain}) {
        auto va = vertex_points(a, kind);
        auto vb = vertex_points(b, kind);
        FaceLattice fa = face_lattice(va, h_rep(a, kind));
        FaceLattice fb = face_lattice(vb, h_rep(b, kind));
        auto ca = origin_split_counts(fa, origin_index(va));
        auto cb = origin_split_counts(fb, origin_index(vb));

        Poset glued = kind == PolytopeKind::order ? ordinal_sum(a, b.dual()) : ordinal_sum(a, b);
        auto system = h_rep(glued, kind);
        if (kind == PolytopeKind::order)
          system = flip_block(std::move(system), static_cast<std::size_t>(a.size()),
                              static_cast<std::size_t>(glued.size()));
        auto vsum = subdirect_sum_vrep(va, vb);
        FaceLattice fsum = face_lattice(vsum, system);

        for (int k = -1; k <= fsum.dim; ++k) {
          long expected = 0;
          for (const auto& [key_a, count_a] : ca)
            for (const auto& [key_b, count_b] : cb) {
              auto [origin_a, dim_a] = key_a;
              auto [origin_b, dim_b] = key_b;
              if (origin_a && origin_b && dim_a + dim_b == k) expected += count_a * count_b;
              if (!origin_a && !origin_b && dim_a + dim_b + 1 == k) expected += count_a * count_b;
            }
          REQUIRE(fsum.face_count(k) == expected);
        }

        // Joins of simplices are simplices and vice versa: the non-origin
        // simplex polynomials multiply.
        auto pa = oracle_simplex_polys(fa, va);
        auto pb = oracle_simplex_polys(fb, vb);
        auto psum = oracle_simplex_polys(fsum, vsum);
        REQUIRE(psum.s1 == pa.s1 * pb.s1);
        REQUIRE(psum.s0 == (pa.s0 * pb.s0).divided_by_x());
      }
    }
}

TEST_CASE("cliques are exactly the oracle's simplex faces") {
  // Not just equal counts: the vertex sets coincide, non-empty cliques on
  // one side, simplex faces on the other.
  auto list_cliques = [](const SkeletonGraph& g) {
    std::set<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int from) -> void {
      if (!current.empty()) out.insert(current);
      for (int v = from; v < g.vertex_count(); ++v) {
        bool joined = true;
        for (int u : current)
          if (!g.adjacent(u, v)) {
            joined = false;
            break;
          }
        if (!joined) continue;
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };

  for (int n = 0; n <= 4; ++n)
    for (const Poset& p : enumerate_posets_upto_iso(n))
      for (PolytopeKind kind : {PolytopeKind::order, PolytopeKind::chain}) {
        SkeletonGraph g = build_skeleton(p, kind);
        auto verts = vertex_points(p, kind);
        FaceLattice fl = face_lattice(verts, h_rep(p, kind));
        std::set<std::vector<int>> simplex_faces;
        for (const Face& f : fl.faces)
          if (f.dim >= 0 && static_cast<int>(f.vertices.size()) == f.dim + 1)
            simplex_faces.insert(f.vertices);
        REQUIRE(list_cliques(g) == simplex_faces);
      }
}

TEST_CASE("json serialization") {
  FaceLattice fl = face_lattice(vertex_points(Poset::chain(1), PolytopeKind::order),
                                h_rep(Poset::chain(1), PolytopeKind::order));
  nlohmann::json j = to_json(fl);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == fl.faces.size());
  REQUIRE(j[0].contains("vertices"));
  REQUIRE(j[0].contains("dim"));
  REQUIRE(to_json(SPoly({1, 3, 3, 1})) == nlohmann::json({"1", "3", "3", "1"}));
}
