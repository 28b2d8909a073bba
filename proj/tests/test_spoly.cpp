#include <catch2/catch_amalgamated.hpp>

#include "posetpoly/spoly.hpp"

using namespace posetpoly;

TEST_CASE("construction trims and rejects negatives") {
  SPoly p({1, 3, 3, 1, 0, 0});
  REQUIRE(p.size() == 4);
  REQUIRE(p.degree() == 3);
  REQUIRE(p[0] == 1);
  REQUIRE(p[7] == 0);  // reads past the degree are zero
  REQUIRE(SPoly{}.is_zero());
  REQUIRE(SPoly({0, 0}).is_zero());
  REQUIRE_THROWS_AS(SPoly(std::vector<Int>{Int(-1)}), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  SPoly a({1, 2}), b({0, 1, 1});
  REQUIRE(a + b == SPoly({1, 3, 1}));
  REQUIRE(a * b == SPoly({0, 1, 3, 2}));
  REQUIRE(a * SPoly{} == SPoly{});
  REQUIRE(SPoly::monomial(3, 2) == SPoly({0, 0, 0, 2}));
  REQUIRE(a.shifted_up() == SPoly({0, 1, 2}));
  REQUIRE(b.divided_by_x() == SPoly({1, 1}));
  REQUIRE_THROWS_AS(a.divided_by_x(), std::invalid_argument);
  REQUIRE(SPoly{}.divided_by_x() == SPoly{});
  REQUIRE(SPoly::try_subtract(a, SPoly({1, 1})) == SPoly({0, 1}));
  REQUIRE(!SPoly::try_subtract(a, SPoly({2, 1})).has_value());
  REQUIRE(a.coefficient_sum() == 3);
}

TEST_CASE("coefficient-wise comparison") {
  REQUIRE(poly_le(SPoly({1, 2}), SPoly({1, 3})).ok);
  REQUIRE(poly_le(SPoly({1, 2}), SPoly({1, 2})).ok);  // reflexive
  auto v = poly_le(SPoly({0, 0, 1}), SPoly({0, 1}));
  REQUIRE(!v.ok);
  REQUIRE(v.first_violation == 2);
  // Shorter polynomial can still dominate via implicit zeros.
  auto w = poly_le(SPoly({2}), SPoly({1, 5}));
  REQUIRE(!w.ok);
  REQUIRE(w.first_violation == 0);
  REQUIRE(poly_le(SPoly{}, SPoly{}).ok);
}

TEST_CASE("rendering") {
  REQUIRE(SPoly({1, 3, 3, 1}).to_string() == "1 + 3x + 3x^2 + x^3");
  REQUIRE(SPoly({0, 1}).to_string() == "x");
  REQUIRE(SPoly({0, 2, 0, 1}).to_string() == "2x + x^3");
  REQUIRE(SPoly{}.to_string() == "0");
  REQUIRE(SPoly({1, 3}).coefficient_strings() == std::vector<std::string>{"1", "3"});
}

TEST_CASE("big coefficients survive") {
  Int big = Int(1) << 200;
  SPoly p(std::vector<Int>{big});
  REQUIRE((p * p)[0] == big * big);
  REQUIRE(p.coefficient_strings()[0] == big.str());
}
