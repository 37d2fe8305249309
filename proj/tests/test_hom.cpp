#include <algorithm>
#include <set>

#include "doctest.h"
#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"

using namespace ptolemy_lab;

namespace {

// Hom(x, y) = Ext^1(x, Sigma^-1 y): non-zero iff x crosses Sigma^-1 y.
int hom_via_crossing(const Polygon& p, const Diagonal& x, const Diagonal& y) {
  return p.crosses(x, p.suspend_inverse(y)) ? 1 : 0;
}

// All four sides of the quadrilateral on the endpoints of a and c.
std::set<Arc> quadrilateral(const Polygon& p, const Diagonal& a, const Diagonal& c) {
  return {p.arc(a.first(), c.first()), p.arc(a.first(), c.second()), p.arc(a.second(), c.first()),
          p.arc(a.second(), c.second())};
}

}  // namespace

TEST_CASE("ext1 examples") {
  const Polygon p8(8);
  CHECK(ext1_dim(p8, p8.diagonal(0, 2), p8.diagonal(1, 3)) == 1);
  CHECK(ext1_dim(p8, p8.diagonal(0, 2), p8.diagonal(0, 4)) == 0);
  const Polygon p12(12);
  CHECK(ext1_dim(p12, p12.diagonal(3, 9), p12.diagonal(1, 5)) == 1);
}

TEST_CASE("hom examples") {
  const Polygon p(12);
  for (const Diagonal& x : p.all_diagonals()) {
    CHECK(hom_dim_from(p, x, x) == 1);
    CHECK(hom_dim_to(p, x, x) == 1);
    CHECK(hom_dim_from(p, x, p.suspend(x)) == 0);
  }
  CHECK(hom_dim_from(p, p.diagonal(3, 9), p.diagonal(5, 1)) == 1);
  const auto rel = relative_from(p, p.diagonal(3, 9), p.diagonal(5, 1));
  REQUIRE(rel);
  CHECK(rel->first == 5);
  CHECK(rel->second == 1);

  // {3,11} has both endpoints in [11,3], so it does not map to {3,9}.
  CHECK(hom_dim_to(p, p.diagonal(3, 11), p.diagonal(3, 9)) == 0);
  CHECK(hom_dim_to(p, p.diagonal(9, 11), p.diagonal(3, 9)) == 1);
  CHECK(hom_dim_to(p, p.diagonal(1, 9), p.diagonal(3, 9)) == 1);
}

TEST_CASE("hom criteria agree with each other and with the crossing route") {
  for (int n = 4; n <= 12; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    for (const Diagonal& x : all) {
      for (const Diagonal& y : all) {
        const int from = hom_dim_from(p, x, y);
        CHECK(from == hom_dim_to(p, x, y));
        CHECK(from == hom_via_crossing(p, x, y));
        CHECK(hom_dim_from(p, x, p.suspend(y)) == ext1_dim(p, x, y));
        CHECK(hom_dim_from(p, x, p.suspend(y)) == hom_dim_from(p, y, p.suspend(x)));
      }
    }
  }
}

TEST_CASE("factoring examples") {
  const Polygon p(12);
  const Diagonal x = p.diagonal(5, 1);
  const Diagonal c = p.diagonal(3, 9);
  CHECK(factors_from(p, x, c, x));
  CHECK(factors_from(p, x, c, c));
  CHECK(factors_from(p, x, c, p.arc(3, 5)));
  CHECK_FALSE(factors_from(p, x, c, p.arc(4, 5)));  // edge, zero

  const Diagonal z = p.diagonal(9, 11);
  CHECK(factors_to(p, z, c, z));
  CHECK(factors_to(p, z, c, c));
  CHECK(factors_to(p, z, c, p.arc(1, 9)));
  CHECK_FALSE(factors_to(p, z, c, p.arc(3, 5)));

  SUBCASE("precondition") {
    try {
      factors_to(p, p.diagonal(3, 11), c, p.arc(1, 9));
      FAIL("expected a precondition violation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::precondition_violation);
    }
    CHECK_THROWS_AS(factors_from(p, c, p.suspend(c), c), Error);
  }
}

TEST_CASE("factoring sanity: factors compose from non-zero maps") {
  for (int n = 4; n <= 10; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    for (const Diagonal& x : all) {
      for (const Diagonal& y : all) {
        if (hom_dim_from(p, x, y) == 0) continue;
        CHECK(factors_from(p, x, y, x));
        CHECK(factors_from(p, x, y, y));
        CHECK(factors_to(p, x, y, x));
        CHECK(factors_to(p, x, y, y));
        for (const Diagonal& s : all) {
          if (factors_from(p, x, y, s)) {
            CHECK(hom_dim_from(p, x, s) == 1);
            CHECK(hom_dim_from(p, s, y) == 1);
          }
          // Both criteria describe the same factorisation.
          CHECK(factors_from(p, x, y, s) == factors_to(p, x, y, s));
        }
      }
    }
  }
}

TEST_CASE("crossing triangles") {
  SUBCASE("pairing in the a1, c1, a0, c0 configuration") {
    const Polygon p(8);
    const Diagonal a = p.diagonal(4, 0);  // a0 = 4, a1 = 0
    const Diagonal c = p.diagonal(6, 2);  // c0 = 6, c1 = 2
    const auto t = crossing_triangles(p, a, c);
    CHECK(std::set<Arc>(t.b_pair.begin(), t.b_pair.end()) ==
          std::set<Arc>{p.arc(4, 2), p.arc(0, 6)});
    CHECK(std::set<Arc>(t.s_pair.begin(), t.s_pair.end()) ==
          std::set<Arc>{p.arc(4, 6), p.arc(0, 2)});
  }
  SUBCASE("suspended pair gives zero s terms") {
    const Polygon p(8);
    const auto t = crossing_triangles(p, p.diagonal(7, 1), p.diagonal(0, 2));
    CHECK(p.is_zero(t.s_pair[0]));
    CHECK(p.is_zero(t.s_pair[1]));
    CHECK(is_ar_triangle(p, t, TriangleSide::b_side));
    CHECK_FALSE(is_ar_triangle(p, t, TriangleSide::s_side));
  }
  SUBCASE("12-gon pair matching the weak AR middle term") {
    const Polygon p(12);
    const auto t = crossing_triangles(p, p.diagonal(1, 5), p.diagonal(3, 9));
    CHECK(std::set<Arc>(t.b_pair.begin(), t.b_pair.end()) ==
          std::set<Arc>{p.arc(3, 5), p.arc(1, 9)});
    CHECK_FALSE(is_ar_triangle(p, t, TriangleSide::b_side));
  }
  SUBCASE("non-crossing pair is rejected") {
    const Polygon p(8);
    try {
      crossing_triangles(p, p.diagonal(0, 2), p.diagonal(2, 4));
      FAIL("expected NOT_CROSSING");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_crossing);
    }
  }
}

TEST_CASE("crossing triangles partition the quadrilateral and rotate with the polygon") {
  for (int n = 4; n <= 12; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    for (const Diagonal& a : all) {
      for (const Diagonal& c : all) {
        if (!p.crosses(a, c)) continue;
        const auto t = crossing_triangles(p, a, c);
        std::set<Arc> sides(t.b_pair.begin(), t.b_pair.end());
        sides.insert(t.s_pair.begin(), t.s_pair.end());
        CHECK(sides == quadrilateral(p, a, c));
        for (const Arc& b : t.b_pair) {
          CHECK((a.has_endpoint(b.first()) != a.has_endpoint(b.second())));
        }
        // The s triangle of (a, c) is the b triangle of (c, a).
        const auto swapped = crossing_triangles(p, c, a);
        CHECK(swapped.b_pair == t.s_pair);

        const auto rotated = crossing_triangles(p, p.suspend(a), p.suspend(c));
        std::array<Arc, 2> expect{p.suspend(t.b_pair[0]), p.suspend(t.b_pair[1])};
        std::sort(expect.begin(), expect.end());
        CHECK(rotated.b_pair == expect);

        CHECK(is_ar_triangle(p, t, TriangleSide::b_side) == (a == p.suspend(c)));
        CHECK(is_ar_triangle(p, t, TriangleSide::s_side) == (c == p.suspend(a)));
      }
    }
  }
}

TEST_CASE("AR quiver") {
  SUBCASE("square: two nodes and no irreducible maps") {
    const auto q = ar_quiver(Polygon(4));
    CHECK(q.nodes().size() == 2);
    CHECK(q.arrows().empty());
  }
  SUBCASE("arrow counts") {
    // Independently enumerated: diagonals {u,v} with {u+1,v} or {u,v+1} a diagonal.
    const int expected[] = {0, 5, 12, 21, 32, 45, 60, 77, 96};
    for (int n = 4; n <= 12; ++n) {
      CHECK(ar_quiver(Polygon(n)).arrows().size() == static_cast<std::size_t>(expected[n - 4]));
    }
  }
  SUBCASE("degrees and meshes") {
    for (int n = 5; n <= 12; ++n) {
      const Polygon p(n);
      const auto q = ar_quiver(p);
      for (const Diagonal& a : q.nodes()) {
        const auto in = q.predecessors(a);
        auto out = q.successors(a);
        CHECK(in.size() == out.size());
        CHECK(in.size() >= 1);
        CHECK(in.size() <= 2);

        // Mesh through {a0-1, a1} and {a0, a1-1}, edges dropped.
        std::vector<Diagonal> mesh;
        for (const Vertex moved : a.endpoints()) {
          const Vertex back = p.step(moved, -1);
          if (p.is_diagonal(back, a.other(moved))) mesh.push_back(p.diagonal(back, a.other(moved)));
        }
        std::sort(mesh.begin(), mesh.end());
        CHECK(ar_mesh(p, a) == mesh);
        CHECK(in == mesh);
        auto from_suspension = q.successors(p.suspend(a));
        std::sort(from_suspension.begin(), from_suspension.end());
        CHECK(from_suspension == mesh);
      }
    }
  }
}
