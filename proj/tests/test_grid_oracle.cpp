#include <gtest/gtest.h>

#include "hlab/continuity.hpp"
#include "hlab/error.hpp"
#include "support.hpp"

using namespace hlab;
using hlab::testing::box;
using hlab::testing::cell_diameter;
using hlab::testing::Gen;
using hlab::testing::poly;
using hlab::testing::unit_square;

namespace {

OracleInterval oracle(const ConvexPolygon& p, const ConvexPolygon& q, const PolyhedralNorm& norm, const Scalar& step) {
  const std::vector<ConvexPolygon> ps{p}, qs{q};
  return grid_oracle_hausdorff(ps, qs, norm, step);
}

}  // namespace

TEST(GridOracle, TranslatedSquares) {
  const OracleInterval iv = oracle(unit_square(), box(2, 0, 3, 1), linf_norm(), rational(1, 8));
  EXPECT_TRUE(iv.contains(2));
  EXPECT_EQ(iv.cell_diameter, rational(1, 8));
  EXPECT_EQ(iv.hi - iv.lo, 2 * iv.cell_diameter);
  EXPECT_GT(iv.samples, 0u);
}

TEST(GridOracle, DegenerateSets) {
  const ConvexPolygon seg = poly({{0, 0}, {8, 0}});
  const ConvexPolygon pt = poly({{3, rational(1, 2)}});
  const OracleInterval iv = oracle(seg, pt, l1_norm(), rational(1, 4));
  EXPECT_TRUE(iv.contains(hausdorff(seg, pt, l1_norm())));
  // Off-lattice polygon: vertices and edge crossings still sample it.
  const ConvexPolygon tri = poly({{rational(1, 3), rational(1, 7)}, {rational(5, 3), rational(2, 7)}, {1, rational(9, 5)}});
  const OracleInterval iv2 = oracle(tri, seg, linf_norm(), rational(1, 2));
  EXPECT_TRUE(iv2.contains(hausdorff(tri, seg, linf_norm())));
}

TEST(GridOracle, RejectsBadSteps) {
  EXPECT_THROW(oracle(unit_square(), unit_square(), linf_norm(), 0), InputError);
  try {
    oracle(unit_square(), unit_square(), linf_norm(), -1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "step must be positive");
  }
  // A thin triangle strictly between lattice lines holds no lattice point.
  const ConvexPolygon sliver = poly({{rational(1, 10), rational(1, 10)}, {rational(9, 10), rational(1, 10)},
                                     {rational(1, 2), rational(9, 10)}});
  try {
    oracle(sliver, unit_square(), linf_norm(), 1);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "grid too coarse");
  }
}

TEST(GridOracle, BracketsExactHausdorff) {
  Gen gen(61);
  const std::vector<PolyhedralNorm> norms{linf_norm(), l1_norm(), gen.hexagon_norm()};
  for (const PolyhedralNorm& norm : norms) {
    for (int i = 0; i < 6; ++i) {
      const ConvexPolygon p = gen.placed_polygon(3, 6, 3);
      const ConvexPolygon q = gen.placed_polygon(3, 6, 3);
      const Scalar step = rational(1, 16);
      const OracleInterval iv = oracle(p, q, norm, step);
      EXPECT_TRUE(iv.contains(hausdorff(p, q, norm)));
      EXPECT_LE(iv.hi - iv.lo, 2 * cell_diameter(norm, step));
    }
  }
}

TEST(GridOracle, UnionOfTwoParts) {
  // The far point is 4 away from the box in L∞.
  const std::vector<ConvexPolygon> near_only{box(-2, 0, -1, 1)};
  const std::vector<ConvexPolygon> both{box(-2, 0, -1, 1), poly({{3, rational(1, 2)}})};
  const OracleInterval iv = grid_oracle_hausdorff(near_only, both, linf_norm(), rational(1, 8));
  EXPECT_TRUE(iv.contains(4));
  EXPECT_EQ(hausdorff_union(near_only, both, linf_norm()), 4);
}

TEST(GridOracle, RandomUnionsAgreeWithArrangement) {
  Gen gen(62);
  const std::vector<PolyhedralNorm> norms{linf_norm(), l1_norm(), gen.hexagon_norm()};
  for (const PolyhedralNorm& norm : norms) {
    for (int i = 0; i < 5; ++i) {
      const std::vector<ConvexPolygon> ps{gen.placed_polygon(1, 5, 3), gen.placed_polygon(1, 5, 3)};
      const std::vector<ConvexPolygon> qs{gen.placed_polygon(1, 5, 3), gen.placed_polygon(1, 5, 3)};
      const Scalar step = rational(1, 16);
      try {
        const OracleInterval iv = grid_oracle_hausdorff(ps, qs, norm, step);
        EXPECT_TRUE(iv.contains(hausdorff_union(ps, qs, norm)));
        EXPECT_LE(iv.hi - iv.lo, 2 * cell_diameter(norm, step));
      } catch (const InputError& e) {
        // only a solid sliver between lattice lines may be refused
        EXPECT_STREQ(e.what(), "grid too coarse");
      }
    }
  }
}
