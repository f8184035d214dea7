#include <gtest/gtest.h>

#include "support.hpp"

using namespace chow;
using namespace chow::testing;

namespace {

CurveMap conic() { return CurveMap::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
CurveMap double_cover() { return CurveMap::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}}); }
CurveMap with_base_point() { return CurveMap::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}}); }

std::vector<Scalar> ints(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

CurveMap cover_of(const CurveMap& g, const NumericForm& phi0, const NumericForm& phi1) {
  std::vector<NumericForm> comps;
  for (const auto& c : g.components()) comps.push_back(compose(c, phi0, phi1));
  return CurveMap(g.n(), comps);
}

}  // namespace

TEST(BaseLocus, Examples) {
  EXPECT_TRUE(base_locus_free(CurveMap::from_rows({{1, 0}, {0, 1}, {0, 0}})));
  EXPECT_FALSE(base_locus_free(with_base_point()));
  EXPECT_TRUE(base_locus_free(conic()));
  // Common factor z0 + z1 in every component.
  EXPECT_FALSE(base_locus_free(CurveMap::from_rows({{1, 1, 0}, {0, 1, 1}, {2, 2, 0}})));
}

TEST(IncidentOracle, Examples) {
  CurveMap line = CurveMap::from_rows({{1, 0}, {0, 1}, {0, 0}});
  EXPECT_TRUE(incident_oracle(line, Plane(ints({0, 0, 1}), ints({1, 1, 0}))));
  EXPECT_TRUE(incident_oracle(conic(), Plane(ints({0, 1, 0}), ints({0, 0, 1}))));
  EXPECT_FALSE(incident_oracle(conic(), Plane(ints({0, 1, 0}), ints({1, 0, -1}))));
  EXPECT_THROW(incident_oracle(with_base_point(), Plane(ints({0, 1, 0}), ints({0, 0, 1}))), Error);
  EXPECT_THROW(incident_oracle(conic(), Plane(ints({0, 1}), ints({1, 0}))), Error);
}

TEST(IncidentOracle, CurveInsideThePlane) {
  // The line x2 = x3 = 0 in P^3 lies in the plane it is tested against.
  CurveMap line = CurveMap::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  Plane p(ints({0, 0, 1, 0}), ints({0, 0, 0, 1}));
  EXPECT_TRUE(incident_oracle(line, p));
  EXPECT_TRUE(incident(cayley_biform(line), p));
}

TEST(MapDegree, Examples) {
  EXPECT_EQ(map_degree(conic()), 1);
  EXPECT_EQ(map_degree(double_cover()), 2);
  EXPECT_EQ(map_degree(CurveMap::from_rows({{1, 0}, {0, 1}, {0, 0}})), 1);
  EXPECT_EQ(fiber_size(double_cover(), 1, 1), 2);
  EXPECT_THROW(map_degree(with_base_point()), Error);
}

TEST(InU, Reports) {
  UReport c = in_U(conic());
  EXPECT_TRUE(c.base_free);
  EXPECT_EQ(c.map_degree, 1);
  EXPECT_EQ(c.image_degree, 2);
  EXPECT_TRUE(c.in_U);

  UReport dc = in_U(double_cover());
  EXPECT_TRUE(dc.base_free);
  EXPECT_EQ(dc.map_degree, 2);
  EXPECT_EQ(dc.image_degree, 1);
  EXPECT_FALSE(dc.in_U);

  UReport bp = in_U(with_base_point());
  EXPECT_FALSE(bp.base_free);
  EXPECT_FALSE(bp.map_degree.has_value());
  EXPECT_FALSE(bp.image_degree.has_value());
  EXPECT_FALSE(bp.in_U);
}

TEST(MapDegree, ReparametrizationInvariant) {
  Rng rng(60);
  for (int i = 0; i < 10; ++i) {
    CurveMap f = random_curve(rng, 2 + i % 2, 1 + i % 3);
    if (!base_locus_free(f)) continue;
    Sampler s1(i), s2(i + 100);
    EXPECT_EQ(map_degree(act_gl2(f, random_gl2(rng)), s1), map_degree(f, s2));
  }
}

TEST(MapDegree, MultipliesUnderComposition) {
  Rng rng(61);
  int checked = 0;
  while (checked < 5) {
    CurveMap g = random_curve_in_U(rng, 2 + checked % 2, 1 + checked % 2);
    NumericForm phi0 = random_nonzero_form(rng, 2), phi1 = random_nonzero_form(rng, 2);
    if (bf_gcd(phi0, phi1).degree() != 0) continue;
    EXPECT_EQ(map_degree(cover_of(g, phi0, phi1)), 2 * map_degree(g));
    ++checked;
  }
  // A double cover of the conic: degree 4 with image degree 2.
  CurveMap f = cover_of(conic(), make_form({1, 0, 0}), make_form({0, 0, 1}));
  UReport r = in_U(f);
  EXPECT_EQ(r.map_degree, 2);
  EXPECT_EQ(r.image_degree, 2);
}

TEST(InU, ImageTimesMapDegreeIsDegree) {
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    CurveMap f = random_curve(rng, 2 + i % 3, 1 + i % 4, -2, 2);
    Sampler s(i);
    UReport r = in_U(f, s);
    if (!r.base_free) continue;
    ASSERT_TRUE(r.map_degree && r.image_degree);
    EXPECT_EQ(*r.map_degree * *r.image_degree, f.d());
    EXPECT_EQ(r.in_U, *r.map_degree == 1);
  }
}

TEST(Sampling, SeededStreamsAreReproducible) {
  CurveMap f = double_cover();
  Sampler a(7), b(7);
  EXPECT_EQ(map_degree(f, a), map_degree(f, b));
  EXPECT_EQ(a(), b());
}
