#include <charnum/projective.hpp>
#include <charnum/random.hpp>
#include <charnum/reference.hpp>

#include <gtest/gtest.h>

namespace charnum {
namespace {

Rational q(long n, long d) { return Rational(n, d); }

void expect_same(const ProjPoint& a, const ProjPoint& b) { EXPECT_TRUE(a.same_representative(b)) << a << " vs " << b; }
void expect_same(const ProjLine& a, const ProjLine& b) { EXPECT_TRUE(a.same_representative(b)) << a << " vs " << b; }

TEST(Homogeneous, RejectsZeroTriple) {
  EXPECT_THROW(ProjPoint(0, 0, 0), GeometryError);
  EXPECT_THROW(ProjLine(0, 0, 0), GeometryError);
}

TEST(Homogeneous, ProjectiveEquality) {
  EXPECT_EQ(ProjPoint(1, 2, 3), ProjPoint(-2, -4, -6));
  EXPECT_EQ(ProjPoint(q(1, 2), 1, 0), ProjPoint(1, 2, 0));
  EXPECT_NE(ProjPoint(1, 2, 3), ProjPoint(1, 2, 4));
  EXPECT_FALSE(ProjPoint(1, 2, 3).same_representative(ProjPoint(2, 4, 6)));
}

TEST(Homogeneous, Canonical) {
  expect_same(ProjPoint(q(-1, 2), q(3, 4), 0).canonical(), ProjPoint(2, -3, 0));
  expect_same(ProjPoint(0, -6, 4).canonical(), ProjPoint(0, 3, -2));
}

TEST(Meet, CoordinateAxes) { expect_same(meet(ProjLine(1, 0, 0), ProjLine(0, 1, 0)), ProjPoint(0, 0, 1)); }

TEST(Meet, ReferenceVertexU) {
  const ProjPoint u = meet(ProjLine(-1, 0, 1), ProjLine(1, 0, 1));
  expect_same(u, ProjPoint(0, 1, 0));
  EXPECT_EQ(u, ProjPoint(0, -1, 0));
}

TEST(Meet, ParallelLinesMeetAtInfinity) {
  const ProjPoint p = meet(ProjLine(1, 0, -1), ProjLine(1, 0, -2));
  expect_same(p, ProjPoint(0, 1, 0));
  EXPECT_FALSE(p.is_finite());
}

TEST(Meet, CoincidentLinesThrow) {
  try {
    (void)meet(ProjLine(1, 2, 3), ProjLine(2, 4, 6));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "lines coincide");
  }
}

TEST(Join, Basic) {
  expect_same(join(ProjPoint(0, 0, 1), ProjPoint(0, 1, 0)), ProjLine(1, 0, 0));
  expect_same(join(ProjPoint(1, 0, 1), ProjPoint(0, 1, 1)), ProjLine(1, 1, -1));
}

TEST(Join, ReferenceLineA) {
  expect_same(join(ProjPoint(-4, -1, 4), ProjPoint(-1, q(-3, 2), 1)), ProjLine(1, 0, 1));
}

TEST(Join, CoincidentPointsThrow) {
  try {
    (void)join(ProjPoint(1, 2, 3), ProjPoint(2, 4, 6));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "points coincide");
  }
}

TEST(Collinear, Basic) {
  EXPECT_TRUE(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0)));
  EXPECT_FALSE(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)));
  EXPECT_TRUE(concurrent(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)));
}

TEST(Dualize, PointBecomesLine) {
  const Figure f{{ProjPoint(1, 2, 3)}, {}};
  const Figure d = dualize(f);
  ASSERT_EQ(d.lines.size(), 1u);
  expect_same(d.lines[0], ProjLine(1, 2, 3));
}

TEST(Dualize, TrianglePreservesIncidenceAndIsInvolution) {
  const ProjPoint p(1, 0, 0), r(0, 1, 0), s(1, 1, 1);
  const Figure tri{{p, r, s}, {join(p, r), join(r, s), join(s, p)}};
  const Figure d = dualize(tri);
  EXPECT_EQ(incidence_count(tri), 6u);
  EXPECT_EQ(incidence_count(d), 6u);
  const Figure dd = dualize(d);
  for (std::size_t i = 0; i < 3; ++i) {
    expect_same(dd.points[i], tri.points[i]);
    expect_same(dd.lines[i], tri.lines[i]);
  }
}

TEST(Dualize, FrameWithPointsBecomesPencils) {
  // Three lines with points on them dualize to three points with lines
  // through them; the vertices become the triangle sides.
  const auto cfg = reference::config();
  const auto& f = cfg.frame();
  Figure fig{{f.u(), f.v(), f.w()}, {f.a(), f.b(), f.c()}};
  for (const auto& p : cfg.all_points()) fig.points.push_back(p);
  const Figure d = dualize(fig);
  EXPECT_EQ(incidence_count(d), incidence_count(fig));
  // Dual of u lies on... u is on a and c, so dual(a) and dual(c) lie on dual(u).
  EXPECT_TRUE(incident(dual(f.a()), dual(f.u())));
  EXPECT_TRUE(incident(dual(f.c()), dual(f.u())));
}

TEST(Decompose, UnitBasis) {
  const Decomposition d = decompose(ProjPoint(1, 1, 0), ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
  EXPECT_EQ(d, (Decomposition{1, 1}));
}

TEST(Decompose, ReferencePointP5OverWU) {
  // 2w + 5(0,-1,0) = (2,-3,2), projectively (1,-3/2,1).
  const ProjPoint w(1, 1, 1), u(0, -1, 0);
  const Decomposition d = decompose(ProjPoint(1, q(-3, 2), 1), w, u);
  EXPECT_EQ(d, (Decomposition{2, 5}));
  EXPECT_EQ(d.ratio(), q(5, 2));
  EXPECT_TRUE(combine(Rational(1), w, q(5, 2), u).same_representative(ProjPoint(1, q(-3, 2), 1)));
}

TEST(Decompose, ReferencePointP1OverUV) {
  // Hand solution: alpha*(0,-1,0) + beta*(-1,1,1) = k(-4,-1,4) gives beta = 4k,
  // -alpha + beta = -k, so alpha = 5k.
  const ProjPoint u(0, -1, 0), v(-1, 1, 1);
  const Decomposition d = decompose(ProjPoint(-4, -1, 4), u, v);
  EXPECT_EQ(d, (Decomposition{5, 4}));
  EXPECT_EQ(d.ratio(), q(4, 5));
  // With the canonical representatives u' = -u, v' = -v the ratio is the same.
  EXPECT_EQ(decompose(ProjPoint(-4, -1, 4), ProjPoint(0, 1, 0), ProjPoint(1, -1, -1)).ratio(), q(4, 5));
  // Flipping only u flips the sign.
  EXPECT_EQ(decompose(ProjPoint(-4, -1, 4), ProjPoint(0, 1, 0), v).ratio(), q(-4, 5));
}

TEST(Decompose, Errors) {
  try {
    (void)decompose(ProjPoint(0, 0, 1), ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "point off span");
  }
  try {
    (void)decompose(ProjPoint(0, 0, 1), ProjPoint(1, 0, 0), ProjPoint(2, 0, 0));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_STREQ(e.what(), "degenerate basis");
  }
}

TEST(TriFrame, CanonicalVertices) {
  const TriFrame f = reference::frame();
  expect_same(f.u(), ProjPoint(0, 1, 0));
  expect_same(f.v(), ProjPoint(1, -1, -1));
  expect_same(f.w(), ProjPoint(1, 1, 1));
  EXPECT_TRUE(incident(f.u(), f.c()) && incident(f.u(), f.a()));
  EXPECT_TRUE(incident(f.v(), f.a()) && incident(f.v(), f.b()));
  EXPECT_TRUE(incident(f.w(), f.b()) && incident(f.w(), f.c()));
}

TEST(TriFrame, RejectsBadLines) {
  EXPECT_THROW(TriFrame(ProjLine(1, 0, 0), ProjLine(2, 0, 0), ProjLine(0, 1, 0)), GeometryError);
  EXPECT_THROW(TriFrame(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 0)), GeometryError);
}

TEST(TriFrame, WithRepresentativesChecksVertices) {
  const TriFrame f = reference::frame();
  EXPECT_NO_THROW((void)f.with_representatives(ProjPoint(0, -1, 0), ProjPoint(-1, 1, 1), ProjPoint(2, 2, 2)));
  EXPECT_THROW((void)f.with_representatives(ProjPoint(1, 0, 0), f.v(), f.w()), GeometryError);
}

// ---- properties ------------------------------------------------------------

TEST(ProjectiveProperty, MeetOfJoinsRecoversPoint) {
  gen::Engine rng(31);
  int checked = 0;
  while (checked < 200) {
    const ProjPoint p = gen::point(rng), r = gen::point(rng), s = gen::point(rng);
    if (collinear(p, r, s)) continue;
    EXPECT_EQ(meet(join(p, r), join(p, s)), p);
    ++checked;
  }
}

TEST(ProjectiveProperty, DualOfMeetIsJoinOfDuals) {
  gen::Engine rng(32);
  int checked = 0;
  while (checked < 200) {
    const ProjLine l1 = gen::line(rng), l2 = gen::line(rng);
    if (l1 == l2) continue;
    EXPECT_TRUE(dual(meet(l1, l2)).same_representative(join(dual(l1), dual(l2))));
    ++checked;
  }
}

TEST(ProjectiveProperty, DecomposeRecombines) {
  gen::Engine rng(33);
  for (int t = 0; t < 200; ++t) {
    const ProjPoint u = gen::point(rng), v = gen::point(rng);
    if (u == v) continue;
    const Rational a = gen::rational(rng), b = gen::rational(rng);
    if (a.is_zero() && b.is_zero()) continue;
    const ProjPoint p = combine(a, u, b, v).scaled(gen::nonzero_rational(rng));
    const Decomposition d = decompose(p, u, v);
    EXPECT_EQ(combine(d.alpha, u, d.beta, v), p);
    EXPECT_EQ(d.alpha * b, d.beta * a);
  }
}

TEST(ProjectiveProperty, ScaleCovariance) {
  // Replacing u by lambda*u multiplies beta/alpha by lambda.
  gen::Engine rng(34);
  for (int t = 0; t < 200; ++t) {
    const ProjPoint u = gen::point(rng), v = gen::point(rng);
    if (u == v) continue;
    const ProjPoint p = gen::on_pencil(rng, u, v);
    const Rational lambda = gen::nonzero_rational(rng);
    EXPECT_EQ(decompose(p, u.scaled(lambda), v).ratio(), decompose(p, u, v).ratio() * lambda);
  }
}

TEST(ProjectiveProperty, FrameIsDeterministicUpToLineScale) {
  gen::Engine rng(35);
  for (int t = 0; t < 100; ++t) {
    const TriFrame f = gen::frame(rng);
    const TriFrame g(f.a().scaled(gen::nonzero_rational(rng)), f.b().scaled(gen::nonzero_rational(rng)),
                     f.c().scaled(gen::nonzero_rational(rng)));
    expect_same(f.u(), g.u());
    expect_same(f.v(), g.v());
    expect_same(f.w(), g.w());
  }
}

TEST(CrossRatio, IndependentOfRepresentatives) {
  gen::Engine rng(36);
  for (int t = 0; t < 100; ++t) {
    const ProjPoint u = gen::point(rng), v = gen::point(rng);
    if (u == v) continue;
    const ProjPoint p1 = gen::on_pencil(rng, u, v), p2 = gen::on_pencil(rng, u, v);
    const Rational k = gen::nonzero_rational(rng);
    EXPECT_EQ(cross_ratio(u, v, p1, p2), cross_ratio(u.scaled(k), v, p1, p2));
  }
}

}  // namespace
}  // namespace charnum
