#include <doctest.h>

#include "trigdef/cox.hpp"
#include "trigdef/rng.hpp"
#include "trigdef/surface.hpp"

using namespace trigdef;

TEST_CASE("intersection form on the generators") {
  for (int n = 0; n <= 6; ++n) {
    const DivisorClass B{n, 1, 0}, R{n, 0, 1};
    CHECK(intersect(B, B) == -n);
    CHECK(intersect(B, R) == 1);
    CHECK(intersect(R, B) == 1);
    CHECK(intersect(R, R) == 0);
    CHECK(intersect(canonical_class(n), canonical_class(n)) == 8);
  }
  CHECK(intersect({3, 1, 4}, {3, 1, 4}) == 5);  // H^2 = g-2 at (g,k) = (7,1)
  CHECK_THROWS_AS(intersect({2, 1, 0}, {3, 1, 0}), std::invalid_argument);
}

TEST_CASE("intersection form is symmetric and bilinear") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(0, 6));
    const DivisorClass d1{n, rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
    const DivisorClass d2{n, rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
    const DivisorClass d3{n, rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
    CHECK(intersect(d1, d2) == intersect(d2, d1));
    CHECK(intersect(d1 + d2, d3) == intersect(d1, d3) + intersect(d2, d3));
  }
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(3) == DivisorClass{3, -2, -5});
  CHECK(canonical_class(0) == DivisorClass{0, -2, -2});
}

TEST_CASE("positivity flags") {
  const auto p1 = positivity({2, 1, 2});
  CHECK(p1.nef);
  CHECK_FALSE(p1.ample);
  CHECK(p1.big_and_nef);

  CHECK(positivity({3, 1, 4}).ample);

  const auto p3 = positivity({1, 0, 1});
  CHECK(p3.nef);
  CHECK_FALSE(p3.big_and_nef);
}

TEST_CASE("euler characteristic") {
  CHECK(chi({4, 0, 0}) == 1);
  CHECK(chi({3, 1, 4}) == 7);
  CHECK(chi({3, 0, -3}) == -2);
}

TEST_CASE("cohomology dimensions") {
  for (int n = 0; n <= 5; ++n) {
    const auto h = h012({n, 0, 1});
    CHECK(h.h0 == 2);
    CHECK(h.h1 == 0);
    CHECK(h.h2 == 0);
  }
  CHECK(h012({3, 1, 4}).h0 == 7);

  // The restriction-sequence audit case at (g,k) = (7,1): H + 3R - C has h1 = 2,
  // matching h1 of its Serre dual (0,-3).
  CHECK(h012({3, -2, -2}).h1 == 2);
  CHECK(h012({3, 0, -3}).h1 == 2);
  // -(2,6) is minus a big-and-nef class, so its h1 vanishes.
  CHECK(h012({3, -2, -6}).h1 == 0);
}

TEST_CASE("chi and Serre duality audits on random classes") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(0, 6));
    const DivisorClass d{n, rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
    const auto h = h012(d);
    CHECK(h.h0 - h.h1 + h.h2 == chi(d));
    CHECK(h.h2 == h012(canonical_class(n) - d).h0);
    CHECK(h.h0 >= 0);
    CHECK(h.h1 >= 0);
  }
}

TEST_CASE("h1 vanishes on minus a big-and-nef class") {
  for (int n = 0; n <= 5; ++n) {
    for (long a = 0; a <= 8; ++a) {
      for (long b = 0; b <= 8; ++b) {
        const DivisorClass m{n, a, b};
        if (!positivity(m).big_and_nef) continue;
        CHECK(h012(-m).h1 == 0);
      }
    }
  }
}

TEST_CASE("maroni range") {
  CHECK(maroni_range(7) == std::vector<int>{1, 2});
  CHECK(maroni_range(6) == std::vector<int>{1, 2});
  CHECK(maroni_range(12) == std::vector<int>{3, 4, 5});
  CHECK_THROWS_AS(maroni_range(5), std::invalid_argument);
}

TEST_CASE("standard classes per context") {
  {
    const SurfaceContext ctx(7, 1);
    CHECK(ctx.n == 3);
    const auto s = standard_classes(ctx);
    CHECK(s.C == DivisorClass{3, 3, 9});
    CHECK(s.H == DivisorClass{3, 1, 4});
    CHECK(s.A == DivisorClass{3, 1, 3});
    CHECK(s.C == s.A * 3);
  }
  {
    const SurfaceContext ctx(6, 1);
    CHECK(ctx.n == 2);
    CHECK(standard_classes(ctx).C == DivisorClass{2, 3, 7});
  }
  {
    const SurfaceContext ctx(6, 2);
    CHECK(ctx.n == 0);
    CHECK(standard_classes(ctx).C == DivisorClass{0, 3, 4});
  }
  CHECK_THROWS_AS(SurfaceContext(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceContext(5, 1), std::invalid_argument);
}

TEST_CASE("lattice identities per context") {
  for (int g = 6; g <= 16; ++g) {
    for (int k : maroni_range(g)) {
      const SurfaceContext ctx(g, k);
      const auto s = standard_classes(ctx);
      CHECK(intersect(s.H, s.H) == g - 2);
      CHECK(intersect(s.B, s.C) == 3 * k + 4 - g);
      CHECK(intersect(s.R, s.C) == 3);
      CHECK(s.H == s.K + s.C);  // adjunction: H restricts to the canonical class
    }
  }
}

TEST_CASE("h0 equals the monomial count") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(0, 5));
    const DivisorClass d{n, rng.uniform_int(0, 4), rng.uniform_int(-4, 36)};
    CHECK(h0(d) == static_cast<long>(monomial_basis(d).size()));
  }
}
