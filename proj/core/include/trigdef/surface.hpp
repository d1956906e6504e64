#pragma once

#include <vector>

#include "trigdef/rational.hpp"

namespace trigdef {

// Class a*B + b*R in Pic(F_n); B the section of minimal self-intersection,
// R a fiber of the ruling. Arithmetic only combines classes with equal n.
struct DivisorClass {
  int n = 0;
  long a = 0;
  long b = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const { return {n, -a, -b}; }
  DivisorClass operator*(long m) const { return {n, m * a, m * b}; }
};

// Intersection number: B^2 = -n, B.R = 1, R^2 = 0.
long intersect(const DivisorClass& d1, const DivisorClass& d2);

// K = -2B - (n+2)R.
DivisorClass canonical_class(int n);

struct Positivity {
  bool ample = false;
  bool nef = false;
  bool big_and_nef = false;
};
Positivity positivity(const DivisorClass& d);

// chi(O(D)) = 1 + D.(D - K)/2.
long chi(const DivisorClass& d);

struct H012 {
  long h0 = 0;
  long h1 = 0;
  long h2 = 0;
};

// h0 by the pushforward sum, h2 by Serre duality, h1 = h0 + h2 - chi.
H012 h012(const DivisorClass& d);
long h0(const DivisorClass& d);

// Admissible Maroni degrees for genus g >= 6: ceil((g-4)/3) .. floor((g-2)/2).
std::vector<int> maroni_range(int g);

// Genus g >= 6, Maroni degree k in range, n = g - 2 - 2k.
struct SurfaceContext {
  int g;
  int k;
  int n;
  SurfaceContext(int g, int k);
};

struct StandardClasses {
  DivisorClass B;  // (1, 0)
  DivisorClass R;  // (0, 1)
  DivisorClass A;  // B + nR, the tautological class
  DivisorClass H;  // B + (g-2-k)R, hyperplane class of the canonical model
  DivisorClass C;  // 3B + (2g-2-3k)R, the curve class
  DivisorClass K;  // canonical class of the surface
};
StandardClasses standard_classes(const SurfaceContext& ctx);

}  // namespace trigdef
