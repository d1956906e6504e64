#pragma once

#include <vector>

#include "trigdef/curve.hpp"
#include "trigdef/rng.hpp"

namespace trigdef {

// Class of the unique quadric divisor through the ramification scheme.
DivisorClass qv_class(const SurfaceContext& ctx);  // 2B + (g-k)R
// Class of the companion quadric divisor.
DivisorClass q1_class(const SurfaceContext& ctx);  // 2B + (2g-2-3k)R

// Quadrics through the canonical model: kernel of Sym^2 H0(K) -> H0(2K).
struct QuadricSpace {
  int g = 0;
  std::vector<Monomial> h_basis;   // H0(S, H), the canonical space
  std::vector<Monomial> h2_basis;  // H0(S, 2H), the bicanonical space
  // Kernel vectors over pair coordinates (i <= j, row-major).
  std::vector<std::vector<Rational>> kernel;
  int dim = 0;
  int mult_rank = 0;  // rank of the multiplication matrix, = 3g-3

  // Value of the i-th kernel quadric at a point with the given H-coordinates.
  Rational value_at(int i, const std::vector<Rational>& y) const;
};
QuadricSpace quadrics_I2(const TrigonalCurve& curve);

// Rank of the symmetric form (s,t) -> xi(s*t) on the canonical space; xi is
// given by its values on the bicanonical monomial basis.
int quadric_rank(const TrigonalCurve& curve, const std::vector<Rational>& xi);

// True iff evaluation at the point y (H-coordinates in P^{g-1}) kills every
// quadric through the canonical curve — i.e. the evaluation functional
// descends to H0(2K). Points off the ruled surface fail this.
bool annihilates_quadrics(const QuadricSpace& i2, const std::vector<Rational>& y);

struct SurfacePoint {
  std::array<Rational, kNumVars> coords;  // (t0, t1, x_inf, x1)
};
// Deterministic rational point of S off the curve (small seeded coordinates,
// resampled while F vanishes).
SurfacePoint random_surface_point(const TrigonalCurve& curve, SplitMix64& rng);
// Values of the bicanonical monomial basis at the point.
std::vector<Rational> point_functional(const TrigonalCurve& curve, const SurfacePoint& p);
// Values of the canonical (H) monomial basis at the point.
std::vector<Rational> point_h_coordinates(const TrigonalCurve& curve, const SurfacePoint& p);

// The annihilator system: bicanonical sections vanishing on the ramification
// scheme. Constructive generators are t-form multiples of F_x1 and F_xinf;
// the oracle subspace is cut by the membership encoding
//   s * x_inf in (F, F_x1) at bidegree 2H + B.
struct LambdaSystem {
  std::vector<Poly> generators;
  std::vector<Monomial> ambient;  // 2H monomial basis
  std::vector<std::vector<Rational>> oracle_basis;
  int dim = 0;
  bool span_matches_oracle = false;
  FixedPart fixed;
};
LambdaSystem lambda_space(const TrigonalCurve& curve);

// Dimension of the tangent space to the trigonal locus: (3g-3) - dim Lambda.
int dim_T(const TrigonalCurve& curve, const LambdaSystem& lambda);

// Sections of the Q_V class vanishing on the ramification scheme. Dimension 1
// (spanned by F_x1) when n > 0; a pencil <F_x1, F_xinf> on P1 x P1.
struct QvSystem {
  std::vector<Monomial> basis;
  std::vector<std::vector<Rational>> vectors;
  int dim = 0;
  bool contains_fx1 = false;
  bool contains_fxinf = false;
};
QvSystem unique_qv(const TrigonalCurve& curve);

// Sections of the Q_1 class vanishing on the ramification scheme; expected
// dimension g - 2k. Requires g > 2k + 2.
struct LambdaPrime {
  std::vector<Monomial> basis;
  std::vector<std::vector<Rational>> vectors;
  int dim = 0;
  bool contains_fxinf = false;
};
LambdaPrime lambda_prime(const TrigonalCurve& curve);

struct BaseLocusAnalysis {
  DivisorClass fixed_class;
  DivisorClass residual_class;
  long residual_degree_budget = 0;  // Q_V . Q_1 = 2g + 4
  bool rv_contained = false;        // every Lambda member passes the vanishing encoding
  bool qv_q1_coprime = false;       // gcd(F_x1, F_xinf) = 1
};
BaseLocusAnalysis base_locus_analysis(const TrigonalCurve& curve, const LambdaSystem& lambda);

// Structure of the fixed divisor Gamma = V(F_x1) for Maroni degree 1: a
// fiberwise quadratic, reducible exactly when its fiber discriminant is a
// square, smooth when that discriminant is squarefree.
struct GammaAnalysis {
  bool irreducible = false;
  bool smooth = false;
  bool nonreduced = false;
  std::vector<DivisorClass> split_classes;  // empty when irreducible
};
GammaAnalysis gamma_analysis(const TrigonalCurve& curve);

}  // namespace trigdef
