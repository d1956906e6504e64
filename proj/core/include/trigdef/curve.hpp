#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "trigdef/cox.hpp"
#include "trigdef/polynomial.hpp"
#include "trigdef/surface.hpp"

namespace trigdef {

// Coefficient resampling exhausted its budget without an acceptable curve.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A smooth trigonal curve of genus g and Maroni degree k on F_n, cut by
//   F = sum_i alpha[i] * x1^i * x_inf^(3-i),  deg alpha[i] = d_i = (2g-2-3k) - i*n.
// Acceptance: the fiber discriminant of F is squarefree of degree 2g+4, and
// (when d_3 > 0) alpha[3] shares no root with it, so B|_C stays clear of the
// ramification scheme.
struct TrigonalCurve {
  SurfaceContext ctx;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::array<Poly, 4> alpha;
  Poly f;       // the defining cubic
  Poly fx1;     // dF/dx1, bidegree (2, g-k) — cuts Q_V
  Poly fxinf;   // dF/dx_inf, bidegree (2, 2g-2-3k) — a representative of Q_1
  Poly disc;    // fiber discriminant, binary form of degree 2g+4
  bool smooth_certified = false;

  const SurfaceContext& context() const { return ctx; }
};

// deg alpha[i] for i = 0..3.
std::array<int, 4> alpha_degrees(const SurfaceContext& ctx);

// Discriminant of the cubic in (x1 : x_inf) with coefficient forms
// (a,b,c,d) = (alpha3, alpha2, alpha1, alpha0):
//   18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2.
Poly cubic_discriminant(const std::array<Poly, 4>& alpha);

// Deterministic seeded curve: coefficients drawn uniformly from [-9, 9],
// resampled (at most 1000 times) until the acceptance conditions hold.
TrigonalCurve random_curve(int g, int k, std::uint64_t seed);

// Builds the curve from explicit coefficient forms; validates degrees and
// computes the acceptance certificate.
TrigonalCurve curve_from_alpha(int g, int k, std::uint64_t seed, const std::array<Poly, 4>& alpha);

// Model of H0(C, D|_C) for this curve; requires the acceptance certificate.
SectionSpace restriction_model(const TrigonalCurve& curve, const DivisorClass& d);

// Maroni degree recovered from the growth of h0(C, jL):
//   computed k = max{ j : h0(jL) = j+1 } - 1.
int maroni_verify(const TrigonalCurve& curve);

// The ramification section class [F_x1] in H0(C, (2, g-k)|_C) is never in the
// image of x_inf * H0(S, (1, g-k)); returns that non-membership.
bool gaussian_not_in_image(const TrigonalCurve& curve);

// Versioned JSON: {format_version, g, k, seed, alpha}; coefficients are
// decimal integer strings, each form listed t0-descending. Round-trips
// byte-exactly.
std::string curve_to_json(const TrigonalCurve& curve);
TrigonalCurve curve_from_json(const std::string& text);

}  // namespace trigdef
