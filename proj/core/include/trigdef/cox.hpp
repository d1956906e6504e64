#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "trigdef/matrix.hpp"
#include "trigdef/polynomial.hpp"
#include "trigdef/surface.hpp"

namespace trigdef {

// A run hit a curve (or linear system) outside the generic regime the
// analysis assumes; the message carries the offending values.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered monomial basis of H0(F_n, O(D)): all x1^i x_inf^(a-i) t0^j t1^(b-in-j),
// sorted descending in the fixed term order. Empty when h0 = 0.
std::vector<Monomial> monomial_basis(const DivisorClass& d);

// Coordinates of p in the given basis; throws when a term falls outside.
std::vector<Rational> poly_coords(const Poly& p, const std::vector<Monomial>& basis);
Poly poly_from_coords(const std::vector<Rational>& coords, const std::vector<Monomial>& basis);

// Matrix of H0(D1) (x) H0(D2) -> H0(D1+D2) in the fixed monomial bases.
// Columns run over pairs (i, j) in row-major order on basis(D1) x basis(D2).
QMatrix mult_map(const DivisorClass& d1, const DivisorClass& d2);

// Columns spanning { g * m : g in gens, m a monomial of complementary
// bidegree }, in basis(D) coordinates. Generators must be bihomogeneous.
std::vector<std::vector<Rational>> ideal_span_columns(const std::vector<Poly>& gens,
                                                      const DivisorClass& d);

struct IdealMembership {
  bool member = false;
  // cofactors[i] multiplies gens[i]; s = sum cofactors[i] * gens[i] on success.
  std::vector<Poly> cofactors;
};

// Degree-D slice of the ideal membership problem: is s a combination of the
// generators with bihomogeneous cofactors of complementary bidegree?
IdealMembership ideal_membership_at_bidegree(const Poly& s, const std::vector<Poly>& gens,
                                             const DivisorClass& d);

// Solutions s in H0(D) of  x_inf^twist * s  in  span(gens at D + twist*B).
struct ConstrainedSpace {
  std::vector<Monomial> basis;                     // of H0(D)
  std::vector<std::vector<Rational>> vectors;      // spanning set, basis coords
  int dim = 0;
};
ConstrainedSpace solve_twisted_membership(const DivisorClass& d, const std::vector<Poly>& gens,
                                          int twist = 1);

// Model of H0(C, D|_C) carried by surface sections. When the restriction from
// H0(S, D) is surjective the model is the quotient by F*H0(D-C); otherwise the
// sections are represented in the 2A-twisted space as classes divisible by
// x1^2 (computed by x_inf-saturated membership).
struct SectionSpace {
  DivisorClass model_class;    // the class D being modeled on the curve
  DivisorClass ambient_class;  // D, or D + 2A when twisted
  bool twisted = false;
  std::vector<Monomial> ambient_basis;
  // Columns (ambient coordinates) spanning the model subspace; for the plain
  // quotient model this is all of H0(ambient).
  std::vector<std::vector<Rational>> model_vectors;
  // Columns spanning F * H0(ambient - C); the model is read modulo these.
  std::vector<std::vector<Rational>> mod_out;
  int dim = 0;
};

SectionSpace restriction_model(const SurfaceContext& ctx, const Poly& f_curve,
                               const DivisorClass& d);

// The twist-and-cut construction unconditionally (restriction_model uses it
// only when the direct quotient model is unavailable). Exposed so the two
// models can be compared where both apply.
SectionSpace restriction_model_twisted(const SurfaceContext& ctx, const Poly& f_curve,
                                       const DivisorClass& d);

// Gcd of the sections (the divisorial fixed part of the system they span)
// plus the residual bidegree. Sections must be nonzero-spanning, equal
// bidegree, bihomogeneous.
struct FixedPart {
  Poly gcd;
  DivisorClass fixed_class;
  DivisorClass residual_class;
};
FixedPart fixed_part(int n, const std::vector<Poly>& sections);

}  // namespace trigdef
