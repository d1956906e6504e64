#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigdef/rational.hpp"

namespace trigdef {

// Coordinate ring variables of the Hirzebruch surface F_n:
//   t0, t1   fiber-base pencil, weight (0,1)
//   x_inf    the negative section B, weight (1,0)
//   x1       the tautological section A, weight (1,n)
inline constexpr int kNumVars = 4;
enum Var : int { kT0 = 0, kT1 = 1, kXInf = 2, kX1 = 3 };

extern const char* const kVarNames[kNumVars];

struct Monomial {
  std::array<int, kNumVars> e{0, 0, 0, 0};

  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides(o) in reverse
  int total_degree() const;
  std::string str() const;
};

// Fixed project-wide term order: lexicographic on (e_x1, e_xinf, e_t0, e_t1).
// Map comparator ranks the larger tuple first, so begin() is the leading term.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Is a strictly larger than b in the fixed order?
bool monomial_greater(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(Var v);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;  // nonzero polynomials only
  const Rational& leading_coeff() const;
  Rational coeff(const Monomial& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative(Var v) const;
  Rational evaluate(const std::array<Rational, kNumVars>& x) const;
  int degree_in(Var v) const;  // -1 for the zero polynomial
  int total_degree() const;    // -1 for the zero polynomial
  bool involves(Var v) const;
  // Coefficient of v^d as a polynomial in the remaining variables.
  Poly coeff_of(Var v, int d) const;

  // Bidegree under the F_n grading; nullopt when zero or not bihomogeneous.
  std::optional<std::pair<int, int>> bidegree(int n) const;

  // Canonical rendering, terms in descending order.
  std::string str() const;

  void set_term(const Monomial& m, const Rational& c);  // erases on c == 0

 private:
  TermMap terms_;
};

Poly operator*(const Rational& c, const Poly& p);

// p = content * primitive where primitive has coprime integer coefficients and
// positive leading coefficient; content carries sign and denominators.
struct PrimitiveDecomp {
  Rational content;
  Poly primitive;
};
PrimitiveDecomp primitive_decompose(const Poly& p);  // p nonzero
Poly normalize_primitive(const Poly& p);             // zero maps to zero

// Quotient p/q when the division is exact, nullopt otherwise.
std::optional<Poly> exact_div(const Poly& p, const Poly& q);

// Pseudo-remainder of a by b with respect to v (b must involve v).
Poly pseudo_rem(const Poly& a, const Poly& b, Var v);

// Gcd over Q[t0,t1,x_inf,x1] via primitive PRS. Result is normalized: integer
// coefficients with content 1 and positive leading coefficient. Inputs must
// not both be zero.
Poly poly_gcd(const Poly& p, const Poly& q);
Poly poly_gcd(const std::vector<Poly>& ps);
bool is_associate(const Poly& p, const Poly& q);  // equal up to a nonzero scalar

struct BinaryFormInfo {
  bool squarefree = false;
  bool is_square = false;
  int degree = 0;
};

// Structure of a nonzero homogeneous form in t0, t1 alone. squarefree is
// decided by gcd with the partials; is_square (over the algebraic closure)
// by parity of the squarefree-decomposition multiplicities. Throws on zero or
// inhomogeneous input.
BinaryFormInfo binary_form_analysis(const Poly& h);

struct SquarefreeFactor {
  Poly factor;  // primitive binary form, degree >= 1
  int multiplicity;
};

// Yun decomposition of a nonzero binary form in t0, t1:
//   h = c * prod factor_i^{multiplicity_i}
// with the factors squarefree and pairwise coprime (t0/t1 powers included as
// ordinary factors). The constant c is h divided by the product.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& h);

// If h = c * s^2 for a binary form s, returns s (normalized primitive);
// otherwise nullopt. The residual constant c = h / s^2 may be any nonzero
// rational; the caller decides whether it must itself be a square.
std::optional<Poly> square_part(const Poly& h);

bool is_perfect_square(const Rational& c);
Rational rational_sqrt(const Rational& c);  // c must be a perfect square

}  // namespace trigdef
