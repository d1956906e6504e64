#include "trigdef/ivhs.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trigdef {

DivisorClass qv_class(const SurfaceContext& ctx) { return {ctx.n, 2, ctx.g - ctx.k}; }

DivisorClass q1_class(const SurfaceContext& ctx) { return {ctx.n, 2, 2 * ctx.g - 2 - 3 * ctx.k}; }

namespace {

constexpr std::uint64_t kPointStreamTag = 0x726b6f6e65707473ull;  // rank-one point stream

std::map<Monomial, int, MonomialOrder> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, int, MonomialOrder> idx;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx.emplace(basis[i], i);
  return idx;
}

}  // namespace

QuadricSpace quadrics_I2(const TrigonalCurve& curve) {
  const auto& ctx = curve.ctx;
  const auto cl = standard_classes(ctx);
  const int g = ctx.g;

  // Both the canonical and bicanonical spaces restrict isomorphically from S;
  // the models certify this (whole ambient space, nothing to mod out).
  const auto mk = restriction_model(ctx, curve.f, cl.H);
  const auto m2k = restriction_model(ctx, curve.f, cl.H * 2);
  if (mk.twisted || mk.dim != g || !mk.mod_out.empty())
    throw DegeneracyError("quadrics_I2: canonical model is not the full surface space");
  if (m2k.twisted || m2k.dim != 3 * g - 3 || !m2k.mod_out.empty())
    throw DegeneracyError("quadrics_I2: bicanonical model is not the full surface space");

  QuadricSpace out;
  out.g = g;
  out.h_basis = mk.ambient_basis;
  out.h2_basis = m2k.ambient_basis;

  const auto idx = index_of(out.h2_basis);
  const int hn = static_cast<int>(out.h_basis.size());
  QMatrix m(static_cast<int>(out.h2_basis.size()), hn * (hn + 1) / 2);
  int col = 0;
  for (int i = 0; i < hn; ++i) {
    for (int j = i; j < hn; ++j) {
      m.at(idx.at(out.h_basis[i] * out.h_basis[j]), col) = 1;
      ++col;
    }
  }
  out.mult_rank = m.rank();
  out.kernel = m.kernel_basis();
  out.dim = static_cast<int>(out.kernel.size());
  return out;
}

Rational QuadricSpace::value_at(int i, const std::vector<Rational>& y) const {
  const int hn = static_cast<int>(h_basis.size());
  if (static_cast<int>(y.size()) != hn) throw std::invalid_argument("value_at: coordinate length");
  Rational acc = 0;
  int col = 0;
  for (int a = 0; a < hn; ++a) {
    for (int b = a; b < hn; ++b) {
      if (kernel[i][col] != 0) acc += kernel[i][col] * y[a] * y[b];
      ++col;
    }
  }
  return acc;
}

bool annihilates_quadrics(const QuadricSpace& i2, const std::vector<Rational>& y) {
  for (int i = 0; i < i2.dim; ++i) {
    if (i2.value_at(i, y) != 0) return false;
  }
  return true;
}

int quadric_rank(const TrigonalCurve& curve, const std::vector<Rational>& xi) {
  const auto cl = standard_classes(curve.ctx);
  const auto h_basis = monomial_basis(cl.H);
  const auto h2_basis = monomial_basis(cl.H * 2);
  if (xi.size() != h2_basis.size())
    throw std::invalid_argument("quadric_rank: functional length must match the bicanonical basis");
  const auto idx = index_of(h2_basis);
  const int g = static_cast<int>(h_basis.size());
  QMatrix m(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      m.at(i, j) = xi[idx.at(h_basis[i] * h_basis[j])];
    }
  }
  return m.rank();
}

SurfacePoint random_surface_point(const TrigonalCurve& curve, SplitMix64& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    SurfacePoint p;
    for (int v = 0; v < kNumVars; ++v) p.coords[v] = make_rational(rng.uniform_int(-9, 9));
    if (p.coords[kT0] == 0 && p.coords[kT1] == 0) continue;
    if (p.coords[kXInf] == 0 && p.coords[kX1] == 0) continue;
    if (curve.f.evaluate(p.coords) == 0) continue;
    return p;
  }
  throw DegeneracyError("random_surface_point: sampling failed");
}

std::vector<Rational> point_functional(const TrigonalCurve& curve, const SurfacePoint& p) {
  const auto cl = standard_classes(curve.ctx);
  std::vector<Rational> xi;
  for (const auto& m : monomial_basis(cl.H * 2)) xi.push_back(Poly::term(m, 1).evaluate(p.coords));
  return xi;
}

std::vector<Rational> point_h_coordinates(const TrigonalCurve& curve, const SurfacePoint& p) {
  const auto cl = standard_classes(curve.ctx);
  std::vector<Rational> y;
  for (const auto& m : monomial_basis(cl.H)) y.push_back(Poly::term(m, 1).evaluate(p.coords));
  return y;
}

LambdaSystem lambda_space(const TrigonalCurve& curve) {
  const auto& ctx = curve.ctx;
  const auto cl = standard_classes(ctx);
  const DivisorClass two_h = cl.H * 2;

  LambdaSystem out;
  out.ambient = monomial_basis(two_h);

  for (const auto& m : monomial_basis({ctx.n, 0, ctx.g - 4 - ctx.k})) {
    out.generators.push_back(curve.fx1 * Poly::term(m, 1));
  }
  for (const auto& m : monomial_basis({ctx.n, 0, ctx.k - 2})) {
    out.generators.push_back(curve.fxinf * Poly::term(m, 1));
  }

  const auto sol = solve_twisted_membership(two_h, {curve.f, curve.fx1}, 1);
  out.oracle_basis = pivot_columns(sol.vectors);
  out.dim = static_cast<int>(out.oracle_basis.size());

  std::vector<std::vector<Rational>> gen_cols;
  for (const auto& gen : out.generators) gen_cols.push_back(poly_coords(gen, out.ambient));
  out.span_matches_oracle = same_span(gen_cols, out.oracle_basis);

  std::vector<Poly> members;
  for (const auto& v : out.oracle_basis) members.push_back(poly_from_coords(v, out.ambient));
  if (members.empty())
    throw DegeneracyError("lambda_space: empty annihilator system");
  out.fixed = fixed_part(ctx.n, members);
  return out;
}

int dim_T(const TrigonalCurve& curve, const LambdaSystem& lambda) {
  return 3 * curve.ctx.g - 3 - lambda.dim;
}

QvSystem unique_qv(const TrigonalCurve& curve) {
  const auto sol = solve_twisted_membership(qv_class(curve.ctx), {curve.f, curve.fx1}, 1);
  QvSystem out;
  out.basis = sol.basis;
  out.vectors = pivot_columns(sol.vectors);
  out.dim = static_cast<int>(out.vectors.size());
  out.contains_fx1 = subspace_membership(out.vectors, poly_coords(curve.fx1, out.basis)).member;
  out.contains_fxinf =
      curve.ctx.n == 0 &&
      subspace_membership(out.vectors, poly_coords(curve.fxinf, out.basis)).member;
  return out;
}

LambdaPrime lambda_prime(const TrigonalCurve& curve) {
  if (curve.ctx.g <= 2 * curve.ctx.k + 2)
    throw std::invalid_argument("lambda_prime: requires g > 2k + 2");
  const auto sol = solve_twisted_membership(q1_class(curve.ctx), {curve.f, curve.fx1}, 1);
  LambdaPrime out;
  out.basis = sol.basis;
  out.vectors = pivot_columns(sol.vectors);
  out.dim = static_cast<int>(out.vectors.size());
  out.contains_fxinf = subspace_membership(out.vectors, poly_coords(curve.fxinf, out.basis)).member;
  return out;
}

BaseLocusAnalysis base_locus_analysis(const TrigonalCurve& curve, const LambdaSystem& lambda) {
  const auto& ctx = curve.ctx;
  const auto cl = standard_classes(ctx);
  BaseLocusAnalysis out;
  out.fixed_class = lambda.fixed.fixed_class;
  out.residual_class = lambda.fixed.residual_class;
  out.residual_degree_budget = intersect(qv_class(ctx), q1_class(ctx));
  out.qv_q1_coprime = poly_gcd(curve.fx1, curve.fxinf).is_constant();

  // Re-verify the vanishing encoding on every member of the system.
  const DivisorClass target = cl.H * 2 + cl.B;
  out.rv_contained = true;
  const Poly xinf = Poly::variable(kXInf);
  for (const auto& v : lambda.oracle_basis) {
    const Poly s = poly_from_coords(v, lambda.ambient);
    if (!ideal_membership_at_bidegree(s * xinf, {curve.f, curve.fx1}, target).member) {
      out.rv_contained = false;
      break;
    }
  }
  return out;
}

GammaAnalysis gamma_analysis(const TrigonalCurve& curve) {
  const auto& ctx = curve.ctx;
  if (ctx.k != 1) throw std::invalid_argument("gamma_analysis: requires Maroni degree 1");
  const int n = ctx.n;
  const Poly q = curve.fx1;
  if (q.is_zero()) throw DegeneracyError("gamma_analysis: zero ramification section");

  const auto xcoef = [&](int i) { return q.coeff_of(kX1, i).coeff_of(kXInf, 2 - i); };
  const Poly a = xcoef(2);
  const Poly b = xcoef(1);
  const Poly c = xcoef(0);

  GammaAnalysis out;

  // Fixed fiber components (common t-form content).
  const Poly tau = poly_gcd({a, b, c});
  const int tau_deg = std::max(tau.total_degree(), 0);
  const Poly a2 = *exact_div(a, tau);
  const Poly b2 = *exact_div(b, tau);
  const Poly c2 = *exact_div(c, tau);
  const long residual_b = (ctx.g - ctx.k) - tau_deg;
  if (tau_deg > 0) out.split_classes.push_back({n, 0, tau_deg});

  const Poly x1 = Poly::variable(kX1);
  const Poly xinf = Poly::variable(kXInf);

  if (a2.is_zero()) {
    // x_inf divides the residual quadratic; only hand-built curves get here.
    out.irreducible = false;
    out.smooth = false;
    out.split_classes.push_back({n, 1, 0});
    out.split_classes.push_back({n, 1, residual_b});
    std::sort(out.split_classes.begin(), out.split_classes.end(),
              [](const DivisorClass& l, const DivisorClass& r) {
                return std::pair(l.a, l.b) < std::pair(r.a, r.b);
              });
    return out;
  }

  const Poly q2 = a2 * x1 * x1 + b2 * x1 * xinf + c2 * xinf * xinf;
  const Poly disc = b2 * b2 - Rational(4) * a2 * c2;

  std::optional<Poly> beta;  // rational square root of disc, when it exists
  if (disc.is_zero()) {
    beta = Poly{};
    out.nonreduced = true;
  } else {
    const auto info = binary_form_analysis(disc);
    if (!info.is_square) {
      out.irreducible = tau_deg == 0;
      out.smooth = info.squarefree && tau_deg == 0;
      if (tau_deg > 0) out.split_classes.push_back({n, 2, residual_b});
      return out;
    }
    const Poly m = *square_part(disc);
    const Poly residue = *exact_div(disc, m * m);
    if (!residue.is_constant()) throw std::logic_error("gamma_analysis: square part mismatch");
    const Rational cval = residue.is_zero() ? Rational(0) : residue.leading_coeff();
    if (is_perfect_square(cval)) beta = m * rational_sqrt(cval);
  }

  out.irreducible = false;
  out.smooth = false;
  if (beta) {
    // Rational split: 4*a2*q2 = (2*a2*x1 + (b2-beta)*xinf) * (2*a2*x1 + (b2+beta)*xinf);
    // strip the t-content of the first factor and divide out.
    Poly f1 = Rational(2) * a2 * x1 + (b2 - *beta) * xinf;
    const Poly gamma1 = poly_gcd(f1.coeff_of(kX1, 1), f1.coeff_of(kXInf, 1));
    f1 = normalize_primitive(*exact_div(f1, gamma1));
    const auto f2 = exact_div(q2, f1);
    if (!f2) throw std::logic_error("gamma_analysis: factor does not divide");
    const auto d1 = f1.bidegree(n);
    const auto d2 = f2->bidegree(n);
    out.split_classes.push_back({n, d1->first, d1->second});
    out.split_classes.push_back({n, d2->first, d2->second});
    if (out.nonreduced == false && is_associate(f1, *f2)) out.nonreduced = true;
  } else {
    // Conjugate pair over a quadratic extension: equal classes.
    if (residual_b % 2 != 0) throw std::logic_error("gamma_analysis: odd conjugate split");
    out.split_classes.push_back({n, 1, residual_b / 2});
    out.split_classes.push_back({n, 1, residual_b / 2});
  }
  std::sort(out.split_classes.begin(), out.split_classes.end(),
            [](const DivisorClass& l, const DivisorClass& r) {
              return std::pair(l.a, l.b) < std::pair(r.a, r.b);
            });
  return out;
}

}  // namespace trigdef
