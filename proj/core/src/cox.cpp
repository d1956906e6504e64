#include "trigdef/cox.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trigdef {

std::vector<Monomial> monomial_basis(const DivisorClass& d) {
  std::vector<Monomial> basis;
  if (d.a < 0) return basis;
  for (long i = 0; i <= d.a; ++i) {
    const long tdeg = d.b - i * d.n;
    if (tdeg < 0) continue;
    for (long j = 0; j <= tdeg; ++j) {
      Monomial m;
      m.e[kX1] = static_cast<int>(i);
      m.e[kXInf] = static_cast<int>(d.a - i);
      m.e[kT0] = static_cast<int>(j);
      m.e[kT1] = static_cast<int>(tdeg - j);
      basis.push_back(m);
    }
  }
  std::sort(basis.begin(), basis.end(), monomial_greater);
  return basis;
}

std::vector<Rational> poly_coords(const Poly& p, const std::vector<Monomial>& basis) {
  std::map<Monomial, int, MonomialOrder> index;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
  std::vector<Rational> coords(basis.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("poly_coords: term outside basis: " + m.str());
    coords[it->second] = c;
  }
  return coords;
}

Poly poly_from_coords(const std::vector<Rational>& coords, const std::vector<Monomial>& basis) {
  if (coords.size() != basis.size()) throw std::invalid_argument("poly_from_coords: size mismatch");
  Poly p;
  for (std::size_t i = 0; i < basis.size(); ++i) p.set_term(basis[i], coords[i]);
  return p;
}

QMatrix mult_map(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.a < 0 || d2.a < 0) throw std::invalid_argument("mult_map: negative x-degree");
  const auto b1 = monomial_basis(d1);
  const auto b2 = monomial_basis(d2);
  const auto bt = monomial_basis(d1 + d2);
  std::map<Monomial, int, MonomialOrder> index;
  for (int i = 0; i < static_cast<int>(bt.size()); ++i) index.emplace(bt[i], i);
  QMatrix m(static_cast<int>(bt.size()), static_cast<int>(b1.size() * b2.size()));
  int col = 0;
  for (const auto& m1 : b1) {
    for (const auto& m2 : b2) {
      m.at(index.at(m1 * m2), col) = 1;
      ++col;
    }
  }
  return m;
}

std::vector<std::vector<Rational>> ideal_span_columns(const std::vector<Poly>& gens,
                                                      const DivisorClass& d) {
  const auto basis = monomial_basis(d);
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto gdeg = g.bidegree(d.n);
    if (!gdeg) throw std::invalid_argument("ideal span: generator not bihomogeneous");
    const DivisorClass rest{d.n, d.a - gdeg->first, d.b - gdeg->second};
    for (const auto& m : monomial_basis(rest)) {
      cols.push_back(poly_coords(g * Poly::term(m, 1), basis));
    }
  }
  return cols;
}

IdealMembership ideal_membership_at_bidegree(const Poly& s, const std::vector<Poly>& gens,
                                             const DivisorClass& d) {
  const auto sdeg = s.bidegree(d.n);
  if (!s.is_zero() && (!sdeg || sdeg->first != d.a || sdeg->second != d.b))
    throw std::invalid_argument("ideal membership: section bidegree mismatch");

  const auto basis = monomial_basis(d);
  // Track which (generator, monomial) pair each column came from.
  std::vector<std::pair<int, Monomial>> origin;
  std::vector<std::vector<Rational>> cols;
  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    const Poly& g = gens[gi];
    if (g.is_zero()) continue;
    const auto gdeg = g.bidegree(d.n);
    if (!gdeg) throw std::invalid_argument("ideal membership: generator not bihomogeneous");
    const DivisorClass rest{d.n, d.a - gdeg->first, d.b - gdeg->second};
    for (const auto& m : monomial_basis(rest)) {
      cols.push_back(poly_coords(g * Poly::term(m, 1), basis));
      origin.emplace_back(gi, m);
    }
  }

  IdealMembership out;
  const auto res = subspace_membership(cols, poly_coords(s, basis));
  if (!res.member) return out;
  out.member = true;
  out.cofactors.assign(gens.size(), Poly{});
  for (std::size_t c = 0; c < res.coords.size(); ++c) {
    if (res.coords[c] == 0) continue;
    out.cofactors[origin[c].first] += Poly::term(origin[c].second, res.coords[c]);
  }
  return out;
}

ConstrainedSpace solve_twisted_membership(const DivisorClass& d, const std::vector<Poly>& gens,
                                          int twist) {
  ConstrainedSpace out;
  out.basis = monomial_basis(d);
  const DivisorClass target{d.n, d.a + twist, d.b};
  const auto target_basis = monomial_basis(target);
  Monomial xn;
  xn.e[kXInf] = twist;
  const Poly xpow = Poly::term(xn, 1);

  std::vector<std::vector<Rational>> cols;
  for (const auto& m : out.basis) {
    cols.push_back(poly_coords(xpow * Poly::term(m, 1), target_basis));
  }
  const int s_count = static_cast<int>(cols.size());
  auto span = ideal_span_columns(gens, target);
  cols.insert(cols.end(), span.begin(), span.end());
  if (cols.empty()) return out;

  const auto kernel = QMatrix::from_columns(cols).kernel_basis();
  for (const auto& v : kernel) {
    std::vector<Rational> s(v.begin(), v.begin() + s_count);
    if (std::all_of(s.begin(), s.end(), [](const Rational& x) { return x == 0; })) continue;
    out.vectors.push_back(std::move(s));
  }
  out.dim = rank_of_columns(out.vectors);
  return out;
}

namespace {

std::vector<std::vector<Rational>> f_multiple_columns(const Poly& f_curve,
                                                      const DivisorClass& ambient,
                                                      const DivisorClass& curve_class,
                                                      const std::vector<Monomial>& ambient_basis) {
  std::vector<std::vector<Rational>> cols;
  const DivisorClass rest = ambient - curve_class;
  for (const auto& m : monomial_basis(rest)) {
    cols.push_back(poly_coords(f_curve * Poly::term(m, 1), ambient_basis));
  }
  return cols;
}

}  // namespace

namespace {

void audit_model(const SurfaceContext& ctx, const SectionSpace& s) {
  const auto classes = standard_classes(ctx);
  const long deg = intersect(s.model_class, classes.C);
  const long rr = deg - ctx.g + 1;
  if (s.dim < std::max<long>(rr, 0))
    throw DegeneracyError("restriction_model: dimension below the Riemann-Roch bound");
  if (deg > 2 * ctx.g - 2 && s.dim != rr)
    throw DegeneracyError("restriction_model: nonspecial class with special dimension");
}

}  // namespace

SectionSpace restriction_model_twisted(const SurfaceContext& ctx, const Poly& f_curve,
                                       const DivisorClass& d) {
  if (d.n != ctx.n) throw std::invalid_argument("restriction_model: surface mismatch");
  if (d.a < 0) throw std::invalid_argument("restriction_model: negative x-degree");
  const auto classes = standard_classes(ctx);

  // Model sections of D|_C inside H0(S, D + 2A) mod F as the classes
  // divisible by x1^2, computed as
  //   { sigma : x_inf^N sigma in (x1^2, F) at bidegree D + 2A + N*B }.
  // The solution space is monotone in N (V(x1) and V(x_inf) are disjoint);
  // iterate until it stabilizes.
  SectionSpace s;
  s.model_class = d;
  const DivisorClass ambient = d + classes.A * 2;
  if (h012(ambient - classes.C).h1 != 0)
    throw DegeneracyError("restriction_model: 2A twist does not clear the obstruction for class (" +
                          std::to_string(d.a) + "," + std::to_string(d.b) + ")");
  s.twisted = true;
  s.ambient_class = ambient;
  s.ambient_basis = monomial_basis(ambient);
  s.mod_out = f_multiple_columns(f_curve, ambient, classes.C, s.ambient_basis);
  const int mod_rank = rank_of_columns(s.mod_out);

  Monomial x1sq;
  x1sq.e[kX1] = 2;
  const Poly x1_squared = Poly::term(x1sq, 1);

  int prev_dim = -1;
  constexpr int kMaxSaturation = 8;
  for (int N = 1; N <= kMaxSaturation; ++N) {
    const DivisorClass target{ctx.n, ambient.a + N, ambient.b};
    const auto target_basis = monomial_basis(target);
    Monomial xn;
    xn.e[kXInf] = N;
    const Poly xpow = Poly::term(xn, 1);

    std::vector<std::vector<Rational>> cols;
    for (const auto& m : s.ambient_basis) {
      cols.push_back(poly_coords(xpow * Poly::term(m, 1), target_basis));
    }
    const int sigma_count = static_cast<int>(cols.size());
    // x1^2 * H0(D + N*B) block, then F * H0(ambient + N*B - C).
    const DivisorClass vclass{ctx.n, d.a + N, d.b};
    for (const auto& m : monomial_basis(vclass)) {
      cols.push_back(poly_coords(x1_squared * Poly::term(m, 1), target_basis));
    }
    for (const auto& m : monomial_basis(target - classes.C)) {
      cols.push_back(poly_coords(f_curve * Poly::term(m, 1), target_basis));
    }

    std::vector<std::vector<Rational>> sigma_vectors = s.mod_out;
    for (const auto& v : QMatrix::from_columns(cols).kernel_basis()) {
      sigma_vectors.emplace_back(v.begin(), v.begin() + sigma_count);
    }
    const int dim = rank_of_columns(sigma_vectors) - mod_rank;
    if (dim == prev_dim) break;
    prev_dim = dim;
    s.model_vectors = std::move(sigma_vectors);
  }
  s.dim = prev_dim;
  audit_model(ctx, s);
  return s;
}

SectionSpace restriction_model(const SurfaceContext& ctx, const Poly& f_curve,
                               const DivisorClass& d) {
  if (d.n != ctx.n) throw std::invalid_argument("restriction_model: surface mismatch");
  if (d.a < 0) throw std::invalid_argument("restriction_model: negative x-degree");
  const auto classes = standard_classes(ctx);

  const DivisorClass dc = d - classes.C;
  if (h012(dc).h1 != 0) return restriction_model_twisted(ctx, f_curve, d);

  // Restriction from H0(S, D) is onto: quotient model.
  SectionSpace s;
  s.model_class = d;
  s.ambient_class = d;
  s.ambient_basis = monomial_basis(d);
  s.mod_out = f_multiple_columns(f_curve, d, classes.C, s.ambient_basis);
  for (std::size_t i = 0; i < s.ambient_basis.size(); ++i) {
    std::vector<Rational> e(s.ambient_basis.size());
    e[i] = 1;
    s.model_vectors.push_back(std::move(e));
  }
  s.dim = static_cast<int>(s.ambient_basis.size()) - rank_of_columns(s.mod_out);
  audit_model(ctx, s);
  return s;
}

FixedPart fixed_part(int n, const std::vector<Poly>& sections) {
  bool any = false;
  std::optional<std::pair<int, int>> deg;
  for (const auto& p : sections) {
    if (p.is_zero()) continue;
    any = true;
    const auto d = p.bidegree(n);
    if (!d) throw std::invalid_argument("fixed_part: section not bihomogeneous");
    if (!deg) deg = d;
    if (*deg != *d) throw std::invalid_argument("fixed_part: mixed bidegrees");
  }
  if (!any) throw std::invalid_argument("fixed_part: all sections zero");

  FixedPart out;
  out.gcd = poly_gcd(sections);
  const auto gdeg = out.gcd.bidegree(n);
  if (!gdeg) throw std::logic_error("fixed_part: gcd of bihomogeneous sections not bihomogeneous");
  out.fixed_class = {n, gdeg->first, gdeg->second};
  out.residual_class = {n, deg->first - gdeg->first, deg->second - gdeg->second};
  return out;
}

}  // namespace trigdef
