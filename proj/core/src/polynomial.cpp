#include "trigdef/polynomial.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace trigdef {

const char* const kVarNames[kNumVars] = {"t0", "t1", "xinf", "x1"};

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kNumVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) {
    r.e[i] = e[i] - o.e[i];
    if (r.e[i] < 0) throw std::invalid_argument("monomial division not exact");
  }
  return r;
}

int Monomial::total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int v : {kX1, kXInf, kT0, kT1}) {
    if (e[v] == 0) continue;
    if (!first) os << "*";
    os << kVarNames[v];
    if (e[v] > 1) os << "^" << e[v];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
  for (int v : {kX1, kXInf, kT0, kT1}) {
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
  }
  return false;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  return monomial_greater(a, b);
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  p.set_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(Var v) {
  Monomial m;
  m.e[v] = 1;
  return term(m, 1);
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.set_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_term(const Monomial& m, const Rational& c) {
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      const Monomial m = m1 * m2;
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(m, c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (c == 0) return Poly{};
  Poly r = *this;
  for (auto& [m, cc] : r.terms_) cc *= c;
  return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::derivative(Var v) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[v] == 0) continue;
    Monomial dm = m;
    dm.e[v] -= 1;
    r.set_term(dm, c * m.e[v]);
  }
  return r;
}

Rational Poly::evaluate(const std::array<Rational, kNumVars>& x) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kNumVars; ++v) {
      for (int i = 0; i < m.e[v]; ++i) t *= x[v];
    }
    acc += t;
  }
  return acc;
}

int Poly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[v]);
  return d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Poly::involves(Var v) const { return degree_in(v) > 0; }

Poly Poly::coeff_of(Var v, int d) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.e[v] != d) continue;
    Monomial mm = m;
    mm.e[v] = 0;
    r.set_term(mm, c);
  }
  return r;
}

std::optional<std::pair<int, int>> Poly::bidegree(int n) const {
  if (terms_.empty()) return std::nullopt;
  std::optional<std::pair<int, int>> deg;
  for (const auto& [m, c] : terms_) {
    const int a = m.e[kXInf] + m.e[kX1];
    const int b = m.e[kT0] + m.e[kT1] + n * m.e[kX1];
    if (!deg) {
      deg = {a, b};
    } else if (deg->first != a || deg->second != b) {
      return std::nullopt;
    }
  }
  return deg;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    const Rational a = abs(c);
    const bool unit = (a == 1) && !(m == Monomial{});
    if (!unit) os << to_string(a);
    if (!(m == Monomial{})) {
      if (!unit) os << "*";
      os << m.str();
    }
    first = false;
  }
  return os.str();
}

PrimitiveDecomp primitive_decompose(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("primitive_decompose: zero polynomial");
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    Integer d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (p.leading_coeff() < 0) content = -content;
  PrimitiveDecomp out;
  out.content = content;
  out.primitive = p * (1 / content);
  return out;
}

Poly normalize_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return primitive_decompose(p).primitive;
}

std::optional<Poly> exact_div(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero");
  Poly rem = p;
  Poly quot;
  const Monomial& qm = q.leading_monomial();
  const Rational& qc = q.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!qm.divides(rm)) return std::nullopt;
    const Poly t = Poly::term(rm / qm, rem.leading_coeff() / qc);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

Poly pseudo_rem(const Poly& a, const Poly& b, Var v) {
  const int db = b.degree_in(v);
  if (db < 0) throw std::invalid_argument("pseudo_rem: zero divisor");
  const Poly lb = b.coeff_of(v, db);
  Poly r = a;
  int dr = r.degree_in(v);
  while (!r.is_zero() && (dr = r.degree_in(v)) >= db) {
    const Poly lr = r.coeff_of(v, dr);
    Monomial shift;
    shift.e[v] = dr - db;
    r = lb * r - Poly::term(shift, 1) * lr * b;
  }
  return r;
}

namespace {

// Highest variable (in the fixed order x1 > xinf > t0 > t1) occurring in
// either polynomial; nullopt when both are constants.
std::optional<Var> main_variable(const Poly& p, const Poly& q) {
  for (Var v : {kX1, kXInf, kT0, kT1}) {
    if (p.involves(v) || q.involves(v)) return v;
  }
  return std::nullopt;
}

Poly gcd_rec(const Poly& p, const Poly& q);

// Gcd of the v-coefficients of p (a polynomial in the remaining variables).
Poly content_in(const Poly& p, Var v) {
  Poly c;
  const int d = p.degree_in(v);
  for (int i = 0; i <= d; ++i) {
    const Poly ci = p.coeff_of(v, i);
    if (ci.is_zero()) continue;
    c = c.is_zero() ? normalize_primitive(ci) : gcd_rec(c, ci);
    if (c.is_constant()) break;
  }
  return c;
}

Poly gcd_rec(const Poly& p, const Poly& q) {
  if (p.is_zero()) return normalize_primitive(q);
  if (q.is_zero()) return normalize_primitive(p);
  const auto v = main_variable(p, q);
  if (!v) return Poly::constant(1);

  const Poly cp = content_in(p, *v);
  const Poly cq = content_in(q, *v);
  const Poly c = gcd_rec(cp, cq);
  Poly a = normalize_primitive(*exact_div(p, cp));
  Poly b = normalize_primitive(*exact_div(q, cq));
  if (a.degree_in(*v) < b.degree_in(*v)) std::swap(a, b);

  // Primitive PRS on the v-primitive parts.
  while (!b.is_zero() && b.degree_in(*v) > 0) {
    Poly r = pseudo_rem(a, b, *v);
    a = b;
    if (r.is_zero()) {
      b = Poly{};
    } else {
      b = normalize_primitive(*exact_div(r, content_in(r, *v)));
    }
  }
  // A nonzero v-free tail means the v-primitive parts are coprime.
  if (!b.is_zero()) a = Poly::constant(1);
  return normalize_primitive(c * a);
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
  return gcd_rec(p, q);
}

Poly poly_gcd(const std::vector<Poly>& ps) {
  Poly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = any ? poly_gcd(g, p) : normalize_primitive(p);
    any = true;
    if (g.is_constant()) break;
  }
  if (!any) throw std::invalid_argument("poly_gcd: all inputs zero");
  return g;
}

bool is_associate(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize_primitive(p) == normalize_primitive(q);
}

namespace {

void require_binary_form(const Poly& h) {
  if (h.is_zero()) throw std::invalid_argument("binary form: zero input");
  int deg = -1;
  for (const auto& [m, c] : h.terms()) {
    if (m.e[kXInf] != 0 || m.e[kX1] != 0)
      throw std::invalid_argument("binary form: input involves x variables");
    if (deg < 0) deg = m.total_degree();
    if (m.total_degree() != deg) throw std::invalid_argument("binary form: inhomogeneous input");
  }
}

// Yun squarefree decomposition of a univariate polynomial in t0 (t1 absent).
// The w/y/z triple is kept exactly consistent: both w and z are divided by
// the same gcd at every step, so scalar normalization of the gcds is benign.
std::vector<SquarefreeFactor> yun_univariate(const Poly& u) {
  std::vector<SquarefreeFactor> out;
  if (u.degree_in(kT0) <= 0) return out;
  const Poly du = u.derivative(kT0);
  const Poly a = poly_gcd(u, du);
  Poly w = *exact_div(u, a);
  Poly y = *exact_div(du, a);
  Poly z = y - w.derivative(kT0);
  int i = 1;
  const int cap = u.degree_in(kT0) + 2;
  while (w.degree_in(kT0) > 0) {
    if (i > cap) throw std::logic_error("yun: no progress");
    Poly f = poly_gcd(w, z);  // z may be zero; gcd(w, 0) is w normalized
    if (f.degree_in(kT0) > 0) out.push_back({f, i});
    w = *exact_div(w, f);
    y = *exact_div(z, f);
    z = y - w.derivative(kT0);
    ++i;
  }
  return out;
}

Poly homogenize_t(const Poly& u, int degree) {
  Poly h;
  for (const auto& [m, c] : u.terms()) {
    Monomial mm = m;
    mm.e[kT1] = degree - m.e[kT0];
    h.set_term(mm, c);
  }
  return h;
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& h) {
  require_binary_form(h);
  int min_t0 = h.degree_in(kT0) < 0 ? 0 : h.degree_in(kT0);
  int max_t0 = 0;
  for (const auto& [m, c] : h.terms()) {
    min_t0 = std::min(min_t0, m.e[kT0]);
    max_t0 = std::max(max_t0, m.e[kT0]);
  }
  const int deg = h.total_degree();
  const int t1_mult = deg - max_t0;

  std::vector<SquarefreeFactor> out;
  if (min_t0 > 0) out.push_back({Poly::variable(kT0), min_t0});
  if (t1_mult > 0) out.push_back({Poly::variable(kT1), t1_mult});

  // Strip the variable powers and dehomogenize; the reduced part has nonzero
  // constant term and full t0-degree, so homogenizing factors back is safe.
  Poly core;
  for (const auto& [m, c] : h.terms()) {
    Monomial mm = m;
    mm.e[kT0] -= min_t0;
    mm.e[kT1] = 0;
    core.set_term(mm, c);
  }
  for (const auto& f : yun_univariate(core)) {
    out.push_back({homogenize_t(f.factor, f.factor.degree_in(kT0)), f.multiplicity});
  }
  return out;
}

BinaryFormInfo binary_form_analysis(const Poly& h) {
  require_binary_form(h);
  BinaryFormInfo info;
  info.degree = h.total_degree();

  if (info.degree == 0) {
    info.squarefree = true;
    info.is_square = true;
    return info;
  }

  Poly g = poly_gcd(h, h.derivative(kT0));
  g = poly_gcd(g, h.derivative(kT1));
  info.squarefree = g.is_constant();

  bool square = true;
  int factored_degree = 0;
  for (const auto& f : squarefree_decomposition(h)) {
    factored_degree += f.multiplicity * f.factor.total_degree();
    if (f.multiplicity % 2 != 0) square = false;
  }
  assert(factored_degree == info.degree);
  info.is_square = square;
  return info;
}

std::optional<Poly> square_part(const Poly& h) {
  require_binary_form(h);
  Poly s = Poly::constant(1);
  for (const auto& f : squarefree_decomposition(h)) {
    if (f.multiplicity % 2 != 0) return std::nullopt;
    for (int i = 0; i < f.multiplicity / 2; ++i) s = s * f.factor;
  }
  return normalize_primitive(s);
}

bool is_perfect_square(const Rational& c) {
  if (c < 0) return false;
  if (c == 0) return true;
  Integer num = c.get_num(), den = c.get_den();
  return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

Rational rational_sqrt(const Rational& c) {
  if (!is_perfect_square(c)) throw std::invalid_argument("rational_sqrt: not a perfect square");
  Integer num = c.get_num(), den = c.get_den(), rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

}  // namespace trigdef
