#include "trigdef/surface.hpp"

#include <stdexcept>
#include <string>

namespace trigdef {

namespace {
void require_same_n(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.n != d2.n)
    throw std::invalid_argument("divisor classes live on different Hirzebruch surfaces (n=" +
                                std::to_string(d1.n) + " vs n=" + std::to_string(d2.n) + ")");
}
}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same_n(*this, o);
  return {n, a + o.a, b + o.b};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  require_same_n(*this, o);
  return {n, a - o.a, b - o.b};
}

long intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same_n(d1, d2);
  return -static_cast<long>(d1.n) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
}

DivisorClass canonical_class(int n) {
  if (n < 0) throw std::invalid_argument("canonical_class: n must be nonnegative");
  return {n, -2, -(n + 2)};
}

Positivity positivity(const DivisorClass& d) {
  const long na = static_cast<long>(d.n) * d.a;
  Positivity p;
  p.ample = d.a > 0 && d.b > na;
  p.nef = d.a >= 0 && d.b >= na && na >= 0;
  p.big_and_nef = d.b >= na && na > 0;
  return p;
}

long chi(const DivisorClass& d) {
  const DivisorClass dk = d - canonical_class(d.n);
  return 1 + intersect(d, dk) / 2;
}

long h0(const DivisorClass& d) {
  if (d.a < 0) return 0;
  long sum = 0;
  for (long i = 0; i <= d.a; ++i) {
    const long m = d.b - i * d.n + 1;
    if (m > 0) sum += m;
  }
  return sum;
}

H012 h012(const DivisorClass& d) {
  H012 h;
  h.h0 = h0(d);
  h.h2 = h0(canonical_class(d.n) - d);
  h.h1 = h.h0 + h.h2 - chi(d);
  if (h.h1 < 0) throw std::logic_error("h012: negative h1");
  return h;
}

std::vector<int> maroni_range(int g) {
  if (g < 6) throw std::invalid_argument("maroni_range: genus must be at least 6");
  const int lo = (g - 4 + 2) / 3;  // ceil((g-4)/3), g >= 6 so g-4 > 0
  const int hi = (g - 2) / 2;
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

SurfaceContext::SurfaceContext(int g, int k) : g(g), k(k), n(g - 2 - 2 * k) {
  const auto range = maroni_range(g);
  if (k < range.front() || k > range.back())
    throw std::invalid_argument("Maroni degree " + std::to_string(k) +
                                " out of range for genus " + std::to_string(g));
}

StandardClasses standard_classes(const SurfaceContext& ctx) {
  const int n = ctx.n;
  StandardClasses s;
  s.B = {n, 1, 0};
  s.R = {n, 0, 1};
  s.A = {n, 1, n};
  s.H = {n, 1, ctx.g - 2 - ctx.k};
  s.C = {n, 3, 2 * ctx.g - 2 - 3 * ctx.k};
  s.K = canonical_class(n);
  return s;
}

}  // namespace trigdef
