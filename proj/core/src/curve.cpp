#include "trigdef/curve.hpp"

#include <nlohmann/json.hpp>

#include "trigdef/rng.hpp"

namespace trigdef {

namespace {
constexpr std::uint64_t kCurveStreamTag = 0x637572766567656eull;  // curve generation stream
constexpr int kMaxResamples = 1000;
constexpr int kCurveFormatVersion = 1;

Poly binary_form_from_coeffs(const std::vector<Rational>& coeffs) {
  // coeffs listed t0-descending: coeffs[0] * t0^d + ... + coeffs[d] * t1^d.
  const int d = static_cast<int>(coeffs.size()) - 1;
  Poly p;
  for (int j = 0; j <= d; ++j) {
    Monomial m;
    m.e[kT0] = d - j;
    m.e[kT1] = j;
    p.set_term(m, coeffs[j]);
  }
  return p;
}

Poly assemble_cubic(const std::array<Poly, 4>& alpha) {
  Poly f;
  for (int i = 0; i <= 3; ++i) {
    Monomial m;
    m.e[kX1] = i;
    m.e[kXInf] = 3 - i;
    f += alpha[i] * Poly::term(m, 1);
  }
  return f;
}

bool acceptable(const std::array<Poly, 4>& alpha, const std::array<int, 4>& degs, const Poly& disc) {
  if (disc.is_zero()) return false;
  const auto info = binary_form_analysis(disc);
  if (!info.squarefree) return false;
  // alpha3 nonconstant: its roots are where B meets C; keep them off the
  // ramification locus.
  if (degs[3] > 0) {
    if (alpha[3].is_zero()) return false;
    if (!poly_gcd(alpha[3], disc).is_constant()) return false;
  }
  return true;
}

}  // namespace

std::array<int, 4> alpha_degrees(const SurfaceContext& ctx) {
  const int d0 = 2 * ctx.g - 2 - 3 * ctx.k;
  return {d0, d0 - ctx.n, d0 - 2 * ctx.n, d0 - 3 * ctx.n};
}

Poly cubic_discriminant(const std::array<Poly, 4>& alpha) {
  const Poly& a = alpha[3];
  const Poly& b = alpha[2];
  const Poly& c = alpha[1];
  const Poly& d = alpha[0];
  return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
         Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
}

TrigonalCurve curve_from_alpha(int g, int k, std::uint64_t seed,
                               const std::array<Poly, 4>& alpha) {
  SurfaceContext ctx(g, k);
  const auto degs = alpha_degrees(ctx);
  for (int i = 0; i <= 3; ++i) {
    if (alpha[i].is_zero()) continue;
    const auto d = alpha[i].bidegree(ctx.n);
    if (!d || d->first != 0 || d->second != degs[i])
      throw std::invalid_argument("curve coefficients: alpha[" + std::to_string(i) +
                                  "] must be a binary form of degree " + std::to_string(degs[i]));
  }
  TrigonalCurve curve{ctx, seed, 0, {}, {}, {}, {}, {}, false};
  curve.alpha = alpha;
  curve.f = assemble_cubic(alpha);
  curve.fx1 = curve.f.derivative(kX1);
  curve.fxinf = curve.f.derivative(kXInf);
  curve.disc = cubic_discriminant(alpha);
  curve.smooth_certified = acceptable(alpha, degs, curve.disc);
  return curve;
}

TrigonalCurve random_curve(int g, int k, std::uint64_t seed) {
  SurfaceContext ctx(g, k);
  const auto degs = alpha_degrees(ctx);
  SplitMix64 rng = derive_stream(seed, kCurveStreamTag);

  for (int attempt = 1; attempt <= kMaxResamples; ++attempt) {
    std::array<Poly, 4> alpha;
    for (int i = 0; i <= 3; ++i) {
      std::vector<Rational> coeffs;
      coeffs.reserve(degs[i] + 1);
      for (int j = 0; j <= degs[i]; ++j) coeffs.push_back(make_rational(rng.uniform_int(-9, 9)));
      alpha[i] = binary_form_from_coeffs(coeffs);
    }
    const Poly disc = cubic_discriminant(alpha);
    if (!acceptable(alpha, degs, disc)) continue;
    TrigonalCurve curve = curve_from_alpha(g, k, seed, alpha);
    curve.attempts = attempt;
    return curve;
  }
  throw GenerationError("random_curve: no acceptable curve for g=" + std::to_string(g) +
                        " k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " within " +
                        std::to_string(kMaxResamples) + " resamples");
}

SectionSpace restriction_model(const TrigonalCurve& curve, const DivisorClass& d) {
  if (!curve.smooth_certified)
    throw DegeneracyError("restriction_model: curve lacks smoothness certificate");
  return restriction_model(curve.ctx, curve.f, d);
}

int maroni_verify(const TrigonalCurve& curve) {
  if (!curve.smooth_certified) throw DegeneracyError("maroni_verify: curve lacks smoothness certificate");
  const int n = curve.ctx.n;
  int last_good = -1;
  for (int j = 0;; ++j) {
    if (j > curve.ctx.g) throw DegeneracyError("maroni_verify: h0(jL) never jumped");
    const auto model = restriction_model(curve.ctx, curve.f, DivisorClass{n, 0, j});
    if (model.dim == j + 1) {
      last_good = j;
      continue;
    }
    if (model.dim < j + 1)
      throw DegeneracyError("maroni_verify: h0(" + std::to_string(j) + "L) = " +
                            std::to_string(model.dim) + " below the pencil bound");
    break;
  }
  return last_good - 1;
}

bool gaussian_not_in_image(const TrigonalCurve& curve) {
  if (!curve.smooth_certified) throw DegeneracyError("gaussian: curve lacks smoothness certificate");
  const int n = curve.ctx.n;
  const int g = curve.ctx.g;
  const int k = curve.ctx.k;
  // Both (1, g-k) and (2, g-k) restrict isomorphically to C, so the test is a
  // plain span question on the surface: is [F_x1] a multiple of x_inf?
  const DivisorClass ambient{n, 2, g - k};
  const auto basis = monomial_basis(ambient);
  std::vector<std::vector<Rational>> image;
  const Poly xinf = Poly::variable(kXInf);
  for (const auto& m : monomial_basis(DivisorClass{n, 1, g - k})) {
    image.push_back(poly_coords(xinf * Poly::term(m, 1), basis));
  }
  return !subspace_membership(image, poly_coords(curve.fx1, basis)).member;
}

std::string curve_to_json(const TrigonalCurve& curve) {
  nlohmann::json j;
  j["format_version"] = kCurveFormatVersion;
  j["g"] = curve.ctx.g;
  j["k"] = curve.ctx.k;
  j["seed"] = std::to_string(curve.seed);
  const auto degs = alpha_degrees(curve.ctx);
  nlohmann::json alpha = nlohmann::json::array();
  for (int i = 0; i <= 3; ++i) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int j0 = degs[i]; j0 >= 0; --j0) {
      Monomial m;
      m.e[kT0] = j0;
      m.e[kT1] = degs[i] - j0;
      const Rational c = curve.alpha[i].coeff(m);
      if (!is_integer(c)) throw std::invalid_argument("curve_to_json: non-integer coefficient");
      coeffs.push_back(c.get_num().get_str());
    }
    alpha.push_back(coeffs);
  }
  j["alpha"] = alpha;
  return j.dump(2) + "\n";
}

TrigonalCurve curve_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != kCurveFormatVersion)
    throw std::invalid_argument("curve_from_json: unsupported format_version");
  const int g = j.at("g").get<int>();
  const int k = j.at("k").get<int>();
  const std::uint64_t seed = std::stoull(j.at("seed").get<std::string>());
  SurfaceContext ctx(g, k);
  const auto degs = alpha_degrees(ctx);
  const auto& alpha_json = j.at("alpha");
  if (!alpha_json.is_array() || alpha_json.size() != 4)
    throw std::invalid_argument("curve_from_json: alpha must have four coefficient lists");
  std::array<Poly, 4> alpha;
  for (int i = 0; i <= 3; ++i) {
    const auto& coeffs = alpha_json.at(i);
    if (static_cast<int>(coeffs.size()) != degs[i] + 1)
      throw std::invalid_argument("curve_from_json: alpha[" + std::to_string(i) +
                                  "] must list " + std::to_string(degs[i] + 1) + " coefficients");
    std::vector<Rational> c;
    for (const auto& entry : coeffs) c.push_back(rational_from_string(entry.get<std::string>()));
    alpha[i] = binary_form_from_coeffs(c);
  }
  return curve_from_alpha(g, k, seed, alpha);
}

}  // namespace trigdef
