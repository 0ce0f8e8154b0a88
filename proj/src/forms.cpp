#include "eiscoh/forms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace eiscoh {

namespace {

struct Point {
  QuadElem x;
  double mag;
};

// Nonzero elements of I with |x| <= R.
std::vector<Point> ideal_points(const FracIdeal& I, double R) {
  using C = std::complex<double>;
  PrecGuard pg(64);
  QuadElem e1 = I.b1(), e2 = I.b2();
  Complex E1 = e1.embed(), E2 = e2.embed();
  C a(E1.re.to_double(), E1.im.to_double()), b(E2.re.to_double(), E2.im.to_double());
  long ma[2] = {1, 0}, mb[2] = {0, 1};
  for (int it = 0; it < 500; ++it) {
    if (std::norm(b) < std::norm(a)) {
      std::swap(a, b);
      std::swap(ma, mb);
    }
    double mu = std::round((a.real() * b.real() + a.imag() * b.imag()) / std::norm(a));
    if (mu == 0) break;
    b -= mu * a;
    mb[0] -= static_cast<long>(mu) * ma[0];
    mb[1] -= static_cast<long>(mu) * ma[1];
  }
  QuadElem u1 = e1 * Rat(ma[0]) + e2 * Rat(ma[1]);
  QuadElem u2 = e1 * Rat(mb[0]) + e2 * Rat(mb[1]);
  double area = std::abs(a.imag() * b.real() - a.real() * b.imag());
  long M = static_cast<long>(R * std::abs(b) / area) + 1;
  long N = static_cast<long>(R * std::abs(a) / area) + 1;
  std::vector<Point> out;
  for (long m = -M; m <= M; ++m)
    for (long n = -N; n <= N; ++n) {
      if (m == 0 && n == 0) continue;
      double mag = std::abs(static_cast<double>(m) * a + static_cast<double>(n) * b);
      if (mag > R) continue;
      out.push_back({u1 * Rat(m) + u2 * Rat(n), mag});
    }
  std::sort(out.begin(), out.end(), [](const Point& x, const Point& y) { return x.mag < y.mag; });
  return out;
}

constexpr size_t kMaxPairs = 400000;

}  // namespace

FracIdeal dual_lattice(const FracIdeal& a) {
  const long d = a.d();
  QuadElem inv_sqrt = QuadElem::sqrt_d(d) * Rat(1, d);
  return a.inverse() * inv_sqrt;
}

Lattice dual_lattice(const Lattice& L) {
  // rows (2 Re w, -2 Im w): 2 Re(w u) for u = x + i y
  const Complex& w1 = L.w1();
  const Complex& w2 = L.w2();
  Real a = 2L * w1.re, b = -(2L * w1.im), c = 2L * w2.re, d = -(2L * w2.im);
  Real det = a * d - b * c;
  // columns of the inverse
  Complex u1(d / det, -c / det), u2(-b / det, a / det);
  Real orient = u1.im * u2.re - u1.re * u2.im;
  if (orient.sign() < 0) std::swap(u1, u2);
  return Lattice(u1, u2);
}

EhatEvaluator::EhatEvaluator(const HeckeCharacter& chi, const FracIdeal& a, const Complex& s,
                             const PrecisionContext& ctx, double extra_cutoff)
    : chi_(chi), a_(a), s_(s), ctx_(ctx), extra_(extra_cutoff) {
  PrecGuard pg(ctx.bits());
  Complex na = pow(Real(a.norm()), s);
  prefactor_ = na / chi(a);
  Lattice L = embed(a, ctx);
  pairing_ = L.pairing();
  gz_ = kronecker_G({Complex(1) + s, 2, Complex(0), Complex(0), L}, ctx);
  gzb_ = kronecker_G({s, 2, Complex(0), Complex(0), L}, ctx);
}

void EhatEvaluator::prepare(const Real& v) {
  if (prepared_ && v == v_) return;
  if (v.sign() <= 0) throw Error(ErrorKind::Domain, "height v must be positive");
  PrecGuard pg(ctx_.bits());
  const double vd = v.to_double();
  const double xmax = (ctx_.bits() + 40) * std::log(2.0) + 10.0 + extra_;
  const double T = xmax / (4 * M_PI * vd);
  FracIdeal dual = dual_lattice(a_);
  // smallest nonzero lengths bound the ranges
  // shortest^2 <= N(I) sqrt|d| / sqrt 3
  const double rd = std::sqrt(static_cast<double>(-a_.d()));
  auto cs_small = ideal_points(a_, 1.01 * std::sqrt(a_.norm().get_d() * rd));
  auto ds_small = ideal_points(dual, 1.01 * std::sqrt(dual.norm().get_d() * rd));
  if (cs_small.empty() || ds_small.empty()) throw Error(ErrorKind::Internal, "failed to find short lattice vectors");
  double cmin = cs_small.front().mag, dmin = ds_small.front().mag;
  // lattice point counts ~ pi R^2 / covolume; covolume of a is N(a) sqrt|d| / 2
  const double cov_a = a_.norm().get_d() * rd / 2, cov_dual = dual.norm().get_d() * rd / 2;
  const double rc = T / dmin, rdual = T / cmin;
  if (M_PI * rc * rc / cov_a > kMaxPairs || M_PI * rdual * rdual / cov_dual > kMaxPairs)
    throw Error(ErrorKind::Underflow, "Fourier expansion needs too many terms at this height");
  auto cs = ideal_points(a_, rc * 1.0000001);
  auto ds = ideal_points(dual, rdual * 1.0000001);

  std::map<Rat, std::pair<Complex, Complex>> kcache;
  list_.clear();
  const Complex nu1 = s_ - Complex(1), nu2 = s_ + Complex(1);
  for (const auto& c : cs) {
    double lim = T / c.mag;
    Complex ce = c.x.embed();
    Rat nc = c.x.norm();
    for (const auto& d : ds) {
      if (d.mag > lim) break;
      if (list_.size() > kMaxPairs)
        throw Error(ErrorKind::Underflow, "Fourier expansion needs too many terms at this height");
      Rat nd = d.x.norm();
      Rat key = nc * nd;
      auto it = kcache.find(key);
      if (it == kcache.end()) {
        Real x = 4L * pi() * sqrt(Real(key)) * v;
        it = kcache.emplace(key, std::make_pair(bessel_k(nu1, x, ctx_), bessel_k(nu2, x, ctx_))).first;
      }
      Complex de = d.x.embed();
      Real ratio = sqrt(Real(Rat(nd / nc)));
      Term t;
      t.cd = ce * de;
      t.wz = de * de * pow(ratio, nu1) * it->second.first;
      Complex cb = conj(ce);
      t.wzb = cb * cb * pow(ratio, nu2) * it->second.second;
      list_.push_back(std::move(t));
    }
  }
  terms_ = list_.size();
  v_ = v;
  prepared_ = true;
}

EhatValue EhatEvaluator::constant_terms(const Real& v) const {
  PrecGuard pg(ctx_.bits());
  Complex cz = pow(v, s_) * gz_;
  Complex two_pi_i_over_D = Complex(Real(0), 2L * pi()) / pairing_;
  Complex czb = -(two_pi_i_over_D * gzb_ * pow(v, -s_) / (Complex(1) + s_));
  return {prefactor_ * cz, prefactor_ * czb};
}

EhatValue EhatEvaluator::at(const H3Point& u) {
  prepare(u.v);
  PrecGuard pg(ctx_.bits());
  // P = 2i (2 pi)^(s+2) v / (D Gamma(s+2))
  Complex s2 = s_ + Complex(2);
  Complex P = Complex(Real(0), Real(2)) * pow(2L * pi(), s2) * u.v / (pairing_ * gamma(s2));
  Complex sz(0), szb(0);
  Real four_pi = 4L * pi();
  for (const auto& t : list_) {
    Complex w = t.cd * u.z;
    Complex e = expi(four_pi * w.re);
    sz += t.wz * e;
    szb += t.wzb * e;
  }
  EhatValue c = constant_terms(u.v);
  return {c.dz - prefactor_ * P * sz, c.dzbar - prefactor_ * P * szb};
}

EhatValue ehat_components(const HeckeCharacter& chi, const FracIdeal& a, const H3Point& u, const Complex& s,
                          const PrecisionContext& ctx) {
  EhatEvaluator ev(chi, a, s, ctx);
  return ev.at(u);
}

EhatValue torus_average(EhatEvaluator& ev, long d, const Real& v, int n) {
  PrecGuard pg(working_prec());
  Complex om = QuadElem::omega(d).embed();
  Complex sz(0), szb(0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Complex z = Complex(Real(j) / Real(n)) + om * (Real(k) / Real(n));
      EhatValue e = ev.at({z, v});
      sz += e.dz;
      szb += e.dzbar;
    }
  Real nn(static_cast<long>(n) * n);
  return {sz / nn, szb / nn};
}

RestrictionVector restriction_vector_at(const HeckeCharacter& chi, const FracIdeal& a, const FracIdeal& cusp,
                                        const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  const auto& F = *chi.field();
  FracIdeal ainv = a.inverse();
  FracIdeal cb = cusp.conj();
  RestrictionVector r;
  r.cusp_class = F.class_of(cusp);
  r.coeff_dz = chi(cusp * ainv) * G2_ideal(a * cusp.inverse(), ctx);
  r.coeff_dzbar = -(chi(cb * ainv) * G2_ideal(a * cb.inverse(), ctx));
  return r;
}

RestrictionVector restriction_vector(const HeckeCharacter& chi, const FracIdeal& a, int cusp_class,
                                     const PrecisionContext& ctx) {
  return restriction_vector_at(chi, a, chi.field()->class_reps().at(cusp_class), ctx);
}

RestrictionVector restriction_vector_E(const FieldContext& F, const FracIdeal& a, int cusp_class) {
  int ca = F.class_of(a);
  RestrictionVector r;
  r.cusp_class = cusp_class;
  r.coeff_dz = Complex(ca == cusp_class ? 1 : 0);
  r.coeff_dzbar = Complex(ca == F.conj_class(cusp_class) ? -1 : 0);
  return r;
}

Real ehat_from_E_relation_check(const HeckeCharacter& chi, const FracIdeal& a, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  const auto& F = *chi.field();
  const auto& reps = F.class_reps();
  // fixed principal multiplier so the cusp ideal is not the stored representative
  QuadElem beta = QuadElem(F.d(), 1, 0) + F.tau();
  Real worst(0);
  for (int c = 0; c < F.h(); ++c) {
    RestrictionVector lhs = restriction_vector_at(chi, a, reps[c] * beta, ctx);
    Complex rz(0), rzb(0);
    for (int i = 0; i < F.h(); ++i) {
      Complex coef = chi(reps[i] * a.inverse()) * G2_ideal(reps[i].inverse() * a, ctx) / Real(kUnitWeight);
      RestrictionVector e = restriction_vector_E(F, reps[i], c);
      // unnormalized E restricts to w times the normalized vector
      rz += coef * e.coeff_dz * Real(kUnitWeight);
      rzb += coef * e.coeff_dzbar * Real(kUnitWeight);
    }
    Real r1 = abs(lhs.coeff_dz - rz), r2 = abs(lhs.coeff_dzbar - rzb);
    if (r1 > worst) worst = r1;
    if (r2 > worst) worst = r2;
  }
  return worst;
}

}  // namespace eiscoh
