#include "eiscoh/kronecker.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace eiscoh {

namespace {

constexpr int kExtraBits = 32;

struct Reduced {
  Complex u1, u2;  // reduced basis of L
  std::complex<double> d1, d2;
};

Reduced reduce_basis(const Lattice& L) {
  using C = std::complex<double>;
  C a(L.w1().re.to_double(), L.w1().im.to_double());
  C b(L.w2().re.to_double(), L.w2().im.to_double());
  // track integer transform so that the multiprecision basis stays exact
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
  Reduced r;
  r.u1 = L.w1() * Real(ma[0]) + L.w2() * Real(ma[1]);
  r.u2 = L.w1() * Real(mb[0]) + L.w2() * Real(mb[1]);
  r.d1 = C(r.u1.re.to_double(), r.u1.im.to_double());
  r.d2 = C(r.u2.re.to_double(), r.u2.im.to_double());
  return r;
}

bool integral_a(const Complex& a, long& n) {
  if (!a.im.is_zero() || !a.re.is_integer()) return false;
  n = mpfr_get_si(a.re.get(), MPFR_RNDN);
  return n >= 1;
}

// Cutoff X_max for terms |x|^k X^(Re a - 1) e^(-X).
double cutoff(int bits, int k, double re_a, double area) {
  double c = std::max(re_a - 1.0, 0.0) + k / 2.0 + 1.0;
  double base = (bits + 24) * std::log(2.0) + 2.0;
  double X = base;
  for (int i = 0; i < 8; ++i)
    X = base + c * std::log(std::max(X, 1.0)) + (k / 2.0) * std::log(std::max(area / M_PI, 1e-300));
  return std::max(X, 8.0);
}

// sum over x = c + w, w in L, x != 0, of theta(w conj r) conj(x)^k X^(-a) Gamma(a, X), X = pi |x|^2 / A
Complex theta_sum(const Lattice& L, const Reduced& R, const Complex& c, const Complex& r, int k, const Complex& a,
                  double xmax, const PrecisionContext& ctx) {
  const Real& A = L.area();
  const Real pa = pi() / A;
  const double area = A.to_double();
  const double radius = std::sqrt(xmax * area / M_PI);
  if (radius > ctx.trunc_radius() * L.shortest_vec())
    throw Error(ErrorKind::Underflow, "lattice sum needs a truncation radius beyond the configured cap");

  // shift c to a nearby representative
  Real cm, cn;
  {
    // coordinates in the reduced basis
    Real det = R.u1.im * R.u2.re - R.u1.re * R.u2.im;
    cm = (c.im * R.u2.re - c.re * R.u2.im) / det;
    cn = (R.u1.im * c.re - R.u1.re * c.im) / det;
  }
  long sm = mpfr_get_si(round(cm).get(), MPFR_RNDN);
  long sn = mpfr_get_si(round(cn).get(), MPFR_RNDN);
  Complex cs = c - R.u1 * Real(sm) - R.u2 * Real(sn);
  bool c_in_L = L.contains(c);

  const Complex rc = conj(r);
  const Complex th1 = lattice_theta(R.u1 * rc, L);
  const Complex th1c = conj(th1);
  const Real u1n = norm(R.u1);
  const Real kappa = exp(-(2L * pa * u1n));

  long an = 0;
  const bool int_a = integral_a(a, an);
  const Complex minus_a = -a;

  std::complex<double> csd(cs.re.to_double(), cs.im.to_double());
  const std::complex<double> d1 = R.d1, d2 = R.d2;
  const double n1 = std::norm(d1);
  const double nspan = radius * std::abs(d1) / area + 2.0;
  const long nlo = static_cast<long>(std::floor(-nspan)) - 1, nhi = static_cast<long>(std::ceil(nspan)) + 1;

  Complex total(0);
  auto term = [&](const Complex& x, const Real& e, const Complex& ph) {
    Real X = pa * norm(x);
    Complex f;
    if (int_a) {
      f = Complex(scaled_upper_gamma_int(an, X, e));
    } else {
      f = upper_gamma(a, X) * pow(X, minus_a);
    }
    Complex t = ph * f;
    if (k) t = t * powi(conj(x), k);
    total += t;
  };

  for (long n = nlo; n <= nhi; ++n) {
    std::complex<double> bn = csd + static_cast<double>(n) * d2;
    double proj = (bn.real() * d1.real() + bn.imag() * d1.imag());
    double dist2 = std::norm(bn) - proj * proj / n1;
    double rem = radius * radius - dist2;
    if (rem < 0) continue;
    double t0 = -proj / n1;
    double hw = std::sqrt(rem / n1);
    long mlo = static_cast<long>(std::floor(t0 - hw)), mhi = static_cast<long>(std::ceil(t0 + hw));
    long m0 = std::clamp(static_cast<long>(std::lround(t0)), mlo, mhi);

    Complex base = cs + R.u2 * Real(n);
    Complex x0 = base + R.u1 * Real(m0);
    Real X0 = pa * norm(x0);
    Real e0 = exp(-X0);
    Complex ph0 = lattice_theta((x0 - c) * rc, L);
    Real two_re = 2L * (x0.re * R.u1.re + x0.im * R.u1.im);

    // walk up
    {
      Complex x = x0;
      Real e = e0;
      Complex ph = ph0;
      Real rho = exp(-(pa * (two_re + u1n)));
      for (long m = m0; m <= mhi; ++m) {
        bool zero = c_in_L && n == 0 && m == 0;
        if (!zero) term(x, e, ph);
        x += R.u1;
        e *= rho;
        rho *= kappa;
        ph *= th1;
      }
    }
    // walk down
    {
      Complex x = x0 - R.u1;
      Real rho = exp(-(pa * (u1n - two_re)));
      Real e = e0 * rho;
      rho *= kappa;
      Complex ph = ph0 * th1c;
      for (long m = m0 - 1; m >= mlo; --m) {
        bool zero = c_in_L && n == 0 && m == 0;
        if (!zero) term(x, e, ph);
        x -= R.u1;
        e *= rho;
        rho *= kappa;
        ph *= th1c;
      }
    }
  }
  return total;
}

bool near(const Complex& s, long v, int bits) {
  Complex d = s - Complex(Real(v));
  return abs(d) < ldexp(Real(1), -bits / 2);
}

// S1 + S2 - corr, the common core of G and E.
Complex core_sum(const KroneckerParams& P, const PrecisionContext& ctx) {
  const Lattice& L = P.L;
  if (P.k < 0) throw Error(ErrorKind::Domain, "k must be non-negative");
  const Complex half_k(Real(P.k) / 2L);
  const Complex a = P.s + half_k;
  const Complex b = Complex(1) - P.s + half_k;
  const bool q_in = L.contains(P.q);
  const bool p_in = L.contains(P.p);
  if (P.k == 0 && q_in && near(P.s, 0, ctx.bits())) throw Error(ErrorKind::Pole, "pole at s = 0 (k = 0, q in L)");
  if (P.k == 0 && p_in && near(P.s, 1, ctx.bits())) throw Error(ErrorKind::Pole, "pole at s = 1 (k = 0, p in L)");

  Reduced R = reduce_basis(L);
  const double area = L.area().to_double();
  const double xa = cutoff(working_prec(), P.k, a.re.to_double(), area);
  const double xb = cutoff(working_prec(), P.k, b.re.to_double(), area);

  Complex S1 = theta_sum(L, R, P.q, P.p, P.k, a, xa, ctx);
  Complex qp = lattice_theta(P.q * conj(P.p), L);
  Complex S2 = conj(qp) * theta_sum(L, R, P.p, P.q, P.k, b, xb, ctx);
  Complex tot = S1 + S2;
  if (P.k == 0) {
    if (q_in) tot -= lattice_theta(-(P.q * conj(P.p)), L) / a;
    if (p_in) tot -= conj(qp) * lattice_theta(-(P.p * conj(P.q)), L) / b;
  }
  return tot;
}

}  // namespace

Complex lattice_theta(const Complex& z, const Lattice& L) {
  return expi(2L * pi() * z.im / L.area());
}

Complex kronecker_G(const KroneckerParams& P, const PrecisionContext& ctx) {
  Complex out;
  {
    PrecGuard pg(ctx.bits() + kExtraBits);
    Complex tot = core_sum(P, ctx);
    Complex a = P.s + Complex(Real(P.k) / 2L);
    Real pa = pi() / P.L.area();
    Complex g = tot * pow(pa, a) * rgamma(a);
    PrecGuard back(ctx.bits());
    out = fit(g);
  }
  return out;
}

Complex completed_E(const KroneckerParams& P, const PrecisionContext& ctx) {
  Complex out;
  {
    PrecGuard pg(ctx.bits() + kExtraBits);
    Complex tot = core_sum(P, ctx);
    Real pa = pi() / P.L.area();
    Complex e = tot * pow(pa, Complex(Real(P.k) / 2L));
    PrecGuard back(ctx.bits());
    out = fit(e);
  }
  return out;
}

Complex G_k_value(int k, const Complex& z, const Lattice& L, const PrecisionContext& ctx) {
  if (k < 1) throw Error(ErrorKind::Domain, "G_k needs k >= 1");
  PrecGuard pg(ctx.bits());
  KroneckerParams P{Complex(Real(k) / 2L), k, Complex(0), z, L};
  return kronecker_G(P, ctx);
}

Complex G_weight2_nonhol(const Complex& z, const Lattice& L, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  KroneckerParams P{Complex(0), 2, Complex(0), z, L};
  Complex g = kronecker_G(P, ctx);
  return g * (pi() / L.area());
}

}  // namespace eiscoh
