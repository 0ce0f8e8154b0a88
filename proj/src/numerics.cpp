#include "eiscoh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace eiscoh {

namespace {
thread_local int g_prec = 384;
constexpr mpfr_rnd_t RND = MPFR_RNDN;
}  // namespace

PrecisionContext::PrecisionContext(int bits, long double tol, double trunc_radius)
    : bits_(bits), tol_(tol), trunc_radius_(trunc_radius) {
  if (bits < 96) throw Error(ErrorKind::Usage, "precision must be at least 96 bits");
  long double floor_tol = std::ldexp(1.0L, -(bits - guard_bits));
  if (tol_ < 0) tol_ = std::max(1e-30L, floor_tol);
  if (tol_ < floor_tol)
    throw Error(ErrorKind::Underflow, "tolerance below 2^-(bits-64) at " + std::to_string(bits) + " bits");
  if (trunc_radius_ < 3) throw Error(ErrorKind::Usage, "trunc_radius must be at least 3");
}

PrecisionContext PrecisionContext::with_bits(int bits) const {
  return PrecisionContext(bits, tol_, trunc_radius_);
}

int working_prec() { return g_prec; }

PrecGuard::PrecGuard(int bits) : saved_(g_prec) { g_prec = bits; }
PrecGuard::~PrecGuard() { g_prec = saved_; }

// ---- Real ----

Real::Real() { mpfr_init2(v_, g_prec); mpfr_set_zero(v_, 1); }
Real::Real(int v) { mpfr_init2(v_, g_prec); mpfr_set_si(v_, v, RND); }
Real::Real(long v) { mpfr_init2(v_, g_prec); mpfr_set_si(v_, v, RND); }
Real::Real(double v) { mpfr_init2(v_, g_prec); mpfr_set_d(v_, v, RND); }
Real::Real(const mpz_class& v) { mpfr_init2(v_, g_prec); mpfr_set_z(v_, v.get_mpz_t(), RND); }
Real::Real(const mpq_class& v) { mpfr_init2(v_, g_prec); mpfr_set_q(v_, v.get_mpq_t(), RND); }
Real::Real(const std::string& dec) {
  mpfr_init2(v_, g_prec);
  if (mpfr_set_str(v_, dec.c_str(), 10, RND) != 0) throw Error(ErrorKind::Usage, "bad number: " + dec);
}
Real::Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, RND); }
Real::Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, RND);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, RND); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, RND); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, RND); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, RND); return *this; }
Real& Real::operator*=(long o) { mpfr_mul_si(v_, v_, o, RND); return *this; }
Real& Real::operator/=(long o) { mpfr_div_si(v_, v_, o, RND); return *this; }
Real Real::operator-() const { Real r; mpfr_neg(r.get(), v_, RND); return r; }

Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.get(), a.get(), b.get(), RND); return r; }
Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.get(), a.get(), b.get(), RND); return r; }
Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.get(), a.get(), b.get(), RND); return r; }
Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.get(), a.get(), b.get(), RND); return r; }
Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.get(), a.get(), b, RND); return r; }
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.get(), a.get(), b, RND); return r; }
Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.get(), a.get(), b, RND); return r; }
Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.get(), a.get(), b, RND); return r; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()); }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()); }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()); }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()); }

Real pi() { Real r; mpfr_const_pi(r.get(), RND); return r; }
Real log2_const() { Real r; mpfr_const_log2(r.get(), RND); return r; }
Real sqrt(const Real& x) { Real r; mpfr_sqrt(r.get(), x.get(), RND); return r; }
Real exp(const Real& x) { Real r; mpfr_exp(r.get(), x.get(), RND); return r; }
Real log(const Real& x) { Real r; mpfr_log(r.get(), x.get(), RND); return r; }
Real sin(const Real& x) { Real r; mpfr_sin(r.get(), x.get(), RND); return r; }
Real cos(const Real& x) { Real r; mpfr_cos(r.get(), x.get(), RND); return r; }
Real cosh(const Real& x) { Real r; mpfr_cosh(r.get(), x.get(), RND); return r; }
Real sinh(const Real& x) { Real r; mpfr_sinh(r.get(), x.get(), RND); return r; }
Real abs(const Real& x) { Real r; mpfr_abs(r.get(), x.get(), RND); return r; }
Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.get(), y.get(), x.get(), RND); return r; }
Real pow(const Real& x, const Real& y) { Real r; mpfr_pow(r.get(), x.get(), y.get(), RND); return r; }
Real floor(const Real& x) { Real r; mpfr_floor(r.get(), x.get()); return r; }
Real round(const Real& x) { Real r; mpfr_round(r.get(), x.get()); return r; }
Real factorial(unsigned long n) { Real r; mpfr_fac_ui(r.get(), n, RND); return r; }
Real ldexp(const Real& x, long e) { Real r; mpfr_mul_2si(r.get(), x.get(), e, RND); return r; }

Real fit(const Real& x) {
  Real r;
  mpfr_set(r.get(), x.get(), RND);
  return r;
}

mpz_class to_mpz(const Real& x) {
  mpz_class z;
  Real r = round(x);
  mpfr_get_z(z.get_mpz_t(), r.get(), RND);
  return z;
}

int decimal_digits(int bits) { return std::max(10, static_cast<int>((bits - PrecisionContext::guard_bits) * 0.30103)); }

std::string to_decimal(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// ---- Complex ----

Complex& Complex::operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
Complex& Complex::operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
Complex& Complex::operator*=(const Complex& o) {
  Real a = re * o.re - im * o.im;
  Real b = re * o.im + im * o.re;
  re = std::move(a);
  im = std::move(b);
  return *this;
}
Complex& Complex::operator*=(const Real& o) { re *= o; im *= o; return *this; }
Complex& Complex::operator/=(const Complex& o) { *this = *this / o; return *this; }

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "complex division by zero");
  Real n = norm(b);
  return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

Complex fit(const Complex& z) { return Complex(fit(z.re), fit(z.im)); }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { Real r; mpfr_hypot(r.get(), z.re.get(), z.im.get(), RND); return r; }
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex I_unit() { return Complex(Real(0), Real(1)); }

Complex expi(const Real& t) {
  Complex r;
  mpfr_sin_cos(r.im.get(), r.re.get(), t.get(), RND);
  return r;
}
Complex exp(const Complex& z) {
  Complex r = expi(z.im);
  Real m = exp(z.re);
  r *= m;
  return r;
}
Complex log(const Complex& z) {
  if (z.is_zero()) throw Error(ErrorKind::Domain, "log of zero");
  return Complex(log(abs(z)), arg(z));
}
Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex();
  Real r = abs(z);
  Real a = sqrt((r + abs(z.re)) / 2L);
  if (z.re.sign() >= 0) return Complex(a, z.im / (2L * a));
  Real b = z.im.sign() >= 0 ? a : -a;
  return Complex(abs(z.im) / (2L * a), b);
}
Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) {
    if (w.re.sign() > 0) return Complex();
    throw Error(ErrorKind::Domain, "0 to a non-positive power");
  }
  return exp(w * log(z));
}
Complex pow(const Real& x, const Complex& w) {
  if (x.sign() <= 0) throw Error(ErrorKind::Domain, "real power base must be positive");
  return exp(w * log(x));
}
Complex powi(const Complex& z, long n) {
  if (n < 0) return Complex(1) / powi(z, -n);
  Complex r(1), b = z;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}
Complex cosh(const Complex& z) {
  Complex c = expi(z.im);
  return Complex(cosh(z.re) * c.re, sinh(z.re) * c.im);
}
Complex sin(const Complex& z) {
  Complex c = expi(z.re);
  return Complex(c.im * cosh(z.im), c.re * sinh(z.im));
}

// ---- Bernoulli ----

const std::vector<mpq_class>& bernoulli_table(int n) {
  static std::mutex mu;
  static std::vector<mpq_class> table;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(table.size()) > n) return table;
  // Akiyama-Tanigawa
  int m = std::max(n, 2 * static_cast<int>(table.size()) + 8);
  std::vector<mpq_class> a(m + 1), out(m + 1);
  for (int i = 0; i <= m; ++i) {
    a[i] = mpq_class(1, i + 1);
    for (int j = i; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[i] = a[0];
  }
  if (m >= 1) out[1] = mpq_class(-1, 2);
  table = out;
  return table;
}

// ---- Gamma ----

namespace {

Complex lngamma_stirling(const Complex& w) {
  // w has large real part
  const int prec = working_prec();
  Complex half_log2pi(log(2L * pi()) / 2L);
  Complex s = (w - Complex(Real(0.5))) * log(w) - w + half_log2pi;
  Complex winv = Complex(1) / w;
  Complex w2inv = winv * winv;
  Complex pw = winv;
  Real eps = ldexp(Real(1), -prec - 4);
  for (int k = 1;; ++k) {
    const auto& B = bernoulli_table(2 * k + 2);
    Real c(B[2 * k]);
    c /= static_cast<long>(2 * k * (2 * k - 1));
    Complex t = pw * c;
    s += t;
    if (abs(t) < eps * abs(s)) break;
    if (k > 4 * prec) throw Error(ErrorKind::Internal, "Stirling series did not converge");
    pw *= w2inv;
  }
  return s;
}

}  // namespace

Complex gamma(const Complex& z) {
  int prec = working_prec();
  Complex out;
  {
    PrecGuard pg(prec + 32);
    Complex zz = z;
    if (zz.im.is_zero() && zz.re.is_integer() && zz.re.sign() <= 0)
      throw Error(ErrorKind::Pole, "gamma pole at non-positive integer");
    if (zz.re < Real(0.5)) {
      Complex one_minus = Complex(1) - zz;
      Complex s = sin(pi() * zz);
      out = Complex(pi()) / (s * gamma(one_minus));
    } else {
      double target = 0.3 * prec + 12;
      Complex w = zz;
      Complex prod(1);
      while (w.re.to_double() < target) {
        prod *= w;
        w.re += Real(1);
      }
      out = exp(lngamma_stirling(w)) / prod;
    }
  }
  return fit(out);
}

Complex rgamma(const Complex& z) {
  if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0) return Complex();
  return Complex(1) / gamma(z);
}

Real scaled_upper_gamma_int(long a, const Real& x, const Real& emx) {
  // x^-a Gamma(a,x) = (a-1)! e^-x sum_{j<a} x^(j-a)/j!
  Real xinv = Real(1) / x;
  if (a == 1) return emx * xinv;
  Real term = xinv;
  Real sum = term;
  for (long j = a - 1; j >= 1; --j) {
    term *= xinv;
    term *= j;
    sum += term;
  }
  return sum * emx;
}

namespace {

Complex upper_gamma_cf(const Complex& a, const Real& x) {
  // Legendre continued fraction, modified Lentz
  const int prec = working_prec();
  Real tiny = ldexp(Real(1), -4 * prec);
  Real eps = ldexp(Real(1), -prec - 2);
  Complex b = Complex(x + 1L) - a;
  Complex c = Complex(Real(1) / tiny);
  Complex d = Complex(1) / b;
  Complex h = d;
  for (long i = 1;; ++i) {
    Complex an = Complex(-Real(i)) * (Complex(Real(i)) - a);
    b.re += Real(2);
    d = an * d + b;
    if (abs(d) < tiny) d = Complex(tiny);
    c = b + an / c;
    if (abs(c) < tiny) c = Complex(tiny);
    d = Complex(1) / d;
    Complex del = d * c;
    h *= del;
    if (abs(del - Complex(1)) < eps) break;
    if (i > 200000) throw Error(ErrorKind::Underflow, "incomplete gamma continued fraction stalled");
  }
  return exp(a * log(x) - Complex(x)) * h;
}

Complex lower_gamma_series(const Complex& a, const Real& x) {
  const int prec = working_prec();
  Real eps = ldexp(Real(1), -prec - 2);
  Complex term = Complex(1) / a;
  Complex sum = term;
  Complex ak = a;
  for (long n = 1;; ++n) {
    ak.re += Real(1);
    term *= x;
    term /= ak;
    sum += term;
    if (n > x.to_double() + 2 && abs(term) < eps * abs(sum)) break;
    if (n > 1000000) throw Error(ErrorKind::Underflow, "incomplete gamma series stalled");
  }
  return exp(a * log(x) - Complex(x)) * sum;
}

}  // namespace

Complex upper_gamma(const Complex& a, const Real& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::Domain, "upper_gamma needs x > 0");
  const int prec = working_prec();
  Complex out;
  if (a.im.is_zero()) {
    Real r;
    {
      PrecGuard pg(prec + 16);
      Real rr;
      mpfr_gamma_inc(rr.get(), a.re.get(), x.get(), RND);
      r = rr;
    }
    return Complex(fit(r), Real(0));
  }
  double xd = x.to_double();
  double thresh = std::max(30.0, 0.35 * prec / 1.0);
  if (xd > thresh) {
    PrecGuard pg(prec + 32);
    out = upper_gamma_cf(a, x);
  } else {
    // distance to the nearest pole of gamma(a)
    double boost = xd * 1.4427 + 40;
    double re = a.re.to_double();
    if (re < 0.5) {
      double dist = std::hypot(re - std::round(re), a.im.to_double());
      if (dist < 1e-3) boost += -std::log2(dist);
    }
    PrecGuard pg(prec + static_cast<int>(boost));
    Complex aa = a;
    Real xx = x;
    out = gamma(aa) - lower_gamma_series(aa, xx);
  }
  return fit(out);
}

// ---- modular functions ----

Complex dedekind_eta(const Complex& tau, const PrecisionContext& ctx) {
  if (tau.im.sign() <= 0) throw Error(ErrorKind::Domain, "dedekind_eta needs Im(tau) > 0");
  PrecGuard pg(ctx.bits() + 16);
  Complex t = tau;
  Complex q = exp(Complex(Real(0), 2L * pi()) * t);
  Real eps = ldexp(Real(1), -ctx.bits() - 8);
  Complex prod(1), qn = q;
  for (long n = 1;; ++n) {
    prod *= Complex(1) - qn;
    if (abs(qn) < eps) break;
    qn *= q;
    if (n > 10000000) throw Error(ErrorKind::Underflow, "eta product too slow; Im(tau) too small");
  }
  Complex pre = exp(Complex(Real(0), pi() / 12L) * t);
  Complex r = pre * prod;
  PrecGuard back(ctx.bits());
  return fit(r);
}

Complex eisenstein_e2_qseries(const Complex& tau, const PrecisionContext& ctx) {
  if (tau.im.sign() <= 0) throw Error(ErrorKind::Domain, "E2 needs Im(tau) > 0");
  PrecGuard pg(ctx.bits() + 16);
  Complex t = tau;
  Complex q = exp(Complex(Real(0), 2L * pi()) * t);
  double lq = std::log2(std::max(abs(q).to_double(), 1e-300));
  if (abs(q).to_double() == 0) lq = -1e9;
  long nmax = static_cast<long>(std::ceil((ctx.bits() + 24) / -lq)) + 2;
  if (nmax > 5000000) throw Error(ErrorKind::Underflow, "E2 q-series too slow; Im(tau) too small");
  std::vector<long> sigma(nmax + 1, 0);
  for (long dv = 1; dv <= nmax; ++dv)
    for (long m = dv; m <= nmax; m += dv) sigma[m] += dv;
  Complex sum, qn = q;
  for (long n = 1; n <= nmax; ++n) {
    sum += qn * Real(sigma[n]);
    qn *= q;
  }
  Complex r = Complex(1) - sum * Real(24);
  PrecGuard back(ctx.bits());
  return fit(r);
}

Complex bessel_k(const Complex& nu, const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) throw Error(ErrorKind::Domain, "bessel_k needs t > 0");
  const int wp = ctx.bits() + 32;
  PrecGuard pg(wp);
  Real tt = t;
  Complex v = nu;
  double td = tt.to_double();
  double ar = std::fabs(v.re.to_double()), ai = std::fabs(v.im.to_double());
  double L = wp * M_LN2 + 8;
  // trapezoid step from the strip of analyticity |Im u| < y
  double h = 0;
  for (int i = 1; i < 400; ++i) {
    double y = 1.5707 * i / 400.0;
    double cand = 2 * M_PI * y / (L + td * (1 - std::cos(y)) + (ar + ai) * y + 2);
    h = std::max(h, cand);
  }
  // truncation: t (cosh U - 1) - |Re nu| U > L
  double U = 0.5;
  while (td * (std::cosh(U) - 1) - ar * U < L + 2) U += 0.05;
  long n = static_cast<long>(std::ceil(U / h));
  Real hh(U / static_cast<double>(n));
  Complex sum;
  Real et = exp(tt);  // scale out e^-t for a relative criterion
  for (long j = 0; j <= n; ++j) {
    Real u = hh * j;
    Real e = exp(tt - tt * cosh(u));
    Complex f = cosh(v * Complex(u)) * e;
    if (j == 0) f *= Real(0.5);
    sum += f;
  }
  sum *= hh;
  sum *= Real(1) / et;
  PrecGuard back(ctx.bits());
  return fit(sum);
}

// ---- rng ----

std::uint64_t CounterRng::next() {
  std::uint64_t z = seed_ * 0x9E3779B97F4A7C15ULL + stream_ * 0xD1B54A32D192ED03ULL + (++counter_) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform() { return (next() >> 11) * (1.0 / 9007199254740992.0); }
double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
long CounterRng::range(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

}  // namespace eiscoh
