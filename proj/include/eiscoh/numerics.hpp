#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eiscoh {

enum class ErrorKind { Domain, Pole, Underflow, Unsupported, Recognition, Usage, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Working precision and tolerances. Immutable once built.
class PrecisionContext {
 public:
  static constexpr int guard_bits = 64;

  explicit PrecisionContext(int bits = 384, long double tol = -1, double trunc_radius = 96);

  int bits() const { return bits_; }
  long double tol() const { return tol_; }
  double trunc_radius() const { return trunc_radius_; }

  // Same tolerance policy at a different precision.
  PrecisionContext with_bits(int bits) const;

 private:
  int bits_;
  long double tol_;
  double trunc_radius_;
};

int working_prec();

// Sets the thread-local precision used by newly created values.
class PrecGuard {
 public:
  explicit PrecGuard(int bits);
  ~PrecGuard();
  PrecGuard(const PrecGuard&) = delete;
  PrecGuard& operator=(const PrecGuard&) = delete;

 private:
  int saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  explicit Real(const std::string& dec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_ld() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const;  // binary exponent, very negative for zero

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);

Real pi();
Real log2_const();
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cosh(const Real& x);
Real sinh(const Real& x);
Real abs(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real floor(const Real& x);
Real round(const Real& x);
Real factorial(unsigned long n);
Real ldexp(const Real& x, long e);

// Copy rounded to the current working precision.
Real fit(const Real& x);
mpz_class to_mpz(const Real& x);  // rounds to nearest

// Decimal string with `digits` significant digits; deterministic.
std::string to_decimal(const Real& x, int digits);
// Significant decimal digits that are meaningful at a given precision.
int decimal_digits(int bits);

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(const Real& r) : re(r), im(0) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r, double i = 0) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return Complex(-re, -im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);

Complex fit(const Complex& z);
Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Real& x, const Complex& w);  // x > 0
Complex powi(const Complex& z, long n);
Complex expi(const Real& t);  // exp(i t)
Complex cosh(const Complex& z);
Complex sin(const Complex& z);
Complex I_unit();

// Complex gamma function and its reciprocal (entire, zero at the poles of gamma).
Complex gamma(const Complex& z);
Complex rgamma(const Complex& z);

// Upper incomplete gamma Gamma(a, x) for complex a and real x > 0.
Complex upper_gamma(const Complex& a, const Real& x);
// x^(-a) Gamma(a, x) for positive integer a; cheap closed form.
Real scaled_upper_gamma_int(long a, const Real& x, const Real& exp_minus_x);

Complex dedekind_eta(const Complex& tau, const PrecisionContext& ctx);
Complex bessel_k(const Complex& nu, const Real& t, const PrecisionContext& ctx);
Complex eisenstein_e2_qseries(const Complex& tau, const PrecisionContext& ctx);

// Bernoulli numbers B_0..B_n (exact).
const std::vector<mpq_class>& bernoulli_table(int n);

// Counter-based generator: value depends only on (seed, stream, index).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}
  std::uint64_t next();
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  long range(long lo, long hi);           // inclusive

 private:
  std::uint64_t seed_, stream_, counter_ = 0;
};

}  // namespace eiscoh
