#include "eiscoh/lattice.hpp"

#include <cmath>
#include <complex>
#include <utility>

namespace eiscoh {

namespace {

double gauss_shortest(std::complex<double> u, std::complex<double> v) {
  for (int it = 0; it < 200; ++it) {
    if (std::norm(v) < std::norm(u)) std::swap(u, v);
    double mu = std::round((u.real() * v.real() + u.imag() * v.imag()) / std::norm(u));
    if (mu == 0) break;
    v -= mu * u;
  }
  return std::min(std::abs(u), std::abs(v));
}

}  // namespace

Lattice::Lattice(const Complex& w1, const Complex& w2) : w1_(w1), w2_(w2) {
  area_ = w1_.im * w2_.re - w1_.re * w2_.im;
  if (area_.sign() <= 0) throw Error(ErrorKind::Domain, "lattice basis must satisfy Im(w1/w2) > 0");
  shortest_ = gauss_shortest({w1_.re.to_double(), w1_.im.to_double()}, {w2_.re.to_double(), w2_.im.to_double()});
}

Complex Lattice::pairing() const { return Complex(Real(0), 2L * area_); }

Lattice Lattice::scaled(const Complex& alpha) const {
  Complex a = alpha * w1_, b = alpha * w2_;
  return Lattice(a, b);
}

void Lattice::coords(const Complex& z, Real& m, Real& n) const {
  m = (z.im * w2_.re - z.re * w2_.im) / area_;
  n = (w1_.im * z.re - w1_.re * z.im) / area_;
}

bool Lattice::contains(const Complex& z) const {
  Real m, n;
  coords(z, m, n);
  Real eps = ldexp(Real(1), -working_prec() / 2);
  return abs(m - round(m)) < eps && abs(n - round(n)) < eps;
}

}  // namespace eiscoh
