#pragma once

#include "eiscoh/numerics.hpp"

namespace test {

using namespace eiscoh;

// G1(z, Z tau + Z) from the q-expansion of the Weierstrass zeta function:
// pi cot(pi z) + 4 pi sum q^n/(1-q^n) sin(2 pi n z) + 2 pi i Im(z)/Im(tau).
inline Complex g1_zeta_oracle(Complex z, const Complex& tau) {
  // reduce so that |Im z| <= Im(tau)/2 and |Re z| <= 1/2
  Real k = round(z.im / tau.im);
  z = z - tau * k;
  z = z - Complex(round(z.re));
  const Complex i(Real(0), Real(1));
  Complex e = exp(Complex(Real(0), Real(2)) * pi() * z);
  Complex cot = i * (e + Complex(1)) / (e - Complex(1));
  Complex q = exp(Complex(Real(0), Real(2)) * pi() * tau);
  Complex sum(0), qn(1);
  Real eps = ldexp(Real(1), -(working_prec() + 20));
  for (long n = 1; n < 100000; ++n) {
    qn = qn * q;
    Complex en = exp(Complex(Real(0), Real(2) * pi() * Real(n)) * z);
    Complex sn = (en - Complex(1) / en) / Complex(Real(0), Real(2));
    sum += qn / (Complex(1) - qn) * sn;
    // stop on the term bound; sn itself can vanish at rational z
    if (abs(qn) * exp(Real(2) * pi() * Real(n) * abs(z.im)) < eps) break;
  }
  return pi() * cot + Real(4) * pi() * sum + Complex(Real(0), Real(2) * pi() * z.im / tau.im);
}

}  // namespace test
