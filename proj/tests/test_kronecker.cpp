#include "support.hpp"
#include "oracles.hpp"

#include "eiscoh/kronecker.hpp"

#include <vector>

using namespace test;

namespace {

Lattice random_lattice(CounterRng& rng) {
  Complex w2(rng.uniform(0.6, 1.4), rng.uniform(-0.3, 0.3));
  Complex t(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.6));
  return Lattice(w2 * t, w2);
}

Complex random_point(CounterRng& rng) { return Complex(rng.uniform(-1, 1), rng.uniform(-1, 1)); }

// G2(Z tau + Z) = 2 zeta(2) E2(tau) - pi / Im(tau)
Complex g2_e2_oracle(const Complex& tau) {
  return eisenstein_e2_qseries(tau, ctx()) * (pi() * pi() / Real(3)) - Complex(pi() / tau.im);
}

// Plain truncated sum for Re(2s) large.
Complex direct_sum(const KroneckerParams& P, long R) {
  Complex total(0);
  for (long m = -R; m <= R; ++m)
    for (long n = -R; n <= R; ++n) {
      Complex w = P.L.w1() * Real(m) + P.L.w2() * Real(n);
      Complex x = P.q + w;
      if (abs(x) < Real(1e-30)) continue;
      Complex th = lattice_theta(w * conj(P.p), P.L);
      Complex xb = conj(x);
      Complex num = th * powi(xb, P.k);
      Complex den = pow(norm(x), P.s + Complex(Real(P.k) / Real(2)));
      total += num / den;
    }
  return total;
}

// Polynomial extrapolation to x = 0 through (xs[i], ys[i]).
Complex neville_at_zero(const std::vector<Real>& xs, std::vector<Complex> ys) {
  const size_t n = xs.size();
  for (size_t m = 1; m < n; ++m)
    for (size_t i = 0; i + m < n; ++i) ys[i] = (xs[i + m] * ys[i] - xs[i] * ys[i + 1]) / (xs[i + m] - xs[i]);
  return ys[0];
}

}  // namespace

TEST_CASE("odd symmetry kills k = 1 at p = q = 0") {
  EISCOH_PREC();
  CounterRng rng(0, 20);
  for (int i = 0; i < 3; ++i) {
    Lattice L = random_lattice(rng);
    CHECK(abs(kronecker_G({Complex(0.5), 1, Complex(0), Complex(0), L}, ctx())) < Real(1e-100));
    CHECK(abs(G1(Complex(0), L, ctx())) < Real(1e-100));
    CHECK(abs(completed_E({Complex(0.5), 1, Complex(0), Complex(0), L}, ctx())) < Real(1e-100));
  }
}

TEST_CASE("G2 matches the E2 identity") {
  EISCOH_PREC();
  std::vector<Complex> taus = {Complex(0, 1), Complex(0, 2), Complex(Real(1) / Real(2), sqrt(Real(7)) / Real(2))};
  for (const auto& tau : taus) {
    Lattice L(tau, Complex(1));
    Complex g2 = G2(L, ctx());
    CHECK(close(g2, g2_e2_oracle(tau), 1e-100));
  }
  // E2(i) = 3/pi makes G2(Z i + Z) vanish
  CHECK(abs(G2(Lattice(Complex(0, 1), Complex(1)), ctx())) < Real(1e-100));
  CHECK(close(G2(Lattice(taus[2], Complex(1)), ctx()),
              cx("0.934423537768746247884220102826182523448217099919421754175488"), 1e-55));
}

TEST_CASE("absolutely convergent region matches the direct sum") {
  PrecGuard pg(160);
  PrecisionContext c(160);
  CounterRng rng(0, 21);
  for (int k = 0; k < 3; ++k) {
    Lattice L(Complex(0.31, 1.07), Complex(1.02, -0.05));
    KroneckerParams P{Complex(6, 0.3), k, random_point(rng), random_point(rng), L};
    Complex fast = kronecker_G(P, c);
    Complex slow = direct_sum(P, 60);
    CHECK(abs(fast - slow) < Real(1e-15) * abs(fast));
  }
}

TEST_CASE("G1 agrees with the Weierstrass zeta route") {
  EISCOH_PREC();
  CounterRng rng(0, 22);
  std::vector<Complex> taus = {Complex(0, 2), Complex(Real(1) / Real(2), sqrt(Real(7)) / Real(2)), Complex(0.2, 1.3)};
  for (const auto& tau : taus) {
    Lattice L(tau, Complex(1));
    for (int i = 0; i < 4; ++i) {
      Complex z = random_point(rng);
      CHECK(close(G1(z, L, ctx()), g1_zeta_oracle(z, tau), 1e-100));
    }
  }
  CHECK(close(G1(cx("0.3", "0.4"), Lattice(Complex(0, 2), Complex(1)), ctx()),
              cx("0.458363631741616207980307260838404778053584178166807179593934",
                 "-1.69717409936447630462186946722113901920687324101804739146460"),
              1e-55));
}

TEST_CASE("functional equation with p and q exchanged") {
  EISCOH_PREC();
  CounterRng rng(0, 23);
  for (int i = 0; i < 6; ++i) {
    Lattice L = random_lattice(rng);
    int k = i % 4;
    Complex s(rng.uniform(-0.8, 1.8), rng.uniform(-1, 1));
    Complex p = random_point(rng), q = random_point(rng);
    Complex lhs = completed_E({s, k, p, q, L}, ctx());
    Complex rhs = lattice_theta(p * conj(q), L) * completed_E({Complex(1) - s, k, q, p, L}, ctx());
    CHECK(abs(lhs - rhs) < Real(1e-100) * (Real(1) + abs(lhs)));
  }
  // at p = q = 0 the printed and exchanged forms agree
  Lattice L = random_lattice(rng);
  Complex s(0.3, 0.4);
  Complex lhs = completed_E({s, 2, Complex(0), Complex(0), L}, ctx());
  CHECK(close(lhs, completed_E({Complex(1) - s, 2, Complex(0), Complex(0), L}, ctx()), 1e-100));
}

TEST_CASE("homogeneity") {
  EISCOH_PREC();
  CounterRng rng(0, 24);
  for (int i = 0; i < 5; ++i) {
    Lattice L = random_lattice(rng);
    Complex alpha(rng.uniform(-2, 2), rng.uniform(-2, 2));
    Complex z = random_point(rng);
    Lattice aL = L.scaled(alpha);
    for (int k = 1; k <= 3; ++k) {
      Complex lhs = G_k_value(k, alpha * z, aL, ctx());
      Complex rhs = G_k_value(k, z, L, ctx()) / powi(alpha, k);
      CHECK(abs(lhs - rhs) < Real(1e-100) * (Real(1) + abs(rhs)));
    }
    // unnormalized s = 0, k = 2 value picks up conj(alpha)/alpha
    Complex raw = kronecker_G({Complex(0), 2, Complex(0), alpha * z, aL}, ctx());
    Complex raw0 = kronecker_G({Complex(0), 2, Complex(0), z, L}, ctx());
    CHECK(close(raw, raw0 * conj(alpha) / alpha, 1e-95));
    CHECK(close(G_weight2_nonhol(alpha * z, aL, ctx()), G_weight2_nonhol(z, L, ctx()) / (alpha * alpha), 1e-95));
  }
}

TEST_CASE("non-holomorphic weight two value at lattice points") {
  EISCOH_PREC();
  // d = -7: O = Z omega + Z
  Lattice L7(Complex(Real(-7) / Real(2), sqrt(Real(7)) / Real(2)), Complex(1));
  CHECK(close(G_weight2_nonhol(Complex(0), L7, ctx()), G2(L7, ctx()), 1e-100));
  // d = -8: O = Z sqrt(-2) + Z, at z = 1 + sqrt(-2)
  Lattice L8(Complex(Real(0), sqrt(Real(2))), Complex(1));
  Complex z = Complex(Real(1), sqrt(Real(2)));
  CHECK(close(G_weight2_nonhol(z, L8, ctx()), G2(L8, ctx()), 1e-100));
}

TEST_CASE("Hecke limit extrapolates to the regularized value") {
  // 192 bits are plenty for a 1e-25 target
  PrecGuard pg(192);
  PrecisionContext c(192);
  CounterRng rng(0, 25);
  for (int i = 0; i < 5; ++i) {
    Lattice L = random_lattice(rng);
    int k = 1 + i % 2;
    Complex z = k == 1 ? random_point(rng) : Complex(0);
    std::vector<Real> xs;
    std::vector<Complex> ys;
    for (int j = 0; j < 16; ++j) {
      Real lam = ldexp(Real(1), -1 - j);
      xs.push_back(lam);
      ys.push_back(kronecker_G({Complex(Real(k) / Real(2) + lam / Real(2)), k, Complex(0), z, L}, c));
    }
    Complex ext = neville_at_zero(xs, ys);
    CHECK(abs(ext - G_k_value(k, z, L, c)) < Real(1e-25));
  }
}

TEST_CASE("poles and truncation limits") {
  EISCOH_PREC();
  Lattice L(Complex(0.2, 1.1), Complex(1));
  CHECK(error_kind([&] { kronecker_G({Complex(0), 0, Complex(0.3), Complex(0), L}, ctx()); }) == ErrorKind::Pole);
  CHECK(error_kind([&] { kronecker_G({Complex(1), 0, Complex(0), Complex(0.4), L}, ctx()); }) == ErrorKind::Pole);
  Complex tiny(ldexp(Real(1), -300));
  CHECK(error_kind([&] { completed_E({tiny, 0, Complex(0.3), Complex(1), L}, ctx()); }) == ErrorKind::Pole);
  // away from the pole the value is finite
  CHECK(abs(kronecker_G({Complex(0.5), 0, Complex(0.3), Complex(0), L}, ctx())) > Real(0));
  PrecisionContext narrow(384, -1, 3);
  CHECK(error_kind([&] { G2(L, narrow); }) == ErrorKind::Underflow);
  CHECK(error_kind([&] { G_k_value(0, Complex(0), L, ctx()); }) == ErrorKind::Domain);
}

TEST_CASE("lattice character") {
  EISCOH_PREC();
  Lattice L(Complex(0.2, 1.1), Complex(1.3, 0.1));
  // theta is trivial on L-valued pairings w conj(w')
  Complex w = L.w1() * Real(2) - L.w2() * Real(3);
  CHECK(close(lattice_theta(w * conj(L.w2()), L), Complex(1), 1e-100));
  CHECK(close(lattice_theta(Complex(0.4, 0.9), L) * lattice_theta(Complex(-0.4, -0.9), L), Complex(1), 1e-100));
}
