#pragma once

#include "eiscoh/lattice.hpp"
#include "eiscoh/numerics.hpp"

namespace eiscoh {

struct KroneckerParams {
  Complex s;
  int k = 0;
  Complex p, q;
  Lattice L;
};

// theta(z) = exp(2 pi i Im(z) / area(L))
Complex lattice_theta(const Complex& z, const Lattice& L);

// G(s,k,p,q,L) = sum' theta(w conj p) conj(q+w)^k / |q+w|^(2s+k), continued in s.
Complex kronecker_G(const KroneckerParams& P, const PrecisionContext& ctx);
// (pi/A)^(-s) Gamma(s+k/2) G(s,k,p,q,L)
Complex completed_E(const KroneckerParams& P, const PrecisionContext& ctx);

// G_k(z,L) = G(k/2, k, 0, z, L)
Complex G_k_value(int k, const Complex& z, const Lattice& L, const PrecisionContext& ctx);
inline Complex G1(const Complex& z, const Lattice& L, const PrecisionContext& ctx) { return G_k_value(1, z, L, ctx); }
inline Complex G2(const Lattice& L, const PrecisionContext& ctx) { return G_k_value(2, Complex(0), L, ctx); }

// Non-holomorphic weight-two value (2 pi i / D(L)) G(0,2,0,z,L).
Complex G_weight2_nonhol(const Complex& z, const Lattice& L, const PrecisionContext& ctx);

}  // namespace eiscoh
