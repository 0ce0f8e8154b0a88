#pragma once

#include "eiscoh/field.hpp"
#include "eiscoh/kronecker.hpp"

#include <cstdint>

namespace eiscoh {

struct CocycleValue {
  Complex value;
  GammaMatrix gamma;
  FracIdeal ideal;
};

// I(x) = x - conj(x), embedded.
Complex I_part(const QuadElem& x);

// D(a, c, L) = (1/c) sum_{r in L/cL} G1(a r / c, L) G1(r / c, L) with L = scale * embed(ideal).
Complex dedekind_sum(const QuadElem& a, const QuadElem& c, const FracIdeal& ideal, const PrecisionContext& ctx,
                     const Complex& scale = Complex(1));

// Sczech cocycle on the lattice scale * embed(ideal).
CocycleValue sczech_phi(const GammaMatrix& g, const FracIdeal& ideal, const PrecisionContext& ctx,
                        const Complex& scale = Complex(1));

// Deterministic product of `complexity` elementary matrices [[1,t],[0,1]] / [[1,0],[t,1]],
// t = x + y*tau with |x|, |y| <= height in the reduced basis {1, tau}.
GammaMatrix random_gamma(const FieldContext& F, std::uint64_t seed, int complexity, int height = 3);

}  // namespace eiscoh
