#pragma once

#include "eiscoh/hecke.hpp"

#include <vector>

namespace eiscoh {

struct H3Point {
  Complex z;
  Real v;
};

// a^dual = a^-1 (sqrt d)^-1, dual for the pairing exp(2 pi i (x + conj x)).
FracIdeal dual_lattice(const FracIdeal& a);
// Numeric dual of any lattice via the inverse transpose of the trace-pairing matrix.
Lattice dual_lattice(const Lattice& L);

struct EhatValue {
  Complex dz, dzbar;
};

// Fourier expansions of the dz and dzbar components of Ehat_{chi,a}(u, s).
// Bessel values are cached across points, so evaluate many points with one instance.
class EhatEvaluator {
 public:
  EhatEvaluator(const HeckeCharacter& chi, const FracIdeal& a, const Complex& s, const PrecisionContext& ctx,
                double extra_cutoff = 0);
  EhatValue at(const H3Point& u);
  // v^s G(1+s,2,0,0;a) and -(2 pi i/D(a)) G(s,2,0,0;a) v^-s/(1+s), times chi(a)^-1 N(a)^s
  EhatValue constant_terms(const Real& v) const;
  size_t terms_used() const { return terms_; }

 private:
  struct Term {
    Complex cd;        // embedded product c*d
    Complex wz, wzb;   // d^2 |d/c|^(s-1) K_(s-1), conj(c)^2 |d/c|^(s+1) K_(s+1)
  };
  void prepare(const Real& v);

  HeckeCharacter chi_;
  FracIdeal a_;
  Complex s_;
  PrecisionContext ctx_;
  double extra_;
  Complex prefactor_;  // chi(a)^-1 N(a)^s
  Complex pairing_;
  Complex gz_, gzb_;   // G(1+s,2,0,0;a), G(s,2,0,0;a)
  Real v_;
  bool prepared_ = false;
  std::vector<Term> list_;
  size_t terms_ = 0;
};

EhatValue ehat_components(const HeckeCharacter& chi, const FracIdeal& a, const H3Point& u, const Complex& s,
                          const PrecisionContext& ctx);
inline Complex ehat_z_component(const HeckeCharacter& chi, const FracIdeal& a, const H3Point& u, const Complex& s,
                                const PrecisionContext& ctx) {
  return ehat_components(chi, a, u, s, ctx).dz;
}
inline Complex ehat_zbar_component(const HeckeCharacter& chi, const FracIdeal& a, const H3Point& u, const Complex& s,
                                   const PrecisionContext& ctx) {
  return ehat_components(chi, a, u, s, ctx).dzbar;
}

// Average of both components over an n x n grid of the z-period torus O at height v.
EhatValue torus_average(EhatEvaluator& ev, long d, const Real& v, int n);

struct RestrictionVector {
  Complex coeff_dz, coeff_dzbar;
  int cusp_class = 0;
};

// Ehat basis: (chi(a_c a^-1) G2(a a_c^-1), -chi(conj(a_c) a^-1) G2(a conj(a_c)^-1)).
RestrictionVector restriction_vector(const HeckeCharacter& chi, const FracIdeal& a, int cusp_class,
                                     const PrecisionContext& ctx);
// Same with an explicit cusp ideal in place of the class representative.
RestrictionVector restriction_vector_at(const HeckeCharacter& chi, const FracIdeal& a, const FracIdeal& cusp,
                                        const PrecisionContext& ctx);
// E basis, normalized by w: (delta_{a, a_c}, -delta_{a, conj a_c}).
RestrictionVector restriction_vector_E(const FieldContext& F, const FracIdeal& a, int cusp_class);

// Max residual of Ehat_a = sum_i chi(a_i a^-1)/w G2(a_i^-1 a) E_{a_i} on restriction vectors, over all
// cusp classes. The left side uses a non-reduced cusp representative.
Real ehat_from_E_relation_check(const HeckeCharacter& chi, const FracIdeal& a, const PrecisionContext& ctx);

}  // namespace eiscoh
