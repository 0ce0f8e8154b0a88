#pragma once

#include "eiscoh/numerics.hpp"

namespace eiscoh {

// L = Z w1 + Z w2 with Im(w1/w2) > 0.
class Lattice {
 public:
  Lattice() = default;
  Lattice(const Complex& w1, const Complex& w2);

  const Complex& w1() const { return w1_; }
  const Complex& w2() const { return w2_; }
  // Im(w1 conj(w2)), the covolume.
  const Real& area() const { return area_; }
  double shortest_vec() const { return shortest_; }
  // D(L) = w1 conj(w2) - conj(w1) w2 = 2i area
  Complex pairing() const;
  Lattice scaled(const Complex& alpha) const;
  // Real coordinates (m, n) with z = m w1 + n w2.
  void coords(const Complex& z, Real& m, Real& n) const;
  // Membership up to 2^(-bits/2) in lattice coordinates.
  bool contains(const Complex& z) const;

 private:
  Complex w1_, w2_;
  Real area_;
  double shortest_ = 0;
};

}  // namespace eiscoh
