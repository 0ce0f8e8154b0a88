#pragma once

#include <doctest.h>

#include "eiscoh/numerics.hpp"

#include <string>

namespace test {

using namespace eiscoh;

constexpr int kBits = 384;
inline const PrecisionContext& ctx() {
  static const PrecisionContext c(kBits);
  return c;
}

// |a - b|, checked below eps
inline bool close(const Complex& a, const Complex& b, double eps) { return abs(a - b) < Real(eps); }
inline bool close(const Real& a, const Real& b, double eps) { return abs(a - b) < Real(eps); }

inline double diff(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

inline Complex cx(const char* re, const char* im = "0") { return Complex(Real(std::string(re)), Real(std::string(im))); }

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace test

// Every test case runs with the working precision set.
#define EISCOH_PREC() ::eiscoh::PrecGuard eiscoh_prec_guard_(::test::kBits)
