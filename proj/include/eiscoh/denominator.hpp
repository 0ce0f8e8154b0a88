#pragma once

#include "eiscoh/hecke.hpp"
#include "eiscoh/periods.hpp"
#include "eiscoh/recognition.hpp"

namespace eiscoh {

using CMatrix = std::vector<std::vector<Complex>>;

struct BasisMatrix {
  CMatrix entries;
  std::vector<long> root_choices;
};

// entries[i][j] = Omega^-2 chi(a_i a_j^-1)/w G2(a_i^-1 a_j)
BasisMatrix basis_matrix(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx);
Complex determinant(CMatrix m);

// |det M_chi - prod_phi L^alg(phi chi, 0)|
Real dedekind_determinant_check(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx);

// Group Z/n_1 x ... x Z/n_r with elements in mixed radix order; f indexed the same way.
// Returns |det(f(a^-1 b)) - prod_phi sum_a phi(a) f(a^-1)|.
Real group_determinant_residual(const std::vector<long>& orders, const std::vector<Complex>& f);

struct DenominatorReport {
  long d = 0;
  Complex g2_value;
  RecognitionResult g2_recognized;
  bool stable = false;  // same recognition at twice the precision
  RecognitionResult generator;
  std::vector<long> excluded_primes;
  Complex bound_half;     // (1/(2 sqrt d)) L^int(chi o N, 0)
  Complex bound_quarter;  // (1/(4 sqrt d)) L^int(chi o N, 0)
  bool bound_matches = false;
};

DenominatorReport denominator_report(long d, const PrecisionContext& ctx);

std::vector<long> prime_divisors(long n);

}  // namespace eiscoh
