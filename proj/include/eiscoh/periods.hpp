#pragma once

#include "eiscoh/field.hpp"
#include "eiscoh/kronecker.hpp"

#include <optional>

namespace eiscoh {

enum class PeriodSource { EtaFormula, TableCurve };

struct PeriodData {
  long d = 0;
  Complex Omega;
  std::optional<Complex> u;
  Complex a_coeff, b_coeff;
  // exact (a, b) when tabulated
  std::optional<std::pair<Int, Int>> exact;
  PeriodSource source = PeriodSource::TableCurve;
};

// Weierstrass invariants 60 sum' w^-4, 140 sum' w^-6.
std::pair<Complex, Complex> g2_g3(const Lattice& L, const PrecisionContext& ctx);
Complex j_invariant(const Lattice& L, const PrecisionContext& ctx);

// Tabulated curve coefficients (a, b) for the class-number-one discriminants.
std::optional<std::pair<Int, Int>> table_curve(long d);
const std::vector<long>& table_discriminants();

PeriodData period_from_table(long d, const PrecisionContext& ctx);
PeriodData period_from_eta(long d, const PrecisionContext& ctx);
// Table curve when tabulated, eta construction for d = 1 mod 8, else unsupported.
PeriodData period_for(long d, const PrecisionContext& ctx);

// G2(Omega O) = Omega^-2 G2(O)
Complex G2_canonical(const PeriodData& pd, const PrecisionContext& ctx);

}  // namespace eiscoh
