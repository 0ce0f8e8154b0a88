#pragma once

#include "eiscoh/field.hpp"
#include "eiscoh/kronecker.hpp"
#include "eiscoh/periods.hpp"

namespace eiscoh {

// phi in the dual of Cl(K): phi(g_j) = exp(2 pi i e_j / n_j).
struct ClassCharacter {
  std::vector<long> exponents;
  Complex on_class(const FieldContext& F, int cls) const;
  bool operator==(const ClassCharacter& o) const { return exponents == o.exponents; }
};

std::vector<ClassCharacter> all_class_characters(const FieldContext& F);

// Unramified character of infinity type (-2, 0): chi((alpha)) = alpha^-2.
class HeckeCharacter {
 public:
  HeckeCharacter(Field F, std::vector<long> root_choices, const PrecisionContext& ctx);

  const Field& field() const { return F_; }
  const std::vector<long>& root_choices() const { return roots_; }
  const std::vector<Complex>& gen_values() const { return gen_values_; }
  Complex operator()(const FracIdeal& a) const;
  Complex operator()(const QuadElem& alpha) const { return (*this)(FracIdeal::principal(alpha)); }
  HeckeCharacter twisted(const ClassCharacter& phi) const;
  // phi with chi' = phi * chi
  ClassCharacter ratio(const HeckeCharacter& other) const;

 private:
  Field F_;
  std::vector<long> roots_;
  std::vector<Complex> gen_values_;
  PrecisionContext ctx_;
};

HeckeCharacter build_character(const Field& F, const std::vector<long>& root_choices, const PrecisionContext& ctx);

constexpr long kUnitWeight = 2;

// L(chi, 0) = sum_i chi(a_i)/w G2(a_i^-1)
Complex L_value_at_0(const HeckeCharacter& chi, const PrecisionContext& ctx);
// Same sum over caller-chosen representatives, one per class in class order.
Complex L_value_at_0(const HeckeCharacter& chi, const std::vector<FracIdeal>& reps, const PrecisionContext& ctx);
// (Omega^-2 L, 4 sqrt(d) Omega^-2 L)
std::pair<Complex, Complex> L_alg_int(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx);
// prod over phi of L(phi chi, 0)
Complex L_norm_composite(const HeckeCharacter& chi, const PrecisionContext& ctx);

// G2 of the embedded ideal lattice.
Complex G2_ideal(const FracIdeal& a, const PrecisionContext& ctx);
Complex sqrt_d(long d);

}  // namespace eiscoh
