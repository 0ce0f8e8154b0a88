#include "eiscoh/hecke.hpp"

#include <numeric>

namespace eiscoh {

namespace {

Complex root_of_unity(long num, long den) {
  return expi(Real(2) * pi() * Real(num) / Real(den));
}

Complex powi_signed(const Complex& z, long e) {
  if (e >= 0) return powi(z, e);
  return Complex(1) / powi(z, -e);
}

}  // namespace

Complex sqrt_d(long d) { return Complex(Real(0), sqrt(Real(-d))); }

Complex ClassCharacter::on_class(const FieldContext& F, int cls) const {
  const auto& x = F.dlog(cls);
  const auto& n = F.orders();
  // exp(2 pi i sum e_j x_j / n_j) as one reduced fraction over lcm(n)
  long L = 1;
  for (long nj : n) L = std::lcm(L, nj);
  long num = 0;
  for (size_t j = 0; j < n.size(); ++j) num = (num + exponents[j] * x[j] % n[j] * (L / n[j])) % L;
  if (num == 0) return Complex(1);
  return root_of_unity(num, L);
}

std::vector<ClassCharacter> all_class_characters(const FieldContext& F) {
  std::vector<ClassCharacter> out;
  const auto& n = F.orders();
  long total = F.h();
  for (long idx = 0; idx < total; ++idx) {
    ClassCharacter phi;
    long t = idx;
    for (long nj : n) {
      phi.exponents.push_back(t % nj);
      t /= nj;
    }
    out.push_back(phi);
  }
  return out;
}

HeckeCharacter::HeckeCharacter(Field F, std::vector<long> root_choices, const PrecisionContext& ctx)
    : F_(std::move(F)), roots_(std::move(root_choices)), ctx_(ctx) {
  if (F_->units() != 2) throw Error(ErrorKind::Unsupported, "fields with extra units are not supported");
  const auto& n = F_->orders();
  if (roots_.size() != n.size()) throw Error(ErrorKind::Usage, "need one root choice per cyclic factor");
  PrecGuard pg(ctx.bits() + 32);
  for (size_t j = 0; j < n.size(); ++j) {
    if (roots_[j] < 0 || roots_[j] >= n[j]) throw Error(ErrorKind::Usage, "root choice out of range");
    Complex alpha = F_->generator_relations()[j].embed();
    Complex target = Complex(1) / (alpha * alpha);
    Complex root = pow(target, Complex(Real(1) / Real(n[j])));
    gen_values_.push_back(root * root_of_unity(roots_[j], n[j]));
  }
}

Complex HeckeCharacter::operator()(const FracIdeal& a) const {
  std::vector<long> e;
  QuadElem beta = F_->decompose(a, e);
  PrecGuard pg(ctx_.bits() + 32);
  Complex b = beta.embed();
  Complex v = Complex(1) / (b * b);
  for (size_t j = 0; j < e.size(); ++j) v = v * powi_signed(gen_values_[j], e[j]);
  PrecGuard back(ctx_.bits());
  return fit(v);
}

HeckeCharacter HeckeCharacter::twisted(const ClassCharacter& phi) const {
  std::vector<long> r = roots_;
  const auto& n = F_->orders();
  for (size_t j = 0; j < r.size(); ++j) r[j] = ((r[j] + phi.exponents[j]) % n[j] + n[j]) % n[j];
  return HeckeCharacter(F_, r, ctx_);
}

ClassCharacter HeckeCharacter::ratio(const HeckeCharacter& other) const {
  ClassCharacter phi;
  const auto& n = F_->orders();
  for (size_t j = 0; j < n.size(); ++j) phi.exponents.push_back(((other.roots_[j] - roots_[j]) % n[j] + n[j]) % n[j]);
  return phi;
}

HeckeCharacter build_character(const Field& F, const std::vector<long>& root_choices, const PrecisionContext& ctx) {
  HeckeCharacter chi(F, root_choices, ctx);
  // relation words: rep(g_j)^(n_j) = (alpha_j) must map to alpha_j^-2
  PrecGuard pg(ctx.bits());
  Real tol(static_cast<double>(ctx.tol()));
  for (size_t j = 0; j < F->orders().size(); ++j) {
    FracIdeal word = F->class_reps()[F->generators()[j]].pow(F->orders()[j]);
    Complex lhs = chi(word);
    Complex a = F->generator_relations()[j].embed();
    Complex rhs = Complex(1) / (a * a);
    if (abs(lhs - rhs) > tol * (Real(1) + abs(rhs))) throw Error(ErrorKind::Internal, "character fails a class group relation");
  }
  return chi;
}

Complex G2_ideal(const FracIdeal& a, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  return G2(embed(a, ctx), ctx);
}

Complex L_value_at_0(const HeckeCharacter& chi, const std::vector<FracIdeal>& reps, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  Complex total(0);
  for (const auto& a : reps) total += chi(a) * G2_ideal(a.inverse(), ctx);
  return total / Real(kUnitWeight);
}

Complex L_value_at_0(const HeckeCharacter& chi, const PrecisionContext& ctx) {
  return L_value_at_0(chi, chi.field()->class_reps(), ctx);
}

std::pair<Complex, Complex> L_alg_int(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  Complex L = L_value_at_0(chi, ctx);
  Complex alg = L / (pd.Omega * pd.Omega);
  Complex in = alg * sqrt_d(chi.field()->d()) * Real(4);
  return {alg, in};
}

Complex L_norm_composite(const HeckeCharacter& chi, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  Complex prod(1);
  for (const auto& phi : all_class_characters(*chi.field())) prod = prod * L_value_at_0(chi.twisted(phi), ctx);
  return prod;
}

}  // namespace eiscoh
