#include "eiscoh/periods.hpp"

namespace eiscoh {

namespace {

Int ipow(long b, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

bool close_rel(const Complex& x, const Complex& y, const PrecisionContext& ctx) {
  Real scale = abs(y);
  if (scale < Real(1)) scale = Real(1);
  return abs(x - y) < Real(static_cast<double>(ctx.tol())) * scale;
}

}  // namespace

std::pair<Complex, Complex> g2_g3(const Lattice& L, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  KroneckerParams P4{Complex(2), 4, Complex(0), Complex(0), L};
  KroneckerParams P6{Complex(3), 6, Complex(0), Complex(0), L};
  Complex g2 = kronecker_G(P4, ctx) * Real(60);
  Complex g3 = kronecker_G(P6, ctx) * Real(140);
  return {g2, g3};
}

Complex j_invariant(const Lattice& L, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  auto [g2, g3] = g2_g3(L, ctx);
  Complex c = g2 * g2 * g2;
  return c * Real(1728) / (c - g3 * g3 * Real(27));
}

const std::vector<long>& table_discriminants() {
  static const std::vector<long> v{-7, -8, -11, -19, -43, -67, -163};
  return v;
}

std::optional<std::pair<Int, Int>> table_curve(long d) {
  switch (d) {
    case -7: return std::make_pair(Int(35), Int(49));
    case -8: return std::make_pair(Int(30), Int(28));
    case -11: return std::make_pair(Int(264), Int(847));
    case -19: return std::make_pair(Int(152), Int(361));
    case -43: return std::make_pair(Int(3440), Int(38829));
    case -67: return std::make_pair(Int(8 * 5 * 11 * 67), Int(7 * 31) * ipow(67, 2));
    case -163: return std::make_pair(Int(16 * 5 * 23 * 29) * 163, Int(7 * 11 * 19 * 127) * ipow(163, 2));
    default: return std::nullopt;
  }
}

PeriodData period_from_table(long d, const PrecisionContext& ctx) {
  auto ab = table_curve(d);
  if (!ab) throw Error(ErrorKind::Unsupported, "no tabulated curve for discriminant " + std::to_string(d));
  PrecGuard pg(ctx.bits());
  Lattice O = embed(FracIdeal(d), ctx);
  auto [g2, g3] = g2_g3(O, ctx);
  Real a(ab->first), b(ab->second);
  Complex om2 = (g3 * a) / (g2 * b);
  PeriodData pd;
  pd.d = d;
  pd.Omega = sqrt(om2);
  pd.a_coeff = Complex(a);
  pd.b_coeff = Complex(b);
  pd.exact = ab;
  pd.source = PeriodSource::TableCurve;
  // g2(Omega O) = Omega^-4 g2(O) must reproduce a
  Complex chk = g2 / (om2 * om2);
  if (!close_rel(chk, pd.a_coeff, ctx))
    throw Error(ErrorKind::Internal, "tabulated period fails the g2 check for " + std::to_string(d));
  return pd;
}

PeriodData period_from_eta(long d, const PrecisionContext& ctx) {
  if (!is_fundamental_discriminant(d) || ((d % 8) + 8) % 8 != 1)
    throw Error(ErrorKind::Unsupported, "eta period needs a fundamental discriminant d = 1 mod 8");
  PrecGuard pg(ctx.bits());
  Real sd = sqrt(Real(-d));
  Complex tau(Real(1) / 2L, sd / 2L);
  Complex e1 = dedekind_eta(tau, ctx);
  Complex e2 = dedekind_eta(tau * Real(2), ctx);
  Real c = pi() / sqrt(sqrt(Real(144L * -d)));
  Complex Omega = c * powi(e1, 4) / powi(e2, 2);
  Complex u = -Real(4096) * powi(e2 / e1, 24);
  Lattice O = embed(FracIdeal(d), ctx);
  Complex jj = j_invariant(O, ctx);
  Complex sqrtd(Real(0), sd);
  Complex a = Real(12 * d) * (u - Complex(16));
  Complex twosd = sqrtd * Real(2);
  Complex b = twosd * twosd * twosd * sqrt(u * (jj - Complex(1728)));
  if (b.re.sign() < 0) b = -b;
  if (abs(b.im) > Real(static_cast<double>(ctx.tol())) * abs(b))
    throw Error(ErrorKind::Internal, "eta construction gives a non-real b");
  PeriodData pd;
  pd.d = d;
  pd.Omega = Omega;
  pd.u = u;
  pd.a_coeff = a;
  pd.b_coeff = b;
  pd.source = PeriodSource::EtaFormula;
  return pd;
}

PeriodData period_for(long d, const PrecisionContext& ctx) {
  if (table_curve(d)) return period_from_table(d, ctx);
  if (is_fundamental_discriminant(d) && ((d % 8) + 8) % 8 == 1) return period_from_eta(d, ctx);
  throw Error(ErrorKind::Unsupported, "no canonical period available for discriminant " + std::to_string(d));
}

Complex G2_canonical(const PeriodData& pd, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  Lattice O = embed(FracIdeal(pd.d), ctx);
  Complex g = G2(O, ctx);
  return g / (pd.Omega * pd.Omega);
}

}  // namespace eiscoh
