#include "eiscoh/denominator.hpp"

#include <map>

namespace eiscoh {

BasisMatrix basis_matrix(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  const auto& F = *chi.field();
  const auto& reps = F.class_reps();
  const int h = F.h();
  Complex om2 = pd.Omega * pd.Omega;
  BasisMatrix M;
  M.root_choices = chi.root_choices();
  M.entries.assign(h, std::vector<Complex>(h));
  // chi(c^-1) G2(c) only depends on the class of c; cache by exact ideal anyway
  std::map<std::string, Complex> g2cache;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      FracIdeal ai_inv = reps[i].inverse();
      FracIdeal c = ai_inv * reps[j];
      auto key = c.str();
      auto it = g2cache.find(key);
      if (it == g2cache.end()) it = g2cache.emplace(key, G2_ideal(c, ctx)).first;
      Complex chiv = chi(reps[i] * reps[j].inverse());
      M.entries[i][j] = chiv * it->second / (om2 * Real(kUnitWeight));
    }
  return M;
}

Complex determinant(CMatrix m) {
  const size_t n = m.size();
  Complex det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    if (m[piv][c].is_zero()) return Complex(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      Complex f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Real dedekind_determinant_check(const HeckeCharacter& chi, const PeriodData& pd, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  BasisMatrix M = basis_matrix(chi, pd, ctx);
  Complex det = determinant(M.entries);
  Complex prod(1);
  for (const auto& phi : all_class_characters(*chi.field())) prod = prod * L_alg_int(chi.twisted(phi), pd, ctx).first;
  return abs(det - prod);
}

Real group_determinant_residual(const std::vector<long>& orders, const std::vector<Complex>& f) {
  long n = 1;
  for (long o : orders) n *= o;
  if (static_cast<long>(f.size()) != n) throw Error(ErrorKind::Domain, "function size does not match the group order");
  auto digits = [&](long idx) {
    std::vector<long> e;
    for (long o : orders) {
      e.push_back(idx % o);
      idx /= o;
    }
    return e;
  };
  auto index = [&](const std::vector<long>& e) {
    long idx = 0, radix = 1;
    for (size_t j = 0; j < orders.size(); ++j) {
      idx += (((e[j] % orders[j]) + orders[j]) % orders[j]) * radix;
      radix *= orders[j];
    }
    return idx;
  };
  CMatrix M(n, std::vector<Complex>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      auto ea = digits(a), eb = digits(b);
      for (size_t j = 0; j < ea.size(); ++j) ea[j] = eb[j] - ea[j];
      M[a][b] = f[index(ea)];
    }
  Complex det = determinant(M);
  Complex prod(1);
  for (long p = 0; p < n; ++p) {
    auto ep = digits(p);
    Complex sum(0);
    for (long a = 0; a < n; ++a) {
      auto ea = digits(a);
      Real t(0);
      for (size_t j = 0; j < ea.size(); ++j) t += Real(ep[j] * ea[j] % orders[j]) / Real(orders[j]);
      Complex phi = expi(Real(2) * pi() * t);
      std::vector<long> neg(ea.size());
      for (size_t j = 0; j < ea.size(); ++j) neg[j] = -ea[j];
      sum += phi * f[index(neg)];
    }
    prod = prod * sum;
  }
  return abs(det - prod);
}

std::vector<long> prime_divisors(long n) {
  n = std::labs(n);
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

DenominatorReport denominator_report(long d, const PrecisionContext& ctx) {
  if (!table_curve(d)) throw Error(ErrorKind::Unsupported, "denominator report needs a class-number-one field");
  DenominatorReport rep;
  rep.d = d;
  Field F = make_field(d);
  const Int max_den(1000000);
  auto at = [&](const PrecisionContext& c, Complex& g2, RecognitionResult& r) {
    PrecGuard pg(c.bits());
    PeriodData pd = period_from_table(d, c);
    g2 = G2_canonical(pd, c);
    r = recognize_rational(g2, max_den, c);
  };
  PrecGuard pg(ctx.bits());
  at(ctx, rep.g2_value, rep.g2_recognized);
  {
    Complex g2hi;
    RecognitionResult rhi;
    at(ctx.with_bits(2 * ctx.bits()), g2hi, rhi);
    rep.stable = same_recognition(rep.g2_recognized, rhi);
  }
  if (rep.g2_recognized.ok() && rep.stable) rep.generator = rep.g2_recognized;
  rep.excluded_primes = prime_divisors(2 * d);

  PeriodData pd = period_from_table(d, ctx);
  HeckeCharacter chi = build_character(F, {}, ctx);
  Complex lint = L_alg_int(chi, pd, ctx).second;
  // L(chi o N) = L(chi) at h = 1
  Complex sd = sqrt_d(d);
  rep.bound_half = lint / (sd * Real(2));
  rep.bound_quarter = lint / (sd * Real(4));
  if (rep.generator.ok()) {
    Complex gen(Real(rep.generator.rational));
    Real tol(static_cast<double>(ctx.tol()));
    rep.bound_matches = abs(rep.bound_half - gen) < tol * (Real(1) + abs(gen));
  }
  return rep;
}

}  // namespace eiscoh
