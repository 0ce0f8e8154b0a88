#include "eiscoh/sczech.hpp"

#include <map>
#include <utility>

namespace eiscoh {

namespace {

Rat frac(const Rat& x) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(f);
}

using Key = std::pair<Rat, Rat>;

struct KeyLess {
  bool operator()(const Key& x, const Key& y) const {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  }
};

}  // namespace

Complex I_part(const QuadElem& x) {
  // x - conj(x) = y*(omega - conj omega) = y*sqrt(d)
  Real y = Real(x.b());
  return Complex(Real(0), y * sqrt(Real(-x.d())));
}

Complex dedekind_sum(const QuadElem& a, const QuadElem& c, const FracIdeal& ideal, const PrecisionContext& ctx,
                     const Complex& scale) {
  if (c.is_zero()) throw Error(ErrorKind::Domain, "Dedekind sum with c = 0");
  if (!a.is_integral() || !c.is_integral()) throw Error(ErrorKind::Domain, "Dedekind sum needs a, c in O");
  PrecGuard pg(ctx.bits());
  Lattice L = embed(ideal, ctx);
  if (!(scale.re == Real(1) && scale.im.is_zero())) L = L.scaled(scale);
  std::vector<QuadElem> res = residue_system(c, ideal);
  QuadElem cinv = c.inverse();

  // G1 is L-periodic, so values are keyed by the reduced coordinates of r/c
  std::map<Key, size_t, KeyLess> index;
  std::vector<Key> keys;
  keys.reserve(res.size());
  for (const auto& r : res) {
    Rat u, v;
    ideal.coords(r * cinv, u, v);
    Key k{frac(u), frac(v)};
    index.emplace(k, keys.size());
    keys.push_back(k);
  }
  if (index.size() != res.size()) throw Error(ErrorKind::Internal, "residue system has repeated classes");

  std::vector<Complex> g(res.size());
  std::vector<bool> have(res.size(), false);
  auto value = [&](size_t i) -> const Complex& {
    if (!have[i]) {
      QuadElem z = ideal.b1() * keys[i].first + ideal.b2() * keys[i].second;
      g[i] = G1(scale * z.embed(), L, ctx);
      have[i] = true;
    }
    return g[i];
  };

  Complex total(0);
  for (size_t i = 0; i < res.size(); ++i) {
    Rat u, v;
    ideal.coords(a * res[i] * cinv, u, v);
    auto it = index.find(Key{frac(u), frac(v)});
    if (it == index.end()) throw Error(ErrorKind::Internal, "a*r/c left the residue classes");
    total += value(it->second) * value(i);
  }
  return total / c.embed();
}

CocycleValue sczech_phi(const GammaMatrix& g, const FracIdeal& ideal, const PrecisionContext& ctx,
                        const Complex& scale) {
  if (!g.is_valid()) throw Error(ErrorKind::Domain, "matrix is not in SL2(O)");
  PrecGuard pg(ctx.bits());
  Lattice L = embed(ideal, ctx);
  if (!(scale.re == Real(1) && scale.im.is_zero())) L = L.scaled(scale);
  CocycleValue out{Complex(0), g, ideal};
  if (g.c.is_zero()) {
    QuadElem x = g.b / g.d;
    if (x.y() == 0) return out;
    out.value = I_part(x) * G2(L, ctx);
    return out;
  }
  QuadElem x = (g.a + g.d) / g.c;
  Complex first(0);
  if (x.y() != 0) first = I_part(x) * G2(L, ctx);
  out.value = first - dedekind_sum(g.a, g.c, ideal, ctx, scale);
  return out;
}

GammaMatrix random_gamma(const FieldContext& F, std::uint64_t seed, int complexity, int height) {
  const long d = F.d();
  GammaMatrix g = GammaMatrix::identity(d);
  CounterRng rng(seed, 0x5c2ec4);
  QuadElem tau = F.tau();
  QuadElem one(d, 1, 0);
  for (int i = 0; i < complexity; ++i) {
    QuadElem t(d);
    do {
      long x = rng.range(-height, height);
      long y = rng.range(-height, height);
      t = one * Rat(x) + tau * Rat(y);
    } while (t.is_zero());
    GammaMatrix e = GammaMatrix::identity(d);
    if (rng.uniform() < 0.5) e.b = t;
    else e.c = t;
    g = g * e;
  }
  if (!g.is_valid()) throw Error(ErrorKind::Internal, "random matrix left SL2(O)");
  return g;
}

}  // namespace eiscoh
