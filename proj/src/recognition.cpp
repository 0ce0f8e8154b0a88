#include "eiscoh/recognition.hpp"

namespace eiscoh {

std::string RecognitionResult::str() const {
  switch (kind) {
    case RecognitionKind::Rational: return rational.get_str();
    case RecognitionKind::QuadElem: return element.str();
    default: return "unrecognized";
  }
}

RecognitionResult recognize_rational(const Complex& x, const Int& max_den, const PrecisionContext& ctx,
                                     double threshold) {
  PrecGuard pg(ctx.bits());
  RecognitionResult out;
  out.element = QuadElem(-7);
  Real thr(threshold);
  out.residual = abs(x.im);
  if (out.residual >= thr) return out;
  // continued fraction of Re x; first convergent within threshold
  Real y = x.re;
  Int p0 = 1, q0 = 0, p1, q1 = 1;
  Real f = floor(y);
  p1 = to_mpz(f);
  Real rem = y - f;
  for (int it = 0; it < 200; ++it) {
    Rat cand(p1, q1);
    cand.canonicalize();
    if (q1 > max_den) break;
    Real res = abs(x.re - Real(cand));
    if (res < thr) {
      out.kind = RecognitionKind::Rational;
      out.rational = cand;
      out.residual = res > abs(x.im) ? res : abs(x.im);
      out.height = abs(cand.get_num()) > cand.get_den() ? abs(cand.get_num()) : Int(cand.get_den());
      return out;
    }
    if (rem.is_zero()) break;
    Real inv = Real(1) / rem;
    Real a = floor(inv);
    rem = inv - a;
    Int ai = to_mpz(a);
    Int p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  out.residual = abs(x.re - Real(Rat(p1, q1)));
  return out;
}

RecognitionResult recognize_in_O(const Complex& x, long d, const Int& height_bound, const PrecisionContext& ctx,
                                 double threshold) {
  PrecGuard pg(ctx.bits());
  RecognitionResult out;
  out.element = QuadElem(d);
  // x = m + n*omega, omega = (d + i sqrt|d|)/2
  Real n = x.im * 2L / sqrt(Real(-d));
  Real m = x.re - n * Real(d) / 2L;
  Int mi = to_mpz(m), ni = to_mpz(n);
  QuadElem e(d, mi, ni);
  out.residual = abs(x - e.embed());
  out.height = abs(mi) > abs(ni) ? abs(mi) : abs(ni);
  if (out.height > height_bound || out.residual >= Real(threshold)) return out;
  out.kind = RecognitionKind::QuadElem;
  out.element = e;
  return out;
}

bool same_recognition(const RecognitionResult& a, const RecognitionResult& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == RecognitionKind::Rational) return a.rational == b.rational;
  if (a.kind == RecognitionKind::QuadElem) return a.element == b.element;
  return false;
}

namespace {

RecognitionResult stable(const ValueAt& f, const PrecisionContext& ctx,
                         const std::function<RecognitionResult(const Complex&, const PrecisionContext&)>& rec) {
  RecognitionResult lo;
  {
    PrecGuard pg(ctx.bits());
    lo = rec(f(ctx), ctx);
  }
  if (!lo.ok()) return lo;
  PrecisionContext c2 = ctx.with_bits(2 * ctx.bits());
  PrecGuard pg(c2.bits());
  if (!same_recognition(lo, rec(f(c2), c2))) return RecognitionResult{};
  return lo;
}

}  // namespace

RecognitionResult recognize_rational_stable(const ValueAt& f, const Int& max_den, const PrecisionContext& ctx) {
  return stable(f, ctx, [&](const Complex& x, const PrecisionContext& c) { return recognize_rational(x, max_den, c); });
}

RecognitionResult recognize_in_O_stable(const ValueAt& f, long d, const Int& height_bound, const PrecisionContext& ctx) {
  return stable(f, ctx, [&](const Complex& x, const PrecisionContext& c) { return recognize_in_O(x, d, height_bound, c); });
}

}  // namespace eiscoh
