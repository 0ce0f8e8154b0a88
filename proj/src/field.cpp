#include "eiscoh/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

namespace eiscoh {

namespace {

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int fdiv(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int round_div(const Rat& q) {
  // nearest integer, ties up
  Rat t = q + Rat(1, 2);
  return fdiv(t.get_num(), t.get_den());
}

bool squarefree(long n) {
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

// ---- QuadElem ----

QuadElem::QuadElem(long d, Int x, Int y, Int den) : d_(d), x_(std::move(x)), y_(std::move(y)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::Domain, "zero denominator");
  normalize();
}

void QuadElem::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    x_ = -x_;
    y_ = -y_;
  }
  Int g = gcd(gcd(x_, y_), den_);
  if (g > 1) {
    x_ /= g;
    y_ /= g;
    den_ /= g;
  }
}

QuadElem QuadElem::from_coords(long d, const Rat& a, const Rat& b) {
  Int den = lcm(a.get_den(), b.get_den());
  Int x = a.get_num() * (den / a.get_den());
  Int y = b.get_num() * (den / b.get_den());
  return QuadElem(d, x, y, den);
}

Rat QuadElem::norm() const {
  // N(x + y w) = x^2 + d x y + y^2 (d^2 - d)/4
  Int dd = d_;
  Int n4 = 4 * x_ * x_ + 4 * dd * x_ * y_ + y_ * y_ * (dd * dd - dd);
  Rat r(n4, 4 * den_ * den_);
  r.canonicalize();
  return r;
}

Rat QuadElem::trace() const {
  Rat r(2 * x_ + Int(d_) * y_, den_);
  r.canonicalize();
  return r;
}

QuadElem QuadElem::conj() const { return QuadElem(d_, x_ + Int(d_) * y_, -y_, den_); }

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Domain, "inverse of zero");
  Rat n = norm();
  QuadElem c = conj();
  return c * Rat(1 / n);
}

Complex QuadElem::embed() const {
  // omega = (d + i sqrt|d|)/2
  Real den(den_);
  Real re = (Real(x_) + Real(y_) * Real(d_) / 2L) / den;
  Real im = Real(y_) * sqrt(Real(-d_)) / 2L / den;
  return Complex(re, im);
}

std::string QuadElem::str() const {
  std::ostringstream os;
  bool paren = den_ != 1 && y_ != 0 && x_ != 0;
  if (paren) os << "(";
  if (y_ == 0) {
    os << x_;
  } else {
    if (x_ != 0) os << x_ << (y_ > 0 ? "+" : "-");
    else if (y_ < 0) os << "-";
    Int ay = abs(y_);
    if (ay != 1) os << ay << "*";
    os << "w";
  }
  if (paren) os << ")";
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
  if (d_ != o.d_) throw Error(ErrorKind::Domain, "mixed fields");
  return QuadElem(d_, x_ * o.den_ + o.x_ * den_, y_ * o.den_ + o.y_ * den_, den_ * o.den_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const { return *this + (-o); }

QuadElem QuadElem::operator*(const QuadElem& o) const {
  if (d_ != o.d_) throw Error(ErrorKind::Domain, "mixed fields");
  // w^2 = d w - (d^2 - d)/4
  Int dd = d_;
  Int c0 = (dd * dd - dd) / 4;
  Int yy = y_ * o.y_;
  return QuadElem(d_, x_ * o.x_ - yy * c0, x_ * o.y_ + o.x_ * y_ + dd * yy, den_ * o.den_);
}

QuadElem QuadElem::operator*(const Rat& r) const {
  return QuadElem(d_, x_ * r.get_num(), y_ * r.get_num(), den_ * r.get_den());
}

bool QuadElem::operator==(const QuadElem& o) const {
  return d_ == o.d_ && x_ == o.x_ && y_ == o.y_ && den_ == o.den_;
}

// ---- FracIdeal ----

FracIdeal::FracIdeal(long d) : d_(d), den_(1), a_(1), b_(0), c_(1) {}

FracIdeal FracIdeal::from_z_span(long d, const std::vector<QuadElem>& gens) {
  Int D = 1;
  for (const auto& g : gens) {
    if (g.d() != d) throw Error(ErrorKind::Domain, "mixed fields");
    D = lcm(D, g.den());
  }
  // Hermite reduction of integer vectors (x, y) meaning x + y*omega
  Int A = 0;
  bool have = false;
  Int px = 0, py = 0;
  for (const auto& g : gens) {
    Int x = g.x() * (D / g.den());
    Int y = g.y() * (D / g.den());
    if (y == 0) {
      A = gcd(A, x);
      continue;
    }
    if (!have) {
      px = x;
      py = y;
      have = true;
      continue;
    }
    Int gg, u, w;
    mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
    Int nx = u * px + w * x;
    Int ny = u * py + w * y;  // = gg
    Int zx = (y / gg) * px - (py / gg) * x;  // y-component cancels
    A = gcd(A, zx);
    px = nx;
    py = ny;
  }
  if (!have || A == 0) throw Error(ErrorKind::Domain, "generators do not span a rank-2 lattice");
  if (py < 0) {
    py = -py;
    px = -px;
  }
  A = abs(A);
  Int B = px - fdiv(px, A) * A;
  FracIdeal r(d);
  Int g = gcd(gcd(gcd(D, A), B), py);
  r.den_ = D / g;
  r.a_ = A / g;
  r.b_ = B / g;
  r.c_ = py / g;
  return r;
}

FracIdeal FracIdeal::generated_by(long d, const std::vector<QuadElem>& gens) {
  std::vector<QuadElem> span;
  QuadElem w = QuadElem::omega(d);
  for (const auto& g : gens) {
    span.push_back(g);
    span.push_back(g * w);
  }
  return from_z_span(d, span);
}

FracIdeal FracIdeal::principal(const QuadElem& g) {
  if (g.is_zero()) throw Error(ErrorKind::Domain, "zero ideal");
  return generated_by(g.d(), {g});
}

QuadElem FracIdeal::b1() const { return QuadElem(d_, a_, 0, den_); }
QuadElem FracIdeal::b2() const { return QuadElem(d_, b_, c_, den_); }

Rat FracIdeal::norm() const {
  Rat r(a_ * c_, den_ * den_);
  r.canonicalize();
  return r;
}

void FracIdeal::coords(const QuadElem& x, Rat& u, Rat& v) const {
  Rat den(den_);
  v = x.b() * den / Rat(c_);
  u = (x.a() * den - v * Rat(b_)) / Rat(a_);
  u.canonicalize();
  v.canonicalize();
}

bool FracIdeal::contains(const QuadElem& x) const {
  Rat u, v;
  coords(x, u, v);
  return u.get_den() == 1 && v.get_den() == 1;
}

void FracIdeal::check_same(const FracIdeal& o) const {
  if (d_ != o.d_) throw Error(ErrorKind::Domain, "ideals from different fields");
}

FracIdeal FracIdeal::operator*(const FracIdeal& o) const {
  check_same(o);
  QuadElem p = b1(), q = b2(), r = o.b1(), s = o.b2();
  return from_z_span(d_, {p * r, p * s, q * r, q * s});
}

FracIdeal FracIdeal::operator*(const QuadElem& g) const {
  if (g.is_zero()) throw Error(ErrorKind::Domain, "zero ideal");
  return from_z_span(d_, {b1() * g, b2() * g});
}

FracIdeal FracIdeal::operator+(const FracIdeal& o) const {
  check_same(o);
  return from_z_span(d_, {b1(), b2(), o.b1(), o.b2()});
}

FracIdeal FracIdeal::conj() const { return from_z_span(d_, {b1().conj(), b2().conj()}); }

FracIdeal FracIdeal::inverse() const {
  Rat inv = 1 / norm();
  return from_z_span(d_, {b1().conj() * inv, b2().conj() * inv});
}

FracIdeal FracIdeal::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FracIdeal r(d_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool FracIdeal::operator==(const FracIdeal& o) const {
  return d_ == o.d_ && den_ == o.den_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

std::string FracIdeal::str() const {
  std::ostringstream os;
  os << "[" << b1().str() << ", " << b2().str() << "]";
  return os.str();
}

// ---- GammaMatrix ----

GammaMatrix GammaMatrix::identity(long disc) {
  return {QuadElem(disc, 1, 0), QuadElem(disc), QuadElem(disc), QuadElem(disc, 1, 0)};
}

GammaMatrix GammaMatrix::operator*(const GammaMatrix& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

GammaMatrix GammaMatrix::inverse() const { return {d, -b, -c, a}; }

bool GammaMatrix::is_valid() const {
  if (!(a.is_integral() && b.is_integral() && c.is_integral() && d.is_integral())) return false;
  return det() == QuadElem(a.d(), 1, 0);
}

std::string GammaMatrix::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

// ---- forms ----

BinaryForm reduce_form(BinaryForm f) {
  if (f.a <= 0 || f.c <= 0) throw Error(ErrorKind::Domain, "form is not positive definite");
  for (int it = 0; it < 100000; ++it) {
    if (f.b > f.a || f.b <= -f.a) {
      // b -> b + 2ka into (-a, a]
      Int k = fdiv(f.a - f.b, 2 * f.a);
      Int nb = f.b + 2 * k * f.a;
      f.c = f.c + k * f.b + k * k * f.a;
      f.b = nb;
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    break;
  }
  if ((f.a == f.c || f.b == f.a || f.b == -f.a) && f.b < 0) f.b = -f.b;
  return f;
}

namespace {

// Form N(x*alpha - y*beta)/N(a) of the oriented basis alpha = b1, beta = b2.
BinaryForm ideal_form(const FracIdeal& a) {
  QuadElem al = a.b1(), be = a.b2();
  Rat n = a.norm();
  Rat A = al.norm() / n;
  Rat B = -(al * be.conj()).trace() / n;
  Rat C = be.norm() / n;
  if (A.get_den() != 1 || B.get_den() != 1 || C.get_den() != 1)
    throw Error(ErrorKind::Internal, "ideal form is not integral");
  return reduce_form({A.get_num(), B.get_num(), C.get_num()});
}

}  // namespace

// ---- Smith normal form ----

SmithForm smith_normal_form(const IntMatrix& A0) {
  const size_t m = A0.size();
  const size_t n = m ? A0[0].size() : 0;
  SmithForm R;
  R.S = A0;
  auto ident = [](size_t k) {
    IntMatrix I(k, std::vector<Int>(k, 0));
    for (size_t i = 0; i < k; ++i) I[i][i] = 1;
    return I;
  };
  R.U = ident(m);
  R.Uinv = ident(m);
  R.V = ident(n);
  R.Vinv = ident(n);
  auto& S = R.S;

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(S[i], S[j]);
    std::swap(R.U[i], R.U[j]);
    for (size_t k = 0; k < m; ++k) std::swap(R.Uinv[k][i], R.Uinv[k][j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t k = 0; k < m; ++k) std::swap(S[k][i], S[k][j]);
    for (size_t k = 0; k < n; ++k) std::swap(R.V[k][i], R.V[k][j]);
    std::swap(R.Vinv[i], R.Vinv[j]);
  };
  // row_i -= q * row_t
  auto row_sub = [&](size_t i, size_t t, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < n; ++k) S[i][k] -= q * S[t][k];
    for (size_t k = 0; k < m; ++k) R.U[i][k] -= q * R.U[t][k];
    for (size_t k = 0; k < m; ++k) R.Uinv[k][t] += q * R.Uinv[k][i];
  };
  // col_j -= q * col_t
  auto col_sub = [&](size_t j, size_t t, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < m; ++k) S[k][j] -= q * S[k][t];
    for (size_t k = 0; k < n; ++k) R.V[k][j] -= q * R.V[k][t];
    for (size_t k = 0; k < n; ++k) R.Vinv[t][k] += q * R.Vinv[j][k];
  };

  for (size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      bool found = false;
      size_t pi = t, pj = t;
      Int best = 0;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j)
          if (S[i][j] != 0 && (!found || abs(S[i][j]) < best)) {
            best = abs(S[i][j]);
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) goto done;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (S[i][t] == 0) continue;
        Int q = S[i][t] / S[t][t];
        row_sub(i, t, q);
        if (S[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (S[t][j] == 0) continue;
        Int q = S[t][j] / S[t][t];
        col_sub(j, t, q);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (size_t i = t + 1; i < m && divides; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (S[i][j] % S[t][t] != 0) {
            row_sub(t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (S[t][t] < 0) {
      for (size_t k = 0; k < n; ++k) S[t][k] = -S[t][k];
      for (size_t k = 0; k < m; ++k) R.U[t][k] = -R.U[t][k];
      for (size_t k = 0; k < m; ++k) R.Uinv[k][t] = -R.Uinv[k][t];
    }
  }
done:
  return R;
}

// ---- FieldContext ----

bool is_fundamental_discriminant(long d) {
  if (d >= 0) return false;
  long r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  long m = d / 4;
  long mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && squarefree(m);
}

long normalize_discriminant(long label) {
  if (label >= 0) throw Error(ErrorKind::Usage, "discriminant must be negative");
  if (is_fundamental_discriminant(label)) return label;
  if (squarefree(label)) {
    long r = ((label % 4) + 4) % 4;
    long d = (r == 1) ? label : 4 * label;
    if (is_fundamental_discriminant(d)) return d;
  }
  throw Error(ErrorKind::Usage, "not a fundamental discriminant or squarefree label: " + std::to_string(label));
}

QuadElem FieldContext::tau() const {
  if (((d_ % 4) + 4) % 4 == 1) return QuadElem(d_, (1 - d_) / 2, 1);
  return QuadElem(d_, -d_ / 2, 1);
}

long FieldContext::units() const {
  if (d_ == -3) return 6;
  if (d_ == -4) return 4;
  return 2;
}

FieldContext::FieldContext(long d) : d_(d) {
  if (!is_fundamental_discriminant(d)) throw Error(ErrorKind::Usage, "not a fundamental discriminant: " + std::to_string(d));
  // reduced primitive forms of discriminant d
  long amax = static_cast<long>(std::sqrt(-d / 3.0)) + 1;
  for (long a = 1; a <= amax; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (a == c)) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      forms_.push_back({Int(a), Int(b), Int(c)});
    }
  }
  std::sort(forms_.begin(), forms_.end(), [](const BinaryForm& x, const BinaryForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (abs(x.b) != abs(y.b)) return abs(x.b) < abs(y.b);
    return x.b > y.b;
  });
  const int h = static_cast<int>(forms_.size());
  // ideal [a, (-b + sqrt d)/2] = [a, omega - (b + d)/2]
  for (const auto& f : forms_) {
    QuadElem g1(d, f.a, 0);
    QuadElem g2(d, -(f.b + Int(d)) / 2, 1);
    class_reps_.push_back(FracIdeal::from_z_span(d, {g1, g2}));
  }
  for (int i = 0; i < h; ++i)
    if (class_of(class_reps_[i]) != i) throw Error(ErrorKind::Internal, "class representative round trip failed");

  mult_.assign(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i)
    for (int j = i; j < h; ++j) mult_[i][j] = mult_[j][i] = class_of(class_reps_[i] * class_reps_[j]);
  inv_.assign(h, 0);
  conj_.assign(h, 0);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j)
      if (mult_[i][j] == 0) inv_[i] = j;
    conj_[i] = class_of(class_reps_[i].conj());
  }

  // generating set
  std::vector<int> S;
  std::set<int> H{0};
  for (int c = 0; c < h; ++c) {
    if (H.count(c)) continue;
    S.push_back(c);
    std::vector<int> frontier(H.begin(), H.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int s : S) {
          int y = mult_[x][s];
          if (H.insert(y).second) next.push_back(y);
        }
      frontier.swap(next);
    }
  }
  IntMatrix rel;
  {
    std::vector<Int> row(h, 0);
    row[0] = 1;
    rel.push_back(row);
  }
  for (int i = 0; i < h; ++i)
    for (int s : S) {
      std::vector<Int> row(h, 0);
      row[i] += 1;
      row[s] += 1;
      row[mult_[i][s]] -= 1;
      rel.push_back(row);
    }
  SmithForm sf = smith_normal_form(rel);
  auto class_pow = [&](int cls, Int e) {
    Int hh = h;
    Int r = e % hh;
    if (r < 0) r += hh;
    long k = r.get_si();
    int out = 0;
    for (long t = 0; t < k; ++t) out = mult_[out][cls];
    return out;
  };
  for (int j = 0; j < h; ++j) {
    Int s = sf.S[j][j];
    if (s == 1) continue;
    if (s == 0) throw Error(ErrorKind::Internal, "class group relation lattice is degenerate");
    int g = 0;
    for (int i = 0; i < h; ++i) g = mult_[g][class_pow(i, sf.Vinv[j][i])];
    orders_.push_back(s.get_si());
    gens_.push_back(g);
  }
  long prod = 1;
  for (long n : orders_) prod *= n;
  if (prod != h) throw Error(ErrorKind::Internal, "class group decomposition has wrong order");

  dlog_.assign(h, {});
  exp_index_.assign(h, -1);
  std::vector<long> e(orders_.size(), 0);
  for (long idx = 0; idx < h; ++idx) {
    long t = idx;
    int cls = 0;
    for (size_t j = 0; j < orders_.size(); ++j) {
      e[j] = t % orders_[j];
      t /= orders_[j];
      for (long k = 0; k < e[j]; ++k) cls = mult_[cls][gens_[j]];
    }
    if (!dlog_[cls].empty() || (cls == 0 && idx != 0)) throw Error(ErrorKind::Internal, "class group generators are not independent");
    dlog_[cls] = e;
    exp_index_[idx] = cls;
  }
  if (dlog_[0].empty()) dlog_[0] = std::vector<long>(orders_.size(), 0);

  for (size_t j = 0; j < orders_.size(); ++j) {
    auto g = principal_generator(class_reps_[gens_[j]].pow(orders_[j]));
    if (!g) throw Error(ErrorKind::Internal, "generator power is not principal");
    gen_alpha_.push_back(*g);
  }
}

int FieldContext::class_of(const FracIdeal& a) const {
  if (a.d() != d_) throw Error(ErrorKind::Domain, "ideal from a different field");
  BinaryForm f = ideal_form(a);
  for (size_t i = 0; i < forms_.size(); ++i)
    if (forms_[i] == f) return static_cast<int>(i);
  throw Error(ErrorKind::Internal, "reduced form not found");
}

int FieldContext::class_from_exponents(const std::vector<long>& e) const {
  long idx = 0, radix = 1;
  for (size_t j = 0; j < orders_.size(); ++j) {
    long ej = ((e[j] % orders_[j]) + orders_[j]) % orders_[j];
    idx += ej * radix;
    radix *= orders_[j];
  }
  return exp_index_[idx];
}

std::optional<QuadElem> FieldContext::principal_generator(const FracIdeal& a) const {
  QuadElem u = a.b1(), v = a.b2();
  auto inner = [](const QuadElem& x, const QuadElem& y) { return Rat((x * y.conj()).trace() / 2); };
  for (int it = 0; it < 10000; ++it) {
    if (v.norm() < u.norm()) std::swap(u, v);
    Int mu = round_div(inner(u, v) / u.norm());
    if (mu == 0) break;
    v = v - u * Rat(mu);
  }
  if (v.norm() < u.norm()) std::swap(u, v);
  if (u.norm() == a.norm()) return u;
  return std::nullopt;
}

QuadElem FieldContext::decompose(const FracIdeal& a, std::vector<long>& exps) const {
  exps = dlog(class_of(a));
  FracIdeal j = a;
  for (size_t k = 0; k < orders_.size(); ++k)
    if (exps[k]) j = j * class_reps_[gens_[k]].pow(-exps[k]);
  auto g = principal_generator(j);
  if (!g) throw Error(ErrorKind::Internal, "decomposition left a non-principal ideal");
  return *g;
}

Field make_field(long d) { return std::make_shared<const FieldContext>(d); }

// ---- residues and embeddings ----

std::vector<QuadElem> residue_system(const QuadElem& c, const FracIdeal& a) {
  if (c.is_zero()) throw Error(ErrorKind::Domain, "residue system modulo zero");
  if (c.d() != a.d()) throw Error(ErrorKind::Domain, "mixed fields");
  QuadElem e1 = a.b1(), e2 = a.b2();
  IntMatrix M(2, std::vector<Int>(2));
  for (int j = 0; j < 2; ++j) {
    Rat u, v;
    a.coords(c * (j == 0 ? e1 : e2), u, v);
    if (u.get_den() != 1 || v.get_den() != 1) throw Error(ErrorKind::Domain, "c must lie in O");
    M[0][j] = u.get_num();
    M[1][j] = v.get_num();
  }
  SmithForm sf = smith_normal_form(M);
  Int s1 = sf.S[0][0], s2 = sf.S[1][1];
  std::vector<QuadElem> out;
  for (Int y1 = 0; y1 < s1; ++y1)
    for (Int y2 = 0; y2 < s2; ++y2) {
      Int x1 = sf.Uinv[0][0] * y1 + sf.Uinv[0][1] * y2;
      Int x2 = sf.Uinv[1][0] * y1 + sf.Uinv[1][1] * y2;
      out.push_back(e1 * Rat(x1) + e2 * Rat(x2));
    }
  return out;
}

Lattice embed(const FracIdeal& a, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  return Lattice(a.b2().embed(), a.b1().embed());
}

Complex d_pairing(const FracIdeal& a, const PrecisionContext& ctx) {
  PrecGuard pg(ctx.bits());
  Lattice L = embed(a, ctx);
  return L.w1() * conj(L.w2()) - conj(L.w1()) * L.w2();
}

}  // namespace eiscoh
