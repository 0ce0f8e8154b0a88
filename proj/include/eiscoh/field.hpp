#pragma once

#include "eiscoh/lattice.hpp"
#include "eiscoh/numerics.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eiscoh {

using Int = mpz_class;
using Rat = mpq_class;

// (x + y*omega)/den in K = Q(sqrt(d)), omega = (d + sqrt(d))/2.
class QuadElem {
 public:
  explicit QuadElem(long d = -7) : d_(d), x_(0), y_(0), den_(1) {}
  QuadElem(long d, Int x, Int y, Int den = 1);
  static QuadElem from_coords(long d, const Rat& a, const Rat& b);  // a + b*omega
  static QuadElem omega(long d) { return QuadElem(d, 0, 1); }
  static QuadElem sqrt_d(long d) { return QuadElem(d, -d, 2); }

  long d() const { return d_; }
  const Int& x() const { return x_; }
  const Int& y() const { return y_; }
  const Int& den() const { return den_; }
  Rat a() const { return Rat(x_, den_); }
  Rat b() const { return Rat(y_, den_); }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_integral() const { return den_ == 1; }
  Rat norm() const;
  Rat trace() const;
  QuadElem conj() const;
  QuadElem inverse() const;
  // Embedding with Im(sqrt(d)) > 0, at working precision.
  Complex embed() const;
  std::string str() const;

  QuadElem operator+(const QuadElem& o) const;
  QuadElem operator-(const QuadElem& o) const;
  QuadElem operator*(const QuadElem& o) const;
  QuadElem operator/(const QuadElem& o) const { return *this * o.inverse(); }
  QuadElem operator-() const { return QuadElem(d_, -x_, -y_, den_); }
  QuadElem operator*(const Rat& r) const;
  bool operator==(const QuadElem& o) const;
  bool operator!=(const QuadElem& o) const { return !(*this == o); }

 private:
  void normalize();
  long d_;
  Int x_, y_, den_;
};

// Fractional ideal (1/den)(Z*a + Z*(b + c*omega)), a, c > 0, 0 <= b < a,
// gcd(den, a, b, c) = 1.
class FracIdeal {
 public:
  explicit FracIdeal(long d = -7);  // O
  static FracIdeal from_z_span(long d, const std::vector<QuadElem>& gens);
  static FracIdeal generated_by(long d, const std::vector<QuadElem>& gens);
  static FracIdeal principal(const QuadElem& g);

  long d() const { return d_; }
  const Int& den() const { return den_; }
  const Int& ha() const { return a_; }
  const Int& hb() const { return b_; }
  const Int& hc() const { return c_; }
  QuadElem b1() const;  // a/den (rational)
  QuadElem b2() const;  // (b + c*omega)/den
  Rat norm() const;
  bool is_integral() const { return den_ == 1; }
  bool contains(const QuadElem& x) const;
  // Rational coordinates of x in the basis (b1, b2).
  void coords(const QuadElem& x, Rat& u, Rat& v) const;

  FracIdeal operator*(const FracIdeal& o) const;
  FracIdeal operator*(const QuadElem& g) const;
  FracIdeal operator+(const FracIdeal& o) const;
  FracIdeal inverse() const;
  FracIdeal conj() const;
  FracIdeal pow(long e) const;
  bool operator==(const FracIdeal& o) const;
  bool operator!=(const FracIdeal& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void check_same(const FracIdeal& o) const;
  long d_;
  Int den_, a_, b_, c_;
};

struct GammaMatrix {
  QuadElem a, b, c, d;
  static GammaMatrix identity(long disc);
  GammaMatrix operator*(const GammaMatrix& o) const;
  GammaMatrix inverse() const;
  QuadElem det() const { return a * d - b * c; }
  bool is_valid() const;  // integral entries, det 1
  bool operator==(const GammaMatrix& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  std::string str() const;
};

struct BinaryForm {
  Int a, b, c;
  bool operator==(const BinaryForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

BinaryForm reduce_form(BinaryForm f);

class FieldContext {
 public:
  explicit FieldContext(long d);

  long d() const { return d_; }
  int h() const { return static_cast<int>(class_reps_.size()); }
  const std::vector<FracIdeal>& class_reps() const { return class_reps_; }
  const std::vector<BinaryForm>& forms() const { return forms_; }
  // Cyclic decomposition: orders n_j and generator class indices g_j.
  const std::vector<long>& orders() const { return orders_; }
  const std::vector<int>& generators() const { return gens_; }
  // alpha_j with rep(g_j)^(n_j) = (alpha_j)
  const std::vector<QuadElem>& generator_relations() const { return gen_alpha_; }

  QuadElem omega() const { return QuadElem::omega(d_); }
  // 1 and tau form a reduced basis of O.
  QuadElem tau() const;
  FracIdeal unit_ideal() const { return FracIdeal(d_); }
  long units() const;  // |O^x|

  int class_of(const FracIdeal& a) const;
  int mul_class(int i, int j) const { return mult_[i][j]; }
  int inv_class(int i) const { return inv_[i]; }
  int conj_class(int i) const { return conj_[i]; }
  // Exponent vector of a class in the cyclic decomposition.
  const std::vector<long>& dlog(int cls) const { return dlog_[cls]; }
  int class_from_exponents(const std::vector<long>& e) const;
  std::optional<QuadElem> principal_generator(const FracIdeal& a) const;
  // a = (beta) * prod rep(g_j)^(e_j), e_j in [0, n_j)
  QuadElem decompose(const FracIdeal& a, std::vector<long>& exps) const;

 private:
  long d_;
  std::vector<FracIdeal> class_reps_;
  std::vector<BinaryForm> forms_;
  std::vector<long> orders_;
  std::vector<int> gens_;
  std::vector<QuadElem> gen_alpha_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_, conj_;
  std::vector<std::vector<long>> dlog_;
  std::vector<int> exp_index_;  // mixed-radix exponent index -> class
};

using Field = std::shared_ptr<const FieldContext>;

bool is_fundamental_discriminant(long d);
// Accepts a fundamental discriminant or a squarefree label and returns the discriminant.
long normalize_discriminant(long label);
Field make_field(long d);

// Coset representatives of a / c*a.
std::vector<QuadElem> residue_system(const QuadElem& c, const FracIdeal& a);

Lattice embed(const FracIdeal& a, const PrecisionContext& ctx);
Complex d_pairing(const FracIdeal& a, const PrecisionContext& ctx);

// Smith normal form U*A*V = S over the integers.
using IntMatrix = std::vector<std::vector<Int>>;
struct SmithForm {
  IntMatrix S, U, Uinv, V, Vinv;
};
SmithForm smith_normal_form(const IntMatrix& A);

}  // namespace eiscoh
