#include "support.hpp"

#include "eiscoh/denominator.hpp"

#include <algorithm>
#include <numeric>

using namespace test;

namespace {

std::vector<long> zeros_for(const Field& F) { return std::vector<long>(F->orders().size(), 0); }

CMatrix permuted(const CMatrix& m, const std::vector<int>& p) {
  CMatrix out = m;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out[i][j] = m[p[i]][p[j]];
  return out;
}

}  // namespace

TEST_CASE("basis matrix at d = -7 is 1/4") {
  EISCOH_PREC();
  auto F = make_field(-7);
  HeckeCharacter chi = build_character(F, {}, ctx());
  BasisMatrix M = basis_matrix(chi, period_from_table(-7, ctx()), ctx());
  REQUIRE(M.entries.size() == 1);
  CHECK(close(M.entries[0][0], Complex(Real(1) / Real(4)), 1e-100));
}

TEST_CASE("basis matrix at d = -15 is a group matrix") {
  EISCOH_PREC();
  auto F = make_field(-15);
  for (long root : {0L, 1L}) {
    HeckeCharacter chi = build_character(F, {root}, ctx());
    BasisMatrix M = basis_matrix(chi, period_for(-15, ctx()), ctx());
    REQUIRE(M.entries.size() == 2);
    CHECK(M.root_choices == std::vector<long>{root});
    CHECK(close(M.entries[0][0], M.entries[1][1], 1e-100));
    CHECK(close(M.entries[0][1], M.entries[1][0], 1e-100));
  }
}

TEST_CASE("determinant is invariant under simultaneous permutation") {
  EISCOH_PREC();
  for (long d : {-23L, -39L}) {
    auto F = make_field(d);
    HeckeCharacter chi = build_character(F, zeros_for(F), ctx());
    BasisMatrix M = basis_matrix(chi, period_for(d, ctx()), ctx());
    Complex base = determinant(M.entries);
    std::vector<int> p(M.entries.size());
    std::iota(p.begin(), p.end(), 0);
    int seen = 0;
    while (std::next_permutation(p.begin(), p.end()) && seen < 6) {
      ++seen;
      CHECK(abs(determinant(permuted(M.entries, p)) - base) < Real(1e-100) * (Real(1) + abs(base)));
    }
  }
}

TEST_CASE("determinant of small matrices") {
  EISCOH_PREC();
  CMatrix m = {{Complex(2), Complex(1)}, {Complex(3), Complex(4)}};
  CHECK(close(determinant(m), Complex(5), 1e-100));
  CMatrix z = {{Complex(1), Complex(2)}, {Complex(2), Complex(4)}};
  CHECK(abs(determinant(z)) < Real(1e-100));
  CMatrix c = {{Complex(0), cx("0", "1"), Complex(0)}, {Complex(1), Complex(0), Complex(0)}, {Complex(0), Complex(0), Complex(3)}};
  CHECK(close(determinant(c), cx("0", "-3"), 1e-100));
}

TEST_CASE("Dedekind determinant equals the product of L-values") {
  EISCOH_PREC();
  {
    auto F = make_field(-11);
    HeckeCharacter chi = build_character(F, {}, ctx());
    PeriodData pd = period_from_table(-11, ctx());
    Complex det = determinant(basis_matrix(chi, pd, ctx()).entries);
    CHECK(close(det, L_alg_int(chi, pd, ctx()).first, 1e-100));
    CHECK(dedekind_determinant_check(chi, pd, ctx()) < Real(1e-100));
  }
  for (long d : {-15L, -23L}) {
    auto F = make_field(d);
    for (long root : {0L, 1L}) {
      HeckeCharacter chi = build_character(F, std::vector<long>(F->orders().size(), root), ctx());
      CHECK(dedekind_determinant_check(chi, period_for(d, ctx()), ctx()) < Real(1e-90));
    }
  }
}

TEST_CASE("group determinant lemma on random functions") {
  EISCOH_PREC();
  CounterRng rng(0, 50);
  for (const std::vector<long>& orders : {std::vector<long>{2}, std::vector<long>{3}, std::vector<long>{2, 2}}) {
    long n = 1;
    for (long o : orders) n *= o;
    for (int t = 0; t < 10; ++t) {
      std::vector<Complex> f;
      for (long i = 0; i < n; ++i) f.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
      CHECK(group_determinant_residual(orders, f) < Real(1e-100));
    }
  }
}

TEST_CASE("denominator report") {
  EISCOH_PREC();
  DenominatorReport r19 = denominator_report(-19, ctx());
  REQUIRE(r19.generator.ok());
  CHECK(r19.stable);
  CHECK(r19.generator.rational == Rat(2));
  CHECK(r19.excluded_primes == std::vector<long>{2, 19});
  CHECK(r19.bound_matches);
  CHECK(close(r19.bound_quarter * Real(2), r19.bound_half, 1e-100));

  DenominatorReport r43 = denominator_report(-43, ctx());
  REQUIRE(r43.generator.ok());
  CHECK(r43.generator.rational == Rat(12));
  CHECK(r43.bound_matches);

  DenominatorReport r7 = denominator_report(-7, ctx());
  REQUIRE(r7.generator.ok());
  CHECK(r7.generator.rational == Rat(1, 2));
  CHECK(r7.excluded_primes == std::vector<long>{2, 7});

  CHECK(error_kind([] { denominator_report(-15, ctx()); }) == ErrorKind::Unsupported);
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(-326) == std::vector<long>{2, 163});
  CHECK(prime_divisors(360) == std::vector<long>{2, 3, 5});
  CHECK(prime_divisors(97) == std::vector<long>{97});
}
