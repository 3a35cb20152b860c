#include "latbend/symrep.hpp"

#include "doctest.h"
#include "latbend/rng.hpp"

using namespace latbend;

namespace {
FMat sl2(long a, long b, long c, long d) {
  FMat m(2, 2);
  m.at(0, 0) = FElem(a); m.at(0, 1) = FElem(b);
  m.at(1, 0) = FElem(c); m.at(1, 1) = FElem(d);
  return m;
}
}  // namespace

TEST_CASE("tau basics") {
  CHECK(tau(5, FMat::identity(2)).is_identity());

  // diag(l, 1/l) acts by monomial scaling
  auto f = Field::rationals();
  FMat d(2, 2);
  d.at(0, 0) = FElem(Rat(2));
  d.at(1, 1) = FElem(Rat(1, 2));
  FMat t3 = tau(3, d);
  CHECK(t3.at(0, 0) == FElem(4));
  CHECK(t3.at(1, 1) == FElem(1));
  CHECK(t3.at(2, 2) == FElem(Rat(1, 4)));
  CHECK(t3.at(0, 1).is_zero());

  FMat u = tau(3, sl2(1, 1, 0, 1));
  FMat expect(3, 3, {FElem(1), FElem(1), FElem(1),
                     FElem(0), FElem(1), FElem(2),
                     FElem(0), FElem(0), FElem(1)});
  CHECK(u == expect);

  CHECK_THROWS_AS(tau(4, sl2(1, 1, 1, 1)), Error);
}

TEST_CASE("tau is multiplicative over a tower") {
  auto f = Field::make(0, {BaseElem(2), BaseElem(3)});
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    FMat M = random_sl2(rng, f), N = random_sl2(rng, f);
    for (int n : {3, 4, 5}) CHECK(tau(n, M) * tau(n, N) == tau(n, M * N));
  }
}

TEST_CASE("tau determinant power") {
  auto f = Field::rationals();
  Rng rng(37);
  for (int t = 0; t < 6; ++t) {
    FMat M = random_sl2(rng, f);
    M.at(0, 0) = M.at(0, 0) * FElem(2);  // push out of SL2
    M.at(1, 0) = M.at(1, 0) * FElem(2);
    FElem dm = M.det();
    if (dm.is_zero()) continue;
    for (int n : {3, 4, 5}) {
      FElem expect(1);
      for (int i = 0; i < n * (n - 1) / 2; ++i) expect = expect * dm;
      CHECK(tau(n, M).det() == expect);
    }
  }
}

TEST_CASE("j_form values and parity") {
  FMat j3 = j_form(3);
  CHECK(j3.at(0, 2) == FElem(2));
  CHECK(j3.at(1, 1) == FElem(-1));
  CHECK(j3.at(2, 0) == FElem(2));
  CHECK(j3.at(0, 0).is_zero());

  FMat j4 = j_form(4);
  CHECK(j4.at(0, 3) == FElem(6));
  CHECK(j4.at(1, 2) == FElem(-2));
  CHECK(j4.at(2, 1) == FElem(2));
  CHECK(j4.at(3, 0) == FElem(-6));

  for (int n = 3; n <= 9; ++n) {
    FMat j = j_form(n);
    if (n % 2) CHECK(j.is_symmetric());
    else CHECK(j.is_antisymmetric());
  }
}

TEST_CASE("invariance of J under tau of SL2") {
  for (int n = 3; n <= 8; ++n) CHECK(check_invariance(n, sl2(1, 1, 0, 1)));

  auto f = Field::make(0, {BaseElem(2), BaseElem(3)});
  Rng rng(41);
  for (int t = 0; t < 6; ++t) {
    FMat M = random_sl2(rng, f);
    for (int n = 3; n <= 9; ++n) CHECK(check_invariance(n, M));
  }

  // det 2 breaks invariance
  FMat s(2, 2);
  s.at(0, 0) = FElem(2);
  s.at(1, 1) = FElem(1);
  CHECK(!check_invariance(3, s));
}

TEST_CASE("trace polynomial") {
  CHECK(trace_poly(2) == std::vector<Int>{0, 1});
  CHECK(trace_poly(3) == std::vector<Int>{-1, 0, 1});
  CHECK(trace_poly(4) == std::vector<Int>{0, -2, 0, 1});

  auto f = Field::quadratic(2);
  Rng rng(43);
  for (int t = 0; t < 6; ++t) {
    FMat M = random_sl2(rng, f);
    for (int n = 2; n <= 7; ++n)
      CHECK(phi_eval(n, M.trace()) == tau(n, M).trace());
  }
}

TEST_CASE("trace polynomial against eigenvalue expansion") {
  // Phi_n(l + 1/l) = sum l^{n-1-2i}, checked at l = 3 for n <= 12
  FElem l(3);
  FElem t = l + l.inv();
  for (int n = 2; n <= 12; ++n) {
    FElem sum(0), pw = mat_pow(FMat::identity(1), 1).at(0, 0);  // 1
    for (int i = 0; i < n; ++i) {
      FElem term(1);
      int e = n - 1 - 2 * i;
      FElem base = e >= 0 ? l : l.inv();
      for (int r = 0; r < std::abs(e); ++r) term = term * base;
      sum = sum + term;
    }
    CHECK(phi_eval(n, t) == sum);
  }
}

TEST_CASE("phi over residue fields") {
  FqSpec f5{5, 1, 0};
  CHECK(phi_eval_fq(3, Fq::make(f5, 2)) == Fq::make(f5, 3));
  FqSpec f9{3, 2, 2};
  Fq w = Fq::make(f9, 0, 1);
  CHECK(phi_eval_fq(3, w) == w * w - Fq::make(f9, 1));
}
