#include "latbend/qalg.hpp"

#include "doctest.h"
#include "latbend/rng.hpp"
#include "latbend/symrep.hpp"

using namespace latbend;

namespace {

QuatElem random_quat(Rng& rng, const std::shared_ptr<const QuatAlgebra>& A, long bound = 4) {
  bool quad = !A->field()->base_is_rational();
  auto re = [&] {
    return BaseElem(Rat(rng.range(-bound, bound)), quad ? Rat(rng.range(-bound, bound)) : Rat(0));
  };
  return quat(A, re(), re(), re(), re());
}

// adjugate of a 2x2
Mat<FElem> adj2(const Mat<FElem>& M) {
  Mat<FElem> A(2, 2);
  A.at(0, 0) = M.at(1, 1);
  A.at(1, 1) = M.at(0, 0);
  A.at(0, 1) = -M.at(0, 1);
  A.at(1, 0) = -M.at(1, 0);
  return A;
}

}  // namespace

TEST_CASE("norms and conjugation") {
  auto Q = Field::rationals();
  auto A = quat_algebra(Q, BaseElem(2), BaseElem(3));
  QuatElem i = quat(A, 0, 1, 0, 0), j = quat(A, 0, 0, 1, 0);
  CHECK(nrd(i) == BaseElem(-2));
  CHECK(i * i == quat(A, 2, 0, 0, 0));
  CHECK(j * j == quat(A, 3, 0, 0, 0));
  CHECK(i * j == quat(A, 0, 0, 0, 1));
  CHECK(j * i == quat(A, 0, 0, 0, -1));

  auto H = quat_algebra(Q, BaseElem(-1), BaseElem(-1));
  CHECK(nrd(quat(H, 1, 1, 1, 0)) == BaseElem(3));

  // x applied to its conjugate gives the norm as a scalar
  Rng rng(51);
  for (int t = 0; t < 12; ++t) {
    QuatElem x = random_quat(rng, A), y = random_quat(rng, A);
    CHECK(bmul(nrd(x), nrd(y), 0) == nrd(x * y));
    QuatElem n = x * quat_conj(x);
    CHECK(n == quat(A, nrd(x), 0, 0, 0));
  }

  // norm-one examples in (2,3)
  QuatElem z = quat(A, 5, 2, 0, 2);
  CHECK(nrd(z) == BaseElem(41));
  CHECK(!is_norm_one(z));
  CHECK(order_contains(z));
  CHECK(!order_contains(quat(A, BaseElem(Rat(1, 2)), 0, 0, 0)));
}

TEST_CASE("2x2 embedding is a ring map") {
  auto Q = Field::rationals();
  auto A = quat_algebra(Q, BaseElem(2), BaseElem(3));
  QuatEmbedding emb(A);
  CHECK(emb.embed(quat(A, 1, 0, 0, 0)).is_identity());
  QuatElem i = quat(A, 0, 1, 0, 0);
  CHECK(emb.embed(i) * emb.embed(i) == FMat::identity(2).scaled(emb.tower()->from_rat(2)));

  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    QuatElem x = random_quat(rng, A), y = random_quat(rng, A);
    CHECK(emb.embed(x * y) == emb.embed(x) * emb.embed(y));
    CHECK(emb.embed(x + y) == emb.embed(x) + emb.embed(y));
    CHECK(emb.embed(x).det() == emb.tower()->from_base(nrd(x)));
    CHECK(emb.embed(quat_conj(x)) == adj2(emb.embed(x)));
  }

  // collapsed tower when a == b
  auto A22 = quat_algebra(Q, BaseElem(2), BaseElem(2));
  QuatEmbedding emb22(A22);
  CHECK(emb22.tower()->k() == 1);
  Rng rng2(54);
  for (int t = 0; t < 5; ++t) {
    QuatElem x = random_quat(rng2, A22), y = random_quat(rng2, A22);
    CHECK(emb22.embed(x * y) == emb22.embed(x) * emb22.embed(y));
  }

  // quadratic base
  auto F = Field::quadratic(2);
  auto B = quat_algebra(F, BaseElem(Rat(-1), Rat(1)), BaseElem(3));  // (sqrt2-1, 3)
  QuatEmbedding embB(B);
  Rng rng3(55);
  for (int t = 0; t < 5; ++t) {
    QuatElem x = random_quat(rng3, B), y = random_quat(rng3, B);
    CHECK(embB.embed(x * y) == embB.embed(x) * embB.embed(y));
    CHECK(embB.embed(x).det() == embB.tower()->from_base(nrd(x)));
  }
}

TEST_CASE("hilbert symbols over Q") {
  auto Q = Field::rationals();
  Place real = Place::at_real(RealPlace{});
  auto at_p = [&](long p) { return Place::at_prime(Q->split(p)[0]); };

  CHECK(hilbert_symbol(Q, BaseElem(-1), BaseElem(-1), real) == -1);
  CHECK(hilbert_symbol(Q, BaseElem(-1), BaseElem(2), real) == 1);

  // units at odd p split
  CHECK(hilbert_symbol(Q, BaseElem(3), BaseElem(5), at_p(7)) == 1);

  // (2,5)_5 = legendre(2|5) = -1
  CHECK(hilbert_symbol(Q, BaseElem(2), BaseElem(5), at_p(5)) == -1);

  // brute-force oracle: 2x^2 + 5y^2 = z^2 has no primitive solution mod 25
  bool solvable = false;
  for (int x = 0; x < 25 && !solvable; ++x)
    for (int y = 0; y < 25 && !solvable; ++y)
      for (int z = 0; z < 25 && !solvable; ++z) {
        if (x % 5 == 0 && y % 5 == 0 && z % 5 == 0) continue;
        if ((2 * x * x + 5 * y * y - z * z) % 25 == 0) solvable = true;
      }
  CHECK(!solvable);

  CHECK(hilbert_symbol(Q, BaseElem(-1), BaseElem(-1), at_p(2)) == -1);
  CHECK_THROWS_AS(hilbert_symbol(Q, BaseElem(0), BaseElem(1), real), Error);
}

TEST_CASE("symbol symmetry, bimultiplicativity, steinberg") {
  auto Q = Field::rationals();
  std::vector<Place> places{Place::at_real(RealPlace{})};
  for (long p : {2L, 3L, 5L, 7L, 11L}) places.push_back(Place::at_prime(Q->split(p)[0]));

  Rng rng(57);
  for (int t = 0; t < 25; ++t) {
    long a = rng.range(-30, 30), b = rng.range(-30, 30), c = rng.range(-30, 30);
    if (!a || !b || !c) continue;
    for (auto& v : places) {
      CHECK(hilbert_symbol(Q, BaseElem(a), BaseElem(b), v) ==
            hilbert_symbol(Q, BaseElem(b), BaseElem(a), v));
      CHECK(hilbert_symbol(Q, BaseElem(a), BaseElem(Rat(b) * Rat(c)), v) ==
            hilbert_symbol(Q, BaseElem(a), BaseElem(b), v) *
                hilbert_symbol(Q, BaseElem(a), BaseElem(c), v));
      CHECK(hilbert_symbol(Q, BaseElem(a), BaseElem(-a), v) == 1);
      if (a != 1) CHECK(hilbert_symbol(Q, BaseElem(a), BaseElem(1 - a), v) == 1);
    }
  }

  // same properties at odd places of a quadratic base
  auto F = Field::quadratic(2);
  std::vector<Place> fplaces;
  for (auto& v : F->base_places()) fplaces.push_back(Place::at_real(v));
  for (long p : {3L, 5L, 7L}) fplaces.push_back(Place::at_prime(F->split(p)[0]));
  Rng rng2(58);
  for (int t = 0; t < 10; ++t) {
    BaseElem a{Rat(rng2.range(-6, 6)), Rat(rng2.range(-3, 3))};
    BaseElem b{Rat(rng2.range(-6, 6)), Rat(rng2.range(-3, 3))};
    if (a.is_zero() || b.is_zero()) continue;
    for (auto& v : fplaces) {
      CHECK(hilbert_symbol(F, a, b, v) == hilbert_symbol(F, b, a, v));
      CHECK(hilbert_symbol(F, a, bneg(a), v) == 1);
    }
  }
}

TEST_CASE("reciprocity over Q") {
  auto Q = Field::rationals();
  Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    long a = rng.range(-60, 60), b = rng.range(-60, 60);
    if (!a || !b) continue;
    int prod = hilbert_symbol(Q, BaseElem(a), BaseElem(b), Place::at_real(RealPlace{}));
    for (auto& P : symbol_support(Q, BaseElem(a), BaseElem(b)))
      prod *= hilbert_symbol(Q, BaseElem(a), BaseElem(b), Place::at_prime(P));
    prod *= hilbert_symbol(Q, BaseElem(a), BaseElem(b),
                           Place::at_prime(PrimeIdeal{2, PrimeIdeal::Kind::rational, 0}));
    CHECK(prod == 1);
  }
}

TEST_CASE("ramification sets") {
  auto Q = Field::rationals();
  auto ram = ramification_set(Q, BaseElem(-1), BaseElem(-1));
  REQUIRE(ram.size() == 2);
  CHECK(ram.count(Place::at_real(RealPlace{})) == 1);
  CHECK(ram.count(Place::at_prime(PrimeIdeal{2, PrimeIdeal::Kind::rational, 0})) == 1);

  CHECK(ramification_set(Q, BaseElem(1), BaseElem(7)).empty());

  // (2,3): tame at 3: (2|3) = -1; dyadic forced by parity
  auto r23 = ramification_set(Q, BaseElem(2), BaseElem(3));
  CHECK(r23.size() == 2);

  // over Q(sqrt2): (-1,-1) ramifies at both real places and the even prime
  auto F = Field::quadratic(2);
  auto rf = ramification_set(F, BaseElem(-1), BaseElem(-1));
  REQUIRE(rf.size() % 2 == 0);
  CHECK(rf.count(Place::at_real(RealPlace{false, 0})) == 1);
  CHECK(rf.count(Place::at_real(RealPlace{true, 0})) == 1);
  bool has_even = false;
  for (auto& v : rf) has_even |= v.finite && v.prime.p == 2;
  CHECK(!has_even);  // parity already even: no even-prime ramification

  // split even prime: ambiguous
  auto F17 = Field::quadratic(17);
  CHECK_THROWS_AS(ramification_set(F17, BaseElem(-1), BaseElem(-1)), Error);

  // even cardinality on random quadratic-base pairs
  Rng rng(61);
  for (int t = 0; t < 15; ++t) {
    BaseElem a{Rat(rng.range(-9, 9)), Rat(rng.range(-4, 4))};
    BaseElem b{Rat(rng.range(-9, 9)), Rat(rng.range(-4, 4))};
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(ramification_set(F, a, b).size() % 2 == 0);
  }
}

TEST_CASE("norm classes from quadratic extensions") {
  auto Q = Field::rationals();
  // 7 = norm from Q(sqrt 2)? x^2 - 2y^2 = 7: x=3,y=1. yes
  CHECK(is_norm_from(Q, BaseElem(7), BaseElem(2)));
  // 3 is not a norm from Q(sqrt 2): 3 inert, x^2-2y^2=3 unsolvable mod 3
  CHECK(!is_norm_from(Q, BaseElem(3), BaseElem(2)));
  CHECK(is_norm_from(Q, BaseElem(-1), BaseElem(2)));  // 1^2 - 2*1^2
}
