#include "latbend/qalg.hpp"

#include <algorithm>

#include "latbend/finitefield.hpp"

namespace latbend {

std::string Place::str() const {
  if (!finite) {
    std::string s = "oo";
    if (real.base_neg) s += "-";
    return s;
  }
  return prime.str();
}

QuatAlgebra::QuatAlgebra(FieldPtr F, BaseElem a, BaseElem b)
    : F_(std::move(F)), a_(std::move(a)), b_(std::move(b)) {
  if (F_->k() != 0) fail(Err::BadInput, "quaternion algebras live over base fields");
  if (a_.is_zero() || b_.is_zero()) fail(Err::ZeroArgument, "algebra parameters must be nonzero");
}

bool QuatAlgebra::same(const QuatAlgebra& o) const {
  return F_->same(*o.F_) && a_ == o.a_ && b_ == o.b_;
}

std::shared_ptr<const QuatAlgebra> quat_algebra(const FieldPtr& F, BaseElem a, BaseElem b) {
  return std::make_shared<const QuatAlgebra>(F, std::move(a), std::move(b));
}

QuatElem quat(const std::shared_ptr<const QuatAlgebra>& A, BaseElem x0, BaseElem x1,
              BaseElem x2, BaseElem x3) {
  return QuatElem{A, std::move(x0), std::move(x1), std::move(x2), std::move(x3)};
}

static void align(const QuatElem& x, const QuatElem& y) {
  if (!x.alg->same(*y.alg)) fail(Err::AlgebraMismatch, "elements of different algebras");
}

QuatElem operator+(const QuatElem& x, const QuatElem& y) {
  align(x, y);
  return {x.alg, badd(x.x0, y.x0), badd(x.x1, y.x1), badd(x.x2, y.x2), badd(x.x3, y.x3)};
}

QuatElem operator-(const QuatElem& x, const QuatElem& y) {
  align(x, y);
  return {x.alg, bsub(x.x0, y.x0), bsub(x.x1, y.x1), bsub(x.x2, y.x2), bsub(x.x3, y.x3)};
}

QuatElem operator*(const QuatElem& x, const QuatElem& y) {
  align(x, y);
  long m = x.alg->field()->m();
  const BaseElem &a = x.alg->a(), &b = x.alg->b();
  auto mul = [m](const BaseElem& p, const BaseElem& q) { return bmul(p, q, m); };
  // (x0 + x1 i + x2 j + x3 ij)(y0 + y1 i + y2 j + y3 ij) with i^2=a, j^2=b, ij=-ji
  BaseElem z0 = badd(badd(mul(x.x0, y.x0), mul(a, mul(x.x1, y.x1))),
                     badd(mul(b, mul(x.x2, y.x2)), bneg(mul(mul(a, b), mul(x.x3, y.x3)))));
  BaseElem z1 = badd(badd(mul(x.x0, y.x1), mul(x.x1, y.x0)),
                     bsub(mul(b, mul(x.x3, y.x2)), mul(b, mul(x.x2, y.x3))));
  BaseElem z2 = badd(badd(mul(x.x0, y.x2), mul(x.x2, y.x0)),
                     bsub(mul(a, mul(x.x1, y.x3)), mul(a, mul(x.x3, y.x1))));
  BaseElem z3 = badd(bsub(mul(x.x0, y.x3), bneg(mul(x.x3, y.x0))),
                     bsub(mul(x.x1, y.x2), mul(x.x2, y.x1)));
  return {x.alg, z0, z1, z2, z3};
}

bool operator==(const QuatElem& x, const QuatElem& y) {
  align(x, y);
  return x.x0 == y.x0 && x.x1 == y.x1 && x.x2 == y.x2 && x.x3 == y.x3;
}

QuatElem quat_conj(const QuatElem& x) {
  return {x.alg, x.x0, bneg(x.x1), bneg(x.x2), bneg(x.x3)};
}

BaseElem nrd(const QuatElem& x) {
  long m = x.alg->field()->m();
  const BaseElem &a = x.alg->a(), &b = x.alg->b();
  auto mul = [m](const BaseElem& p, const BaseElem& q) { return bmul(p, q, m); };
  // x0^2 - a x1^2 - b x2^2 + ab x3^2
  BaseElem r = mul(x.x0, x.x0);
  r = bsub(r, mul(a, mul(x.x1, x.x1)));
  r = bsub(r, mul(b, mul(x.x2, x.x2)));
  r = badd(r, mul(mul(a, b), mul(x.x3, x.x3)));
  return r;
}

QuatElem quat_inv(const QuatElem& x) {
  BaseElem n = nrd(x);
  if (n.is_zero()) fail(Err::DivisionByZero, "inverse of a zero-norm element");
  long m = x.alg->field()->m();
  BaseElem ni = binv(n, m);
  QuatElem c = quat_conj(x);
  return {x.alg, bmul(c.x0, ni, m), bmul(c.x1, ni, m), bmul(c.x2, ni, m), bmul(c.x3, ni, m)};
}

QuatElem operator/(const QuatElem& x, const QuatElem& y) { return x * quat_inv(y); }

static bool base_integral(const BaseElem& x) {
  return x.u.get_den() == 1 && x.v.get_den() == 1;
}

bool order_contains(const QuatElem& x) {
  return base_integral(x.x0) && base_integral(x.x1) && base_integral(x.x2) &&
         base_integral(x.x3);
}

bool is_norm_one(const QuatElem& x) { return nrd(x) == BaseElem(1); }

// ------------------------------------------------------------- embedding

QuatEmbedding::QuatEmbedding(const std::shared_ptr<const QuatAlgebra>& A) : A_(A) {
  auto t = adjoin_sqrts(A->field(), {A->a(), A->b()});
  E_ = t.E;
  ra_ = t.roots[0];
  rb_ = t.roots[1];
  rab_ = ra_ * rb_;
}

Mat<FElem> QuatEmbedding::embed(const QuatElem& x) const {
  if (!x.alg->same(*A_)) fail(Err::AlgebraMismatch, "element of a different algebra");
  FElem x0 = E_->from_base(x.x0), x1 = E_->from_base(x.x1);
  FElem x2 = E_->from_base(x.x2), x3 = E_->from_base(x.x3);
  Mat<FElem> M(2, 2);
  M.at(0, 0) = x0 + ra_ * x1;
  M.at(0, 1) = rb_ * x2 + rab_ * x3;
  M.at(1, 0) = rb_ * x2 - rab_ * x3;
  M.at(1, 1) = x0 - ra_ * x1;
  return M;
}

// --------------------------------------------------------- hilbert symbols

namespace {

// u odd rational: residue mod 8 as a 2-adic unit
long unit_mod8(const Rat& u) {
  long n = static_cast<long>(mpz_fdiv_ui(u.get_num().get_mpz_t(), 8));
  long d = static_cast<long>(mpz_fdiv_ui(u.get_den().get_mpz_t(), 8));
  static const long inv8[8] = {0, 1, 0, 3, 0, 5, 0, 7};
  return (n * inv8[d]) % 8;
}

int eps2(long u8) { return (u8 % 4 == 3) ? 1 : 0; }         // (u-1)/2 mod 2
int omega2(long u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; }  // (u^2-1)/8 mod 2

// classical dyadic symbol over Q
int hilbert_dyadic_q(const Rat& a, const Rat& b) {
  long alpha = val_p(a, 2), beta = val_p(b, 2);
  Rat u = a / Rat(Int(1) << std::abs(alpha), 1);
  if (alpha < 0) u = a * Rat(Int(1) << (-alpha), 1);
  Rat v = b / Rat(Int(1) << std::abs(beta), 1);
  if (beta < 0) v = b * Rat(Int(1) << (-beta), 1);
  long u8 = unit_mod8(u), v8 = unit_mod8(v);
  long e = eps2(u8) * eps2(v8) + alpha * omega2(v8) + beta * omega2(u8);
  return (e % 2 == 0) ? 1 : -1;
}

// tame symbol at an odd finite place
int hilbert_tame(const FieldPtr& F, const BaseElem& a, const BaseElem& b,
                 const PrimeIdeal& P) {
  long m = F->m();
  long va = val_at(a, P, m), vb = val_at(b, P, m);
  // alpha = (-1)^{va vb} a^{vb} b^{-va} is a unit at P
  auto bpow_to = [&](const BaseElem& base, long e) {
    BaseElem r(1);
    BaseElem x = e >= 0 ? base : binv(base, m);
    for (long i = 0; i < std::abs(e); ++i) r = bmul(r, x, m);
    return r;
  };
  BaseElem alpha = bmul(bpow_to(a, vb), bpow_to(b, -va), m);
  if ((va * vb) % 2 != 0) alpha = bneg(alpha);
  Fq r = reduce_base(alpha, P, m);
  int chi = r.chi();
  if (chi == 0) fail(Err::BadInput, "tame unit reduced to zero");
  return chi;
}

}  // namespace

int hilbert_symbol(const FieldPtr& F, const BaseElem& a, const BaseElem& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) fail(Err::ZeroArgument, "hilbert symbol of zero");
  if (!v.finite) {
    int sa = base_sign(a, F->m(), v.real.base_neg);
    int sb = base_sign(b, F->m(), v.real.base_neg);
    return (sa < 0 && sb < 0) ? -1 : 1;
  }
  const PrimeIdeal& P = v.prime;
  if (P.p == 2) {
    if (F->base_is_rational()) return hilbert_dyadic_q(a.u, b.u);
    fail(Err::DyadicAmbiguity, "even symbol over a quadratic base is inferred, not computed");
  }
  return hilbert_tame(F, a, b, P);
}

std::vector<PrimeIdeal> symbol_support(const FieldPtr& F, const BaseElem& a,
                                       const BaseElem& b) {
  long m = F->m();
  // rational primes below any place where v(a) or v(b) may be nonzero
  std::set<long> ps;
  auto collect = [&](const BaseElem& x) {
    Rat norm = F->base_is_rational() ? x.u : Rat(x.u * x.u - m * (x.v * x.v));
    Int n = norm.get_num() * norm.get_den();
    n = abs(n);
    for (long d = 2; Int(d) * d <= n; ++d) {
      if (n % d == 0) {
        ps.insert(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) ps.insert(n.get_si());
  };
  collect(a);
  collect(b);
  if (m != 0) ps.insert(static_cast<long>(m));  // its odd divisors ramify
  std::vector<PrimeIdeal> out;
  for (long p0 : ps) {
    std::vector<long> factors;
    long n = p0;
    for (long d = 2; d * d <= n; ++d)
      while (n % d == 0) { factors.push_back(d); n /= d; }
    if (n > 1) factors.push_back(n);
    for (long p : factors) {
      if (p == 2) continue;
      for (auto& P : F->split(p))
        out.push_back(P);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Place> ramification_set(const FieldPtr& F, const BaseElem& a, const BaseElem& b) {
  if (a.is_zero() || b.is_zero()) fail(Err::ZeroArgument, "ramification set of zero");
  std::set<Place> ram;
  int parity = 1;
  for (auto& v : F->base_places()) {
    Place pl = Place::at_real(v);
    if (hilbert_symbol(F, a, b, pl) == -1) {
      ram.insert(pl);
      parity = -parity;
    }
  }
  for (auto& P : symbol_support(F, a, b)) {
    Place pl = Place::at_prime(P);
    if (hilbert_symbol(F, a, b, pl) == -1) {
      ram.insert(pl);
      parity = -parity;
    }
  }
  if (F->base_is_rational()) {
    Place two = Place::at_prime(PrimeIdeal{2, PrimeIdeal::Kind::rational, 0});
    if (hilbert_symbol(F, a, b, two) == -1) {
      ram.insert(two);
      parity = -parity;
    }
    if (parity != 1) fail(Err::Unsupported, "reciprocity violated (internal)");
    return ram;
  }
  auto evens = F->split(2);
  if (evens.size() > 1)
    fail(Err::DyadicAmbiguity, "even prime is split; symbols not separable");
  if (parity != 1) ram.insert(Place::at_prime(evens[0]));
  return ram;
}

bool is_norm_from(const FieldPtr& F, const BaseElem& x, const BaseElem& d) {
  return ramification_set(F, x, d).empty();
}

}  // namespace latbend
