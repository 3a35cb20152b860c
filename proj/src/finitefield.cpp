#include "latbend/finitefield.hpp"

#include <sstream>

namespace latbend {

namespace {
long mod(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}
long mulmod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}
}  // namespace

Fq Fq::make(const FqSpec& spec, long a, long b) {
  Fq x;
  x.spec_ = spec;
  x.a_ = a;
  x.b_ = b;
  x.normalize();
  return x;
}

void Fq::normalize() {
  if (spec_.p == 0) return;
  a_ = mod(a_, spec_.p);
  b_ = spec_.deg == 2 ? mod(b_, spec_.p) : 0;
}

void Fq::align(Fq& x, Fq& y) {
  if (x.bound() && y.bound()) {
    if (!(x.spec_ == y.spec_)) fail(Err::FieldMismatch, "residue fields differ");
    return;
  }
  if (!x.bound() && !y.bound()) return;
  Fq& plain = x.bound() ? y : x;
  const FqSpec& s = x.bound() ? x.spec_ : y.spec_;
  plain = make(s, plain.a_, 0);
}

bool Fq::operator==(const Fq& o) const {
  Fq x = *this, y = o;
  align(x, y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

Fq Fq::operator-() const {
  Fq x = *this;
  x.a_ = -x.a_;
  x.b_ = -x.b_;
  x.normalize();
  return x;
}

Fq operator+(const Fq& xin, const Fq& yin) {
  Fq x = xin, y = yin;
  Fq::align(x, y);
  x.a_ += y.a_;
  x.b_ += y.b_;
  x.normalize();
  return x;
}

Fq operator-(const Fq& xin, const Fq& yin) {
  Fq x = xin, y = yin;
  Fq::align(x, y);
  x.a_ -= y.a_;
  x.b_ -= y.b_;
  x.normalize();
  return x;
}

Fq operator*(const Fq& xin, const Fq& yin) {
  Fq x = xin, y = yin;
  Fq::align(x, y);
  if (!x.bound()) return Fq(x.a_ * y.a_);
  long p = x.spec_.p;
  Fq r;
  r.spec_ = x.spec_;
  r.a_ = mod(mulmod(x.a_, y.a_, p) + mulmod(x.spec_.s, mulmod(x.b_, y.b_, p), p), p);
  r.b_ = mod(mulmod(x.a_, y.b_, p) + mulmod(x.b_, y.a_, p), p);
  return r;
}

Fq Fq::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero residue");
  if (!bound()) fail(Err::FieldMismatch, "unbound residue inverse");
  long p = spec_.p;
  if (spec_.deg == 1 || b_ == 0) {
    // Fermat
    long r = 1, base = a_, e = p - 2;
    while (e > 0) {
      if (e & 1) r = mulmod(r, base, p);
      base = mulmod(base, base, p);
      e >>= 1;
    }
    return make(spec_, r, 0);
  }
  // (a + bw)^-1 = (a - bw) / (a^2 - s b^2)
  long n = mod(mulmod(a_, a_, p) - mulmod(spec_.s, mulmod(b_, b_, p), p), p);
  Fq ninv = make(spec_, n, 0).inv();
  return make(spec_, a_, -b_) * ninv;
}

Fq operator/(const Fq& x, const Fq& y) { return x * y.inv(); }

Fq Fq::pow(long e) const {
  Fq base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  Fq r = bound() ? make(spec_, 1) : Fq(1);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Fq Fq::frob() const {
  if (!bound() || spec_.deg == 1) return *this;
  return make(spec_, a_, -b_);  // w^p = -w since w^2 = s is a non-residue
}

int Fq::chi() const {
  if (is_zero()) return 0;
  if (!bound()) fail(Err::FieldMismatch, "unbound residue character");
  long q = spec_.q();
  Fq r = pow((q - 1) / 2);
  return r.a_ == 1 && r.b_ == 0 ? 1 : -1;
}

std::string Fq::str() const {
  std::ostringstream os;
  os << a_;
  if (spec_.deg == 2) os << "+" << b_ << "w";
  return os.str();
}

std::vector<Fq> fq_enumerate(const FqSpec& spec) {
  std::vector<Fq> out;
  long lim = spec.deg == 2 ? spec.p : 1;
  for (long b = 0; b < lim; ++b)
    for (long a = 0; a < spec.p; ++a) out.push_back(Fq::make(spec, a, b));
  return out;
}

std::optional<Fq> fq_sqrt(const Fq& x) {
  if (x.is_zero()) return Fq::make(x.spec(), 0);
  if (x.chi() != 1) return std::nullopt;
  if (x.spec().deg == 1) return Fq::make(x.spec(), sqrt_mod(x.a(), x.spec().p));
  for (const Fq& c : fq_enumerate(x.spec()))
    if (c * c == x) return c;
  return std::nullopt;
}

Fq reduce_base(const BaseElem& x, const PrimeIdeal& P, long m) {
  long p = P.p;
  FqSpec spec = P.residue(m);
  auto need_integral = [&](const Rat& r) {
    if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p))
      fail(Err::BadReduction, "denominator divisible by p");
  };
  auto rmod = [&](const Rat& r) -> long {
    need_integral(r);
    Int num = r.get_num() % p;
    Int den = r.get_den() % p;
    long n = mod(num.get_si(), p);
    long d = mod(den.get_si(), p);
    Fq di = Fq::make(FqSpec{p, 1, 0}, d).inv();
    return mulmod(n, di.a(), p);
  };
  switch (P.kind) {
    case PrimeIdeal::Kind::rational:
      return Fq::make(spec, rmod(x.u));
    case PrimeIdeal::Kind::split: {
      if (p == 2) fail(Err::Unsupported, "reduction at an even split prime");
      // fast path: p-integral coordinates
      if (!mpz_divisible_ui_p(x.u.get_den().get_mpz_t(), p) &&
          !mpz_divisible_ui_p(x.v.get_den().get_mpz_t(), p))
        return Fq::make(spec, rmod(x.u) + mulmod(rmod(x.v), mod(P.root, p), p));
      // P-integral but conjugate-denominator case: find c with v_P(x - c) > 0
      if (!x.is_zero() && val_at(x, P, m) < 0)
        fail(Err::BadReduction, "element not integral at the prime");
      for (long c = 0; c < p; ++c) {
        BaseElem d{x.u - c, x.v};
        if (d.is_zero() || val_at(d, P, m) > 0) return Fq::make(spec, c);
      }
      fail(Err::BadReduction, "no residue found");
    }
    case PrimeIdeal::Kind::inert:
      return Fq::make(spec, rmod(x.u), rmod(x.v));
    case PrimeIdeal::Kind::ramified: {
      long r = rmod(x.u);
      need_integral(x.v);
      return Fq::make(spec, r);
    }
  }
  fail(Err::BadReduction, "unreachable");
}

}  // namespace latbend
