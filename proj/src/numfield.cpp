#include "latbend/numfield.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace latbend {

// ---------------------------------------------------------------- base field

BaseElem badd(const BaseElem& x, const BaseElem& y) { return {x.u + y.u, x.v + y.v}; }
BaseElem bsub(const BaseElem& x, const BaseElem& y) { return {x.u - y.u, x.v - y.v}; }
BaseElem bneg(const BaseElem& x) { return {-x.u, -x.v}; }
BaseElem bconj(const BaseElem& x) { return {x.u, -x.v}; }

BaseElem bmul(const BaseElem& x, const BaseElem& y, long m) {
  return {x.u * y.u + m * (x.v * y.v), x.u * y.v + x.v * y.u};
}

BaseElem binv(const BaseElem& x, long m) {
  if (x.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  Rat n = x.u * x.u - m * (x.v * x.v);
  // n == 0 would force sqrt(m) rational; m is a nonsquare
  return {x.u / n, -x.v / n};
}

static std::optional<Rat> rat_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

std::optional<BaseElem> base_is_square(const BaseElem& x, long m) {
  if (x.is_zero()) return BaseElem(0);
  if (m == 0 || x.is_rational()) {
    if (auto r = rat_sqrt(x.u)) return BaseElem(*r);
    if (m != 0) {
      // x = (t*sqrt(m))^2 = t^2 m
      if (auto t = rat_sqrt(x.u / m)) return BaseElem(Rat(0), *t);
    }
    return std::nullopt;
  }
  // solve (s + t sqrt m)^2 = u + v sqrt m:  s^2 + m t^2 = u, 2 s t = v
  Rat w2 = x.u * x.u - m * (x.v * x.v);
  auto w = rat_sqrt(w2);
  if (!w) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rat s2 = (pick == 0) ? Rat((x.u + *w) / 2) : Rat((x.u - *w) / 2);
    auto s = rat_sqrt(s2);
    if (!s || latbend::is_zero(*s)) continue;
    Rat t = x.v / (2 * *s);
    BaseElem root{*s, t};
    if (bmul(root, root, m) == x) return root;
  }
  return std::nullopt;
}

int base_sign(const BaseElem& x, long m, bool base_neg) {
  int t = sgn(x.u);
  if (x.is_rational()) return t;
  int w = sgn(x.v) * (base_neg ? -1 : 1);
  if (t == 0) return w;
  if (t == w) return t;
  Rat uu = x.u * x.u, mvv = m * (x.v * x.v);
  if (uu > mvv) return t;
  return w;  // uu == mvv impossible: m is a nonsquare
}

// ------------------------------------------------------------ interval engine

namespace {

struct QIv {
  Rat lo, hi;
};

QIv iv_point(const Rat& x) { return {x, x}; }

QIv iv_add(const QIv& a, const QIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QIv iv_mul(const QIv& a, const QIv& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

QIv iv_scale(const Rat& c, const QIv& a) {
  if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

// Encloses sqrt(x) for x >= 0 with denominator 2^prec.
QIv iv_sqrt_rat(const Rat& x, unsigned prec) {
  if (sgn(x) == 0) return iv_point(Rat(0));
  Int a = x.get_num() * x.get_den();
  Int scaled = a << (2 * prec);
  Int b;
  mpz_sqrt(b.get_mpz_t(), scaled.get_mpz_t());
  Int denom = x.get_den() << prec;
  return {Rat(b, denom), Rat(b + 1, denom)};
}

// Encloses u + v*sqrt(m) under the chosen embedding.
QIv iv_base(const BaseElem& x, long m, bool base_neg, unsigned prec) {
  if (x.is_rational()) return iv_point(x.u);
  QIv sm = iv_sqrt_rat(Rat(m), prec);
  if (base_neg) sm = {-sm.hi, -sm.lo};
  return iv_add(iv_point(x.u), iv_scale(x.v, sm));
}

// Encloses sqrt(r) at the place; r must be positive there.
QIv iv_sqrt_base(const BaseElem& r, long m, bool base_neg, unsigned prec) {
  unsigned q = prec;
  QIv rv = iv_base(r, m, base_neg, q);
  while (sgn(rv.lo) <= 0) {
    q *= 2;
    if (q > (1u << 24)) fail(Err::ComplexPlace, "radicand not positive at place");
    rv = iv_base(r, m, base_neg, q);
  }
  QIv lo = iv_sqrt_rat(rv.lo, prec);
  QIv hi = iv_sqrt_rat(rv.hi, prec);
  return {lo.lo, hi.hi};
}

}  // namespace

// ---------------------------------------------------------------------- FElem

void FElem::align(FElem& x, FElem& y) {
  if (x.f_ && y.f_) {
    if (!x.f_->same(*y.f_)) fail(Err::FieldMismatch, "elements of different fields");
    return;
  }
  if (!x.f_ && !y.f_) return;
  FElem& plain = x.f_ ? y : x;
  const FieldPtr& f = x.f_ ? x.f_ : y.f_;
  if (!plain.c_[0].is_rational()) fail(Err::FieldMismatch, "cannot lift non-rational");
  plain = f->from_rat(plain.c_[0].u);
}

bool FElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BaseElem& b) { return b.is_zero(); });
}

bool FElem::is_rational() const {
  if (!std::all_of(c_.begin() + 1, c_.end(), [](const BaseElem& b) { return b.is_zero(); }))
    return false;
  return c_[0].is_rational();
}

bool FElem::in_base() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const BaseElem& b) { return b.is_zero(); });
}

Rat FElem::as_rat() const {
  if (!is_rational()) fail(Err::FieldMismatch, "element is not rational");
  return c_[0].u;
}

BaseElem FElem::base_part() const {
  if (!in_base()) fail(Err::FieldMismatch, "element is not in the base field");
  return c_[0];
}

FElem FElem::operator-() const {
  FElem r = *this;
  for (auto& b : r.c_) b = bneg(b);
  return r;
}

FElem operator+(const FElem& xin, const FElem& yin) {
  FElem x = xin, y = yin;
  FElem::align(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] = badd(x.c_[i], y.c_[i]);
  return x;
}

FElem operator-(const FElem& xin, const FElem& yin) {
  FElem x = xin, y = yin;
  FElem::align(x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] = bsub(x.c_[i], y.c_[i]);
  return x;
}

bool operator==(const FElem& xin, const FElem& yin) {
  FElem x = xin, y = yin;
  FElem::align(x, y);
  return x.c_ == y.c_;
}

std::string FElem::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].u.get_str();
    if (!latbend::is_zero(c_[i].v)) os << "+" << c_[i].v.get_str() << "*s";
  }
  os << "]";
  return os.str();
}

// -------------------------------------------------------------------- Field

namespace {
// subset products of radicands, shared per field through a side table
struct FieldCache {
  std::vector<BaseElem> subprod;
};
}  // namespace

static std::vector<BaseElem> subset_products(long m, const std::vector<BaseElem>& rad) {
  size_t n = size_t{1} << rad.size();
  std::vector<BaseElem> sp(n, BaseElem(1));
  for (size_t mask = 1; mask < n; ++mask) {
    int bit = std::countr_zero(mask);
    sp[mask] = bmul(sp[mask & (mask - 1)], rad[bit], m);
  }
  return sp;
}

FieldPtr Field::rationals() { return make(0, {}); }

FieldPtr Field::quadratic(long m) { return make(m, {}); }

FieldPtr Field::make(long m, std::vector<BaseElem> radicands) {
  if (m != 0) {
    if (m <= 1) fail(Err::NotSquarefree, "base parameter must exceed 1");
    for (long d = 2; d * d <= m; ++d)
      if (m % (d * d) == 0) fail(Err::NotSquarefree, "base parameter not squarefree");
  }
  if (radicands.size() > 3) fail(Err::BadInput, "at most three radicands");
  for (auto& r : radicands) {
    if (r.is_zero()) fail(Err::ZeroRadicand, "zero radicand");
    if (m == 0 && !r.is_rational()) fail(Err::FieldMismatch, "radicand not in base field");
  }
  size_t n = size_t{1} << radicands.size();
  auto sp = subset_products(m, radicands);
  for (size_t mask = 1; mask < n; ++mask)
    if (base_is_square(sp[mask], m))
      fail(Err::DependentRadicands, "radicand subset product is a square");
  return FieldPtr(new Field(m, std::move(radicands)));
}

FieldPtr Field::extend(const FieldPtr& base, std::vector<BaseElem> radicands) {
  if (base->k() != 0) fail(Err::BadInput, "extend expects a base field");
  return make(base->m(), std::move(radicands));
}

FieldPtr Field::base() const { return make(m_, {}); }

FElem Field::from_rat(Rat r) const {
  std::vector<BaseElem> c(dim());
  c[0].u = std::move(r);
  return FElem(shared_from_this(), std::move(c));
}

FElem Field::from_base(BaseElem b) const {
  if (m_ == 0 && !b.is_rational()) fail(Err::FieldMismatch, "base is rational");
  std::vector<BaseElem> c(dim());
  c[0] = std::move(b);
  return FElem(shared_from_this(), std::move(c));
}

FElem Field::elem(std::vector<BaseElem> coeffs) const {
  if (coeffs.size() != static_cast<size_t>(dim())) fail(Err::BadInput, "coefficient count");
  return FElem(shared_from_this(), std::move(coeffs));
}

FElem Field::sqrt_m() const {
  if (m_ == 0) fail(Err::BadInput, "rational base has no sqrt(m)");
  return from_base(BaseElem(Rat(0), Rat(1)));
}

FElem Field::radical(int i) const { return basis_elem(1u << i); }

FElem Field::basis_elem(unsigned mask) const {
  if (mask >= static_cast<unsigned>(dim())) fail(Err::BadInput, "basis mask");
  std::vector<BaseElem> c(dim());
  c[mask] = BaseElem(1);
  return FElem(shared_from_this(), std::move(c));
}

std::vector<GaloisChar> Field::galois_group() const {
  std::vector<GaloisChar> g;
  for (unsigned mask = 0; mask < static_cast<unsigned>(dim()); ++mask)
    g.push_back(GaloisChar{mask, false});
  return g;
}

std::vector<RealPlace> Field::base_places() const {
  if (m_ == 0) return {RealPlace{}};
  return {RealPlace{false, 0}, RealPlace{true, 0}};
}

bool Field::place_valid(const RealPlace& v) const {
  if (m_ == 0 && v.base_neg) return false;
  for (auto& r : rad_)
    if (base_sign(r, m_, v.base_neg) <= 0) return false;
  return true;
}

std::vector<RealPlace> Field::places_over(bool base_neg) const {
  if (!place_valid(RealPlace{base_neg, 0})) return {};
  std::vector<RealPlace> out;
  for (unsigned mask = 0; mask < static_cast<unsigned>(dim()); ++mask)
    out.push_back(RealPlace{base_neg, mask});
  return out;
}

std::string Field::str() const {
  std::ostringstream os;
  os << (m_ == 0 ? "Q" : "Q(sqrt " + std::to_string(m_) + ")");
  if (!rad_.empty()) {
    os << "[";
    for (size_t i = 0; i < rad_.size(); ++i) {
      if (i) os << ",";
      os << "sqrt(" << rad_[i].u.get_str();
      if (!latbend::is_zero(rad_[i].v)) os << "+" << rad_[i].v.get_str() << "*sm";
      os << ")";
    }
    os << "]";
  }
  return os.str();
}

FElem operator*(const FElem& xin, const FElem& yin) {
  FElem x = xin, y = yin;
  FElem::align(x, y);
  if (!x.f_) return FElem(x.c_[0].u * y.c_[0].u);
  const Field& F = *x.f_;
  long m = F.m();
  auto sp = subset_products(m, F.radicands());
  size_t n = x.c_.size();
  std::vector<BaseElem> out(n);
  for (size_t s = 0; s < n; ++s) {
    if (x.c_[s].is_zero()) continue;
    for (size_t t = 0; t < n; ++t) {
      if (y.c_[t].is_zero()) continue;
      BaseElem term = bmul(bmul(x.c_[s], y.c_[t], m), sp[s & t], m);
      out[s ^ t] = badd(out[s ^ t], term);
    }
  }
  return FElem(x.f_, std::move(out));
}

FElem FElem::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  if (!f_) return FElem(Rat(1) / c_[0].u);
  // descend the tower: x = y + z*sqrt(r_top), 1/x = conj(x) / (x*conj(x))
  int k = f_->k();
  FElem x = *this;
  FElem acc = f_->one();
  for (int level = k; level >= 1; --level) {
    unsigned bit = 1u << (level - 1);
    bool trivial = true;
    for (unsigned mask = 0; mask < x.c_.size(); ++mask)
      if ((mask & bit) && !x.c_[mask].is_zero()) trivial = false;
    FElem cj = x.galois(GaloisChar{bit, false});
    if (!trivial) {
      acc = acc * cj;
      x = x * cj;  // now free of sqrt(r_{level-1})
    }
  }
  BaseElem inv0 = binv(x.c_[0], f_->m());
  return acc * f_->from_base(inv0);
}

FElem operator/(const FElem& x, const FElem& y) {
  if (y.is_zero()) fail(Err::DivisionByZero, "division by zero");
  return x * y.inv();
}

FElem FElem::galois(const GaloisChar& s) const {
  if (!f_) {
    return *this;
  }
  if (s.flip_base) {
    if (f_->m() == 0) fail(Err::BadInput, "no base conjugation over Q");
    for (auto& r : f_->radicands())
      if (!r.is_rational())
        fail(Err::Unsupported, "base conjugation needs rational radicands");
  }
  FElem r = *this;
  for (unsigned mask = 0; mask < r.c_.size(); ++mask) {
    if (std::popcount(mask & s.mask) % 2) r.c_[mask] = bneg(r.c_[mask]);
    if (s.flip_base) r.c_[mask] = bconj(r.c_[mask]);
  }
  return r;
}

int FElem::sign_at(const RealPlace& v) const {
  if (is_zero()) return 0;
  if (!f_) return sgn(c_[0].u);
  const Field& F = *f_;
  if (!F.place_valid(v)) fail(Err::ComplexPlace, "place is complex");
  if (in_base()) return base_sign(c_[0], F.m(), v.base_neg);
  long m = F.m();
  int k = F.k();
  for (unsigned prec = 32; prec <= (1u << 22); prec *= 2) {
    std::vector<QIv> roots(k);
    for (int i = 0; i < k; ++i) {
      roots[i] = iv_sqrt_base(F.radicands()[i], m, v.base_neg, prec);
      if (v.neg_mask & (1u << i)) roots[i] = {-roots[i].hi, -roots[i].lo};
    }
    QIv total = iv_point(Rat(0));
    for (unsigned mask = 0; mask < c_.size(); ++mask) {
      if (c_[mask].is_zero()) continue;
      QIv term = iv_base(c_[mask], m, v.base_neg, prec);
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) term = iv_mul(term, roots[i]);
      total = iv_add(total, term);
    }
    if (sgn(total.lo) > 0) return 1;
    if (sgn(total.hi) < 0) return -1;
  }
  fail(Err::Unsupported, "sign refinement did not converge");
}

// ----------------------------------------------------------- sign selector

FElem sign_selector(const FieldPtr& base, const std::vector<RealPlace>& V) {
  if (base->k() != 0) fail(Err::BadInput, "sign_selector expects a base field");
  if (base->base_is_rational()) {
    return V.empty() ? FElem(1) : FElem(-1);
  }
  bool want_id = false, want_conj = false;
  for (auto& v : V) (v.base_neg ? want_conj : want_id) = true;
  if (want_id && want_conj) return base->from_rat(Rat(-1));
  if (!want_id && !want_conj) return base->from_rat(Rat(1));
  long m = base->m();
  long r = static_cast<long>(std::sqrt(static_cast<double>(m)));
  while (r * r > m) --r;
  while ((r + 1) * (r + 1) <= m) ++r;  // r = floor(sqrt m), 0 <= r < sqrt(m)
  BaseElem lam = want_conj ? BaseElem(Rat(-r), Rat(1))   // sqrt(m) - r
                           : BaseElem(Rat(r), Rat(-1));  // r - sqrt(m)
  return base->from_base(lam);
}

// --------------------------------------------------------------- primes

bool is_prime(long p) {
  if (p < 2) return false;
  Int z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

int legendre(long a, long p) {
  Int za(a), zp(p);
  return mpz_legendre(za.get_mpz_t(), zp.get_mpz_t());
}

namespace {
long mulmod(long a, long b, long p) {
  return static_cast<long>(static_cast<__int128>(a) * b % p);
}
long powmod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

long sqrt_mod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) fail(Err::BadInput, "not a quadratic residue");
  if (p % 4 == 3) {
    long r = powmod(a, (p + 1) / 4, p);
    return std::min(r, p - r);
  }
  // Tonelli-Shanks
  long q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  long z = 2;
  while (legendre(z, p) != -1) ++z;
  long mm = s;
  long c = powmod(z, q, p);
  long t = powmod(a, q, p);
  long r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0, tt = t;
    while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
    long b = powmod(c, 1L << (mm - i - 1), p);
    mm = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

FqSpec PrimeIdeal::residue(long m) const {
  switch (kind) {
    case Kind::rational:
    case Kind::split:
    case Kind::ramified:
      return FqSpec{p, 1, 0};
    case Kind::inert: {
      if (p == 2) fail(Err::Unsupported, "quadratic residue field at 2");
      long s = m % p;
      if (s < 0) s += p;
      return FqSpec{p, 2, s};
    }
  }
  return {};
}

std::string PrimeIdeal::str() const {
  switch (kind) {
    case Kind::rational: return std::to_string(p);
    case Kind::split: return std::to_string(p) + "r" + std::to_string(root);
    case Kind::inert: return std::to_string(p) + "i";
    case Kind::ramified: return std::to_string(p) + "e";
  }
  return {};
}

std::vector<PrimeIdeal> Field::split(long p) const {
  if (!is_prime(p)) fail(Err::NotPrime, "not a prime");
  if (m_ == 0) return {PrimeIdeal{p, PrimeIdeal::Kind::rational, 0}};
  if (p == 2) {
    long r = ((m_ % 8) + 8) % 8;
    if (r == 1)
      return {PrimeIdeal{2, PrimeIdeal::Kind::split, 0},
              PrimeIdeal{2, PrimeIdeal::Kind::split, 1}};
    if (r == 5) return {PrimeIdeal{2, PrimeIdeal::Kind::inert, 0}};
    return {PrimeIdeal{2, PrimeIdeal::Kind::ramified, 0}};
  }
  if (m_ % p == 0) return {PrimeIdeal{p, PrimeIdeal::Kind::ramified, 0}};
  int chi = legendre(m_ % p, p);
  if (chi == 1) {
    long r = sqrt_mod(m_ % p, p);
    return {PrimeIdeal{p, PrimeIdeal::Kind::split, r},
            PrimeIdeal{p, PrimeIdeal::Kind::split, p - r}};
  }
  return {PrimeIdeal{p, PrimeIdeal::Kind::inert, 0}};
}

// ------------------------------------------------------------- valuations

long val_p(const Rat& x, long p) {
  if (latbend::is_zero(x)) fail(Err::BadInput, "valuation of zero");
  long v = 0;
  Int n = x.get_num();
  Int d = x.get_den();
  Int q, r;
  for (;;) {
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p);
    if (sgn(r) != 0) break;
    n = q;
    ++v;
  }
  for (;;) {
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p);
    if (sgn(r) != 0) break;
    d = q;
    --v;
  }
  return v;
}

namespace {
// residue of a p-integral rational mod p
long rat_mod(const Rat& x, long p) {
  Int num = x.get_num() % p;
  Int den = x.get_den() % p;
  long n = num.get_si() % p;
  long d = den.get_si() % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  long dinv = powmod(d, p - 2, p);
  return mulmod(n, dinv, p);
}
}  // namespace

long val_at(const BaseElem& x, const PrimeIdeal& P, long m) {
  if (x.is_zero()) fail(Err::BadInput, "valuation of zero");
  long p = P.p;
  switch (P.kind) {
    case PrimeIdeal::Kind::rational:
      return val_p(x.u, p);
    case PrimeIdeal::Kind::inert: {
      long v = std::numeric_limits<long>::max();
      if (!latbend::is_zero(x.u)) v = std::min(v, val_p(x.u, p));
      if (!latbend::is_zero(x.v)) v = std::min(v, val_p(x.v, p));
      return v;
    }
    case PrimeIdeal::Kind::ramified: {
      long v = std::numeric_limits<long>::max();
      if (!latbend::is_zero(x.u)) v = std::min(v, 2 * val_p(x.u, p));
      if (!latbend::is_zero(x.v)) v = std::min(v, 2 * val_p(x.v, p) + 1);
      return v;
    }
    case PrimeIdeal::Kind::split: {
      if (p == 2) fail(Err::Unsupported, "valuation at an even split prime");
      long s = std::numeric_limits<long>::max();
      if (!latbend::is_zero(x.u)) s = std::min(s, val_p(x.u, p));
      if (!latbend::is_zero(x.v)) s = std::min(s, val_p(x.v, p));
      Int pw = 1;
      for (long i = 0; i < std::abs(s); ++i) pw *= p;
      Rat scale = s >= 0 ? Rat(1, pw) : Rat(pw, 1);
      BaseElem y{x.u * scale, x.v * scale};
      long ry = (rat_mod(y.u, p) + mulmod(rat_mod(y.v, p), P.root % p, p)) % p;
      if (ry != 0) return s;
      Rat N = y.u * y.u - m * (y.v * y.v);
      return s + val_p(N, p);
    }
  }
  return 0;
}

// ------------------------------------------------------------ tower roots

std::optional<FElem> sqrt_in_tower(const FieldPtr& E, const BaseElem& x) {
  long m = E->m();
  auto sp = subset_products(m, E->radicands());
  for (unsigned mask = 0; mask < static_cast<unsigned>(E->dim()); ++mask) {
    BaseElem q = bmul(x, binv(sp[mask], m), m);
    if (auto s = base_is_square(q, m))
      return E->from_base(*s) * E->basis_elem(mask);
  }
  return std::nullopt;
}

TowerWithRoots adjoin_sqrts(const FieldPtr& base, const std::vector<BaseElem>& xs) {
  if (base->k() != 0) fail(Err::BadInput, "adjoin_sqrts expects a base field");
  std::vector<BaseElem> rad;
  FieldPtr E = base;
  for (auto& x : xs) {
    if (x.is_zero()) fail(Err::ZeroRadicand, "zero radicand");
    if (!sqrt_in_tower(E, x)) {
      rad.push_back(x);
      E = Field::make(base->m(), rad);
    }
  }
  TowerWithRoots out;
  out.E = E;
  for (auto& x : xs) out.roots.push_back(*sqrt_in_tower(E, x));
  return out;
}

}  // namespace latbend
