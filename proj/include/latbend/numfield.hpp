#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace latbend {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// Element u + v*sqrt(m) of the base field.  v stays 0 when the base is Q.
struct BaseElem {
  Rat u{0}, v{0};

  BaseElem() = default;
  BaseElem(long n) : u(n) {}
  BaseElem(Rat uu) : u(std::move(uu)) {}
  BaseElem(Rat uu, Rat vv) : u(std::move(uu)), v(std::move(vv)) {}

  bool is_zero() const { return latbend::is_zero(u) && latbend::is_zero(v); }
  bool is_rational() const { return latbend::is_zero(v); }
  bool operator==(const BaseElem& o) const { return u == o.u && v == o.v; }
};

BaseElem badd(const BaseElem& x, const BaseElem& y);
BaseElem bsub(const BaseElem& x, const BaseElem& y);
BaseElem bneg(const BaseElem& x);
BaseElem bmul(const BaseElem& x, const BaseElem& y, long m);
BaseElem bconj(const BaseElem& x);
BaseElem binv(const BaseElem& x, long m);

// Decides exactly whether x is a square in Q(sqrt m) (m = 0 for Q) and
// returns a root when it is.
std::optional<BaseElem> base_is_square(const BaseElem& x, long m);

// Character of the finite Galois quotient: bit i of mask flips sqrt(r_i);
// flip_base conjugates sqrt(m) (only valid relative to Q with rational
// radicands).
struct GaloisChar {
  unsigned mask = 0;
  bool flip_base = false;

  GaloisChar() = default;
  GaloisChar(unsigned mk, bool fb = false) : mask(mk), flip_base(fb) {}
  GaloisChar compose(const GaloisChar& o) const {
    return GaloisChar{mask ^ o.mask, flip_base != o.flip_base};
  }
  bool is_identity() const { return mask == 0 && !flip_base; }
  bool operator==(const GaloisChar& o) const {
    return mask == o.mask && flip_base == o.flip_base;
  }
};

// Real embedding: a sign for sqrt(m) and one per radicand.
struct RealPlace {
  bool base_neg = false;
  unsigned neg_mask = 0;

  bool operator==(const RealPlace& o) const {
    return base_neg == o.base_neg && neg_mask == o.neg_mask;
  }
};

struct FqSpec {
  long p = 0;
  int deg = 1;
  long s = 0;  // deg 2: residue field is F_p[w]/(w^2 - s)

  long q() const { return deg == 1 ? p : p * p; }
  bool operator==(const FqSpec& o) const { return p == o.p && deg == o.deg && s == o.s; }
};

struct PrimeIdeal {
  enum class Kind { rational, split, inert, ramified };

  long p = 0;
  Kind kind = Kind::rational;
  long root = 0;  // split: the chosen root of x^2 = m mod p

  FqSpec residue(long m) const;
  bool operator==(const PrimeIdeal& o) const {
    return p == o.p && kind == o.kind && root == o.root;
  }
  bool operator<(const PrimeIdeal& o) const {
    if (p != o.p) return p < o.p;
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    return root < o.root;
  }
  std::string str() const;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FElem {
 public:
  FElem() : c_(1) {}
  FElem(long n) : c_(1) { c_[0].u = n; }
  FElem(Rat r) : c_(1) { c_[0].u = std::move(r); }
  FElem(FieldPtr f, std::vector<BaseElem> c) : f_(std::move(f)), c_(std::move(c)) {}

  const FieldPtr& field() const { return f_; }
  const std::vector<BaseElem>& coeffs() const { return c_; }
  const BaseElem& coeff(unsigned mask) const { return c_[mask]; }

  bool is_zero() const;
  bool is_rational() const;       // lies in Q
  bool in_base() const;           // lies in the base field
  Rat as_rat() const;             // requires is_rational
  BaseElem base_part() const;     // requires in_base

  FElem operator-() const;
  FElem inv() const;

  friend FElem operator+(const FElem& x, const FElem& y);
  friend FElem operator-(const FElem& x, const FElem& y);
  friend FElem operator*(const FElem& x, const FElem& y);
  friend FElem operator/(const FElem& x, const FElem& y);
  friend bool operator==(const FElem& x, const FElem& y);
  friend bool operator!=(const FElem& x, const FElem& y) { return !(x == y); }
  FElem& operator+=(const FElem& y) { *this = *this + y; return *this; }
  FElem& operator-=(const FElem& y) { *this = *this - y; return *this; }
  FElem& operator*=(const FElem& y) { *this = *this * y; return *this; }

  // galois_apply
  FElem galois(const GaloisChar& s) const;
  // sign_at: exact sign (-1, 0, +1) of the real embedding
  int sign_at(const RealPlace& v) const;

  std::string str() const;

 private:
  friend class Field;
  static void align(FElem& x, FElem& y);
  FieldPtr f_;                  // null: plain rational in c_[0].u
  std::vector<BaseElem> c_;     // indexed by radicand subset mask
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  // field_new
  static FieldPtr rationals();
  static FieldPtr quadratic(long m);
  static FieldPtr make(long m, std::vector<BaseElem> radicands);
  static FieldPtr extend(const FieldPtr& base, std::vector<BaseElem> radicands);

  long m() const { return m_; }
  bool base_is_rational() const { return m_ == 0; }
  int k() const { return static_cast<int>(rad_.size()); }
  int dim() const { return 1 << rad_.size(); }   // degree over the base
  const std::vector<BaseElem>& radicands() const { return rad_; }
  FieldPtr base() const;                         // same base, no radicands

  bool same(const Field& o) const { return m_ == o.m_ && rad_ == o.rad_; }

  FElem zero() const { return from_rat(Rat(0)); }
  FElem one() const { return from_rat(Rat(1)); }
  FElem from_rat(Rat r) const;
  FElem from_base(BaseElem b) const;
  FElem elem(std::vector<BaseElem> coeffs) const;
  FElem sqrt_m() const;             // requires a quadratic base
  FElem radical(int i) const;       // sqrt(r_i)
  FElem basis_elem(unsigned mask) const;

  // All characters of Gal(E/base): masks 0 .. 2^k-1.
  std::vector<GaloisChar> galois_group() const;
  // Real places of the base field (one for Q, two for Q(sqrt m)).
  std::vector<RealPlace> base_places() const;
  // All valid real places of the tower extending the given base embedding.
  std::vector<RealPlace> places_over(bool base_neg) const;
  bool place_valid(const RealPlace& v) const;

  // prime_split
  std::vector<PrimeIdeal> split(long p) const;

  std::string str() const;

 private:
  Field(long m, std::vector<BaseElem> rad) : m_(m), rad_(std::move(rad)) {}
  long m_ = 0;
  std::vector<BaseElem> rad_;
};

// sign_selector: lambda in the base field negative exactly on V.
FElem sign_selector(const FieldPtr& base, const std::vector<RealPlace>& V);

// Exact sign of a base element under the chosen embedding of sqrt(m).
int base_sign(const BaseElem& x, long m, bool base_neg);

// Rational p-adic valuation (x != 0).
long val_p(const Rat& x, long p);
// Valuation of a nonzero base element at a prime ideal.
long val_at(const BaseElem& x, const PrimeIdeal& P, long m);

bool is_prime(long p);
// Smallest nonnegative root of x^2 = a mod p (p odd prime, a a residue).
long sqrt_mod(long a, long p);
int legendre(long a, long p);

// If x = s^2 * (subset product of radicands) in the tower, return sqrt(x)
// as a tower element; used to embed square roots of base elements.
std::optional<FElem> sqrt_in_tower(const FieldPtr& E, const BaseElem& x);

// Smallest tower over the base containing square roots of all xs, with the
// roots themselves.  Square or dependent entries reuse earlier slots instead
// of enlarging the tower.
struct TowerWithRoots {
  FieldPtr E;
  std::vector<FElem> roots;  // roots[i]^2 == xs[i]
};
TowerWithRoots adjoin_sqrts(const FieldPtr& base, const std::vector<BaseElem>& xs);

}  // namespace latbend
