#pragma once

#include <memory>
#include <vector>

#include "numfield.hpp"

namespace latbend {

// F_p or F_p[w]/(w^2 - s); q odd in all quadratic uses.
class Fq {
 public:
  Fq() = default;
  Fq(long n) : a_(n) {}  // integer literal; bound to a field on first contact

  static Fq make(const FqSpec& spec, long a, long b = 0);

  const FqSpec& spec() const { return spec_; }
  bool bound() const { return spec_.p != 0; }
  long a() const { return a_; }
  long b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

  Fq operator-() const;
  friend Fq operator+(const Fq& x, const Fq& y);
  friend Fq operator-(const Fq& x, const Fq& y);
  friend Fq operator*(const Fq& x, const Fq& y);
  friend Fq operator/(const Fq& x, const Fq& y);
  Fq inv() const;
  Fq pow(long e) const;
  Fq frob() const;  // x -> x^p

  // quadratic character: +1 square, -1 non-square, 0 zero
  int chi() const;

  // canonical integer key: a + b*p
  long key() const { return a_ + b_ * spec_.p; }

  std::string str() const;

 private:
  static void align(Fq& x, Fq& y);
  void normalize();
  FqSpec spec_;
  long a_ = 0, b_ = 0;
};

// all q elements, in key order
std::vector<Fq> fq_enumerate(const FqSpec& spec);

// sqrt in F_q when it exists
std::optional<Fq> fq_sqrt(const Fq& x);

// Residue of a P-integral base element (BadReduction on denominators).
Fq reduce_base(const BaseElem& x, const PrimeIdeal& P, long m);

}  // namespace latbend
