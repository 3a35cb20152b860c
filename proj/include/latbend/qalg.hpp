#pragma once

#include <set>

#include "matrix.hpp"
#include "numfield.hpp"

namespace latbend {

// A place of the base field: one of its real embeddings or a prime ideal.
struct Place {
  bool finite = false;
  RealPlace real;
  PrimeIdeal prime;

  static Place at_real(RealPlace v) { return Place{false, v, {}}; }
  static Place at_prime(PrimeIdeal P) { return Place{true, {}, P}; }

  bool operator==(const Place& o) const {
    if (finite != o.finite) return false;
    return finite ? prime == o.prime : real == o.real;
  }
  bool operator<(const Place& o) const {
    if (finite != o.finite) return !finite;  // real places first
    if (!finite) {
      if (real.base_neg != o.real.base_neg) return !real.base_neg;
      return real.neg_mask < o.real.neg_mask;
    }
    return prime < o.prime;
  }
  std::string str() const;
};

class QuatAlgebra {
 public:
  QuatAlgebra(FieldPtr F, BaseElem a, BaseElem b);

  const FieldPtr& field() const { return F_; }
  const BaseElem& a() const { return a_; }
  const BaseElem& b() const { return b_; }
  bool same(const QuatAlgebra& o) const;

 private:
  FieldPtr F_;
  BaseElem a_, b_;
};

// x0 + x1 i + x2 j + x3 ij
struct QuatElem {
  std::shared_ptr<const QuatAlgebra> alg;
  BaseElem x0, x1, x2, x3;

  bool is_zero() const { return x0.is_zero() && x1.is_zero() && x2.is_zero() && x3.is_zero(); }
};

std::shared_ptr<const QuatAlgebra> quat_algebra(const FieldPtr& F, BaseElem a, BaseElem b);
QuatElem quat(const std::shared_ptr<const QuatAlgebra>& A, BaseElem x0, BaseElem x1,
              BaseElem x2, BaseElem x3);

QuatElem operator+(const QuatElem& x, const QuatElem& y);
QuatElem operator-(const QuatElem& x, const QuatElem& y);
QuatElem operator*(const QuatElem& x, const QuatElem& y);
QuatElem operator/(const QuatElem& x, const QuatElem& y);
bool operator==(const QuatElem& x, const QuatElem& y);

QuatElem quat_conj(const QuatElem& x);
BaseElem nrd(const QuatElem& x);
QuatElem quat_inv(const QuatElem& x);

// standard order Z_F<1,i,j,ij> (naive ring of integers)
bool order_contains(const QuatElem& x);
bool is_norm_one(const QuatElem& x);

// The 2x2 embedding over F(sqrt a, sqrt b) with entries
// [[x0 + sqrt(a) x1, sqrt(b) x2 + sqrt(ab) x3], [sqrt(b) x2 - sqrt(ab) x3, x0 - sqrt(a) x1]].
class QuatEmbedding {
 public:
  explicit QuatEmbedding(const std::shared_ptr<const QuatAlgebra>& A);
  const FieldPtr& tower() const { return E_; }
  const FElem& sqrt_a() const { return ra_; }
  const FElem& sqrt_b() const { return rb_; }
  Mat<FElem> embed(const QuatElem& x) const;

 private:
  std::shared_ptr<const QuatAlgebra> A_;
  FieldPtr E_;
  FElem ra_, rb_, rab_;
};

// Hilbert symbol of (a, b) at a place of the base field.  Finite places of
// odd residue characteristic use the tame formula; the even place over Q uses
// the classical unit formula; even places over a quadratic base are not
// computed directly (DyadicAmbiguity) -- see ramification_set.
int hilbert_symbol(const FieldPtr& F, const BaseElem& a, const BaseElem& b, const Place& v);

// Odd finite places where the symbol can be nontrivial.
std::vector<PrimeIdeal> symbol_support(const FieldPtr& F, const BaseElem& a, const BaseElem& b);

// All places where (a,b) ramifies.  Over a quadratic base the even-prime
// symbol is inferred from the product formula when there is a unique even
// prime; with 2 split the set is ambiguous and DyadicAmbiguity is raised.
std::set<Place> ramification_set(const FieldPtr& F, const BaseElem& a, const BaseElem& b);

// x is a norm from F(sqrt d) iff (x, d) splits everywhere.
bool is_norm_from(const FieldPtr& F, const BaseElem& x, const BaseElem& d);

}  // namespace latbend
