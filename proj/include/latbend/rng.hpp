#pragma once

#include <cstdint>

#include "matrix.hpp"
#include "numfield.hpp"

namespace latbend {

// splitmix64; deterministic across platforms unlike std::mt19937 seeding lore
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t s_;
};

// small random element of the tower with integer coordinates
inline FElem random_elem(Rng& rng, const FieldPtr& F, long bound = 5) {
  std::vector<BaseElem> c(F->dim());
  for (auto& b : c) {
    b.u = rng.range(-bound, bound);
    if (!F->base_is_rational()) b.v = rng.range(-bound, bound);
  }
  return F->elem(std::move(c));
}

inline FElem random_nonzero(Rng& rng, const FieldPtr& F, long bound = 5) {
  for (;;) {
    FElem x = random_elem(rng, F, bound);
    if (!x.is_zero()) return x;
  }
}

// random SL2 as a short word in elementary shears: exact determinant 1
inline Mat<FElem> random_sl2(Rng& rng, const FieldPtr& F, int word_len = 4, long bound = 2) {
  Mat<FElem> m = Mat<FElem>::identity(2);
  for (int i = 0; i < word_len; ++i) {
    FElem x = random_elem(rng, F, bound);
    Mat<FElem> e = Mat<FElem>::identity(2);
    if (rng.range(0, 1))
      e.at(0, 1) = x;
    else
      e.at(1, 0) = x;
    m = m * e;
  }
  return m;
}

}  // namespace latbend
