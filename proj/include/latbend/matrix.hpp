#pragma once

#include <vector>

#include "error.hpp"

namespace latbend {

// Dense matrix over an exact field type K.  K needs: default ctor == 0,
// K(long), +, -, *, /, unary -, ==, is_zero().
template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, std::vector<K> data) : r_(r), c_(c), a_(std::move(data)) {
    if (a_.size() != static_cast<size_t>(r) * c) fail(Err::BadInput, "matrix data size");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  K& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  const std::vector<K>& data() const { return a_; }

  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    check_shape(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] + o.a_[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    check_shape(o);
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = m.a_[i] - o.a_[i];
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) fail(Err::BadInput, "matrix product shape");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int l = 0; l < c_; ++l) {
        const K& x = at(i, l);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) m.at(i, j) = m.at(i, j) + x * o.at(l, j);
      }
    return m;
  }

  Mat scaled(const K& s) const {
    Mat m = *this;
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    return *this == identity(r_);
  }

  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool is_antisymmetric() const { return is_square() && *this == -transpose(); }

  K det() const {
    if (!is_square()) fail(Err::BadInput, "det of non-square");
    Mat w = *this;
    K d(1);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!w.at(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) return K(0);
      if (piv != col) {
        w.swap_rows(piv, col);
        d = -d;
      }
      d = d * w.at(col, col);
      K inv_p = K(1) / w.at(col, col);
      for (int i = col + 1; i < r_; ++i) {
        if (w.at(i, col).is_zero()) continue;
        K f = w.at(i, col) * inv_p;
        for (int j = col; j < c_; ++j) w.at(i, j) = w.at(i, j) - f * w.at(col, j);
      }
    }
    return d;
  }

  Mat inverse() const {
    if (!is_square()) fail(Err::BadInput, "inverse of non-square");
    int n = r_;
    Mat w = *this;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!w.at(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) fail(Err::NotInvertible, "singular matrix");
      if (piv != col) {
        w.swap_rows(piv, col);
        inv.swap_rows(piv, col);
      }
      K ip = K(1) / w.at(col, col);
      for (int j = 0; j < n; ++j) {
        w.at(col, j) = ip * w.at(col, j);
        inv.at(col, j) = ip * inv.at(col, j);
      }
      for (int i = 0; i < n; ++i) {
        if (i == col || w.at(i, col).is_zero()) continue;
        K f = w.at(i, col);
        for (int j = 0; j < n; ++j) {
          w.at(i, j) = w.at(i, j) - f * w.at(col, j);
          inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  // Basis of the right kernel.
  std::vector<std::vector<K>> kernel() const {
    Mat w = *this;
    int n = c_;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < r_; ++col) {
      int piv = -1;
      for (int i = row; i < r_; ++i)
        if (!w.at(i, col).is_zero()) { piv = i; break; }
      if (piv < 0) continue;
      if (piv != row) w.swap_rows(piv, row);
      K ip = K(1) / w.at(row, col);
      for (int j = 0; j < n; ++j) w.at(row, j) = ip * w.at(row, j);
      for (int i = 0; i < r_; ++i) {
        if (i == row || w.at(i, col).is_zero()) continue;
        K f = w.at(i, col);
        for (int j = 0; j < n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(row, j);
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int freec = 0; freec < n; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<K> vec(n);
      vec[freec] = K(1);
      for (size_t r = 0; r < pivot_col.size(); ++r)
        vec[pivot_col[r]] = -w.at(static_cast<int>(r), freec);
      basis.push_back(std::move(vec));
    }
    return basis;
  }

  int rank() const {
    return c_ - static_cast<int>(kernel().size());
  }

  K trace() const {
    if (!is_square()) fail(Err::BadInput, "trace of non-square");
    K t(0);
    for (int i = 0; i < r_; ++i) t = t + at(i, i);
    return t;
  }

  void swap_rows(int i, int j) {
    for (int col = 0; col < c_; ++col) std::swap(at(i, col), at(j, col));
  }

 private:
  void check_shape(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(Err::BadInput, "matrix shape mismatch");
  }
  int r_ = 0, c_ = 0;
  std::vector<K> a_;
};

template <class K>
Mat<K> mat_pow(Mat<K> base, long e) {
  if (!base.is_square()) fail(Err::BadInput, "power of non-square");
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Mat<K> r = Mat<K>::identity(base.rows());
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace latbend
