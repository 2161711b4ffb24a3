#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "starhess/errors.hpp"

namespace starhess {

/// Small dense matrix over a ring R.  Row-major, value semantics.
template <class R>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, R::zero()) {}

  static DenseMatrix identity(size_t n) {
    DenseMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = R::one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  R& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const R& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  DenseMatrix leading(size_t n) const {
    if (n > rows_ || n > cols_) throw IndexOutOfRange("leading block larger than matrix");
    DenseMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) out.at(i, j) = at(i, j);
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw IndexOutOfRange("matrix dimensions do not match");
    DenseMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const R& bkj = b.at(k, j);
          if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_, cols_;
  std::vector<R> data_;
};

}  // namespace starhess
