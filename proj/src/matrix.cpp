#include "taftyd/matrix.hpp"

namespace taftyd {

CycMat::CycMat(int rows, int cols, int n) : rows_(rows), cols_(cols), n_(n) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("CycMat: negative dimensions");
  e_.assign(static_cast<size_t>(rows) * cols, Cyclo::zero(n));
}

CycMat CycMat::identity(int size, int n) {
  CycMat m(size, size, n);
  for (int k = 0; k < size; ++k) m.at(k, k) = Cyclo::one(n);
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (n_ != o.n_) throw std::domain_error("CycMat: mixed cyclotomic orders");
  if (cols_ != o.rows_) throw std::invalid_argument("CycMat: shape mismatch in product");
  CycMat r(rows_, o.cols_, n_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Cyclo& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyclo& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

CycMat CycMat::operator+(const CycMat& o) const {
  if (n_ != o.n_) throw std::domain_error("CycMat: mixed cyclotomic orders");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMat: shape mismatch in sum");
  CycMat r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

CycMat CycMat::operator-(const CycMat& o) const {
  if (n_ != o.n_) throw std::domain_error("CycMat: mixed cyclotomic orders");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMat: shape mismatch in difference");
  CycMat r = *this;
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

CycMat CycMat::scaled(const Cyclo& s) const {
  CycMat r = *this;
  for (Cyclo& x : r.e_) x *= s;
  return r;
}

CycMat CycMat::power(int k) const {
  if (rows_ != cols_) throw std::invalid_argument("CycMat: power of non-square matrix");
  if (k < 0) throw std::invalid_argument("CycMat: negative power");
  CycMat acc = identity(rows_, n_);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

bool CycMat::operator==(const CycMat& o) const {
  if (n_ != o.n_) throw std::domain_error("CycMat: mixed cyclotomic orders");
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  return e_ == o.e_;
}

bool CycMat::is_zero() const {
  for (const Cyclo& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

CycMat CycMat::kron(const CycMat& o) const {
  if (n_ != o.n_) throw std::domain_error("CycMat: mixed cyclotomic orders");
  CycMat r(rows_ * o.rows_, cols_ * o.cols_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Cyclo& a = at(i, j);
      if (a.is_zero()) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q) {
          const Cyclo& b = o.at(p, q);
          if (b.is_zero()) continue;
          r.at(i * o.rows_ + p, j * o.cols_ + q) = a * b;
        }
    }
  return r;
}

int mat_rank(const CycMat& m) {
  int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Working copy; elimination proceeds column by column, taking the first
  // row with a nonzero entry as pivot so the result is order-independent
  // of nothing (fully deterministic).
  std::vector<std::vector<Cyclo>> w(rows, std::vector<Cyclo>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w[i][j] = m.at(i, j);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!w[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(w[rank], w[pivot]);
    Cyclo inv = w[rank][col].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (w[r][col].is_zero()) continue;
      Cyclo f = w[r][col] * inv;
      for (int c = col; c < cols; ++c) w[r][c] -= f * w[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace taftyd
