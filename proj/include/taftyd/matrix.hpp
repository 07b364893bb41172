#pragma once

#include "taftyd/cyclotomic.hpp"

#include <vector>

namespace taftyd {

// Dense matrix over Q(zeta_n), row-major.  All entries must share one order;
// operations verify this and throw std::domain_error on a mismatch.
class CycMat {
 public:
  CycMat() : rows_(0), cols_(0), n_(0) {}
  CycMat(int rows, int cols, int n);

  static CycMat identity(int size, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int order() const { return n_; }

  const Cyclo& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  Cyclo& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

  CycMat operator*(const CycMat& o) const;
  CycMat operator+(const CycMat& o) const;
  CycMat operator-(const CycMat& o) const;
  CycMat scaled(const Cyclo& s) const;
  CycMat power(int k) const;

  bool operator==(const CycMat& o) const;
  bool operator!=(const CycMat& o) const { return !(*this == o); }
  bool is_zero() const;

  // Kronecker product; block (i,j) of the result is  this(i,j) * o.
  CycMat kron(const CycMat& o) const;

 private:
  int rows_, cols_;
  int n_;
  std::vector<Cyclo> e_;
};

// Exact rank by row-echelon elimination: pivot is the first nonzero entry in
// column order, elimination by exact division.  Deterministic.
int mat_rank(const CycMat& m);

}  // namespace taftyd
