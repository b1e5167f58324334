#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ncsing/rational.hpp"

namespace ncsing {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const { return entries_; }

  IntMatrix transpose() const;

  // Elementary operations used by the Smith reduction; they are unimodular.
  void swapRows(std::size_t a, std::size_t b);
  void swapCols(std::size_t a, std::size_t b);
  void addRowMultiple(std::size_t target, std::size_t source, const Integer& factor);
  void addColMultiple(std::size_t target, std::size_t source, const Integer& factor);
  void negateRow(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free elimination. Square input required.
Integer determinant(const IntMatrix& m);

/// Smith normal form: left * m * right is diagonal with `diagonal` on it
/// (length min(rows, cols)), each entry dividing the next and zeros last.
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const;
};

SmithForm snf(const IntMatrix& m);

/// Finitely generated abelian group Z^freeRank + (+)_i Z/torsion[i].
struct AbelianGroup {
  long freeRank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of m: generators index rows, relations index columns.
AbelianGroup cokernelAbelianGroup(const IntMatrix& m);

}  // namespace ncsing
