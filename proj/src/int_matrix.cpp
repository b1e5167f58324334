#include "ncsing/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "ncsing/error.hpp"

namespace ncsing {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::addRowMultiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::addColMultiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negateRow(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swapRows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal)
    if (d != 0) ++r;
  return r;
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t, t); ties go to
// the first in row-major order. Returns false when the block is zero.
bool findPivot(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < a.rows(); ++r)
    for (std::size_t c = t; c < a.cols(); ++c) {
      const Integer& v = a(r, c);
      if (v == 0) continue;
      Integer mag = abs(v);
      if (!found || mag < best) {
        found = true;
        best = std::move(mag);
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = 0;
    std::size_t pc = 0;
    if (!findPivot(a, t, pr, pc)) break;
    for (;;) {
      a.swapRows(t, pr);
      left.swapRows(t, pr);
      a.swapCols(t, pc);
      right.swapCols(t, pc);

      bool remainder = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const Integer q = a(r, t) / a(t, t);
        a.addRowMultiple(r, t, -q);
        left.addRowMultiple(r, t, -q);
        if (a(r, t) != 0) remainder = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const Integer q = a(t, c) / a(t, t);
        a.addColMultiple(c, t, -q);
        right.addColMultiple(c, t, -q);
        if (a(t, c) != 0) remainder = true;
      }
      if (remainder) {
        findPivot(a, t, pr, pc);
        continue;
      }

      // Row and column are clear; enforce divisibility on the trailing block.
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            a.addRowMultiple(t, r, 1);
            left.addRowMultiple(t, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) {
        pr = t;
        pc = t;
        continue;
      }
      break;
    }
    if (a(t, t) < 0) {
      a.negateRow(t);
      left.negateRow(t);
    }
  }

  SmithForm form;
  form.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) form.diagonal.push_back(a(t, t));
  form.left = std::move(left);
  form.right = std::move(right);
  return form;
}

AbelianGroup cokernelAbelianGroup(const IntMatrix& m) {
  const SmithForm form = snf(m);
  AbelianGroup group;
  group.freeRank = static_cast<long>(m.rows() - form.rank());
  for (const auto& d : form.diagonal)
    if (d > 1) group.torsion.push_back(d);
  return group;
}

}  // namespace ncsing
