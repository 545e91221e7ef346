#pragma once

// Exact integer linear algebra: Smith normal form, integral kernels,
// integer system solving and Kronecker products. Every entry is a GMP
// integer, so no operation can overflow.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "fiberwalk/types.hpp"

namespace fiberwalk::intlin {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Every row must have the same length; throws ParameterError otherwise.
  static IntMatrix from_rows(const std::vector<Vec>& rows);
  static IntMatrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  IntMatrix transpose() const;
  /// Stacks `below` under this matrix; column counts must agree.
  IntMatrix vstack(const IntMatrix& below) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Vec operator*(const IntMatrix& a, const Vec& x);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

/// S * A * T = D with S, T unimodular and D in Smith form.
struct SnfDecomposition {
  IntMatrix S;
  IntMatrix T;
  IntMatrix D;
  /// Number of nonzero diagonal entries of D.
  std::size_t rank = 0;
};

/// Smith normal form by elementary row/column reduction. The pivot is the
/// nonzero entry of least absolute value, ties going to the lowest row and
/// then the lowest column, so the decomposition is deterministic. Diagonal
/// entries are nonnegative and each divides the next.
SnfDecomposition snf(const IntMatrix& a);

/// An ordered, nonempty list of moves b_1..b_n in Z^r.
class MoveBasis {
 public:
  /// Throws ParameterError if `vectors` is empty or the lengths disagree.
  explicit MoveBasis(std::vector<Vec> vectors);
  MoveBasis(std::initializer_list<std::initializer_list<long>> vectors);

  std::size_t size() const noexcept { return vectors_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  const Vec& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vec>& vectors() const noexcept { return vectors_; }
  /// Maximum absolute entry over all moves.
  const BigInt& beta() const noexcept { return beta_; }

  /// r x n matrix whose columns are the moves.
  IntMatrix as_columns() const;

  friend bool operator==(const MoveBasis&, const MoveBasis&) = default;

 private:
  std::vector<Vec> vectors_;
  std::size_t dimension_ = 0;
  BigInt beta_;
};

/// The columns T e_{j+1}, ..., T e_r of the Smith decomposition of `a`.
/// Empty when the kernel is trivial.
std::vector<Vec> kernel_vectors(const IntMatrix& a);

/// Integral kernel basis as a MoveBasis; std::nullopt when ker(a) = 0.
std::optional<MoveBasis> kernel_basis(const IntMatrix& a);

/// Solves M x = y over the integers using a cached Smith decomposition.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& m);

  /// Some integer solution, or std::nullopt when none exists. The solution
  /// is unique whenever rank() == cols().
  std::optional<Vec> solve(const Vec& y) const;

  std::size_t rank() const noexcept { return snf_.rank; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// A nonzero x with M x = 0, if one exists.
  std::optional<Vec> kernel_witness() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  SnfDecomposition snf_;
};

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& y);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// True iff the integer lattices spanned by the two vector lists coincide.
bool same_lattice(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace fiberwalk::intlin
