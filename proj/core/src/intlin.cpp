#include "fiberwalk/intlin.hpp"

#include <utility>

#include "fiberwalk/errors.hpp"

namespace fiberwalk::intlin {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ParameterError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw ParameterError("rows of differing length");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& cols) {
  return from_rows(cols).transpose();
}

Vec IntMatrix::row(std::size_t i) const {
  return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec IntMatrix::col(std::size_t j) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
  if (empty()) return below;
  if (below.empty()) return *this;
  if (below.cols_ != cols_) throw ParameterError("vstack: column counts differ");
  IntMatrix out(rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ParameterError("matrix product: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vec operator*(const IntMatrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw ParameterError("matrix-vector product: dimension mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ParameterError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Row/column operations applied simultaneously to D and to the transform
// that records them, so S * A * T = D holds after every step.
struct SnfState {
  IntMatrix D, S, T;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    S.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    T.swap_cols(a, b);
  }
  // row[dst] -= q * row[src]
  void sub_row(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) -= q * D(src, j);
    for (std::size_t j = 0; j < S.cols(); ++j) S(dst, j) -= q * S(src, j);
  }
  // col[dst] -= q * col[src]
  void sub_col(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) -= q * D(i, src);
    for (std::size_t i = 0; i < T.rows(); ++i) T(i, dst) -= q * T(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < S.cols(); ++j) S(r, j) = -S(r, j);
  }
};

}  // namespace

SnfDecomposition snf(const IntMatrix& a) {
  if (a.empty()) throw ParameterError("snf: empty matrix");
  const std::size_t k = a.rows();
  const std::size_t r = a.cols();
  SnfState st{a, IntMatrix::identity(k), IntMatrix::identity(r)};
  IntMatrix& D = st.D;

  std::size_t rank = 0;
  BigInt q;
  for (std::size_t p = 0; p < std::min(k, r); ++p) {
    bool done = false;
    while (true) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pi = k, pj = r;
      for (std::size_t i = p; i < k; ++i)
        for (std::size_t j = p; j < r; ++j) {
          if (sgn(D(i, j)) == 0) continue;
          if (pi == k || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == k) {
        done = true;
        break;
      }
      st.swap_rows(p, pi);
      st.swap_cols(p, pj);

      bool clean = true;
      for (std::size_t i = p + 1; i < k; ++i) {
        if (sgn(D(i, p)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(i, p).get_mpz_t(), D(p, p).get_mpz_t());
        if (sgn(q) != 0) st.sub_row(i, p, q);
        if (sgn(D(i, p)) != 0) clean = false;
      }
      for (std::size_t j = p + 1; j < r; ++j) {
        if (sgn(D(p, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), D(p, j).get_mpz_t(), D(p, p).get_mpz_t());
        if (sgn(q) != 0) st.sub_col(j, p, q);
        if (sgn(D(p, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = k;
      for (std::size_t i = p + 1; i < k && bad == k; ++i)
        for (std::size_t j = p + 1; j < r; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(p, p).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      if (bad == k) break;
      st.sub_row(p, bad, -1);
    }
    if (done) break;
    if (sgn(D(p, p)) < 0) st.negate_row(p);
    ++rank;
  }
  return {std::move(st.S), std::move(st.T), std::move(st.D), rank};
}

MoveBasis::MoveBasis(std::vector<Vec> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw ParameterError("a move basis needs at least one vector");
  dimension_ = vectors_.front().size();
  beta_ = 0;
  for (const auto& v : vectors_) {
    if (v.size() != dimension_) throw ParameterError("move vectors of differing length");
    BigInt m = max_abs(v);
    if (m > beta_) beta_ = m;
  }
}

MoveBasis::MoveBasis(std::initializer_list<std::initializer_list<long>> vectors)
    : MoveBasis([&] {
        std::vector<Vec> out;
        for (const auto& v : vectors) {
          Vec x;
          for (long e : v) x.emplace_back(e);
          out.push_back(std::move(x));
        }
        return out;
      }()) {}

IntMatrix MoveBasis::as_columns() const { return IntMatrix::from_columns(vectors_); }

std::vector<Vec> kernel_vectors(const IntMatrix& a) {
  SnfDecomposition d = snf(a);
  std::vector<Vec> out;
  for (std::size_t j = d.rank; j < a.cols(); ++j) out.push_back(d.T.col(j));
  return out;
}

std::optional<MoveBasis> kernel_basis(const IntMatrix& a) {
  auto vectors = kernel_vectors(a);
  if (vectors.empty()) return std::nullopt;
  return MoveBasis(std::move(vectors));
}

IntegerSolver::IntegerSolver(const IntMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), snf_(snf(m)) {}

std::optional<Vec> IntegerSolver::solve(const Vec& y) const {
  if (y.size() != rows_) throw ParameterError("solve: right-hand side has wrong length");
  // M x = y  <=>  D z = S y with x = T z.
  Vec sy = snf_.S * y;
  Vec z(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const BigInt& d = snf_.D(i, i);
      if (!mpz_divisible_p(sy[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), sy[i].get_mpz_t(), d.get_mpz_t());
    } else if (sgn(sy[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf_.T * z;
}

std::optional<Vec> IntegerSolver::kernel_witness() const {
  if (snf_.rank == cols_) return std::nullopt;
  return snf_.T.col(snf_.rank);
}

std::optional<Vec> solve_integer(const IntMatrix& m, const Vec& y) {
  return IntegerSolver(m).solve(y);
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) throw ParameterError("kronecker: empty operand");
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

namespace {

bool spans_all(const std::vector<Vec>& generators, const std::vector<Vec>& targets) {
  if (targets.empty()) return true;
  if (generators.empty()) {
    for (const auto& t : targets)
      for (const auto& x : t)
        if (sgn(x) != 0) return false;
    return true;
  }
  IntegerSolver solver(IntMatrix::from_columns(generators));
  for (const auto& t : targets)
    if (!solver.solve(t)) return false;
  return true;
}

}  // namespace

bool same_lattice(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return spans_all(a, b) && spans_all(b, a);
}

}  // namespace fiberwalk::intlin
