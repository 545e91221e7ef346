#pragma once

// Randomized invariant checks shared by the unit tests (few trials) and the
// acceptance binary (1000 trials). Each returns the number of failing
// instances; `log` receives a description of the first few failures.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "fiberwalk/binomial.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/intlin.hpp"
#include "oracles.hpp"

namespace props {

using fiberwalk::BigInt;
using fiberwalk::Point;
using fiberwalk::Vec;
using fiberwalk::intlin::IntMatrix;
using fiberwalk::intlin::MoveBasis;
namespace bn = fiberwalk::binomial;
namespace il = fiberwalk::intlin;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Nonnegative matrix with no zero column, so the row sum certifies finiteness.
inline IntMatrix random_design(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m = random_matrix(rng, rows, cols, 0, 3);
  for (std::size_t j = 0; j < cols; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rows; ++i) zero = zero && m(i, j) == 0;
    if (zero) m(rng() % rows, j) = 1;
  }
  return m;
}

/// A random kernel basis with 1 <= n <= max_n moves (retries until one exists).
inline MoveBasis random_basis(std::mt19937_64& rng, std::size_t max_n) {
  while (true) {
    const std::size_t r = 2 + rng() % 3;
    const std::size_t k = 1 + rng() % (r - 1);
    auto B = il::kernel_basis(random_design(rng, k, r));
    if (B && B->size() <= max_n) return *B;
  }
}

inline bool is_unimodular(const IntMatrix& m) {
  BigInt d = fiberwalk::intlin::determinant(m);
  return d == 1 || d == -1;
}

inline std::size_t snf_identities(std::size_t trials, std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t k = 1 + rng() % 6, r = 1 + rng() % 6;
    IntMatrix A = random_matrix(rng, k, r, -5, 5);
    auto s = il::snf(A);
    bool ok = s.S * A * s.T == s.D && is_unimodular(s.S) && is_unimodular(s.T);
    // Diagonal shape, nonnegativity, divisibility chain, zeros trailing.
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        if (i != j) ok = s.D(i, j) == 0;
        else if (s.D(i, i) != 0) {
          ok = s.D(i, i) > 0 && nonzero == i;
          ++nonzero;
        }
      }
    for (std::size_t i = 0; i + 1 < nonzero && ok; ++i)
      ok = mpz_divisible_p(s.D(i + 1, i + 1).get_mpz_t(), s.D(i, i).get_mpz_t()) != 0;
    ok = ok && nonzero == s.rank;
    if (ok && std::min(k, r) <= 4) {
      auto expected = oracle::smith_diagonal(A);
      ok = expected.size() == s.rank;
      for (std::size_t i = 0; i < expected.size() && ok; ++i) ok = s.D(i, i) == expected[i];
    }
    if (!ok && failures++ < 3) log << "snf failure on trial " << trial << "\n";
  }
  return failures;
}

inline std::size_t kernel_closure(std::size_t trials, std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t r = 2 + rng() % 3, k = 1 + rng() % r;
    IntMatrix A = random_matrix(rng, k, r, -5, 5);
    auto kernel = il::kernel_vectors(A);
    bool ok = true;
    for (const auto& b : kernel) {
      for (const auto& x : A * b) ok = ok && x == 0;
    }
    // Every small integer kernel vector is an integer combination of the basis.
    const auto dense = oracle::dense(A);
    auto small = oracle::scan_fiber(dense, Point(r, 3), 6);
    IntMatrix cols = kernel.empty() ? IntMatrix() : IntMatrix::from_columns(kernel);
    for (Point w : small) {
      for (auto& x : w) x -= 3;  // shift [0,6]^r to [-3,3]^r
      bool zero_image = true;
      for (const auto& row : dense) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < r; ++j) s += row[j] * w[j];
        zero_image = zero_image && s == 0;
      }
      if (!zero_image) continue;
      bool is_zero = std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
      if (kernel.empty()) ok = ok && is_zero;
      else ok = ok && il::solve_integer(cols, fiberwalk::widen(w)).has_value();
    }
    if (!ok && failures++ < 3) log << "kernel closure failure on trial " << trial << "\n";
  }
  return failures;
}

inline std::size_t coefficient_uniqueness(std::size_t trials, std::uint64_t seed,
                                          std::ostream& log) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    MoveBasis B = random_basis(rng, 4);
    Vec a(B.size());
    Vec c(B.dimension(), 0);
    BigInt l1 = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
      a[i] = coef(rng);
      l1 += abs(a[i]);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += a[i] * B[i][k];
    }
    auto got = fiberwalk::fiber::coefficient_vector(B, c);
    bool ok = got && got->a == a && got->l1 == l1;
    if (!ok && failures++ < 3) log << "coefficient failure on trial " << trial << "\n";
  }
  return failures;
}

inline std::vector<bn::Sign> random_eps(std::mt19937_64& rng, std::size_t n) {
  std::vector<bn::Sign> eps(n);
  for (auto& e : eps) e = rng() % 2 ? bn::Sign::Plus : bn::Sign::Minus;
  return eps;
}

inline std::vector<int> as_ints(const std::vector<bn::Sign>& eps) {
  std::vector<int> out;
  for (auto e : eps) out.push_back(e == bn::Sign::Plus ? 1 : -1);
  return out;
}

/// phi_t = strip(S(eps, t)) is reduced, matches the brute-force product, and
/// its difference vector lies in the lattice spanned by B.
inline std::size_t phi_lattice(std::size_t trials, std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    MoveBasis B = random_basis(rng, 3);
    auto eps = random_eps(rng, B.size());
    std::vector<std::int64_t> t(B.size());
    for (auto& x : t) x = std::int64_t(rng() % 4);
    auto S = bn::iterated(eps, t, B);
    auto ref = oracle::iterated(as_ints(eps), t, oracle::points(B));
    bool ok = fiberwalk::narrow(S.plus) == ref.plus && fiberwalk::narrow(S.minus) == ref.minus;
    auto phi = bn::strip(S);
    ok = ok && phi.reduced() && phi.difference() == S.difference();
    ok = ok && il::solve_integer(B.as_columns(), phi.difference()).has_value();
    if (!ok && failures++ < 3) log << "phi lattice failure on trial " << trial << "\n";
  }
  return failures;
}

/// Flipping every sign swaps the sides of S(eps, t), ties stay ties, and the
/// side agrees with the brute-force exponent comparison.
inline std::size_t side_antisymmetry(std::size_t trials, std::uint64_t seed, std::ostream& log) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    MoveBasis B = random_basis(rng, 3);
    auto eps = random_eps(rng, B.size());
    std::vector<bn::Sign> flipped;
    for (auto e : eps) flipped.push_back(-e);
    std::vector<std::int64_t> t(B.size());
    for (auto& x : t) x = std::int64_t(rng() % 5);
    bool ok = true;
    for (std::size_t j = 0; j < B.dimension(); ++j) {
      auto s = bn::side_achieved(eps, t, B, j);
      auto f = bn::side_achieved(flipped, t, B, j);
      const int ref = oracle::side(as_ints(eps), t, oracle::points(B), j);
      ok = ok && (s == bn::Side::Both) == (f == bn::Side::Both);
      if (s == bn::Side::Plus) ok = ok && f == bn::Side::Minus && ref == 1;
      if (s == bn::Side::Minus) ok = ok && f == bn::Side::Plus && ref == -1;
      if (s == bn::Side::Both) ok = ok && ref == 0;
    }
    if (!ok && failures++ < 3) log << "side antisymmetry failure on trial " << trial << "\n";
  }
  return failures;
}

}  // namespace props
