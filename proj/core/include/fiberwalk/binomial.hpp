#pragma once

// Pure binomials x^{plus} - x^{minus}, the iterated subtraction binomials
// S(eps, t), the sign-pattern cones T_{eps,delta} and the generating-set
// construction for the saturation of I_B with respect to x_1 ... x_r.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fiberwalk/intlin.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk::binomial {

enum class Sign : std::int8_t { Plus, Minus };
enum class Side : std::int8_t { Plus, Minus, Both };

constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Multiplicity vector t in N^n.
using Multiplicity = std::vector<std::int64_t>;

/// x^{plus} - x^{minus} with both exponent vectors in N^r.
struct PureBinomial {
  Vec plus;
  Vec minus;

  std::size_t dimension() const noexcept { return plus.size(); }
  /// min(plus_i, minus_i) = 0 for every i.
  bool reduced() const;
  /// plus - minus.
  Vec difference() const;
  bool is_zero() const;
  /// max(|plus|_1, |minus|_1).
  BigInt total_degree() const;

  friend bool operator==(const PureBinomial&, const PureBinomial&) = default;
};

/// b -> x^{b+} - x^{b-}.
PureBinomial from_move(const Vec& b);

/// S(f, g) = f+ g+ - f- g-.
PureBinomial subtraction(const PureBinomial& f, const PureBinomial& g);

/// S(eps, t) = prod (f_i^{eps(i)})^{t(i)} - prod (f_i^{-eps(i)})^{t(i)}.
PureBinomial iterated(std::span<const Sign> eps, std::span<const std::int64_t> t,
                      const intlin::MoveBasis& basis);

/// Divides out the largest common monomial factor. The difference vector is preserved.
PureBinomial strip(const PureBinomial& f);

/// Reduced form with the lexicographically larger exponent vector on the plus side.
PureBinomial canonical(const PureBinomial& f);

/// Which side attains the minimum in the x_j-order of S(eps, t). Equality is Both.
Side side_achieved(std::span<const Sign> eps, std::span<const std::int64_t> t,
                   const intlin::MoveBasis& basis, std::size_t j);

struct SignPattern {
  std::vector<Sign> eps;    // one per move, length n
  std::vector<Sign> delta;  // one per variable, length r

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
};

/// True iff t lies in T_{eps,delta}.
bool in_cone(const SignPattern& pattern, std::span<const std::int64_t> t,
             const intlin::MoveBasis& basis);

struct ConeGeneratorSet {
  SignPattern pattern;
  /// Irreducible nonzero members of the cone with L1 length <= cap, ordered
  /// by length then lexicographically.
  std::vector<Multiplicity> generators;
  std::int64_t cap = 0;
};

/// Enumerates T_{eps,delta} up to L1 length `cap` and keeps the members that
/// are not a sum of two nonzero cone members. Every cone member of length
/// <= cap is an N-combination of the result. Throws ParameterError for cap < 1.
ConeGeneratorSet cone_generators(const SignPattern& pattern, const intlin::MoveBasis& basis,
                                 std::int64_t cap);

/// n (2 n beta)^(n-1). Throws ParameterError unless n >= 1 and beta >= 1.
BigInt norm_bound(std::size_t n, const BigInt& beta);

struct Witness {
  std::vector<Sign> eps;
  std::vector<Sign> delta;
  Multiplicity t;
};

struct SaturationResult {
  /// Canonical binomials, sorted by total degree then lexicographically.
  std::vector<PureBinomial> binomials;
  /// witnesses[i] produced binomials[i] (first occurrence).
  std::vector<Witness> witnesses;
  std::int64_t cap_used = 0;
  /// n (2 n beta)^(n-1).
  BigInt theoretical_bound;
  /// Multiplicity vectors enumerated.
  std::uint64_t work = 0;
};

struct SaturationOptions {
  /// Largest L1 length of t to enumerate. Defaults to the norm bound and is
  /// always clipped to it.
  std::optional<std::int64_t> cap;
  /// Maximum number of multiplicity vectors to enumerate.
  std::uint64_t budget = 10'000'000;
};

/// Generating set for Sat(I_B) built from phi_t = strip(S(eps, t)) over the
/// cone generators t of every (eps, delta). Sign patterns eps are taken
/// modulo a global flip. Throws BudgetExceeded when the enumeration would
/// need more than options.budget vectors.
SaturationResult saturation_generators(const intlin::MoveBasis& basis,
                                       const SaturationOptions& options = {});

/// Greedily drops binomials whose endpoints are already joined by the
/// remaining ones: g is removed when g.plus reaches g.minus inside
/// {0..search_bound}^r using the other difference vectors as moves. Candidates
/// are tried by decreasing total degree, then lexicographically. A search
/// that visits more than `state_limit` states keeps its binomial.
std::vector<PureBinomial> reduce_generating_set(std::vector<PureBinomial> generators,
                                                const intlin::MoveBasis& basis,
                                                std::int64_t search_bound,
                                                std::size_t state_limit = 1'000'000);

}  // namespace fiberwalk::binomial
