#pragma once

// Seeded Markov chains on an enumerated fiber: the naive +-B walk, the
// Poisson-coefficient walk, its truncated and geometric variants (all with a
// Metropolis-Hastings correction), and the bounded-excursion walk, plus
// diagnostics against the exact target distribution.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fiberwalk/fiber.hpp"
#include "fiberwalk/intlin.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk::sampler {

enum class Algorithm { Naive, Aht, TruncatedPoisson, Geometric, BoundedExcursion };
enum class TargetKind { Uniform, Hypergeometric };

std::string_view to_string(Algorithm a);
std::string_view to_string(TargetKind t);
/// Accepts naive, aht, truncated, geometric, excursion. Throws ParameterError.
Algorithm parse_algorithm(std::string_view name);
TargetKind parse_target(std::string_view name);

/// Unnormalised log-weight on fiber elements.
class TargetWeight {
 public:
  explicit TargetWeight(TargetKind kind = TargetKind::Uniform) : kind_(kind) {}
  TargetKind kind() const noexcept { return kind_; }
  /// 0 for uniform; -sum_i log(v_i!) for hypergeometric, summed term by term.
  double log_weight(const Point& v) const;

 private:
  TargetKind kind_;
};

struct ChainConfig {
  Algorithm algorithm = Algorithm::Naive;
  std::uint64_t steps = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  /// Poisson mean for Aht and TruncatedPoisson.
  double lambda = 1.0;
  /// Success probability for Geometric, on {0, 1, 2, ...}.
  double p = 0.5;
  /// Truncation point (TruncatedPoisson) or excursion length (BoundedExcursion).
  std::int64_t bound = 0;
  TargetKind target = TargetKind::Uniform;

  /// Throws ParameterError if a parameter the algorithm uses is out of range.
  void validate() const;
};

struct ProposalStats {
  std::uint64_t proposed = 0;
  std::uint64_t accepted = 0;  // includes self-loops from zero proposals
  std::uint64_t rejected_outside = 0;
  std::uint64_t rejected_mh = 0;
  std::uint64_t self_loops = 0;
  /// Sum over proposals of the coefficient length sum_i a_i.
  double coefficient_l1_total = 0.0;

  double acceptance_rate() const { return proposed ? double(accepted) / double(proposed) : 0.0; }
  double mean_coefficient_l1() const {
    return proposed ? coefficient_l1_total / double(proposed) : 0.0;
  }
};

struct ChainTrace {
  /// Fiber element indices; states[0] is the start, one entry per step after.
  std::vector<std::size_t> states;
  /// accepted[k] describes the move from states[k] to states[k + 1].
  std::vector<std::uint8_t> accepted;
  /// First step at which each component of the +-B fiber graph was visited.
  std::vector<std::optional<std::uint64_t>> first_hit;
  ProposalStats stats;
  /// Set for walks whose stationary law is not claimed to be the target.
  bool connectivity_oriented = false;
};

/// Immutable sampling context shared by any number of chains.
class FiberContext {
 public:
  FiberContext(fiber::Fiber fiber, const intlin::MoveBasis& basis);

  const fiber::Fiber& fiber() const noexcept { return fiber_; }
  const std::vector<Point>& moves() const noexcept { return moves_; }
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  std::size_t component_of(std::size_t index) const { return component_of_.at(index); }
  /// Index of v in the fiber, or std::nullopt when v is not an element.
  std::optional<std::size_t> lookup(const Point& v) const;
  double log_weight(std::size_t index, TargetKind kind) const;

 private:
  fiber::Fiber fiber_;
  std::vector<Point> moves_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_of_;
  std::vector<double> log_hypergeometric_;
};

/// Dispatches on config.algorithm.
ChainTrace run_chain(const FiberContext& ctx, std::size_t start, const ChainConfig& config);

ChainTrace naive_walk(const FiberContext& ctx, std::size_t start, ChainConfig config);
ChainTrace aht_walk(const FiberContext& ctx, std::size_t start, ChainConfig config);
ChainTrace truncated_poisson_walk(const FiberContext& ctx, std::size_t start, ChainConfig config);
ChainTrace geometric_walk(const FiberContext& ctx, std::size_t start, ChainConfig config);
ChainTrace bounded_excursion_walk(const FiberContext& ctx, std::size_t start, ChainConfig config);

/// P(a_i = k) for the coefficient law of a coefficient-drawing walk.
double coefficient_pmf(const ChainConfig& config, std::int64_t k);

/// P(Poisson(lambda) >= N).
double poisson_tail(double lambda, std::int64_t N);

std::vector<double> empirical_distribution(const ChainTrace& trace, std::size_t fiber_size);
std::vector<double> target_distribution(const FiberContext& ctx, TargetKind kind);

/// Half the L1 distance between two distributions on the same index set.
double tv_distance(std::span<const double> freq, std::span<const double> target);
double tv_distance(std::span<const double> freq, const FiberContext& ctx, TargetKind kind);

std::vector<std::optional<std::uint64_t>> component_hits(
    const ChainTrace& trace, const std::vector<std::vector<std::size_t>>& components);

struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;
};

/// Pearson statistic of visit counts against the target, dof = |fiber| - 1.
ChiSquare chi_square(const ChainTrace& trace, std::span<const double> target);

}  // namespace fiberwalk::sampler
