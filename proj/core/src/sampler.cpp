#include "fiberwalk/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/rng.hpp"

namespace fiberwalk::sampler {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Naive: return "naive";
    case Algorithm::Aht: return "aht";
    case Algorithm::TruncatedPoisson: return "truncated";
    case Algorithm::Geometric: return "geometric";
    case Algorithm::BoundedExcursion: return "excursion";
  }
  return "?";
}

std::string_view to_string(TargetKind t) {
  return t == TargetKind::Uniform ? "uniform" : "hypergeometric";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::Naive, Algorithm::Aht, Algorithm::TruncatedPoisson,
                 Algorithm::Geometric, Algorithm::BoundedExcursion})
    if (name == to_string(a)) return a;
  throw ParameterError("unknown algorithm '" + std::string(name) +
                       "' (expected naive, aht, truncated, geometric or excursion)");
}

TargetKind parse_target(std::string_view name) {
  if (name == "uniform") return TargetKind::Uniform;
  if (name == "hypergeometric") return TargetKind::Hypergeometric;
  throw ParameterError("unknown target '" + std::string(name) + "'");
}

double TargetWeight::log_weight(const Point& v) const {
  if (kind_ == TargetKind::Uniform) return 0.0;
  double s = 0.0;
  for (auto x : v)
    for (std::int64_t k = 2; k <= x; ++k) s -= std::log(static_cast<double>(k));
  return s;
}

void ChainConfig::validate() const {
  if (steps < 1) throw ParameterError("steps must be at least 1");
  switch (algorithm) {
    case Algorithm::Naive: break;
    case Algorithm::TruncatedPoisson:
      if (bound < 1) throw ParameterError("truncation point N must be at least 1");
      [[fallthrough]];
    case Algorithm::Aht:
      // exp(-lambda) underflows past ~745; inversion needs it representable.
      if (!(lambda > 0.0) || lambda > 700.0)
        throw ParameterError("lambda must lie in (0, 700]");
      break;
    case Algorithm::Geometric:
      if (!(p > 0.0 && p < 1.0)) throw ParameterError("p must lie in (0, 1)");
      break;
    case Algorithm::BoundedExcursion:
      if (bound < 1) throw ParameterError("excursion length N must be at least 1");
      break;
  }
}

FiberContext::FiberContext(fiber::Fiber fiber, const intlin::MoveBasis& basis)
    : fiber_(std::move(fiber)) {
  if (basis.dimension() != fiber_.spec.u.size())
    throw ParameterError("sampler: basis dimension differs from the fiber");
  for (const auto& b : basis.vectors()) moves_.push_back(narrow(b));
  components_ = fiber::components(fiber::fiber_graph(fiber_, basis));
  component_of_.resize(fiber_.size());
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (auto v : components_[c]) component_of_[v] = c;
  TargetWeight hyper(TargetKind::Hypergeometric);
  for (const auto& v : fiber_.elements) log_hypergeometric_.push_back(hyper.log_weight(v));
}

std::optional<std::size_t> FiberContext::lookup(const Point& v) const {
  if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; })) return std::nullopt;
  return fiber_.index_of(v);
}

double FiberContext::log_weight(std::size_t index, TargetKind kind) const {
  return kind == TargetKind::Uniform ? 0.0 : log_hypergeometric_.at(index);
}

namespace {

std::int64_t draw_poisson(CounterRng& rng, double lambda) {
  const double u = rng.uniform();
  double p = std::exp(-lambda);
  double cdf = p;
  std::int64_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= lambda / static_cast<double>(k);
    if (p == 0.0 && k > lambda) break;  // rounding left cdf just below 1
    cdf += p;
  }
  return k;
}

std::int64_t draw_geometric(CounterRng& rng, double p) {
  const double u = rng.uniform_open_zero();
  return static_cast<std::int64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

std::int64_t draw_coefficient(CounterRng& rng, const ChainConfig& c) {
  switch (c.algorithm) {
    case Algorithm::Aht: return draw_poisson(rng, c.lambda);
    case Algorithm::TruncatedPoisson: {
      std::int64_t a;
      do {
        a = draw_poisson(rng, c.lambda);
      } while (a > c.bound);
      return a;
    }
    case Algorithm::Geometric: return draw_geometric(rng, c.p);
    default: return 0;
  }
}

class Chain {
 public:
  Chain(const FiberContext& ctx, std::size_t start, const ChainConfig& config)
      : ctx_(ctx), config_(config), rng_(config.seed, config.stream) {
    config.validate();
    if (start >= ctx.fiber().size()) throw ParameterError("start is not a fiber element");
    trace_.states.reserve(config.steps + 1);
    trace_.accepted.reserve(config.steps);
    trace_.states.push_back(start);
    trace_.first_hit.assign(ctx.components().size(), std::nullopt);
    trace_.first_hit[ctx.component_of(start)] = 0;
    trace_.connectivity_oriented = config.algorithm == Algorithm::BoundedExcursion;
  }

  ChainTrace run() && {
    for (std::uint64_t step = 1; step <= config_.steps; ++step) {
      const std::size_t cur = trace_.states.back();
      ++trace_.stats.proposed;
      std::optional<std::size_t> next;
      switch (config_.algorithm) {
        case Algorithm::Naive: next = naive_step(cur); break;
        case Algorithm::BoundedExcursion: next = excursion_step(cur); break;
        default: next = coefficient_step(cur); break;
      }
      record(step, cur, next);
    }
    return std::move(trace_);
  }

 private:
  // A proposal inside the fiber, after the Metropolis-Hastings test.
  std::optional<std::size_t> metropolis(std::size_t cur, std::size_t prop) {
    if (prop == cur) return prop;
    const double ratio = ctx_.log_weight(prop, config_.target) - ctx_.log_weight(cur, config_.target);
    if (ratio < 0.0 && !(rng_.uniform() < std::exp(ratio))) {
      ++trace_.stats.rejected_mh;
      return std::nullopt;
    }
    return prop;
  }

  std::optional<std::size_t> naive_step(std::size_t cur) {
    const auto& moves = ctx_.moves();
    const std::uint64_t pick = rng_.below(2 * moves.size());
    const std::int64_t sign = pick % 2 ? -1 : 1;
    Point v = ctx_.fiber().elements[cur];
    const Point& b = moves[pick / 2];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += sign * b[j];
    trace_.stats.coefficient_l1_total += 1.0;
    auto idx = ctx_.lookup(v);
    if (!idx) {
      ++trace_.stats.rejected_outside;
      return std::nullopt;
    }
    return metropolis(cur, *idx);
  }

  std::optional<std::size_t> coefficient_step(std::size_t cur) {
    const auto& moves = ctx_.moves();
    Point v = ctx_.fiber().elements[cur];
    for (const auto& b : moves) {
      const std::int64_t a = draw_coefficient(rng_, config_);
      const std::int64_t signed_a = (rng_() & 1U) ? -a : a;
      trace_.stats.coefficient_l1_total += static_cast<double>(a);
      if (signed_a == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += signed_a * b[j];
    }
    auto idx = ctx_.lookup(v);
    if (!idx) {
      ++trace_.stats.rejected_outside;
      return std::nullopt;
    }
    return metropolis(cur, *idx);
  }

  // Random +-B steps until the walk re-enters N^r or has taken `bound` steps.
  std::optional<std::size_t> excursion_step(std::size_t cur) {
    const auto& moves = ctx_.moves();
    Point v = ctx_.fiber().elements[cur];
    for (std::int64_t taken = 1; taken <= config_.bound; ++taken) {
      const std::uint64_t pick = rng_.below(2 * moves.size());
      const std::int64_t sign = pick % 2 ? -1 : 1;
      const Point& b = moves[pick / 2];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += sign * b[j];
      trace_.stats.coefficient_l1_total += 1.0;
      if (auto idx = ctx_.lookup(v)) return *idx;
    }
    ++trace_.stats.rejected_outside;
    return std::nullopt;
  }

  void record(std::uint64_t step, std::size_t cur, std::optional<std::size_t> next) {
    const std::size_t state = next.value_or(cur);
    if (next) {
      ++trace_.stats.accepted;
      if (*next == cur) ++trace_.stats.self_loops;
    }
    trace_.accepted.push_back(next ? 1 : 0);
    trace_.states.push_back(state);
    auto& hit = trace_.first_hit[ctx_.component_of(state)];
    if (!hit) hit = step;
  }

  const FiberContext& ctx_;
  ChainConfig config_;
  CounterRng rng_;
  ChainTrace trace_;
};

ChainTrace with_algorithm(const FiberContext& ctx, std::size_t start, ChainConfig config,
                          Algorithm a) {
  config.algorithm = a;
  return Chain(ctx, start, config).run();
}

}  // namespace

ChainTrace run_chain(const FiberContext& ctx, std::size_t start, const ChainConfig& config) {
  return Chain(ctx, start, config).run();
}

ChainTrace naive_walk(const FiberContext& ctx, std::size_t start, ChainConfig config) {
  return with_algorithm(ctx, start, std::move(config), Algorithm::Naive);
}
ChainTrace aht_walk(const FiberContext& ctx, std::size_t start, ChainConfig config) {
  return with_algorithm(ctx, start, std::move(config), Algorithm::Aht);
}
ChainTrace truncated_poisson_walk(const FiberContext& ctx, std::size_t start, ChainConfig config) {
  return with_algorithm(ctx, start, std::move(config), Algorithm::TruncatedPoisson);
}
ChainTrace geometric_walk(const FiberContext& ctx, std::size_t start, ChainConfig config) {
  return with_algorithm(ctx, start, std::move(config), Algorithm::Geometric);
}
ChainTrace bounded_excursion_walk(const FiberContext& ctx, std::size_t start, ChainConfig config) {
  return with_algorithm(ctx, start, std::move(config), Algorithm::BoundedExcursion);
}

namespace {

double poisson_pmf(double lambda, std::int64_t k) {
  if (k < 0) return 0.0;
  return std::exp(-lambda + static_cast<double>(k) * std::log(lambda) -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

double coefficient_pmf(const ChainConfig& config, std::int64_t k) {
  config.validate();
  if (k < 0) return 0.0;
  switch (config.algorithm) {
    case Algorithm::Aht: return poisson_pmf(config.lambda, k);
    case Algorithm::TruncatedPoisson: {
      if (k > config.bound) return 0.0;
      double mass = 0.0;
      for (std::int64_t j = 0; j <= config.bound; ++j) mass += poisson_pmf(config.lambda, j);
      return poisson_pmf(config.lambda, k) / mass;
    }
    case Algorithm::Geometric: return config.p * std::pow(1.0 - config.p, static_cast<double>(k));
    default: throw ParameterError("coefficient_pmf: algorithm does not draw coefficients");
  }
}

double poisson_tail(double lambda, std::int64_t N) {
  if (N <= 0) return 1.0;
  double below = 0.0;
  for (std::int64_t k = 0; k < N; ++k) below += poisson_pmf(lambda, k);
  // For large N summing the tail directly keeps precision.
  if (below > 0.5) {
    double tail = 0.0;
    for (std::int64_t k = N;; ++k) {
      const double term = poisson_pmf(lambda, k);
      tail += term;
      if (static_cast<double>(k) > lambda && term < tail * 1e-17) break;
    }
    return tail;
  }
  return 1.0 - below;
}

std::vector<double> empirical_distribution(const ChainTrace& trace, std::size_t fiber_size) {
  std::vector<double> freq(fiber_size, 0.0);
  for (auto s : trace.states) freq.at(s) += 1.0;
  const double total = static_cast<double>(trace.states.size());
  for (auto& f : freq) f /= total;
  return freq;
}

std::vector<double> target_distribution(const FiberContext& ctx, TargetKind kind) {
  const std::size_t n = ctx.fiber().size();
  std::vector<double> w(n);
  double top = -INFINITY;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, ctx.log_weight(i, kind));
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += w[i] = std::exp(ctx.log_weight(i, kind) - top);
  for (auto& x : w) x /= total;
  return w;
}

double tv_distance(std::span<const double> freq, std::span<const double> target) {
  if (freq.size() != target.size()) throw ParameterError("tv_distance: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < freq.size(); ++i) s += std::abs(freq[i] - target[i]);
  return std::min(1.0, 0.5 * s);
}

double tv_distance(std::span<const double> freq, const FiberContext& ctx, TargetKind kind) {
  const auto target = target_distribution(ctx, kind);
  return tv_distance(freq, target);
}

std::vector<std::optional<std::uint64_t>> component_hits(
    const ChainTrace& trace, const std::vector<std::vector<std::size_t>>& components) {
  std::size_t max_vertex = 0;
  for (const auto& c : components)
    for (auto v : c) max_vertex = std::max(max_vertex, v);
  std::vector<std::size_t> comp_of(components.empty() ? 0 : max_vertex + 1, components.size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (auto v : components[c]) comp_of[v] = c;
  std::vector<std::optional<std::uint64_t>> hits(components.size());
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    const auto s = trace.states[k];
    if (s >= comp_of.size() || comp_of[s] == components.size()) continue;
    auto& h = hits[comp_of[s]];
    if (!h) h = k;
  }
  return hits;
}

ChiSquare chi_square(const ChainTrace& trace, std::span<const double> target) {
  std::vector<double> counts(target.size(), 0.0);
  for (auto s : trace.states) counts.at(s) += 1.0;
  const double total = static_cast<double>(trace.states.size());
  ChiSquare out;
  out.dof = target.empty() ? 0 : target.size() - 1;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double expected = total * target[i];
    if (expected > 0.0) out.statistic += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  return out;
}

}  // namespace fiberwalk::sampler
