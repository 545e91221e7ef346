#include "fiberwalk/binomial.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "fiberwalk/errors.hpp"

namespace fiberwalk::binomial {

using intlin::MoveBasis;

bool PureBinomial::reduced() const {
  for (std::size_t i = 0; i < plus.size(); ++i)
    if (sgn(plus[i]) != 0 && sgn(minus[i]) != 0) return false;
  return true;
}

Vec PureBinomial::difference() const {
  Vec d(plus.size());
  for (std::size_t i = 0; i < plus.size(); ++i) d[i] = plus[i] - minus[i];
  return d;
}

bool PureBinomial::is_zero() const { return plus == minus; }

BigInt PureBinomial::total_degree() const {
  BigInt p = std::accumulate(plus.begin(), plus.end(), BigInt(0));
  BigInt m = std::accumulate(minus.begin(), minus.end(), BigInt(0));
  return p > m ? p : m;
}

PureBinomial from_move(const Vec& b) {
  PureBinomial f{Vec(b.size()), Vec(b.size())};
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (sgn(b[i]) > 0) f.plus[i] = b[i];
    if (sgn(b[i]) < 0) f.minus[i] = -b[i];
  }
  return f;
}

PureBinomial subtraction(const PureBinomial& f, const PureBinomial& g) {
  if (f.dimension() != g.dimension()) throw ParameterError("subtraction: dimension mismatch");
  PureBinomial s{f.plus, f.minus};
  for (std::size_t i = 0; i < s.plus.size(); ++i) {
    s.plus[i] += g.plus[i];
    s.minus[i] += g.minus[i];
  }
  return s;
}

namespace {

void check_pattern(std::span<const Sign> eps, std::span<const std::int64_t> t,
                   const MoveBasis& basis) {
  if (eps.size() != basis.size() || t.size() != basis.size())
    throw ParameterError("sign pattern and multiplicity must have one entry per move");
  for (auto x : t)
    if (x < 0) throw ParameterError("multiplicities must be nonnegative");
}

// Exponent of x_j in f_i^{s}: the positive or negative part of b_ij.
BigInt order(const MoveBasis& basis, std::size_t i, std::size_t j, Sign s) {
  const BigInt& e = basis[i][j];
  if (s == Sign::Plus) return sgn(e) > 0 ? e : BigInt(0);
  return sgn(e) < 0 ? BigInt(-e) : BigInt(0);
}

}  // namespace

PureBinomial iterated(std::span<const Sign> eps, std::span<const std::int64_t> t,
                      const MoveBasis& basis) {
  check_pattern(eps, t, basis);
  const std::size_t r = basis.dimension();
  PureBinomial s{Vec(r), Vec(r)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (t[i] == 0) continue;
    const BigInt ti(static_cast<long>(t[i]));
    for (std::size_t j = 0; j < r; ++j) {
      s.plus[j] += ti * order(basis, i, j, eps[i]);
      s.minus[j] += ti * order(basis, i, j, -eps[i]);
    }
  }
  return s;
}

PureBinomial strip(const PureBinomial& f) {
  PureBinomial s = f;
  for (std::size_t i = 0; i < s.plus.size(); ++i) {
    BigInt m = s.plus[i] < s.minus[i] ? s.plus[i] : s.minus[i];
    s.plus[i] -= m;
    s.minus[i] -= m;
  }
  return s;
}

PureBinomial canonical(const PureBinomial& f) {
  PureBinomial s = strip(f);
  if (s.plus < s.minus) std::swap(s.plus, s.minus);
  return s;
}

Side side_achieved(std::span<const Sign> eps, std::span<const std::int64_t> t,
                   const MoveBasis& basis, std::size_t j) {
  check_pattern(eps, t, basis);
  if (j >= basis.dimension()) throw ParameterError("variable index out of range");
  BigInt same = 0, opposite = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BigInt ti(static_cast<long>(t[i]));
    same += ti * order(basis, i, j, eps[i]);
    opposite += ti * order(basis, i, j, -eps[i]);
  }
  if (same < opposite) return Side::Plus;
  if (same > opposite) return Side::Minus;
  return Side::Both;
}

bool in_cone(const SignPattern& pattern, std::span<const std::int64_t> t, const MoveBasis& basis) {
  if (pattern.delta.size() != basis.dimension())
    throw ParameterError("delta must have one entry per variable");
  for (std::size_t j = 0; j < basis.dimension(); ++j) {
    Side s = side_achieved(pattern.eps, t, basis, j);
    if (s == Side::Both) continue;
    if ((s == Side::Plus) != (pattern.delta[j] == Sign::Plus)) return false;
  }
  return true;
}

namespace {

struct MultiplicityHash {
  std::size_t operator()(const Multiplicity& t) const noexcept { return PointHash{}(t); }
};

std::int64_t l1(const Multiplicity& t) { return std::accumulate(t.begin(), t.end(), std::int64_t{0}); }

bool by_length(const Multiplicity& a, const Multiplicity& b) {
  auto la = l1(a), lb = l1(b);
  return la != lb ? la < lb : a < b;
}

// Calls visit(t) for every t in N^n with |t|_1 <= cap, in lexicographic order.
template <typename Visit>
void for_each_multiplicity(std::size_t n, std::int64_t cap, Visit&& visit) {
  Multiplicity t(n, 0);
  auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
    if (i == n) {
      visit(t);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      t[i] = v;
      self(self, i + 1, left - v);
    }
    t[i] = 0;
  };
  rec(rec, 0, cap);
}

// Irreducible members of a cone given all of its members up to some length.
// A member is reducible iff it is h + s with h an irreducible member and s a
// nonzero member; all members sit in `members`, sorted by length.
std::vector<Multiplicity> irreducible(std::vector<Multiplicity> members) {
  std::sort(members.begin(), members.end(), by_length);
  std::unordered_set<Multiplicity, MultiplicityHash> present(members.begin(), members.end());
  std::vector<Multiplicity> kept;
  Multiplicity rest;
  for (const auto& t : members) {
    if (l1(t) == 0) continue;
    bool reducible = false;
    for (const auto& h : kept) {
      bool fits = true;
      rest.assign(t.size(), 0);
      for (std::size_t i = 0; i < t.size() && fits; ++i) {
        rest[i] = t[i] - h[i];
        fits = rest[i] >= 0;
      }
      if (fits && l1(rest) > 0 && present.count(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) kept.push_back(t);
  }
  return kept;
}

// Narrowed copy of B with room for cap * n * beta sums.
std::vector<Point> small_moves(const MoveBasis& basis, std::int64_t cap) {
  const BigInt limit = BigInt(static_cast<long>(std::numeric_limits<std::int64_t>::max() / 4));
  if (basis.beta() * BigInt(static_cast<long>(cap)) * BigInt(static_cast<unsigned long>(basis.size())) >
      limit)
    throw RangeError("cap * n * beta exceeds the 64-bit enumeration range");
  std::vector<Point> out;
  for (const auto& b : basis.vectors()) out.push_back(narrow(b));
  return out;
}

}  // namespace

ConeGeneratorSet cone_generators(const SignPattern& pattern, const MoveBasis& basis,
                                 std::int64_t cap) {
  if (cap < 1) throw ParameterError("cone_generators: cap must be at least 1");
  if (pattern.eps.size() != basis.size() || pattern.delta.size() != basis.dimension())
    throw ParameterError("cone_generators: sign pattern does not match the basis");
  const auto moves = small_moves(basis, cap);
  const std::size_t n = basis.size(), r = basis.dimension();

  // The x_j-order on the eps side minus the order on the other side is
  // sum_i eps_i t_i b_ij, so membership reduces to a sign test on that sum.
  std::vector<Multiplicity> members;
  Point c(r);
  for_each_multiplicity(n, cap, [&](const Multiplicity& t) {
    std::fill(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      const std::int64_t k = pattern.eps[i] == Sign::Plus ? t[i] : -t[i];
      for (std::size_t j = 0; j < r; ++j) c[j] += k * moves[i][j];
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (c[j] < 0 && pattern.delta[j] != Sign::Plus) return;
      if (c[j] > 0 && pattern.delta[j] != Sign::Minus) return;
    }
    members.push_back(t);
  });
  return {pattern, irreducible(std::move(members)), cap};
}

BigInt norm_bound(std::size_t n, const BigInt& beta) {
  if (n < 1) throw ParameterError("norm_bound: n must be at least 1");
  if (beta < 1) throw ParameterError("norm_bound: beta must be at least 1");
  const BigInt nn(static_cast<unsigned long>(n));
  BigInt base = 2 * nn * beta;
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return nn * power;
}

namespace {

BigInt binomial_coefficient(std::int64_t top, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return out;
}

std::vector<Sign> signs_from_mask(std::uint64_t mask, std::size_t count) {
  std::vector<Sign> out(count);
  for (std::size_t j = 0; j < count; ++j) out[j] = (mask >> j) & 1U ? Sign::Minus : Sign::Plus;
  return out;
}

}  // namespace

SaturationResult saturation_generators(const MoveBasis& basis, const SaturationOptions& options) {
  const std::size_t n = basis.size(), r = basis.dimension();
  if (basis.beta() < 1) throw ParameterError("saturation_generators: all moves are zero");
  if (r > 62) throw ParameterError("saturation_generators: at most 62 variables are supported");

  SaturationResult result;
  result.theoretical_bound = norm_bound(n, basis.beta());
  const BigInt int64_max(static_cast<long>(std::numeric_limits<std::int64_t>::max()));
  std::int64_t cap = result.theoretical_bound > int64_max ? std::numeric_limits<std::int64_t>::max()
                                                          : narrow(result.theoretical_bound);
  if (options.cap) {
    if (*options.cap < 1) throw ParameterError("saturation_generators: cap must be at least 1");
    cap = std::min(cap, *options.cap);
  }
  result.cap_used = cap;

  // Work: 2^(n-1) sign patterns times C(cap + n, n) multiplicity vectors each.
  BigInt patterns;
  mpz_ui_pow_ui(patterns.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  BigInt total = patterns * binomial_coefficient(cap + static_cast<std::int64_t>(n), n);
  if (total > BigInt(static_cast<unsigned long>(options.budget))) {
    const double fraction = static_cast<double>(options.budget) / total.get_d();
    throw BudgetExceeded("saturation enumeration needs " + scientific(total) +
                             " multiplicity vectors but the budget is " +
                             std::to_string(options.budget),
                         fraction);
  }

  const auto moves = small_moves(basis, cap);

  // Variables no move touches are tied (Both) for every t; fix their delta to +.
  std::vector<bool> inert(r, true);
  for (const auto& m : moves)
    for (std::size_t j = 0; j < r; ++j)
      if (m[j] != 0) inert[j] = false;

  std::map<std::pair<Vec, Vec>, std::size_t> seen;
  std::vector<std::pair<PureBinomial, Witness>> found;

  const std::uint64_t pattern_count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t emask = 0; emask < pattern_count; ++emask) {
    // eps(1) = + always; the flipped pattern gives the negated binomial.
    std::vector<Sign> eps = signs_from_mask(emask << 1, n);

    // Group every nonzero t under each delta it is compatible with.
    std::map<std::uint64_t, std::vector<Multiplicity>> cones;
    Point c(r);
    for_each_multiplicity(n, cap, [&](const Multiplicity& t) {
      ++result.work;
      std::fill(c.begin(), c.end(), 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i] == 0) continue;
        nonzero = true;
        const std::int64_t k = eps[i] == Sign::Plus ? t[i] : -t[i];
        for (std::size_t j = 0; j < r; ++j) c[j] += k * moves[i][j];
      }
      if (!nonzero) return;
      // delta_j = - when the eps side has the larger order (c_j > 0), + when
      // smaller, free when tied.
      std::uint64_t fixed = 0;
      std::vector<std::size_t> free_bits;
      for (std::size_t j = 0; j < r; ++j) {
        if (c[j] > 0) fixed |= std::uint64_t{1} << j;
        else if (c[j] == 0 && !inert[j]) free_bits.push_back(j);
      }
      if (free_bits.size() > 20)
        throw BudgetExceeded("too many tied variables to expand sign patterns", 0.0);
      const std::uint64_t expansions = std::uint64_t{1} << free_bits.size();
      for (std::uint64_t x = 0; x < expansions; ++x) {
        std::uint64_t delta = fixed;
        for (std::size_t b = 0; b < free_bits.size(); ++b)
          if ((x >> b) & 1U) delta |= std::uint64_t{1} << free_bits[b];
        cones[delta].push_back(t);
      }
    });

    for (auto& [dmask, members] : cones) {
      const auto delta = signs_from_mask(dmask, r);
      for (const auto& t : irreducible(std::move(members))) {
        PureBinomial phi = canonical(iterated(eps, t, basis));
        if (phi.is_zero()) continue;
        auto key = std::make_pair(phi.plus, phi.minus);
        if (seen.count(key)) continue;
        seen.emplace(std::move(key), found.size());
        found.push_back({std::move(phi), Witness{eps, delta, t}});
      }
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    BigInt da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return std::tie(a.first.plus, a.first.minus) < std::tie(b.first.plus, b.first.minus);
  });
  for (auto& [phi, w] : found) {
    result.binomials.push_back(std::move(phi));
    result.witnesses.push_back(std::move(w));
  }
  return result;
}

namespace {

// Breadth-first search from `from` to `to` inside the box [0, bound]^r.
// Returns std::nullopt when the state limit is hit.
std::optional<bool> connected_in_box(const Point& from, const Point& to,
                                     const std::vector<Point>& moves, std::int64_t bound,
                                     std::size_t state_limit) {
  if (from == to) return true;
  std::unordered_set<Point, PointHash> visited{from};
  std::deque<Point> queue{from};
  Point next;
  while (!queue.empty()) {
    Point cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : moves) {
      for (int sign : {1, -1}) {
        next = cur;
        bool ok = true;
        for (std::size_t j = 0; j < next.size() && ok; ++j) {
          next[j] += sign * m[j];
          ok = next[j] >= 0 && next[j] <= bound;
        }
        if (!ok) continue;
        if (next == to) return true;
        if (visited.insert(next).second) {
          if (visited.size() > state_limit) return std::nullopt;
          queue.push_back(next);
        }
      }
    }
  }
  return false;
}

bool degree_then_lex(const PureBinomial& a, const PureBinomial& b) {
  BigInt da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return std::tie(a.plus, a.minus) < std::tie(b.plus, b.minus);
}

}  // namespace

std::vector<PureBinomial> reduce_generating_set(std::vector<PureBinomial> generators,
                                                const MoveBasis& basis, std::int64_t search_bound,
                                                std::size_t state_limit) {
  if (search_bound < 0) throw ParameterError("reduce_generating_set: negative search bound");
  intlin::IntegerSolver lattice(basis.as_columns());
  for (auto& g : generators) {
    if (g.dimension() != basis.dimension())
      throw ParameterError("reduce_generating_set: binomial dimension differs from the basis");
    if (!lattice.solve(g.difference()))
      throw ParameterError("reduce_generating_set: binomial difference not in the lattice of B");
    g = canonical(g);
  }
  std::sort(generators.begin(), generators.end(), degree_then_lex);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::erase_if(generators, [](const PureBinomial& g) { return g.is_zero(); });

  std::vector<bool> alive(generators.size(), true);
  std::vector<Point> diffs;
  for (const auto& g : generators) diffs.push_back(narrow(g.difference()));

  // Largest total degree first; ties in lexicographic order.
  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    BigInt da = generators[a].total_degree(), db = generators[b].total_degree();
    if (da != db) return da > db;
    return std::tie(generators[a].plus, generators[a].minus) <
           std::tie(generators[b].plus, generators[b].minus);
  });

  for (std::size_t g : order) {
    Point from = narrow(generators[g].plus), to = narrow(generators[g].minus);
    auto out_of_box = [&](const Point& p) {
      return std::any_of(p.begin(), p.end(), [&](auto x) { return x > search_bound; });
    };
    if (out_of_box(from) || out_of_box(to)) continue;
    std::vector<Point> others;
    for (std::size_t h = 0; h < generators.size(); ++h)
      if (h != g && alive[h]) others.push_back(diffs[h]);
    if (others.empty()) continue;
    auto joined = connected_in_box(from, to, others, search_bound, state_limit);
    if (joined && *joined) alive[g] = false;
  }

  std::vector<PureBinomial> out;
  for (std::size_t g = 0; g < generators.size(); ++g)
    if (alive[g]) out.push_back(std::move(generators[g]));
  return out;
}

}  // namespace fiberwalk::binomial
