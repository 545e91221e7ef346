#include "fiberwalk/fiber.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "fiberwalk/errors.hpp"

namespace fiberwalk::fiber {

using intlin::IntMatrix;
using intlin::MoveBasis;

FiberSpec make_spec(IntMatrix A, Point u, std::optional<Point> w) {
  if (A.empty()) throw ParameterError("fiber: empty matrix");
  if (u.size() != A.cols()) throw ParameterError("fiber: u has the wrong length");
  if (std::any_of(u.begin(), u.end(), [](auto x) { return x < 0; }))
    throw ParameterError("fiber: u must be nonnegative");
  if (w) {
    if (w->size() != A.cols()) throw ParameterError("fiber: w has the wrong length");
    if (std::any_of(w->begin(), w->end(), [](auto x) { return x < 1; }))
      throw FinitenessUncertified("fiber: the certificate w must be strictly positive");
    if (!intlin::solve_integer(A.transpose(), widen(*w)))
      throw FinitenessUncertified("fiber: w is not an integer combination of the rows of A");
  } else {
    Vec sum(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) sum[j] += A(i, j);
    if (std::any_of(sum.begin(), sum.end(), [](const BigInt& x) { return x < 1; }))
      throw FinitenessUncertified(
          "fiber: the row sum of A is not strictly positive; supply a certificate w");
    w = narrow(sum);
  }
  return {std::move(A), std::move(u), std::move(*w)};
}

std::optional<std::size_t> Fiber::index_of(const Point& v) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), v);
  if (it == elements.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

using Wide = __int128;

struct Enumerator {
  std::size_t rows, cols;
  std::vector<Point> a;  // a[l][j]
  Point w;
  std::size_t max_elements;
  // For each row l and start column i: indices in [i, cols) minimising and
  // maximising a[l][j] / w[j].
  std::vector<std::vector<std::size_t>> lo, hi;
  std::vector<Point>* out;
  Point v;
  Point residual;

  void prepare() {
    lo.assign(rows, std::vector<std::size_t>(cols));
    hi.assign(rows, std::vector<std::size_t>(cols));
    for (std::size_t l = 0; l < rows; ++l) {
      lo[l][cols - 1] = hi[l][cols - 1] = cols - 1;
      for (std::size_t i = cols - 1; i-- > 0;) {
        auto ratio_less = [&](std::size_t x, std::size_t y) {
          return Wide(a[l][x]) * w[y] < Wide(a[l][y]) * w[x];
        };
        lo[l][i] = ratio_less(i, lo[l][i + 1]) ? i : lo[l][i + 1];
        hi[l][i] = ratio_less(hi[l][i + 1], i) ? i : hi[l][i + 1];
      }
    }
  }

  // With sum_{j>=i} w_j v_j = rem, row l can contribute any value in
  // [rem * min a/w, rem * max a/w] over the reals; outside it, prune.
  bool feasible(std::size_t i, std::int64_t rem) const {
    for (std::size_t l = 0; l < rows; ++l) {
      const std::size_t jl = lo[l][i], jh = hi[l][i];
      if (Wide(residual[l]) * w[jl] < Wide(rem) * a[l][jl]) return false;
      if (Wide(residual[l]) * w[jh] > Wide(rem) * a[l][jh]) return false;
    }
    return true;
  }

  void assign(std::size_t i, std::int64_t value) {
    const std::int64_t delta = value - v[i];
    for (std::size_t l = 0; l < rows; ++l) residual[l] -= delta * a[l][i];
    v[i] = value;
  }

  void run(std::size_t i, std::int64_t rem) {
    if (!feasible(i, rem)) return;
    if (i + 1 == cols) {
      if (rem % w[i] != 0) return;
      assign(i, rem / w[i]);
      if (std::all_of(residual.begin(), residual.end(), [](auto x) { return x == 0; })) {
        if (out->size() >= max_elements)
          throw BudgetExceeded("fiber has more than " + std::to_string(max_elements) + " elements",
                               0.0);
        out->push_back(v);
      }
      assign(i, 0);
      return;
    }
    const std::int64_t top = rem / w[i];
    for (std::int64_t x = 0; x <= top; ++x) {
      assign(i, x);
      run(i + 1, rem - x * w[i]);
    }
    assign(i, 0);
  }
};

}  // namespace

Fiber enumerate_fiber(const FiberSpec& spec, const EnumerationOptions& options) {
  const IntMatrix& A = spec.A;
  if (spec.u.size() != A.cols() || spec.w.size() != A.cols())
    throw ParameterError("fiber: specification dimensions disagree");
  Enumerator e{A.rows(), A.cols(), {}, spec.w, options.max_elements, {}, {}, nullptr, {}, {}};
  for (std::size_t l = 0; l < A.rows(); ++l) e.a.push_back(narrow(A.row(l)));
  const Vec target = A * widen(spec.u);
  e.residual = narrow(target);
  BigInt budget = 0;
  for (std::size_t j = 0; j < A.cols(); ++j)
    budget += BigInt(static_cast<long>(spec.w[j])) * BigInt(static_cast<long>(spec.u[j]));
  e.v.assign(A.cols(), 0);
  e.prepare();

  Fiber fiber{spec, {}};
  e.out = &fiber.elements;
  e.run(0, narrow(budget));
  // DFS assigns coordinates in increasing order, so the output is already sorted.
  return fiber;
}

std::size_t FiberGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

bool FiberGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& nb = adjacency.at(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

namespace {

void finish(FiberGraph& g) {
  for (auto& nb : g.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

std::vector<Point> basis_points(const MoveBasis& basis) {
  std::vector<Point> out;
  for (const auto& b : basis.vectors()) out.push_back(narrow(b));
  return out;
}

}  // namespace

FiberGraph fiber_graph(const Fiber& fiber, std::span<const Point> moves) {
  FiberGraph g{fiber.size(), {moves.begin(), moves.end()}, {}};
  g.adjacency.resize(fiber.size());
  Point next;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const Point& v = fiber.elements[i];
    for (const auto& m : moves) {
      if (m.size() != v.size()) throw ParameterError("fiber_graph: move has the wrong length");
      for (int sign : {1, -1}) {
        next = v;
        bool ok = true;
        for (std::size_t j = 0; j < v.size() && ok; ++j) {
          next[j] += sign * m[j];
          ok = next[j] >= 0;
        }
        if (!ok) continue;
        auto k = fiber.index_of(next);
        if (!k || *k == i) continue;
        g.adjacency[i].push_back(*k);
        g.adjacency[*k].push_back(i);
      }
    }
  }
  finish(g);
  return g;
}

FiberGraph fiber_graph(const Fiber& fiber, const MoveBasis& basis) {
  const auto moves = basis_points(basis);
  return fiber_graph(fiber, std::span<const Point>(moves));
}

std::vector<std::vector<std::size_t>> components(const FiberGraph& graph) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(graph.vertex_count, false);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < graph.vertex_count; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t nb : graph.adjacency[v])
        if (!seen[nb]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

LatticeCoordinates::LatticeCoordinates(const MoveBasis& basis) : solver_(basis.as_columns()) {
  if (solver_.rank() < solver_.cols()) {
    Vec witness = *solver_.kernel_witness();
    throw DependentBasis("moves are linearly dependent: coefficients " + format_vector(witness) +
                             " combine them to zero",
                         std::move(witness));
  }
}

std::optional<Coefficients> LatticeCoordinates::operator()(const Vec& c) const {
  if (c.size() != solver_.rows()) throw ParameterError("coefficient_vector: wrong length");
  auto a = solver_.solve(c);
  if (!a) return std::nullopt;
  BigInt l1 = 0;
  for (const auto& x : *a) l1 += abs(x);
  return Coefficients{std::move(*a), std::move(l1)};
}

std::optional<Coefficients> coefficient_vector(const MoveBasis& basis, const Vec& c) {
  return LatticeCoordinates(basis)(c);
}

namespace {

// Coordinates of every element relative to a representative of its coset of
// the move lattice. Elements in different cosets are never joined by jumps.
struct ElementCoordinates {
  std::vector<std::size_t> coset;
  std::vector<Point> coords;

  ElementCoordinates(const Fiber& fiber, const MoveBasis& basis) {
    LatticeCoordinates solve(basis);
    std::vector<Vec> reps;
    coset.resize(fiber.size());
    coords.resize(fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      const Vec v = widen(fiber.elements[i]);
      bool placed = false;
      for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
        Vec diff(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) diff[j] = v[j] - reps[c][j];
        if (auto a = solve(diff)) {
          coset[i] = c;
          coords[i] = narrow(a->a);
          placed = true;
        }
      }
      if (!placed) {
        coset[i] = reps.size();
        coords[i] = Point(basis.size(), 0);
        reps.push_back(v);
      }
    }
  }

  static constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max();

  std::int64_t distance(std::size_t i, std::size_t j) const {
    if (coset[i] != coset[j]) return kFar;
    std::int64_t d = 0;
    for (std::size_t k = 0; k < coords[i].size(); ++k) d += std::abs(coords[i][k] - coords[j][k]);
    return d;
  }
};

}  // namespace

FiberGraph jump_graph(const Fiber& fiber, const MoveBasis& basis, std::int64_t N) {
  if (N < 1) throw ParameterError("jump_graph: N must be at least 1");
  ElementCoordinates ec(fiber, basis);
  FiberGraph g{fiber.size(), {}, std::vector<std::vector<std::size_t>>(fiber.size())};
  for (std::size_t i = 0; i < fiber.size(); ++i)
    for (std::size_t j = i + 1; j < fiber.size(); ++j)
      if (ec.distance(i, j) <= N) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  finish(g);
  return g;
}

std::optional<std::int64_t> connecting_radius(const Fiber& fiber, const MoveBasis& basis,
                                              std::int64_t N_max) {
  if (N_max < 1) throw ParameterError("connecting_radius: N_max must be at least 1");
  if (fiber.size() <= 1) return 1;
  ElementCoordinates ec(fiber, basis);
  // The smallest N connecting the jump graph is the bottleneck edge of a
  // minimum spanning tree under the coefficient-length metric (dense Prim).
  const std::size_t n = fiber.size();
  std::vector<std::int64_t> best(n, ElementCoordinates::kFar);
  std::vector<bool> in_tree(n, false);
  best[0] = 0;
  std::int64_t bottleneck = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_tree[i] && (pick == n || best[i] < best[pick])) pick = i;
    if (best[pick] > N_max) return std::nullopt;
    bottleneck = std::max(bottleneck, best[pick]);
    in_tree[pick] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_tree[i]) best[i] = std::min(best[i], ec.distance(pick, i));
  }
  return bottleneck;
}

std::optional<std::int64_t> vertex_radius(const Fiber& fiber, const MoveBasis& basis,
                                          std::size_t index, std::int64_t N_max) {
  if (index >= fiber.size()) throw ParameterError("vertex_radius: index out of range");
  ElementCoordinates ec(fiber, basis);
  std::int64_t best = ElementCoordinates::kFar;
  for (std::size_t j = 0; j < fiber.size(); ++j)
    if (j != index) best = std::min(best, ec.distance(index, j));
  if (best > N_max) return std::nullopt;
  return best;
}

std::vector<Excursion> min_excursion(const Fiber& fiber, const MoveBasis& basis,
                                     std::int64_t cap) {
  if (cap < 1) throw ParameterError("min_excursion: cap must be at least 1");
  const auto moves = basis_points(basis);
  const auto comps = components(fiber_graph(fiber, basis));
  if (comps.size() <= 1) return {};

  std::vector<std::size_t> comp_of(fiber.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t v : comps[c]) comp_of[v] = c;

  std::int64_t max_u = 0;
  for (auto x : fiber.spec.u) max_u = std::max(max_u, std::abs(x));
  const std::int64_t bound = cap * narrow(basis.beta()) + max_u;
  constexpr std::size_t kStateLimit = 20'000'000;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Node {
    Point p;
    std::int64_t dist;
    std::int64_t outside;
    std::size_t parent;
  };

  std::vector<Excursion> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<Node> nodes;
    std::unordered_map<Point, std::size_t, PointHash> where;
    std::vector<std::size_t> frontier;
    for (std::size_t v : comps[c]) {
      where.emplace(fiber.elements[v], nodes.size());
      frontier.push_back(nodes.size());
      nodes.push_back({fiber.elements[v], 0, 0, kNone});
    }
    // Layered BFS; within a layer keep the fewest outside vertices.
    for (std::int64_t d = 0; d < cap && !frontier.empty(); ++d) {
      std::vector<std::size_t> next_frontier;
      for (std::size_t idx : frontier) {
        for (const auto& m : moves)
          for (int sign : {1, -1}) {
            Point q = nodes[idx].p;
            bool in_box = true, outside = false;
            for (std::size_t j = 0; j < q.size(); ++j) {
              q[j] += sign * m[j];
              if (std::abs(q[j]) > bound) in_box = false;
              if (q[j] < 0) outside = true;
            }
            if (!in_box) continue;
            const std::int64_t out_count = nodes[idx].outside + (outside ? 1 : 0);
            auto it = where.find(q);
            if (it == where.end()) {
              if (nodes.size() >= kStateLimit)
                throw BudgetExceeded("min_excursion: state limit reached", 0.0);
              where.emplace(q, nodes.size());
              next_frontier.push_back(nodes.size());
              nodes.push_back({std::move(q), d + 1, out_count, idx});
            } else {
              Node& n = nodes[it->second];
              if (n.dist == d + 1 && out_count < n.outside) {
                n.outside = out_count;
                n.parent = idx;
              }
            }
          }
      }
      frontier = std::move(next_frontier);
    }

    for (std::size_t t = 0; t < comps.size(); ++t) {
      if (t == c) continue;
      Excursion ex{c, t, std::nullopt, std::nullopt, {}};
      std::size_t best = kNone;
      for (std::size_t v : comps[t]) {
        auto it = where.find(fiber.elements[v]);
        if (it == where.end()) continue;
        const Node& n = nodes[it->second];
        if (best == kNone || std::tie(n.dist, n.outside) <
                                 std::tie(nodes[best].dist, nodes[best].outside))
          best = it->second;
      }
      if (best != kNone) {
        ex.path_len = nodes[best].dist;
        ex.outside_count = nodes[best].outside;
        for (std::size_t k = best; k != kNone; k = nodes[k].parent) ex.path.push_back(nodes[k].p);
        std::reverse(ex.path.begin(), ex.path.end());
      }
      out.push_back(std::move(ex));
    }
  }
  return out;
}

}  // namespace fiberwalk::fiber
