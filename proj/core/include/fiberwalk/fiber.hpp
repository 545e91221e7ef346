#pragma once

// Brute-force fibers F(u) = {v in N^r : A v = A u}, their graphs under move
// sets, jump graphs with bounded coefficient length, and excursion distances
// between components through the integer fiber F_Z(u).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fiberwalk/intlin.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk::fiber {

/// A fiber description together with a finiteness certificate: w is an
/// integer combination of the rows of A with every entry >= 1, so w.v = w.u
/// bounds every coordinate of every fiber element.
struct FiberSpec {
  intlin::IntMatrix A;
  Point u;
  Point w;
};

/// Validates (A, u) and derives or checks the certificate. Without `w` the
/// sum of the rows of A is used when it is strictly positive; otherwise
/// FinitenessUncertified is thrown. A supplied `w` must lie in the integer
/// row space of A and be strictly positive.
FiberSpec make_spec(intlin::IntMatrix A, Point u, std::optional<Point> w = std::nullopt);

struct Fiber {
  FiberSpec spec;
  /// Lexicographically sorted, distinct.
  std::vector<Point> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const Point& v) const;
};

struct EnumerationOptions {
  std::size_t max_elements = 1'000'000;
};

/// Depth-first enumeration with the w-budget and per-row feasibility pruning.
/// Throws BudgetExceeded past options.max_elements.
Fiber enumerate_fiber(const FiberSpec& spec, const EnumerationOptions& options = {});

/// Simple undirected graph on fiber element indices.
struct FiberGraph {
  std::size_t vertex_count = 0;
  /// Moves generating the edges (empty for jump graphs).
  std::vector<Point> moves;
  /// Sorted neighbour lists.
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
  bool has_edge(std::size_t i, std::size_t j) const;
};

/// Edge {i, j} iff elements[i] - elements[j] is in +moves or -moves.
FiberGraph fiber_graph(const Fiber& fiber, std::span<const Point> moves);
FiberGraph fiber_graph(const Fiber& fiber, const intlin::MoveBasis& basis);

/// Connected components, each sorted, ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> components(const FiberGraph& graph);

struct Coefficients {
  Vec a;
  BigInt l1;
};

/// Coordinates of lattice vectors in a basis of linearly independent moves.
class LatticeCoordinates {
 public:
  /// Throws DependentBasis (with a dependency witness) if the moves are dependent.
  explicit LatticeCoordinates(const intlin::MoveBasis& basis);

  /// The unique a with sum a_i b_i = c, or std::nullopt if c is not in the lattice.
  std::optional<Coefficients> operator()(const Vec& c) const;

 private:
  intlin::IntegerSolver solver_;
};

std::optional<Coefficients> coefficient_vector(const intlin::MoveBasis& basis, const Vec& c);

/// Edge {i, j} iff elements[i] - elements[j] = sum a_k b_k with sum |a_k| <= N.
FiberGraph jump_graph(const Fiber& fiber, const intlin::MoveBasis& basis, std::int64_t N);

/// Smallest N >= 1 whose jump graph is connected, or std::nullopt if that
/// exceeds N_max. A lower bound on the norm of the basis.
std::optional<std::int64_t> connecting_radius(const Fiber& fiber, const intlin::MoveBasis& basis,
                                              std::int64_t N_max);

/// Smallest coefficient length of a jump from elements[index] to any other
/// element, or std::nullopt if none is within N_max.
std::optional<std::int64_t> vertex_radius(const Fiber& fiber, const intlin::MoveBasis& basis,
                                          std::size_t index, std::int64_t N_max);

/// Shortest +-B path between two components of the fiber graph, through F_Z(u).
struct Excursion {
  std::size_t from = 0;  // component ids as returned by components()
  std::size_t to = 0;
  /// Unset when no path of at most `cap` moves was found.
  std::optional<std::int64_t> path_len;
  /// Fewest out-of-N^r intermediate vertices among shortest paths.
  std::optional<std::int64_t> outside_count;
  /// One optimal path, endpoints included.
  std::vector<Point> path;

  bool reachable() const noexcept { return path_len.has_value(); }
};

/// One record per ordered pair of distinct components of fiber_graph(fiber, B).
/// The search is pruned at `cap` moves and coordinate magnitude cap*beta + max|u|.
std::vector<Excursion> min_excursion(const Fiber& fiber, const intlin::MoveBasis& basis,
                                     std::int64_t cap);

}  // namespace fiberwalk::fiber
