#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fiberwalk/binomial.hpp"
#include "fiberwalk/errors.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/models.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace fiberwalk;
using namespace fiberwalk::fiber;
using intlin::IntMatrix;
using intlin::MoveBasis;

namespace {

const IntMatrix kA{{0, 1, 2, 3}, {3, 2, 1, 0}};
const MoveBasis kB{{1, -2, 1, 0}, {0, 1, -2, 1}};

Fiber example_fiber() { return enumerate_fiber(make_spec(kA, {2, 2, 2, 2})); }

std::vector<std::size_t> sizes(const std::vector<std::vector<std::size_t>>& comps) {
  std::vector<std::size_t> s;
  for (const auto& c : comps) s.push_back(c.size());
  std::sort(s.rbegin(), s.rend());
  return s;
}

}  // namespace

TEST_CASE("example fiber has 13 elements") {
  auto F = example_fiber();
  CHECK(F.size() == 13);
  CHECK(F.index_of({4, 0, 0, 4}).has_value());
  CHECK(F.index_of({2, 2, 2, 2}).has_value());
  CHECK(std::is_sorted(F.elements.begin(), F.elements.end()));
  // Exhaustive scan of all v with entries summing to 8.
  auto ref = oracle::brute_fiber(oracle::dense(kA), {2, 2, 2, 2});
  CHECK(ref.size() == 13);
  CHECK(F.elements == ref);
}

TEST_CASE("fiber of e2 under [1 1 1]") {
  auto F = enumerate_fiber(make_spec(IntMatrix{{1, 1, 1}}, {0, 1, 0}));
  CHECK(F.elements == std::vector<Point>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("zero base point gives a singleton") {
  auto F = enumerate_fiber(make_spec(kA, {0, 0, 0, 0}));
  CHECK(F.elements == std::vector<Point>{{0, 0, 0, 0}});
  auto G = fiber_graph(F, kB);
  CHECK(G.vertex_count == 1);
  CHECK(G.edge_count() == 0);
}

TEST_CASE("finiteness certificate") {
  CHECK_THROWS_AS(make_spec(IntMatrix{{1, -1}}, {1, 1}), FinitenessUncertified);
  // [1 -1; 0 1]: the row sum (1, 0) is not positive but (1, 0) + 2 (0, 1) is.
  IntMatrix A{{1, -1}, {0, 1}};
  CHECK_THROWS_AS(make_spec(A, {1, 1}), FinitenessUncertified);
  auto spec = make_spec(A, {1, 1}, Point{1, 1});
  CHECK(enumerate_fiber(spec).size() == 1);
  CHECK_THROWS_AS(make_spec(A, {1, 1}, Point{1, 0}), FinitenessUncertified);
  CHECK_THROWS_AS(make_spec(kA, {1, 2, 3, 4}, Point{1, 2, 2, 1}), FinitenessUncertified);
  CHECK_THROWS_AS(make_spec(kA, {1, -2, 3, 4}), ParameterError);
  CHECK_THROWS_AS(make_spec(kA, {1, 2, 3}), ParameterError);
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_fiber(make_spec(kA, {2, 2, 2, 2}), {.max_elements = 5}),
                  BudgetExceeded);
}

TEST_CASE("example fiber graph components") {
  auto F = example_fiber();
  auto comps = components(fiber_graph(F, kB));
  CHECK(sizes(comps) == std::vector<std::size_t>{12, 1});
  CHECK(oracle::component_sizes(F.elements, oracle::points(kB)) ==
        std::vector<std::size_t>{12, 1});
  auto isolated = *F.index_of({4, 0, 0, 4});
  bool alone = std::any_of(comps.begin(), comps.end(), [&](const auto& c) {
    return c.size() == 1 && c.front() == isolated;
  });
  CHECK(alone);

  std::vector<Point> extended = oracle::points(kB);
  extended.push_back({1, -1, -1, 1});
  CHECK(components(fiber_graph(F, extended)).size() == 1);
}

TEST_CASE("components of complete and edgeless graphs") {
  FiberGraph complete{3, {}, {{1, 2}, {0, 2}, {0, 1}}};
  CHECK(components(complete).size() == 1);
  FiberGraph edgeless{3, {}, {{}, {}, {}}};
  CHECK(components(edgeless) ==
        std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
  CHECK(complete.has_edge(0, 2));
  CHECK(complete.edge_count() == 3);
}

TEST_CASE("coefficient vectors") {
  auto c = coefficient_vector(kB, widen(Point{1, -1, -1, 1}));
  REQUIRE(c);
  CHECK(c->a == widen(Point{1, 1}));
  CHECK(c->l1 == 2);
  auto z = coefficient_vector(kB, widen(Point{0, 0, 0, 0}));
  REQUIRE(z);
  CHECK(z->l1 == 0);
  CHECK_FALSE(coefficient_vector(kB, widen(Point{1, 0, 0, 0})).has_value());
  MoveBasis dependent{{1, -1, 0}, {2, -2, 0}};
  try {
    LatticeCoordinates coords(dependent);
    FAIL("expected DependentBasis");
  } catch (const DependentBasis& e) {
    const auto& w = e.witness();
    REQUIRE(w.size() == 2);
    CHECK(w[0] * 1 + w[1] * 2 == 0);
    CHECK(w[0] != 0);
  }
}

TEST_CASE("jump graphs") {
  auto F = example_fiber();
  CHECK(components(jump_graph(F, kB, 1)).size() == 2);
  CHECK(jump_graph(F, kB, 1).adjacency == fiber_graph(F, kB).adjacency);
  CHECK(components(jump_graph(F, kB, 2)).size() == 1);
  CHECK(components(jump_graph(F, kB, 16)).size() == 1);
}

TEST_CASE("jump graphs grow with N and the radius respects the norm bound") {
  for (int n = 4; n <= 6; ++n) {
    auto m = models::second_difference_family(n);
    auto F = enumerate_fiber(make_spec(m.A, m.u));
    for (const auto& v : F.elements) CHECK(m.A * widen(v) == m.A * widen(m.u));
    for (std::int64_t N = 1; N < 6; ++N) {
      auto small = jump_graph(F, m.B, N), large = jump_graph(F, m.B, N + 1);
      for (std::size_t i = 0; i < F.size(); ++i)
        for (auto j : small.adjacency[i]) CHECK(large.has_edge(i, j));
    }
    auto radius = connecting_radius(F, m.B, 1000);
    REQUIRE(radius);
    CHECK(BigInt(*radius) <= binomial::norm_bound(m.B.size(), m.B.beta()));
  }
}

TEST_CASE("connecting radius") {
  auto F = example_fiber();
  CHECK(connecting_radius(F, kB, 16) == 2);
  CHECK(oracle::connecting_radius(F.elements, oracle::points(kB), 6) == 2);
  CHECK_FALSE(connecting_radius(F, kB, 1).has_value());
  // A fiber that is already connected under the moves.
  auto G = enumerate_fiber(make_spec(kA, {1, 0, 1, 0}));
  CHECK(G.size() == 2);
  CHECK(components(fiber_graph(G, kB)).size() == 1);
  CHECK(connecting_radius(G, kB, 16) == 1);
  CHECK(vertex_radius(F, kB, *F.index_of({4, 0, 0, 4}), 16) == 2);
}

TEST_CASE("second-difference radius n - 2 for n = 5") {
  auto m = models::second_difference_family(5);
  auto F = enumerate_fiber(make_spec(m.A, m.u));
  CHECK(connecting_radius(F, m.B, 100) == 3);
  CHECK(oracle::connecting_radius(F.elements, oracle::points(m.B), 3) == 3);
}

TEST_CASE("minimal excursion on the example") {
  auto F = example_fiber();
  auto ex = min_excursion(F, kB, 4);
  REQUIRE(ex.size() == 2);
  for (const auto& e : ex) {
    REQUIRE(e.reachable());
    CHECK(*e.path_len == 2);
    CHECK(*e.outside_count == 1);
    REQUIRE(e.path.size() == 3);
    const Point& mid = e.path[1];
    CHECK((mid == Point{4, -1, 2, 3} || mid == Point{3, 2, -1, 4}));
  }
  CHECK(min_excursion(enumerate_fiber(make_spec(kA, {1, 0, 1, 0})), kB, 4).empty());
  auto capped = min_excursion(F, kB, 1);
  REQUIRE(capped.size() == 2);
  CHECK_FALSE(capped[0].reachable());
}

TEST_CASE("bad basis needs n - 1 outside steps") {
  for (int n = 2; n <= 4; ++n) {
    auto m = models::bad_basis_family(n);
    auto F = enumerate_fiber(make_spec(m.A, m.u));
    auto ex = min_excursion(F, m.B, 2 * n);
    REQUIRE(ex.size() == 2);
    for (const auto& e : ex) {
      REQUIRE(e.reachable());
      CHECK(*e.outside_count == n - 1);
    }
  }
}

TEST_CASE("lattice closure inside components") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto B = props::random_basis(rng, 3);
    // Recover A from B through the left kernel so the fiber matches the lattice.
    auto A_opt = intlin::kernel_vectors(B.as_columns().transpose());
    if (A_opt.empty()) continue;
    auto A = IntMatrix::from_rows(A_opt);
    Point u(B.dimension(), 1);
    FiberSpec spec;
    try {
      spec = make_spec(A, u);
    } catch (const FinitenessUncertified&) {
      continue;
    }
    auto F = enumerate_fiber(spec);
    for (const auto& comp : components(fiber_graph(F, B)))
      for (auto i : comp) {
        Vec c = widen(F.elements[i]);
        const auto& first = F.elements[comp.front()];
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= first[k];
        CHECK(coefficient_vector(B, c).has_value());
      }
  }
}

TEST_CASE("fiber enumeration matches brute force on random designs") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 2 + rng() % 3, k = 1 + rng() % 2;
    auto A = props::random_design(rng, k, r);
    Point u(r);
    for (auto& x : u) x = std::int64_t(rng() % 4);
    auto F = enumerate_fiber(make_spec(A, u));
    CHECK(F.elements == oracle::brute_fiber(oracle::dense(A), u));
  }
}

TEST_CASE("randomized coefficient uniqueness") {
  std::ostringstream log;
  CHECK(props::coefficient_uniqueness(200, 7, log) == 0);
  INFO(log.str());
}
