#include <doctest.h>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/models.hpp"

using namespace fiberwalk;
using namespace fiberwalk::models;
using intlin::IntMatrix;

namespace {

void check_instance(const ModelInstance& m) {
  for (const auto& b : m.B.vectors())
    for (const auto& x : m.A * b) CHECK(x == 0);
  for (auto x : m.u) CHECK(x >= 0);
  // The sum of the rows certifies finiteness.
  for (std::size_t j = 0; j < m.A.cols(); ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m.A.rows(); ++i) s += m.A(i, j);
    CHECK(s > 0);
  }
  CHECK_NOTHROW(fiber::make_spec(m.A, m.u));
}

}  // namespace

TEST_CASE("simple example") {
  auto m = simple_example();
  CHECK(m.A == IntMatrix{{0, 1, 2, 3}, {3, 2, 1, 0}});
  CHECK(m.B.vectors() == std::vector<Vec>{widen(Point{1, -2, 1, 0}), widen(Point{0, 1, -2, 1})});
  CHECK(m.u == Point{2, 2, 2, 2});
  CHECK(m.B.beta() == 2);
  check_instance(m);
}

TEST_CASE("bad basis family") {
  for (int n = 2; n <= 6; ++n) {
    auto m = bad_basis_family(n);
    CHECK(m.B.vectors() ==
          std::vector<Vec>{widen(Point{0, 1, -1}), widen(Point{-1, n, 1 - n})});
    CHECK(m.u == Point{0, 1, 0});
    CHECK(intlin::same_lattice(m.B.vectors(), {widen(Point{1, -1, 0}), widen(Point{0, 1, -1})}));
    check_instance(m);
  }
  CHECK_THROWS_AS(bad_basis_family(1), ParameterError);
}

TEST_CASE("second difference family") {
  auto m4 = second_difference_family(4);
  CHECK(intlin::same_lattice(m4.B.vectors(), simple_example().B.vectors()));
  for (int n = 4; n <= 8; ++n) {
    auto m = second_difference_family(n);
    CHECK(m.A.rows() == 2);
    CHECK(m.A.cols() == std::size_t(n));
    CHECK(m.B.size() == std::size_t(n - 2));
    check_instance(m);
  }
  CHECK_THROWS_AS(second_difference_family(3), ParameterError);
}

TEST_CASE("no-three-factor shapes and kernel ranks") {
  auto m2 = no_three_factor(2, 2, 2);
  CHECK(m2.A.rows() == 12);
  CHECK(m2.A.cols() == 8);
  CHECK(m2.B.size() == 1);
  check_instance(m2);
  auto m3 = no_three_factor(3, 3, 3);
  CHECK(m3.A.cols() == 27);
  CHECK(m3.B.size() == 8);
  check_instance(m3);
  auto m = no_three_factor(2, 3, 4);
  CHECK(m.A.rows() == 6 + 8 + 12);
  CHECK(m.A.cols() == 24);
  CHECK(m.B.size() == 6);  // (I-1)(J-1)(K-1)
  check_instance(m);
  CHECK_THROWS_AS(no_three_factor(5, 5, 5, 100), BudgetExceeded);
  CHECK_THROWS_AS(no_three_factor(1, 3, 3), ParameterError);
}

TEST_CASE("model names") {
  CHECK(from_name("simple").A == simple_example().A);
  CHECK(from_name("bad-basis:4").B == bad_basis_family(4).B);
  CHECK(from_name("second-difference:6").A == second_difference_family(6).A);
  CHECK(from_name("no-three-factor:2,2,3").A.cols() == 12);
  CHECK(from_name("no-three-factor:2").A.cols() == 8);
  CHECK_THROWS_AS(from_name("cube"), ParameterError);
  CHECK_THROWS_AS(from_name("bad-basis:x"), ParameterError);
}
