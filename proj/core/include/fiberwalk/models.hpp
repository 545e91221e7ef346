#pragma once

// Constructors for the example families: the 2 x 4 twisted-cubic style
// matrix, the badly chosen basis of ker [1 1 1], the second-difference
// family A_n, and the no-three-factor-interaction design matrix.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fiberwalk/intlin.hpp"
#include "fiberwalk/types.hpp"

namespace fiberwalk::models {

struct ModelInstance {
  std::string name;
  intlin::IntMatrix A;
  intlin::MoveBasis B;
  /// Suggested base point.
  Point u;
  /// Reference facts about the instance.
  std::vector<std::string> notes;
};

/// A = [[0,1,2,3],[3,2,1,0]], B = {(1,-2,1,0), (0,1,-2,1)}, u = (2,2,2,2).
ModelInstance simple_example();

/// A = [1 1 1], B_n = {(0,1,-1), (-1,n,1-n)}, u = e2. Requires n >= 2.
ModelInstance bad_basis_family(int n);

/// A_n = [1 2 ... n; n ... 2 1] with the n-2 second differences as B and
/// u = (2,...,2). Requires n >= 4.
ModelInstance second_difference_family(int n);

/// [Id_I x Id_J x 1_K; Id_I x 1_J x Id_K; 1_I x Id_J x Id_K] with B from the
/// Smith form and u = (2,...,2). Throws BudgetExceeded when the matrix would
/// have more than max_entries entries.
ModelInstance no_three_factor(int I, int J, int K, std::size_t max_entries = 4'000'000);

/// Parses "simple", "bad-basis:N", "second-difference:N" or
/// "no-three-factor:I,J,K". Throws ParameterError.
ModelInstance from_name(std::string_view spec);

}  // namespace fiberwalk::models
