#include "fiberwalk/models.hpp"

#include <charconv>

#include "fiberwalk/errors.hpp"

namespace fiberwalk::models {

using intlin::IntMatrix;
using intlin::MoveBasis;

ModelInstance simple_example() {
  return {"simple",
          IntMatrix{{0, 1, 2, 3}, {3, 2, 1, 0}},
          MoveBasis{{1, -2, 1, 0}, {0, 1, -2, 1}},
          Point{2, 2, 2, 2},
          {"beta = 2, n = 2, norm bound 16",
           "fiber of u has 13 elements; (4,0,0,4) is isolated under B",
           "x1x4 - x2x3, i.e. (1,-1,-1,1), completes a Markov basis",
           "connecting radius of the fiber of u is 2"}};
}

ModelInstance bad_basis_family(int n) {
  if (n < 2) throw ParameterError("bad_basis_family: n must be at least 2");
  const long m = n;
  return {"bad-basis:" + std::to_string(n),
          IntMatrix{{1, 1, 1}},
          MoveBasis{{0, 1, -1}, {-1, m, 1 - m}},
          Point{0, 1, 0},
          {"fiber {e1, e2, e3} with components {e2, e3} and {e1}",
           "crossing between components takes n - 1 consecutive negative steps"}};
}

ModelInstance second_difference_family(int n) {
  if (n < 4) throw ParameterError("second_difference_family: n must be at least 4");
  const auto size = static_cast<std::size_t>(n);
  IntMatrix A(2, size);
  for (std::size_t j = 0; j < size; ++j) {
    A(0, j) = static_cast<long>(j + 1);
    A(1, j) = static_cast<long>(size - j);
  }
  std::vector<Vec> moves;
  for (std::size_t k = 0; k + 2 < size; ++k) {
    Vec b(size);
    b[k] = 1;
    b[k + 1] = -2;
    b[k + 2] = 1;
    moves.push_back(std::move(b));
  }
  return {"second-difference:" + std::to_string(n), std::move(A), MoveBasis(std::move(moves)),
          Point(size, 2),
          {"fiber of u contains (n,0,...,0,n)",
           "(n,0,...,0,n) is n - 2 basis steps from every other fiber element"}};
}

ModelInstance no_three_factor(int I, int J, int K, std::size_t max_entries) {
  if (I < 2 || J < 2 || K < 2) throw ParameterError("no_three_factor: I, J, K must be at least 2");
  const auto i = static_cast<std::size_t>(I), j = static_cast<std::size_t>(J),
             k = static_cast<std::size_t>(K);
  const std::size_t rows = i * j + j * k + k * i, cols = i * j * k;
  if (rows * cols > max_entries)
    throw BudgetExceeded("no_three_factor: " + std::to_string(rows) + " x " + std::to_string(cols) +
                             " matrix exceeds the budget of " + std::to_string(max_entries) +
                             " entries",
                         double(max_entries) / double(rows * cols));
  auto ones = [](std::size_t len) {
    IntMatrix m(1, len);
    for (std::size_t c = 0; c < len; ++c) m(0, c) = 1;
    return m;
  };
  using intlin::kronecker;
  const IntMatrix idI = IntMatrix::identity(i), idJ = IntMatrix::identity(j),
                  idK = IntMatrix::identity(k);
  IntMatrix A = kronecker(kronecker(idI, idJ), ones(k))
                    .vstack(kronecker(kronecker(idI, ones(j)), idK))
                    .vstack(kronecker(kronecker(ones(i), idJ), idK));
  auto B = intlin::kernel_basis(A);
  if (!B) throw Error("no_three_factor: trivial kernel");
  const std::string dims = std::to_string(I) + "," + std::to_string(J) + "," + std::to_string(K);
  return {"no-three-factor:" + dims, std::move(A), std::move(*B), Point(cols, 2),
          {"kernel rank IJK - (IJ + JK + KI - I - J - K + 1) = (I-1)(J-1)(K-1)",
           "an integral basis with beta = 1 exists for I = J = K = 5 (n = 64)"}};
}

namespace {

int parse_int(std::string_view s, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParameterError("bad model specification '" + std::string(spec) + "'");
  return value;
}

}  // namespace

ModelInstance from_name(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  if (name == "simple" && args.empty()) return simple_example();
  if (name == "bad-basis") return bad_basis_family(parse_int(args, spec));
  if (name == "second-difference") return second_difference_family(parse_int(args, spec));
  if (name == "no-three-factor") {
    std::vector<int> dims;
    std::size_t start = 0;
    while (start <= args.size()) {
      auto comma = args.find(',', start);
      if (comma == std::string_view::npos) comma = args.size();
      dims.push_back(parse_int(args.substr(start, comma - start), spec));
      start = comma + 1;
    }
    if (dims.size() == 1) dims = {dims[0], dims[0], dims[0]};
    if (dims.size() != 3) throw ParameterError("no-three-factor expects I,J,K");
    return no_three_factor(dims[0], dims[1], dims[2]);
  }
  throw ParameterError("unknown model '" + std::string(spec) +
                       "' (expected simple, bad-basis:N, second-difference:N, "
                       "no-three-factor:I,J,K)");
}

}  // namespace fiberwalk::models
