#include <doctest.h>

#include <filesystem>
#include <json.hpp>

#include "fiberwalk/errors.hpp"
#include "fiberwalk/io.hpp"
#include "fiberwalk/models.hpp"

using namespace fiberwalk;
using intlin::IntMatrix;

TEST_CASE("matrix text format") {
  IntMatrix A{{0, 1, 2, 3}, {3, 2, 1, 0}};
  CHECK(io::format_matrix_text(A) == "2 4\n0 1 2 3\n3 2 1 0\n");
  CHECK(io::parse_matrix("2 4\n0 1 2 3\n3 2 1 0\n") == A);
  CHECK(io::parse_matrix(io::format_matrix_json(A)) == A);
}

TEST_CASE("matrix parse errors carry line numbers") {
  try {
    io::parse_matrix_text("2 2\n1 2\n3 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    io::parse_matrix_text("2 2\n1 2 5\n3 4\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(io::parse_matrix_text("2 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json("{\"rows\":1,\"cols\":2,\"entries\":[[\"1\"]]}"),
                  ParseError);
  CHECK_THROWS_AS(io::parse_matrix_json("{not json"), ParseError);
}

TEST_CASE("big entries survive both formats") {
  IntMatrix A(1, 2);
  A(0, 0) = parse_bigint("-340282366920938463463374607431768211457");
  A(0, 1) = 5;
  CHECK(io::parse_matrix(io::format_matrix_text(A)) == A);
  CHECK(io::parse_matrix(io::format_matrix_json(A)) == A);
}

TEST_CASE("round trips of emitted files") {
  auto m = models::no_three_factor(3, 3, 3);
  CHECK(io::parse_matrix(io::format_matrix_text(m.A)) == m.A);
  CHECK(io::parse_basis(io::format_matrix_text(io::basis_rows(m.B))) == m.B);
  CHECK(io::parse_basis(io::format_matrix_json(io::basis_rows(m.B))) == m.B);

  auto s = models::simple_example();
  auto F = fiber::enumerate_fiber(fiber::make_spec(s.A, s.u));
  auto rec = io::parse_fiber_json(io::fiber_json(F));
  CHECK(rec.u == F.spec.u);
  CHECK(rec.elements == F.elements);

  auto f = binomial::from_move(widen(Point{1, -1, -1, 1}));
  CHECK(io::parse_binomial_json(io::binomial_json(f)) == f);
}

TEST_CASE("components csv") {
  auto s = models::simple_example();
  auto F = fiber::enumerate_fiber(fiber::make_spec(s.A, s.u));
  auto comps = fiber::components(fiber::fiber_graph(F, s.B));
  auto csv = io::components_csv(F, comps);
  CHECK(csv.rfind("component_id,size,representative\n", 0) == 0);
  CHECK(csv.find(",1,4 0 0 4\n") != std::string::npos);
  CHECK(csv.find(",12,0 4 4 0\n") != std::string::npos);
}

TEST_CASE("saturation json") {
  auto res = binomial::saturation_generators(intlin::MoveBasis{{1, -2, 1, 0}, {0, 1, -2, 1}},
                                             {.cap = 4});
  auto doc = nlohmann::json::parse(io::saturation_json(res));
  CHECK(doc["cap_used"] == 4);
  CHECK(doc["theoretical_bound"] == "16");
  CHECK(doc["binomials"].size() == res.binomials.size());
  CHECK(doc["witnesses"].size() == res.binomials.size());
  CHECK(doc["witnesses"][0]["eps"].get<std::string>().front() == '+');
}

TEST_CASE("trace and diagnostics") {
  auto s = models::simple_example();
  sampler::FiberContext ctx(fiber::enumerate_fiber(fiber::make_spec(s.A, s.u)), s.B);
  sampler::ChainConfig c;
  c.algorithm = sampler::Algorithm::TruncatedPoisson;
  c.steps = 50;
  c.seed = 4;
  c.bound = 16;
  auto t = sampler::run_chain(ctx, *ctx.lookup(s.u), c);
  auto csv = io::trace_csv(t, ctx);
  CHECK(csv.rfind("step,state_index,accepted,component_id\n0,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 52);
  auto doc = nlohmann::json::parse(io::diagnostics_json(t, ctx, c));
  CHECK(doc.contains("tv_distance"));
  CHECK(doc["chi_square"]["dof"] == 12);
  CHECK(doc["components"].size() == 2);
  CHECK(doc.contains("poisson_tail"));
  auto trace = nlohmann::json::parse(io::trace_json(t, ctx));
  CHECK(trace["states"].size() == 51);
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "fiberwalk_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "m.txt", "1 1\n7\n");
  CHECK(io::read_matrix_file(dir / "m.txt") == IntMatrix{{7}});
  CHECK_THROWS_AS(io::read_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("value helpers") {
  CHECK(scientific(BigInt(16)) == "16");
  CHECK(scientific(BigInt(999)) == "999");
  CHECK(scientific(BigInt(1000)) == "1.00e3");
  CHECK(scientific(BigInt(12345)) == "1.23e4");
  CHECK(scientific(BigInt(99999)) == "1.00e5");
  CHECK(scientific(BigInt(-12345)) == "-1.23e4");
  CHECK(parse_bigint("-42") == -42);
  CHECK_THROWS_AS(parse_bigint("4x"), ParseError);
  CHECK_THROWS_AS(narrow(parse_bigint("99999999999999999999")), RangeError);
  CHECK(format_vector(Point{1, -2}) == "(1,-2)");
}
