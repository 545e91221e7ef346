#pragma once

// File formats. Matrix text: a "ROWS COLS" line followed by ROWS lines of
// COLS space-separated decimal integers, LF endings. JSON variants store
// integers as decimal strings so values beyond 64 bits survive.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fiberwalk/binomial.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/intlin.hpp"
#include "fiberwalk/sampler.hpp"

namespace fiberwalk::io {

/// Parses either format, chosen by the first non-blank character ('{' = JSON).
/// Throws ParseError carrying the offending line number.
intlin::IntMatrix parse_matrix(std::string_view text);
intlin::IntMatrix parse_matrix_text(std::string_view text);
intlin::IntMatrix parse_matrix_json(std::string_view text);

std::string format_matrix_text(const intlin::IntMatrix& m);
std::string format_matrix_json(const intlin::IntMatrix& m);

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

intlin::IntMatrix read_matrix_file(const std::filesystem::path& path);

/// A basis file is a matrix whose rows are the moves.
intlin::MoveBasis parse_basis(std::string_view text);
intlin::IntMatrix basis_rows(const intlin::MoveBasis& basis);

/// {"plus":[...],"minus":[...]}
std::string binomial_json(const binomial::PureBinomial& f);
binomial::PureBinomial parse_binomial_json(std::string_view text);

/// Binomials, witnesses (eps and delta as +/- strings, t), cap_used,
/// theoretical_bound (decimal string) and the enumeration work.
std::string saturation_json(const binomial::SaturationResult& result);

/// {"u":[...],"elements":[[...],...]}
std::string fiber_json(const fiber::Fiber& fiber);

struct FiberRecord {
  Point u;
  std::vector<Point> elements;
  friend bool operator==(const FiberRecord&, const FiberRecord&) = default;
};
FiberRecord parse_fiber_json(std::string_view text);

/// component_id,size,representative (representative is the smallest element,
/// space-separated).
std::string components_csv(const fiber::Fiber& fiber,
                           const std::vector<std::vector<std::size_t>>& comps);

/// step,state_index,accepted,component_id. Step 0 is the start (accepted = 1).
std::string trace_csv(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx);
std::string trace_json(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx);

/// tv_distance, chi_square {statistic, dof}, component hits and proposal
/// statistics. `poisson_tail` is included when the chain draws Poisson coefficients.
std::string diagnostics_json(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx,
                             const sampler::ChainConfig& config);

}  // namespace fiberwalk::io
