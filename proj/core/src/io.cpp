#include "fiberwalk/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fiberwalk/errors.hpp"
#include "json.hpp"

namespace fiberwalk::io {

using intlin::IntMatrix;
using json = nlohmann::ordered_json;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected a nonnegative count, got '" + std::string(tok) + "'", line);
  return v;
}

BigInt parse_entry(std::string_view tok, std::size_t line) {
  try {
    return parse_bigint(tok);
  } catch (const ParseError& e) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
}

BigInt json_int(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  throw ParseError("expected an integer or decimal string, got " + j.dump(), 0);
}

json json_vec(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

json json_point(const Point& p) {
  json arr = json::array();
  for (auto x : p) arr.push_back(x);
  return arr;
}

Point point_from_json(const json& j) {
  Point p;
  for (const auto& x : j) p.push_back(narrow(json_int(x)));
  return p;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line number
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
}

std::string optional_step(const std::optional<std::uint64_t>& s) {
  return s ? std::to_string(*s) : "never";
}

}  // namespace

IntMatrix parse_matrix_text(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty matrix file", 1);
  auto header = split_ws(lines[0]);
  if (header.size() != 2) throw ParseError("header must be 'ROWS COLS'", 1);
  const std::size_t rows = parse_count(header[0], 1), cols = parse_count(header[1], 1);
  if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", 1);
  if (lines.size() != rows + 1)
    throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 1),
                     lines.size() < rows + 1 ? lines.size() + 1 : rows + 2);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto toks = split_ws(lines[i + 1]);
    if (toks.size() != cols)
      throw ParseError("expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(toks.size()),
                       i + 2);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_entry(toks[j], i + 2);
  }
  return m;
}

IntMatrix parse_matrix_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    const std::size_t rows = doc.at("rows").get<std::size_t>();
    const std::size_t cols = doc.at("cols").get<std::size_t>();
    const json& entries = doc.at("entries");
    if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", 0);
    if (entries.size() != rows) throw ParseError("entries has the wrong number of rows", 0);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (entries[i].size() != cols)
        throw ParseError("row " + std::to_string(i) + " has the wrong number of entries", 0);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = json_int(entries[i][j]);
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what(), 0);
  }
}

IntMatrix parse_matrix(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_matrix_json(text);
  return parse_matrix_text(text);
}

std::string format_matrix_text(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_json(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(json_vec(m.row(i)));
  json doc = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
  return doc.dump() + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  return parse_matrix(read_file(path));
}

intlin::MoveBasis parse_basis(std::string_view text) {
  IntMatrix m = parse_matrix(text);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return intlin::MoveBasis(std::move(rows));
}

IntMatrix basis_rows(const intlin::MoveBasis& basis) {
  return IntMatrix::from_rows(basis.vectors());
}

std::string binomial_json(const binomial::PureBinomial& f) {
  json doc = {{"plus", json_vec(f.plus)}, {"minus", json_vec(f.minus)}};
  return doc.dump();
}

binomial::PureBinomial parse_binomial_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    binomial::PureBinomial f;
    for (const auto& x : doc.at("plus")) f.plus.push_back(json_int(x));
    for (const auto& x : doc.at("minus")) f.minus.push_back(json_int(x));
    if (f.plus.size() != f.minus.size()) throw ParseError("plus and minus differ in length", 0);
    for (std::size_t i = 0; i < f.plus.size(); ++i)
      if (f.plus[i] < 0 || f.minus[i] < 0) throw ParseError("exponents must be nonnegative", 0);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed binomial JSON: ") + e.what(), 0);
  }
}

std::string saturation_json(const binomial::SaturationResult& result) {
  auto signs = [](const std::vector<binomial::Sign>& s) {
    std::string out;
    for (auto x : s) out += binomial::to_char(x);
    return out;
  };
  json binomials = json::array(), witnesses = json::array();
  for (std::size_t i = 0; i < result.binomials.size(); ++i) {
    const auto& f = result.binomials[i];
    binomials.push_back({{"plus", json_vec(f.plus)}, {"minus", json_vec(f.minus)}});
    const auto& w = result.witnesses[i];
    witnesses.push_back({{"eps", signs(w.eps)}, {"delta", signs(w.delta)}, {"t", w.t}});
  }
  json doc = {{"binomials", binomials},
              {"witnesses", witnesses},
              {"cap_used", result.cap_used},
              {"theoretical_bound", to_string(result.theoretical_bound)},
              {"work", result.work}};
  return doc.dump(2) + "\n";
}

std::string fiber_json(const fiber::Fiber& fiber) {
  json elements = json::array();
  for (const auto& v : fiber.elements) elements.push_back(json_point(v));
  json doc = {{"u", json_point(fiber.spec.u)}, {"elements", elements}};
  return doc.dump() + "\n";
}

FiberRecord parse_fiber_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    FiberRecord rec{point_from_json(doc.at("u")), {}};
    for (const auto& e : doc.at("elements")) rec.elements.push_back(point_from_json(e));
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed fiber JSON: ") + e.what(), 0);
  }
}

std::string components_csv(const fiber::Fiber& fiber,
                           const std::vector<std::vector<std::size_t>>& comps) {
  std::string out = "component_id,size,representative\n";
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Point& rep = fiber.elements.at(comps[c].front());
    std::string r;
    for (std::size_t j = 0; j < rep.size(); ++j) r += (j ? " " : "") + std::to_string(rep[j]);
    out += std::to_string(c) + "," + std::to_string(comps[c].size()) + "," + r + "\n";
  }
  return out;
}

std::string trace_csv(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx) {
  std::string out = "step,state_index,accepted,component_id\n";
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    const int acc = k == 0 ? 1 : trace.accepted[k - 1];
    out += std::to_string(k) + "," + std::to_string(trace.states[k]) + "," + std::to_string(acc) +
           "," + std::to_string(ctx.component_of(trace.states[k])) + "\n";
  }
  return out;
}

std::string trace_json(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx) {
  json comps = json::array();
  for (auto s : trace.states) comps.push_back(ctx.component_of(s));
  json hits = json::array();
  for (const auto& h : trace.first_hit) hits.push_back(h ? json(*h) : json(nullptr));
  json doc = {{"states", trace.states},
              {"accepted", trace.accepted},
              {"component_id", comps},
              {"first_hit", hits},
              {"connectivity_oriented", trace.connectivity_oriented}};
  return doc.dump() + "\n";
}

std::string diagnostics_json(const sampler::ChainTrace& trace, const sampler::FiberContext& ctx,
                             const sampler::ChainConfig& config) {
  const auto target = sampler::target_distribution(ctx, config.target);
  const auto freq = sampler::empirical_distribution(trace, ctx.fiber().size());
  const auto chi = sampler::chi_square(trace, target);
  json hits = json::array();
  for (std::size_t c = 0; c < trace.first_hit.size(); ++c)
    hits.push_back({{"component_id", c},
                    {"size", ctx.components()[c].size()},
                    {"first_hit", optional_step(trace.first_hit[c])}});
  const auto& st = trace.stats;
  json doc = {{"algorithm", sampler::to_string(config.algorithm)},
              {"target", sampler::to_string(config.target)},
              {"steps", config.steps},
              {"seed", config.seed},
              {"fiber_size", ctx.fiber().size()},
              {"tv_distance", sampler::tv_distance(freq, target)},
              {"chi_square", {{"statistic", chi.statistic}, {"dof", chi.dof}}},
              {"components", hits},
              {"proposals",
               {{"proposed", st.proposed},
                {"accepted", st.accepted},
                {"rejected_outside", st.rejected_outside},
                {"rejected_mh", st.rejected_mh},
                {"self_loops", st.self_loops},
                {"acceptance_rate", st.acceptance_rate()},
                {"mean_coefficient_l1", st.mean_coefficient_l1()}}},
              {"connectivity_oriented", trace.connectivity_oriented}};
  if (config.algorithm == sampler::Algorithm::Aht ||
      config.algorithm == sampler::Algorithm::TruncatedPoisson) {
    // Surfaced as a run-length guide: steps should dwarf 1 / P(Poisson >= N).
    if (config.bound >= 1) doc["poisson_tail"] = sampler::poisson_tail(config.lambda, config.bound);
  }
  return doc.dump(2) + "\n";
}

}  // namespace fiberwalk::io
