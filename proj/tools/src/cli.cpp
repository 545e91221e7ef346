#include "fiberwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "fiberwalk/binomial.hpp"
#include "fiberwalk/errors.hpp"
#include "fiberwalk/fiber.hpp"
#include "fiberwalk/intlin.hpp"
#include "fiberwalk/io.hpp"
#include "fiberwalk/models.hpp"
#include "fiberwalk/sampler.hpp"

namespace fiberwalk::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using intlin::IntMatrix;
using intlin::MoveBasis;

constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Options {
  std::string matrix;
  std::string basis;
  std::string model;
  std::string u;
  std::string w;
  std::string format = "text";
  std::string out_dir;
  std::uint64_t budget = kDefaultBudget;
  bool show_all = false;

  std::size_t n = 0;
  std::string beta;

  std::int64_t radius_max = 0;
  std::int64_t excursion_cap = 0;

  std::int64_t cap = 0;
  bool reduce = false;
  std::int64_t search_bound = 0;

  std::string seed;
  std::string algorithm = "aht";
  std::uint64_t steps = 10'000;
  double lambda = 1.0;
  double p = 0.5;
  std::int64_t truncate = 0;
  std::string target = "uniform";
  std::string start;
  std::uint64_t stream = 0;
  unsigned chains = 1;

  std::string model_spec;
};

struct Run {
  std::string inputs;  // concatenated contents of every file read
  json results = json::object();
  json seeds = json::array();
  std::vector<std::pair<std::string, std::string>> files;
};

std::string load(Run& run, const std::string& path) {
  std::string text = io::read_file(path);
  run.inputs += text;
  run.inputs.push_back('\0');
  return text;
}

Point parse_point(std::string_view text) {
  Point p;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw ParseError("bad vector entry in '" + std::string(text) + "'", 0);
    i = std::size_t(ptr - text.data());
    p.push_back(v);
  }
  if (p.empty()) throw ParseError("empty vector", 0);
  return p;
}

json to_json(const Point& p) { return json(p); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

bool wants_json(const Options& o) { return o.format == "json"; }

std::string matrix_file(const Options& o, const std::string& stem) {
  return stem + (wants_json(o) ? ".json" : ".txt");
}

std::string format_matrix(const Options& o, const IntMatrix& m) {
  return wants_json(o) ? io::format_matrix_json(m) : io::format_matrix_text(m);
}

std::string monomial(const Point& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string describe(const binomial::PureBinomial& f) {
  return monomial(narrow(f.plus)) + " - " + monomial(narrow(f.minus));
}

struct Problem {
  std::optional<IntMatrix> A;
  std::optional<MoveBasis> B;
  std::optional<Point> u;
};

Problem load_problem(const Options& o, Run& run, bool need_matrix) {
  Problem pr;
  if (!o.model.empty() && !o.matrix.empty())
    throw ParameterError("--model and --matrix are mutually exclusive");
  if (!o.model.empty()) {
    auto m = models::from_name(o.model);
    pr.A = std::move(m.A);
    pr.B = std::move(m.B);
    pr.u = std::move(m.u);
  } else if (!o.matrix.empty()) {
    pr.A = io::parse_matrix(load(run, o.matrix));
  }
  if (!o.basis.empty()) pr.B = io::parse_basis(load(run, o.basis));
  if (!o.u.empty()) pr.u = parse_point(o.u);
  if (need_matrix && !pr.A) throw ParameterError("a matrix is required (--matrix or --model)");
  if (!pr.B && pr.A) pr.B = intlin::kernel_basis(*pr.A);
  return pr;
}

std::int64_t clipped_bound(const MoveBasis& B) {
  BigInt N = binomial::norm_bound(B.size(), B.beta());
  if (N > BigInt(std::numeric_limits<std::int64_t>::max()))
    return std::numeric_limits<std::int64_t>::max();
  return N.get_si();
}

fiber::Fiber load_fiber(const Options& o, const Problem& pr) {
  if (!pr.u) throw ParameterError("a base point is required (--u)");
  std::optional<Point> w;
  if (!o.w.empty()) w = parse_point(o.w);
  auto spec = fiber::make_spec(*pr.A, *pr.u, w);
  return fiber::enumerate_fiber(spec, {.max_elements = std::size_t(o.budget)});
}

// ---------------------------------------------------------------- commands

void cmd_kernel(const Options& o, Run& run, std::ostream& out) {
  auto pr = load_problem(o, run, true);
  auto B = intlin::kernel_basis(*pr.A);
  out << "matrix: " << pr.A->rows() << " x " << pr.A->cols() << "\n";
  run.results["rows"] = pr.A->rows();
  run.results["cols"] = pr.A->cols();
  if (!B) {
    out << "kernel rank n = 0 (trivial kernel)\n";
    run.results["n"] = 0;
    return;
  }
  out << "kernel rank n = " << B->size() << "\n";
  out << "beta = " << to_string(B->beta()) << "\n";
  if (B->size() <= 20 || o.show_all) {
    for (std::size_t i = 0; i < B->size(); ++i)
      out << "b" << i + 1 << " = " << format_vector((*B)[i]) << "\n";
  } else {
    out << "(" << B->size() << " vectors; pass --all to print them)\n";
  }
  run.results["n"] = B->size();
  run.results["beta"] = to_string(B->beta());
  json basis = json::array();
  for (const auto& b : B->vectors()) basis.push_back(to_json(b));
  run.results["basis"] = std::move(basis);
  run.files.emplace_back(matrix_file(o, "basis"), format_matrix(o, io::basis_rows(*B)));
}

void cmd_bound(const Options& o, Run& run, std::ostream& out, bool have_n) {
  std::size_t n = 0;
  BigInt beta;
  if (have_n) {
    if (o.beta.empty()) throw ParameterError("--n requires --beta");
    n = o.n;
    beta = parse_bigint(o.beta);
  } else {
    auto pr = load_problem(o, run, false);
    if (!pr.B) {
      if (!pr.A) throw ParameterError("give --n and --beta, or a matrix, model or basis");
      out << "kernel rank n = 0 (trivial kernel): every fiber is a single point\n";
      run.results["n"] = 0;
      return;
    }
    n = pr.B->size();
    beta = pr.B->beta();
  }
  BigInt N = binomial::norm_bound(n, beta);
  out << "n = " << n << "\n";
  out << "beta = " << to_string(beta) << "\n";
  out << "bound = " << to_string(N) << "\n";
  out << "approx = " << scientific(N) << "\n";
  run.results["n"] = n;
  run.results["beta"] = to_string(beta);
  run.results["bound"] = to_string(N);
  run.results["approx"] = scientific(N);
}

void cmd_fiber(const Options& o, Run& run, std::ostream& out) {
  auto pr = load_problem(o, run, true);
  auto F = load_fiber(o, pr);
  std::vector<Point> moves;
  if (pr.B)
    for (const auto& b : pr.B->vectors()) moves.push_back(narrow(b));
  auto comps = fiber::components(fiber::fiber_graph(F, moves));

  out << "fiber of " << format_vector(F.spec.u) << ": " << F.size() << " elements\n";
  out << "components under " << moves.size() << " moves: " << comps.size() << "\n";
  json comp_json = json::array();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Point& rep = F.elements[comps[c].front()];
    if (c < 20 || o.show_all)
      out << "  component " << c << ": size " << comps[c].size() << ", contains "
          << format_vector(rep) << "\n";
    comp_json.push_back({{"size", comps[c].size()}, {"representative", to_json(rep)}});
  }
  if (comps.size() > 20 && !o.show_all) out << "  ...\n";
  run.results["u"] = to_json(F.spec.u);
  run.results["size"] = F.size();
  run.results["components"] = std::move(comp_json);

  if (pr.B && F.size() > 1) {
    std::int64_t N_max = o.radius_max > 0 ? o.radius_max : clipped_bound(*pr.B);
    try {
      auto radius = fiber::connecting_radius(F, *pr.B, N_max);
      if (radius) {
        out << "connecting radius: " << *radius << "\n";
        run.results["connecting_radius"] = *radius;
      } else {
        out << "connecting radius: > " << N_max << "\n";
        run.results["connecting_radius"] = nullptr;
      }
    } catch (const DependentBasis&) {
      out << "connecting radius: not computed (moves are linearly dependent)\n";
    }
  }

  if (pr.B && o.excursion_cap > 0 && comps.size() > 1) {
    json ex = json::array();
    for (const auto& e : fiber::min_excursion(F, *pr.B, o.excursion_cap)) {
      out << "excursion " << e.from << " -> " << e.to << ": ";
      json rec = {{"from", e.from}, {"to", e.to}};
      if (e.reachable()) {
        out << *e.path_len << " moves, " << *e.outside_count << " outside\n";
        rec["path_len"] = *e.path_len;
        rec["outside_count"] = *e.outside_count;
        json path = json::array();
        for (const auto& v : e.path) path.push_back(to_json(v));
        rec["path"] = std::move(path);
      } else {
        out << "none within " << o.excursion_cap << " moves\n";
        rec["path_len"] = nullptr;
      }
      ex.push_back(std::move(rec));
    }
    run.results["excursions"] = std::move(ex);
  }

  run.files.emplace_back("fiber.json", io::fiber_json(F));
  run.files.emplace_back("components.csv", io::components_csv(F, comps));
}

void cmd_saturate(const Options& o, Run& run, std::ostream& out) {
  auto pr = load_problem(o, run, false);
  if (!pr.B) {
    if (!pr.A) throw ParameterError("a basis, matrix or model is required");
    out << "kernel rank n = 0 (trivial kernel): nothing to saturate\n";
    run.results["binomials"] = json::array();
    return;
  }
  const MoveBasis& B = *pr.B;
  binomial::SaturationOptions opts;
  if (o.cap > 0) opts.cap = o.cap;
  opts.budget = o.budget;
  auto result = binomial::saturation_generators(B, opts);

  out << "moves: n = " << B.size() << ", beta = " << to_string(B.beta()) << "\n";
  out << "norm bound: " << scientific(result.theoretical_bound) << "\n";
  out << "cap used: " << result.cap_used << " (" << result.work << " multiplicity vectors)\n";
  out << "generators: " << result.binomials.size() << "\n";
  for (const auto& f : result.binomials) out << "  " << describe(f) << "\n";
  run.results["cap_used"] = result.cap_used;
  run.results["theoretical_bound"] = to_string(result.theoretical_bound);
  run.results["work"] = result.work;
  run.results["count"] = result.binomials.size();
  run.files.emplace_back("saturation.json", io::saturation_json(result));

  if (o.reduce) {
    std::int64_t bound = o.search_bound;
    if (bound <= 0) {
      bound = 1;
      for (const auto& f : result.binomials)
        bound = std::max(bound, 2 * narrow(BigInt(f.total_degree())));
    }
    auto reduced = binomial::reduce_generating_set(result.binomials, B, bound);
    out << "after reduction (search bound " << bound << "): " << reduced.size() << "\n";
    json list = json::array();
    for (const auto& f : reduced) {
      out << "  " << describe(f) << "\n";
      list.push_back(json::parse(io::binomial_json(f)));
    }
    run.results["reduced_count"] = reduced.size();
    json doc = {{"search_bound", bound}, {"binomials", list}};
    run.files.emplace_back("reduced.json", doc.dump(2) + "\n");
  }
}

std::uint64_t resolve_seed(const std::string& text) {
  if (text == "auto") {
    std::random_device rd;
    return (std::uint64_t(rd()) << 32) ^ rd();
  }
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParameterError("--seed must be a nonnegative integer or 'auto'");
  return seed;
}

void cmd_sample(const Options& o, Run& run, std::ostream& out) {
  sampler::ChainConfig base;
  base.algorithm = sampler::parse_algorithm(o.algorithm);
  base.target = sampler::parse_target(o.target);
  base.steps = o.steps;
  base.lambda = o.lambda;
  base.p = o.p;
  base.bound = o.truncate;
  base.seed = resolve_seed(o.seed);
  base.stream = o.stream;
  base.validate();
  if (o.chains < 1) throw ParameterError("--chains must be at least 1");
  run.seeds.push_back(base.seed);

  auto pr = load_problem(o, run, true);
  if (!pr.B) throw ParameterError("the matrix has a trivial kernel; there are no moves");
  sampler::FiberContext ctx(load_fiber(o, pr), *pr.B);
  Point start_point = o.start.empty() ? *pr.u : parse_point(o.start);
  auto start = ctx.lookup(start_point);
  if (!start) throw ParameterError("start point " + format_vector(start_point) + " is not in the fiber");

  std::vector<sampler::ChainTrace> traces(o.chains);
  std::vector<sampler::ChainConfig> configs(o.chains, base);
  std::vector<std::exception_ptr> failures(o.chains);
  {
    std::vector<std::jthread> workers;
    for (unsigned k = 0; k < o.chains; ++k) {
      configs[k].stream = base.stream + k;
      workers.emplace_back([&, k] {
        try {
          traces[k] = sampler::run_chain(ctx, *start, configs[k]);
        } catch (...) {
          failures[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);

  out << "fiber: " << ctx.fiber().size() << " elements, " << ctx.components().size()
      << " components\n";
  out << "algorithm: " << sampler::to_string(base.algorithm) << ", target "
      << sampler::to_string(base.target) << ", " << base.steps << " steps, seed " << base.seed
      << "\n";
  if (traces.front().connectivity_oriented)
    out << "note: the bounded-excursion walk targets connectivity; its stationary law is not "
           "the target\n";

  json chains = json::array();
  for (unsigned k = 0; k < o.chains; ++k) {
    const auto& trace = traces[k];
    json diag = json::parse(io::diagnostics_json(trace, ctx, configs[k]));
    std::size_t hit = 0;
    for (const auto& h : trace.first_hit) hit += h.has_value();
    std::ostringstream line;
    line.precision(4);
    line << "chain " << k << " (stream " << configs[k].stream << "): acceptance "
         << trace.stats.acceptance_rate() << ", tv " << diag["tv_distance"].get<double>()
         << ", components hit " << hit << "/" << trace.first_hit.size() << "\n";
    out << line.str();

    std::string suffix = o.chains == 1 ? "" : "_" + std::to_string(k);
    if (wants_json(o))
      run.files.emplace_back("trace" + suffix + ".json", io::trace_json(trace, ctx));
    else
      run.files.emplace_back("trace" + suffix + ".csv", io::trace_csv(trace, ctx));
    run.files.emplace_back("diagnostics" + suffix + ".json", diag.dump(2) + "\n");
    diag["stream"] = configs[k].stream;
    chains.push_back(std::move(diag));
  }
  run.results["fiber_size"] = ctx.fiber().size();
  run.results["chains"] = std::move(chains);
}

void cmd_model(const Options& o, Run& run, std::ostream& out) {
  auto m = models::from_name(o.model_spec);
  out << m.name << "\n";
  out << "A: " << m.A.rows() << " x " << m.A.cols() << "\n";
  if (m.A.rows() <= 12 || o.show_all) out << io::format_matrix_text(m.A);
  out << "moves: n = " << m.B.size() << ", beta = " << to_string(m.B.beta()) << "\n";
  if (m.B.size() <= 12 || o.show_all)
    for (std::size_t i = 0; i < m.B.size(); ++i)
      out << "  b" << i + 1 << " = " << format_vector(m.B[i]) << "\n";
  out << "u = " << format_vector(m.u) << "\n";
  for (const auto& note : m.notes) out << "note: " << note << "\n";
  run.results["name"] = m.name;
  run.results["rows"] = m.A.rows();
  run.results["cols"] = m.A.cols();
  run.results["n"] = m.B.size();
  run.results["beta"] = to_string(m.B.beta());
  run.results["u"] = to_json(m.u);
  run.files.emplace_back(matrix_file(o, "matrix"), format_matrix(o, m.A));
  run.files.emplace_back(matrix_file(o, "basis"), format_matrix(o, io::basis_rows(m.B)));
}

// ---------------------------------------------------------------- plumbing

void add_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--matrix", o.matrix, "Matrix file (text or JSON)");
  sub->add_option("--model", o.model,
                  "Built-in model: simple, bad-basis:N, second-difference:N, no-three-factor:I,J,K");
  sub->add_option("--basis,--moves", o.basis, "Move basis file; rows are moves");
}

void add_output(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Machine format for matrices and traces")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", o.out_dir, "Directory for output files and report.json");
  sub->add_flag("--all", o.show_all, "Print long listings in full");
}

json echo_parameters(const CLI::App* sub) {
  json params = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    std::string name = opt->get_name();
    if (name == "--help" || name == "-h") continue;
    if (opt->count() > 0) {
      auto res = opt->results();
      params[name] = res.size() == 1 ? json(res.front()) : json(res);
    } else if (opt->get_type_size() == 0) {
      params[name] = "false";
    } else {
      params[name] = opt->get_default_str();
    }
  }
  return params;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "fiberwalk";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Markov bases, fibers and fiber walks", "fiberwalk"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  auto* kernel = app.add_subcommand("kernel", "Integral kernel basis of a matrix");
  add_inputs(kernel, o);
  add_output(kernel, o);

  auto* bound = app.add_subcommand("bound", "Norm bound n(2 n beta)^(n-1)");
  auto* n_opt = bound->add_option("--n", o.n, "Number of moves");
  bound->add_option("--beta", o.beta, "Largest absolute entry of the moves");
  add_inputs(bound, o);
  add_output(bound, o);

  auto* fib = app.add_subcommand("fiber", "Enumerate a fiber and its components");
  add_inputs(fib, o);
  fib->add_option("--u", o.u, "Base point, comma separated (default: the model's)");
  fib->add_option("--w", o.w, "Finiteness certificate in the row space of A");
  fib->add_option("--radius-max", o.radius_max, "Largest jump length tried (0: norm bound)");
  fib->add_option("--excursion-cap", o.excursion_cap,
                  "Report shortest excursions between components up to this many moves (0: off)");
  fib->add_option("--budget", o.budget, "Maximum number of fiber elements");
  add_output(fib, o);

  auto* sat = app.add_subcommand("saturate", "Generating set of the saturation of I_B");
  add_inputs(sat, o);
  sat->add_option("--cap", o.cap, "Largest multiplicity length (0: norm bound)");
  sat->add_option("--budget", o.budget, "Maximum number of multiplicity vectors");
  sat->add_flag("--reduce", o.reduce, "Drop generators implied by the others");
  sat->add_option("--search-bound", o.search_bound,
                  "Coordinate box for --reduce (0: twice the largest degree)");
  add_output(sat, o);

  auto* sample = app.add_subcommand("sample", "Run seeded Markov chains on a fiber");
  add_inputs(sample, o);
  sample->add_option("--u", o.u, "Base point, comma separated (default: the model's)");
  sample->add_option("--w", o.w, "Finiteness certificate in the row space of A");
  sample->add_option("--seed", o.seed, "RNG seed, or 'auto' to draw and record one")->required();
  sample->add_option("--algorithm", o.algorithm, "naive, aht, truncated, geometric or excursion")
      ->check(CLI::IsMember({"naive", "aht", "truncated", "geometric", "excursion"}));
  sample->add_option("--steps", o.steps, "Chain length");
  sample->add_option("--lambda", o.lambda, "Poisson mean (aht, truncated)");
  sample->add_option("--p", o.p, "Geometric success probability");
  sample->add_option("--truncate", o.truncate,
                     "Truncation point (truncated) or excursion length (excursion)");
  sample->add_option("--target", o.target, "uniform or hypergeometric")
      ->check(CLI::IsMember({"uniform", "hypergeometric"}));
  sample->add_option("--start", o.start, "Start point (default: --u)");
  sample->add_option("--stream", o.stream, "First RNG stream");
  sample->add_option("--chains", o.chains, "Independent chains on consecutive streams");
  sample->add_option("--budget", o.budget, "Maximum number of fiber elements");
  add_output(sample, o);

  auto* model = app.add_subcommand("model", "Emit a built-in model instance");
  model->add_option("spec", o.model_spec,
                    "simple, bad-basis:N, second-difference:N or no-three-factor:I,J,K")
      ->required();
  add_output(model, o);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  CLI::App* active = app.get_subcommands().front();
  Run run;
  json params = echo_parameters(active);

  try {
    if (const char* env = std::getenv("FIBERWALK_BUDGET"); env && *env) {
      std::string text = env;
      std::uint64_t b = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), b);
      if (ec != std::errc{} || ptr != text.data() + text.size() || b == 0)
        throw ParameterError("FIBERWALK_BUDGET must be a positive integer");
      o.budget = b;
      params["budget_from_environment"] = text;
    }

    auto t0 = std::chrono::steady_clock::now();
    if (active == kernel) cmd_kernel(o, run, out);
    else if (active == bound) cmd_bound(o, run, out, n_opt->count() > 0);
    else if (active == fib) cmd_fiber(o, run, out);
    else if (active == sat) cmd_saturate(o, run, out);
    else if (active == sample) cmd_sample(o, run, out);
    else cmd_model(o, run, out);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      for (const auto& [name, contents] : run.files) io::write_file(fs::path(o.out_dir) / name, contents);
      json report;
      report["command"] = join(args);
      json hashed = params;
      hashed.erase("--out");
      report["inputs_hash"] = "fnv1a64:" + fnv1a_hex(run.inputs + hashed.dump());
      report["parameters"] = params;
      report["seeds"] = run.seeds;
      report["results"] = run.results;
      report["wall_time_ms"] = ms;
      io::write_file(fs::path(o.out_dir) / "report.json", report.dump(2) + "\n");
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    std::ostringstream frac;
    frac.precision(3);
    frac << e.completed_fraction();
    err << "budget exceeded: " << e.what() << " (completed fraction " << frac.str() << ")\n";
    return kBudgetExceeded;
  } catch (const FinitenessUncertified& e) {
    err << "finiteness not certified: " << e.what() << "\n";
    return kFinitenessUncertified;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kConfigError;
  } catch (const DependentBasis& e) {
    err << "dependent moves: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace fiberwalk::cli
