#include "gridwidth/cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridwidth/certificates.hpp"
#include "gridwidth/errors.hpp"
#include "gridwidth/formulas.hpp"
#include "gridwidth/oracle.hpp"
#include "gridwidth/sweep.hpp"
#include "gridwidth/torus.hpp"

namespace gridwidth {
namespace {

using nlohmann::ordered_json;

constexpr const char* kMemEnvVar = "GRIDWIDTH_MEM";

uint64_t resolve_memory_cap(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kMemEnvVar)) {
    const std::string text(env);
    bool ok = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
    uint64_t parsed = 0;
    if (ok) {
      try {
        parsed = std::stoull(text);
      } catch (...) {
        ok = false;
      }
    }
    if (!ok)
      throw std::invalid_argument(std::string(kMemEnvVar) + " must be a byte count, got \"" +
                                  text + "\"");
    return parsed;
  }
  return kDefaultMemoryCap;
}

void print_shape(std::ostream& out, const GridShape& s) {
  out << "shape:";
  if (s.dims().empty()) {
    out << " 1";
  } else {
    for (int64_t d : s.dims()) out << ' ' << d;
  }
  if (s.dims() != s.original_dims()) {
    out << " (input:";
    for (int64_t d : s.original_dims()) out << ' ' << d;
    out << ')';
  }
  out << '\n';
}

// Shared five-key result object; null stands in for fields a run does not produce.
ordered_json result_json(ordered_json shape, std::optional<int64_t> value,
                         std::optional<std::string> method, bool conjectured,
                         std::optional<uint64_t> argmax_k) {
  ordered_json j;
  j["shape"] = std::move(shape);
  j["value"] = value ? ordered_json(*value) : ordered_json(nullptr);
  j["method"] = method ? ordered_json(std::move(*method)) : ordered_json(nullptr);
  j["conjectured"] = conjectured;
  j["argmax_k"] = argmax_k ? ordered_json(*argmax_k) : ordered_json(nullptr);
  return j;
}

bool is_cube_4d(const GridShape& s) {
  const auto& d = s.dims();
  return d.size() == 4 && d[0] == d[1] && d[1] == d[2] && d[2] == d[3];
}

int run_formula(const std::vector<int64_t>& dims, const std::string& format, std::ostream& out) {
  const GridShape s = GridShape::from_dims(dims);
  const FormulaResult r = best_formula(s);

  std::optional<int64_t> conjectured_value;
  if (!r.applicable && is_cube_4d(s)) conjectured_value = conjecture_4d(s.dims()[0]);

  if (format == "json") {
    ordered_json j;
    if (r.applicable) {
      j = result_json(s.dims(), r.value, method_name(r.method), false, std::nullopt);
    } else if (conjectured_value) {
      j = result_json(s.dims(), *conjectured_value, method_name(FormulaMethod::Conjecture4D),
                      true, std::nullopt);
    } else {
      j = result_json(s.dims(), std::nullopt, std::nullopt, false, std::nullopt);
    }
    out << j.dump() << '\n';
    return 0;
  }

  print_shape(out, s);
  if (r.applicable) {
    out << "method: " << method_name(r.method) << '\n';
    out << "value: " << r.value << '\n';
  } else if (conjectured_value) {
    out << "method: " << method_name(FormulaMethod::Conjecture4D) << " (unproven)\n";
    out << "value: " << *conjectured_value << " (conjectured)\n";
  } else {
    out << "no exact closed form: " << r.reason << '\n';
    out << "hint: use `gridwidth sweep` for an exact value\n";
  }
  return 0;
}

int run_sweep(const std::vector<int64_t>& dims, const std::optional<std::string>& profile_path,
              bool full, const std::optional<uint64_t>& mem, const std::string& format,
              std::ostream& out) {
  const GridShape s = GridShape::from_dims(dims);
  SweepOptions opts;
  opts.memory_cap = resolve_memory_cap(mem);

  int64_t value = 0;
  uint64_t argmax = 0;
  uint64_t rows_written = 0;
  if (profile_path) {
    const BoundaryProfile p = sweep_profile(s, opts);
    value = p.vbw;
    argmax = p.argmax_k;
    std::ofstream f(*profile_path);
    if (!f) throw std::invalid_argument("cannot open " + *profile_path + " for writing");
    rows_written = write_profile_csv(f, p, full);
    if (!f) throw std::runtime_error("failed while writing " + *profile_path);
  } else {
    const SweepSummary sum = sweep_summary(s, opts);
    value = sum.vbw;
    argmax = sum.argmax_k;
  }

  if (format == "json") {
    out << result_json(s.dims(), value, "Sweep", false, argmax).dump() << '\n';
  } else {
    print_shape(out, s);
    out << "method: Sweep\n";
    out << "value: " << value << '\n';
    out << "argmax k: " << argmax << '\n';
    if (profile_path) out << "profile: " << rows_written << " rows -> " << *profile_path << '\n';
  }
  return 0;
}

int run_torus(const std::vector<int64_t>& lengths, const std::optional<uint64_t>& mem,
              const std::string& format, std::ostream& out) {
  const TorusShape t = TorusShape::from_cycle_lengths(lengths);
  const GridShape reduced = reduce_torus(t);
  SweepOptions opts;
  opts.memory_cap = resolve_memory_cap(mem);

  const FormulaResult lm = vbw_torus_large_max(t.half_dims());
  int64_t value = 0;
  std::string method;
  std::optional<uint64_t> argmax;
  if (lm.applicable) {
    value = lm.value;
    method = method_name(FormulaMethod::TorusLargeMax);
  } else {
    const SweepSummary sum = sweep_summary(reduced, opts);
    value = sum.vbw;
    argmax = sum.argmax_k;
    method = "Sweep";
  }

  if (format == "json") {
    out << result_json(t.cycle_lengths(), value, method, false, argmax).dump() << '\n';
  } else {
    out << "torus:";
    for (int64_t c : t.cycle_lengths()) out << ' ' << c;
    out << '\n';
    out << "reduced grid:";
    for (int64_t d : reduced.dims()) out << ' ' << d;
    out << '\n';
    out << "method: " << method << '\n';
    out << "value: " << value << '\n';
    if (argmax) out << "argmax k (reduced grid): " << *argmax << '\n';
  }
  return 0;
}

int run_certify(const std::vector<int64_t>& dims, const std::optional<std::string>& ordering_path,
                const std::optional<std::string>& decomp_path, bool verify_only,
                const std::optional<uint64_t>& mem, std::ostream& out) {
  const GridShape s = GridShape::from_dims(dims);
  SweepOptions opts;
  opts.memory_cap = resolve_memory_cap(mem);

  const SweepSummary sum = sweep_summary(s, opts);
  print_shape(out, s);
  out << "width (sweep): " << sum.vbw << '\n';

  bool ok = true;
  if (verify_only) {
    if (!ordering_path && !decomp_path)
      throw std::invalid_argument("--verify-only needs --ordering and/or --decomp to read");
    if (ordering_path) {
      std::ifstream f(*ordering_path);
      if (!f) throw std::invalid_argument("cannot open " + *ordering_path);
      const VertexOrdering o = read_ordering(f, s);
      const int64_t obw = ordering_bandwidth(s, o.order);
      out << "ordering bandwidth: " << obw << '\n';
      if (obw != sum.vbw) ok = false;
    }
    if (decomp_path) {
      std::ifstream f(*decomp_path);
      if (!f) throw std::invalid_argument("cannot open " + *decomp_path);
      const PathDecomposition pd = read_decomposition(f);
      const DecompositionCheck chk = verify_path_decomposition(s, pd);
      if (!chk.ok) {
        out << "decomposition INVALID: " << chk.message << '\n';
        ok = false;
      } else {
        out << "decomposition width: " << chk.width << '\n';
        if (chk.width != sum.vbw) ok = false;
      }
    }
  } else {
    const VertexOrdering o = emit_bandwidth_ordering(s, opts.memory_cap);
    const int64_t obw = ordering_bandwidth(s, o.order);
    out << "ordering bandwidth: " << obw << '\n';
    if (obw != sum.vbw) ok = false;
    if (ordering_path) {
      std::ofstream f(*ordering_path);
      if (!f) throw std::invalid_argument("cannot open " + *ordering_path + " for writing");
      write_ordering(f, o);
      if (!f) throw std::runtime_error("failed while writing " + *ordering_path);
      out << "ordering -> " << *ordering_path << '\n';
    }

    const PathDecomposition pd = emit_path_decomposition(s, opts.memory_cap);
    const DecompositionCheck chk = verify_path_decomposition(s, pd);
    if (!chk.ok) {
      out << "decomposition INVALID: " << chk.message << '\n';
      ok = false;
    } else {
      out << "decomposition width: " << chk.width << " (" << pd.bags.size() << " bags)\n";
      if (chk.width != sum.vbw) ok = false;
    }
    if (decomp_path) {
      std::ofstream f(*decomp_path);
      if (!f) throw std::invalid_argument("cannot open " + *decomp_path + " for writing");
      write_decomposition(f, pd);
      if (!f) throw std::runtime_error("failed while writing " + *decomp_path);
      out << "decomposition -> " << *decomp_path << '\n';
    }
  }

  out << (ok ? "certificates: OK\n" : "certificates: MISMATCH\n");
  return ok ? 0 : 1;
}

int run_oracle(const std::vector<int64_t>& grid_dims, const std::vector<int64_t>& torus_lengths,
               const std::optional<std::string>& file_path, const std::string& what,
               const std::optional<uint64_t>& k, const std::string& format, std::ostream& out) {
  const int sources = (grid_dims.empty() ? 0 : 1) + (torus_lengths.empty() ? 0 : 1) +
                      (file_path ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument("oracle needs exactly one of --grid, --torus, --file");
  if (what == "phi" && !k) throw std::invalid_argument("--what phi needs --k");
  if (what != "phi" && k) throw std::invalid_argument("--k only applies to --what phi");

  Graph g;
  ordered_json shape = nullptr;
  if (!grid_dims.empty()) {
    const GridShape s = GridShape::from_dims(grid_dims);
    g = grid_graph(s);
    shape = s.dims();
  } else if (!torus_lengths.empty()) {
    const TorusShape t = TorusShape::from_cycle_lengths(torus_lengths);
    g = torus_graph(t.cycle_lengths());
    shape = t.cycle_lengths();
  } else {
    std::ifstream f(*file_path);
    if (!f) throw std::invalid_argument("cannot open " + *file_path);
    g = read_graph_file(f);
  }

  std::string label;
  int64_t value = 0;
  if (what == "phi") {
    label = "phi(" + std::to_string(*k) + ")";
    value = brute_phi(g, *k);
  } else if (what == "vbw") {
    label = "vbw";
    value = brute_vbw(g);
  } else if (what == "bw") {
    label = "bandwidth";
    value = brute_bandwidth(g);
  } else {
    label = "pathwidth";
    value = brute_pathwidth(g);
  }

  if (format == "json") {
    out << result_json(std::move(shape), value, "Oracle", false, std::nullopt).dump() << '\n';
  } else {
    out << "graph: " << g.n << " vertices, " << g.num_edges() << " edges\n";
    out << label << ": " << value << '\n';
  }
  return 0;
}

int run_conjecture4d(int64_t max_n, int64_t threads, const std::optional<uint64_t>& mem,
                     std::ostream& out) {
  if (max_n < 2) throw std::invalid_argument("--max-n must be >= 2");
  if (threads < 1) throw std::invalid_argument("--threads must be >= 1");
  const uint64_t cap = resolve_memory_cap(mem);

  struct Row {
    bool done = false;
    int64_t swept = 0;
    int64_t expected = 0;
    std::exception_ptr error;
  };
  std::vector<Row> rows(static_cast<size_t>(max_n - 1));
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<int64_t> next{2};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (!stop.load()) {
      const int64_t n = next.fetch_add(1);
      if (n > max_n) break;
      Row row;
      try {
        SweepOptions opts;
        opts.memory_cap = cap;
        opts.check_invariants = false;
        row.swept = vbw_sweep(GridShape::from_dims({n, n, n, n}), opts);
        row.expected = conjecture_4d(n);
      } catch (...) {
        row.error = std::current_exception();
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        row.done = true;
        rows[static_cast<size_t>(n - 2)] = row;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const int64_t nthreads = std::min<int64_t>(threads, max_n - 1);
  pool.reserve(static_cast<size_t>(nthreads));
  for (int64_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);

  bool mismatch = false;
  std::exception_ptr first_error;
  for (int64_t n = 2; n <= max_n; ++n) {
    Row row;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return rows[static_cast<size_t>(n - 2)].done; });
      row = rows[static_cast<size_t>(n - 2)];
    }
    if (row.error) {
      first_error = row.error;
      stop.store(true);
      break;
    }
    const bool match = row.swept == row.expected;
    if (!match) mismatch = true;
    out << "n=" << n << ": sweep " << row.swept << ", conjecture " << row.expected << ", "
        << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  stop.store(true);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  if (mismatch) {
    out << "conjecture4d: MISMATCH found\n";
    return 1;
  }
  out << "conjecture4d: all values match for n = 2.." << max_n << '\n';
  return 0;
}

int run_selfcheck(const std::optional<uint64_t>& mem, std::ostream& out) {
  SweepOptions opts;
  opts.memory_cap = resolve_memory_cap(mem);
  opts.check_invariants = true;

  int failed = 0;
  int total = 0;
  const auto check = [&](const std::string& name, bool ok) {
    ++total;
    if (!ok) ++failed;
    out << (ok ? "ok:   " : "FAIL: ") << name << '\n';
  };

  {
    bool ok = true;
    for (int64_t n3 = 2; n3 <= 8 && ok; ++n3)
      for (int64_t n2 = 2; n2 <= n3 && ok; ++n2)
        for (int64_t n1 = 2; n1 <= n2 && ok; ++n1) {
          const int64_t swept = vbw_sweep(GridShape::from_dims({n1, n2, n3}), opts);
          ok = ok && vbw_3d(n1, n2, n3) == swept;
          if (n1 + n2 - 2 >= n3) ok = ok && vbw_3d_peak_scan(n1, n2, n3) == swept;
        }
    check("3d formula and peak scan agree with sweeps (sides up to 8)", ok);
  }
  {
    bool ok = true;
    for (int64_t n = 2; n <= 1000 && ok; ++n) ok = vbw_3d(n, n, n) == vbw_cubic(n);
    check("cube specialization matches general 3d formula (n up to 1000)", ok);
  }
  {
    bool ok = true;
    for (int64_t d = 1; d <= 12 && ok; ++d) {
      const GridShape s = GridShape::from_dims(std::vector<int64_t>(static_cast<size_t>(d), 2));
      ok = vbw_hypercube(d) == vbw_sweep(s, opts);
    }
    check("hypercube formula matches sweeps (d up to 12)", ok);
  }
  {
    bool ok = true;
    const std::vector<std::vector<int64_t>> shapes = {
        {2, 3, 9}, {3, 3, 7}, {2, 2, 2, 9}, {2, 3, 4, 12}, {4, 4, 11}, {2, 2, 3, 3, 14}};
    for (const auto& dims : shapes) {
      const GridShape s = GridShape::from_dims(dims);
      const FormulaResult r = vbw_large_max(s);
      ok = ok && r.applicable && r.value == vbw_sweep(s, opts);
    }
    check("large-max-factor formula matches sweeps", ok);
  }
  {
    bool ok = true;
    for (int64_t n = 2; n <= 8 && ok; ++n)
      ok = conjecture_4d(n) == vbw_sweep(GridShape::from_dims({n, n, n, n}), opts);
    check("4d cube conjecture matches sweeps (n up to 8)", ok);
  }
  {
    bool ok = true;
    ok = ok && vbw_torus(TorusShape::from_cycle_lengths({4}), opts) ==
                   brute_vbw(torus_graph({4}));
    ok = ok && vbw_torus(TorusShape::from_cycle_lengths({6}), opts) ==
                   brute_vbw(torus_graph({6}));
    ok = ok && vbw_torus(TorusShape::from_cycle_lengths({4, 4}), opts) ==
                   brute_vbw(torus_graph({4, 4}));
    ok = ok && vbw_torus(TorusShape::from_cycle_lengths({4, 4, 10}), opts) == 32;
    check("torus widths agree with the brute oracle and closed form", ok);
  }
  {
    const Graph g = torus_graph({4, 4});
    const std::vector<int64_t> phi = brute_phi_all(g);
    const BoundaryProfile p = sweep_profile(GridShape::from_dims({2, 2, 2, 2}), opts);
    bool ok = phi.size() == p.values.size();
    for (size_t i = 0; ok && i < phi.size(); ++i) ok = phi[i] == p.values[i];
    check("4x4 torus boundary profile equals its reduced grid profile", ok);
  }
  {
    bool ok = true;
    for (const auto& dims : std::vector<std::vector<int64_t>>{{2, 2, 2}, {2, 4}, {3, 3}}) {
      const GridShape s = GridShape::from_dims(dims);
      const Graph g = grid_graph(s);
      const int64_t v = vbw_sweep(s, opts);
      ok = ok && brute_vbw(g) == v && brute_pathwidth(g) == v && brute_bandwidth(g) == v;
    }
    {
      const GridShape s = GridShape::from_dims({2, 2, 3});
      ok = ok && brute_pathwidth(grid_graph(s)) == vbw_sweep(s, opts);
    }
    check("brute bandwidth / pathwidth / boundary width coincide on small grids", ok);
  }
  {
    bool ok = true;
    for (const auto& dims :
         std::vector<std::vector<int64_t>>{{2, 3, 3}, {3, 3}, {4}, {2, 2, 2}}) {
      const GridShape s = GridShape::from_dims(dims);
      const int64_t v = vbw_sweep(s, opts);
      const VertexOrdering o = emit_bandwidth_ordering(s, opts.memory_cap);
      ok = ok && ordering_bandwidth(s, o.order) == v;
      const PathDecomposition pd = emit_path_decomposition(s, opts.memory_cap);
      const DecompositionCheck chk = verify_path_decomposition(s, pd);
      ok = ok && chk.ok && chk.width == v;
    }
    check("emitted orderings and decompositions achieve the exact width", ok);
  }
  {
    bool ok = true;
    struct Sample {
      std::vector<int64_t> sizes;
      std::vector<FactorKind> kinds;
    };
    const std::vector<Sample> samples = {
        {{3, 2}, {FactorKind::cycle, FactorKind::path}},
        {{3, 3}, {FactorKind::cycle, FactorKind::cycle}},
        {{4, 3}, {FactorKind::cycle, FactorKind::path}},
        {{5, 3}, {FactorKind::cycle, FactorKind::cycle}},
    };
    for (const auto& sample : samples) {
      Graph g = factor_graph(sample.kinds[0], sample.sizes[0]);
      for (size_t i = 1; i < sample.sizes.size(); ++i)
        g = cartesian_product(g, factor_graph(sample.kinds[i], sample.sizes[i]));
      const int64_t lower = vbw_sweep(GridShape::from_dims(sample.sizes), opts);
      ok = ok && brute_vbw(g) >= lower;
    }
    check("product graphs respect the grid lower bound", ok);
  }

  if (failed > 0) {
    out << "selfcheck: " << failed << " of " << total << " checks failed\n";
    return 1;
  }
  out << "selfcheck: all " << total << " checks passed\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact bandwidth / pathwidth / boundary width of grids and even tori"};
  app.name("gridwidth");
  app.require_subcommand(1);

  auto* formula = app.add_subcommand("formula", "best exact closed form for a grid shape");
  std::vector<int64_t> formula_dims;
  std::string formula_format = "text";
  formula->add_option("dims", formula_dims, "factor sizes, e.g. 5 9 20")->required();
  formula->add_option("--format", formula_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "exact width via the simplicial-order sweep");
  std::vector<int64_t> sweep_dims;
  std::optional<std::string> sweep_profile_path;
  bool sweep_full = false;
  std::optional<uint64_t> sweep_mem;
  std::string sweep_format = "text";
  sweep->add_option("dims", sweep_dims, "factor sizes")->required();
  sweep->add_option("--profile", sweep_profile_path, "write the boundary profile as CSV");
  sweep->add_flag("--full", sweep_full, "write every profile row, however many");
  sweep->add_option("--mem", sweep_mem, "memory cap in bytes (default 2 GiB)");
  sweep->add_option("--format", sweep_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* torus = app.add_subcommand("torus", "exact width of a product of even cycles");
  std::vector<int64_t> torus_lengths;
  std::optional<uint64_t> torus_mem;
  std::string torus_format = "text";
  torus->add_option("lengths", torus_lengths, "even cycle lengths, e.g. 4 4 10")->required();
  torus->add_option("--mem", torus_mem, "memory cap in bytes (default 2 GiB)");
  torus->add_option("--format", torus_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* certify = app.add_subcommand("certify", "emit and verify width certificates");
  std::vector<int64_t> certify_dims;
  std::optional<std::string> certify_ordering;
  std::optional<std::string> certify_decomp;
  bool certify_verify_only = false;
  std::optional<uint64_t> certify_mem;
  certify->add_option("dims", certify_dims, "factor sizes")->required();
  certify->add_option("--ordering", certify_ordering, "ordering certificate file");
  certify->add_option("--decomp", certify_decomp, "path decomposition certificate file");
  certify->add_flag("--verify-only", certify_verify_only,
                    "read certificates from the given files instead of emitting them");
  certify->add_option("--mem", certify_mem, "memory cap in bytes (default 2 GiB)");

  auto* oracle = app.add_subcommand("oracle", "brute-force widths of small graphs");
  std::vector<int64_t> oracle_grid;
  std::vector<int64_t> oracle_torus;
  std::optional<std::string> oracle_file;
  std::string oracle_what = "vbw";
  std::optional<uint64_t> oracle_k;
  std::string oracle_format = "text";
  auto* og = oracle->add_option("--grid", oracle_grid, "grid factor sizes");
  auto* ot = oracle->add_option("--torus", oracle_torus, "cycle lengths");
  auto* of = oracle->add_option("--file", oracle_file, "edge-list graph file");
  og->excludes(ot)->excludes(of);
  ot->excludes(of);
  oracle->add_option("--what", oracle_what, "phi, vbw, bw, or pw")
      ->check(CLI::IsMember({"phi", "vbw", "bw", "pw"}));
  oracle->add_option("--k", oracle_k, "prefix size for --what phi");
  oracle->add_option("--format", oracle_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* conj = app.add_subcommand("conjecture4d", "compare 4d cube sweeps with the conjecture");
  int64_t conj_max_n = 30;
  int64_t conj_threads = 1;
  std::optional<uint64_t> conj_mem;
  conj->add_option("--max-n", conj_max_n, "largest side length to test (default 30)");
  conj->add_option("--threads", conj_threads, "worker threads (default 1)");
  conj->add_option("--mem", conj_mem, "memory cap in bytes (default 2 GiB)");

  auto* selfcheck = app.add_subcommand("selfcheck", "cross-check every engine against the others");
  std::optional<uint64_t> selfcheck_mem;
  selfcheck->add_option("--mem", selfcheck_mem, "memory cap in bytes (default 2 GiB)");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("gridwidth");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (formula->parsed()) return run_formula(formula_dims, formula_format, out);
    if (sweep->parsed())
      return run_sweep(sweep_dims, sweep_profile_path, sweep_full, sweep_mem, sweep_format, out);
    if (torus->parsed()) return run_torus(torus_lengths, torus_mem, torus_format, out);
    if (certify->parsed())
      return run_certify(certify_dims, certify_ordering, certify_decomp, certify_verify_only,
                         certify_mem, out);
    if (oracle->parsed())
      return run_oracle(oracle_grid, oracle_torus, oracle_file, oracle_what, oracle_k,
                        oracle_format, out);
    if (conj->parsed()) return run_conjecture4d(conj_max_n, conj_threads, conj_mem, out);
    if (selfcheck->parsed()) return run_selfcheck(selfcheck_mem, out);
    err << "error: no subcommand given\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 3;
  } catch (const InvariantViolation& e) {
    err << "error: internal invariant violated: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gridwidth
