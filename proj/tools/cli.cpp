#include "cli.hpp"

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "golay2d/constructions.hpp"
#include "golay2d/correlation.hpp"
#include "golay2d/io.hpp"
#include "golay2d/papr.hpp"
#include "golay2d/verify.hpp"

namespace golay2d::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

// Bad input: reported on stderr, exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string kind;
  std::string spec_path;
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "csv";
  std::optional<int> q;
  int oversampling = kDefaultOversampling;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t seed = 1;
  int count = 100;
  int max_vars = 6;
  int n = 1;
  int m = 1;
  int rows = 1;
  int cols = 1;
  bool cross = false;
  bool cite = false;
  bool as_json = false;
  std::string dump;
};

int default_oversampling() {
  if (const char* env = std::getenv("GOLAY2D_OVERSAMPLE")) {
    try {
      const int r = std::stoi(env);
      if (r >= 4) return r;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring GOLAY2D_OVERSAMPLE=" << env << " (need an integer >= 4)\n";
  }
  return kDefaultOversampling;
}

std::vector<QaryArray> load_arrays(const std::vector<std::string>& paths, std::optional<int> q) {
  std::vector<QaryArray> out;
  for (const auto& p : paths) {
    try {
      out.push_back(io::read_array(p, q));
    } catch (const io::ParseError& e) {
      throw InputError(p + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(p + ": " + e.what());
    }
  }
  return out;
}

void write_array(const fs::path& dir, const std::string& stem, const QaryArray& a, const std::string& format,
                 std::vector<std::string>& written) {
  const fs::path path = dir / (stem + "." + format);
  io::write_file(path, format == "json" ? io::to_json(a).dump() + "\n" : io::to_csv(a));
  written.push_back(path.string());
}

std::string shape(const QaryArray& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

// Provenance labels for --cite.
const char* citation(const std::string& kind) {
  if (kind == "gcap-basic") return "row/column product path pair (f, f + (q/2) x_pi1(1))";
  if (kind == "gcap-general") return "single-path pair (f, f + (q/2) z_pi(1))";
  if (kind == "mate") return "mate pairs (f, f + (q/2) z_pi(1)) and (f + (q/2) z_pi(n+m), f + (q/2)(z_pi(1) + z_pi(n+m)))";
  if (kind == "gcas") return "multi-path set {f + (q/2) sum lambda_a z_pi_a(1)}, lambda_1 fastest";
  if (kind == "gdj") return "1-D Golay-Davis-Jedwab pair";
  if (kind == "gcs1d") return "1-D multi-path complementary set";
  return "array of a generalized Boolean function";
}

json spec_json(const CommandConfig& cfg) {
  try {
    return io::read_json(cfg.spec_path);
  } catch (const io::ParseError& e) {
    throw InputError(e.what());
  }
}

int cmd_gen(const CommandConfig& cfg, std::ostream& out) {
  const json j = spec_json(cfg);
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());

  std::vector<std::pair<std::string, QaryArray>> arrays;
  auto add_pair = [&](const ArrayPair& p, const std::string& a, const std::string& b) {
    arrays.emplace_back(a, p.first);
    arrays.emplace_back(b, p.second);
  };
  try {
    if (cfg.kind == "gcap-basic") {
      add_pair(construct_gcap_basic(io::basic_spec_from_json(j)), "c", "d");
    } else if (cfg.kind == "gcap-general") {
      add_pair(construct_gcap_general(io::general_spec_from_json(j)), "c", "d");
    } else if (cfg.kind == "mate") {
      const auto spec = io::general_spec_from_json(j);
      add_pair(construct_gcap_general(spec), "c", "d");
      add_pair(construct_mate(spec), "c_prime", "d_prime");
    } else if (cfg.kind == "gcas") {
      const auto set = construct_gcas(io::gcas_spec_from_json(j));
      for (std::size_t k = 0; k < set.size(); ++k) arrays.emplace_back("array_" + std::to_string(k), set[k]);
    } else if (cfg.kind == "gdj") {
      const auto s = io::general_spec_from_json(j);
      if (s.n != 0) throw InputError("gdj spec must not set n (sequences have a single row)");
      add_pair(gdj_pair(s.q, s.m, s.pi, s.p, s.p0), "c", "d");
    } else if (cfg.kind == "gcs1d") {
      const auto s = io::gcas_spec_from_json(j);
      if (s.n != 0) throw InputError("gcs1d spec must not set n (sequences have a single row)");
      const auto set = gcs_1d(s.q, s.m, s.blocks, s.p, s.p0);
      for (std::size_t k = 0; k < set.size(); ++k) arrays.emplace_back("seq_" + std::to_string(k), set[k]);
    } else {
      arrays.emplace_back("f", array_from_function(io::function_from_json(j)));
    }
  } catch (const io::ParseError& e) {
    throw InputError(cfg.spec_path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(cfg.spec_path + ": " + e.what());
  }

  std::vector<std::string> written;
  for (const auto& [stem, a] : arrays) write_array(dir, stem, a, cfg.format, written);
  const auto& first = arrays.front().second;
  out << cfg.kind << ": q=" << first.q() << " size=" << shape(first) << " arrays=" << arrays.size() << '\n';
  if (cfg.cite) out << "construction: " << citation(cfg.kind) << '\n';
  for (const auto& w : written) out << "  " << w << '\n';
  return kExitOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  const auto arrays = load_arrays(cfg.inputs, cfg.q);
  VerificationResult r;
  try {
    if (cfg.kind == "gcap") {
      if (arrays.size() != 2) throw InputError("verify gcap takes exactly 2 arrays");
      r = is_gcap(arrays[0], arrays[1]);
    } else if (cfg.kind == "mate") {
      if (arrays.size() != 4) throw InputError("verify mate takes 4 arrays: c d c' d'");
      r = is_mate({arrays[0], arrays[1]}, {arrays[2], arrays[3]});
    } else if (cfg.kind == "gcs") {
      r = is_gcs(arrays);
    } else {
      r = is_gcas(arrays);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << io::to_json(r).dump(2) << '\n';
  return r.passed ? kExitOk : kExitFail;
}

int cmd_corr(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.cross != (cfg.inputs.size() == 2))
    throw InputError(cfg.cross ? "--cross needs two array files" : "autocorrelation takes one array file (use --cross for two)");
  const auto arrays = load_arrays(cfg.inputs, cfg.q);
  CorrelationTable table = [&] {
    try {
      return cfg.cross ? cross_correlation_table(arrays[0], arrays[1]) : auto_correlation_table(arrays[0]);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  const std::string text = cfg.format == "json" ? io::to_json(table).dump(1) + "\n" : io::to_csv(table);
  if (cfg.out.empty())
    out << text;
  else
    io::write_file(cfg.out, text);
  return kExitOk;
}

int cmd_papr(const CommandConfig& cfg, std::ostream& out) {
  const auto a = load_arrays(cfg.inputs, cfg.q).front();
  ConstructionSpec spec;
  if (!cfg.spec_path.empty()) {
    try {
      spec = io::construction_spec_from_json(spec_json(cfg));
    } catch (const io::ParseError& e) {
      throw InputError(cfg.spec_path + ": " + e.what());
    }
  }
  PaprReport r;
  try {
    r = papr_report(a, spec, cfg.oversampling);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (cfg.as_json) {
    out << io::to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << std::fixed << std::setprecision(4);
  out << "oversampling " << r.oversampling << '\n';
  for (std::size_t g = 0; g < r.per_row.size(); ++g) out << "row " << g << "  " << r.per_row[g] << '\n';
  for (std::size_t i = 0; i < r.per_col.size(); ++i) out << "col " << i << "  " << r.per_col[i] << '\n';
  out << "max row " << r.max_row();
  if (r.row_bound) out << "  bound " << *r.row_bound;
  out << "\nmax col " << r.max_col();
  if (r.col_bound) out << "  bound " << *r.col_bound;
  out << '\n';
  auto runs = [&](const char* name, const std::optional<RunPartition>& p) {
    if (!p) return;
    out << name << " runs:";
    for (const auto& run : p->runs) {
      out << " {";
      for (std::size_t k = 0; k < run.size(); ++k) out << (k ? "," : "") << run[k];
      out << '}';
    }
    out << "  v=" << p->v() << '\n';
  };
  runs("W", r.row_runs);
  runs("W'", r.col_runs);
  return kExitOk;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  std::uint64_t formula = 0;
  try {
    formula = count_path_arrays(cfg.q.value_or(2), cfg.n, cfg.m);
    out << "formula (n+m)!/2 * q^(n+m+1) = " << formula << '\n';
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::overflow_error&) {
    out << "formula overflows 64 bits\n";
  }
  const int q = cfg.q.value_or(2);
  EnumerationCount count;
  try {
    count = count_distinct_path_arrays(q, cfg.n, cfg.m, cfg.budget);
  } catch (const BudgetExceeded& e) {
    out << "enumeration skipped: " << e.what() << '\n';
    return kExitOk;
  }
  out << "raw specs = " << count.raw_specs << '\n';
  out << "distinct arrays = " << count.distinct_first_arrays << '\n';

  if (!cfg.dump.empty()) {
    std::ofstream dump(cfg.dump);
    if (!dump) throw InputError("cannot write " + cfg.dump);
    enumerate_path_specs(q, cfg.n, cfg.m, cfg.budget, [&](const GcapGeneralSpec& s, const ArrayPair& p) {
      dump << json{{"pi", s.pi}, {"p", s.p}, {"p0", s.p0}, {"c", p.first.to_rows()}}.dump() << '\n';
      return true;
    });
  }
  if (count.distinct_first_arrays != formula) {
    out << "MISMATCH: enumeration disagrees with the formula\n";
    return kExitFail;
  }
  out << "agree\n";
  return kExitOk;
}

int cmd_search(const CommandConfig& cfg, std::ostream& out) {
  std::vector<ArrayPair> pairs;
  try {
    pairs = brute_force_gcaps(cfg.q.value_or(2), cfg.rows, cfg.cols, cfg.budget);
  } catch (const BudgetExceeded& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << pairs.size() << " pairs\n";
  for (const auto& p : pairs) out << json{{"c", p.first.to_rows()}, {"d", p.second.to_rows()}}.dump() << '\n';
  return kExitOk;
}

// Random specs from a seeded generator, each verified exactly.
int cmd_sample(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.max_vars < 2 || cfg.max_vars > 10) throw InputError("--max-vars must be in 2..10");
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto perm = [&](int size) {
    Permutation pi(static_cast<std::size_t>(size));
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
  };
  auto coeffs = [&](int size, int q) {
    std::vector<int> v(static_cast<std::size_t>(size));
    for (auto& c : v) c = pick(0, q - 1);
    return v;
  };
  const int min_side = cfg.kind == "gcap-basic" ? 1 : 0;
  int failures = 0;
  for (int t = 0; t < cfg.count; ++t) {
    const int q = 2 * pick(1, 4);
    const int n = pick(min_side, cfg.max_vars - std::max(min_side, 2 - min_side));
    const int m = pick(std::max(min_side, 2 - n), cfg.max_vars - n);
    json spec;
    VerificationResult r;
    if (cfg.kind == "gcap-basic") {
      const GcapBasicSpec s{q, n, m, perm(m), perm(n), coeffs(m, q), coeffs(n, q), pick(0, q - 1)};
      spec = io::to_json(s);
      r = is_gcap(construct_gcap_basic(s));
    } else if (cfg.kind == "gcas") {
      const auto order = perm(n + m);
      GcasSpec s{q, n, m, {}, coeffs(n + m, q), pick(0, q - 1)};
      for (int l : order) {
        if (s.blocks.empty() || pick(0, 2) == 0) s.blocks.emplace_back();
        s.blocks.back().push_back(l);
      }
      spec = io::to_json(s);
      r = is_gcas(construct_gcas(s));
    } else {
      const GcapGeneralSpec s{q, n, m, perm(n + m), coeffs(n + m, q), pick(0, q - 1)};
      spec = io::to_json(s);
      r = cfg.kind == "mate" ? is_mate(construct_gcap_general(s), construct_mate(s)) : is_gcap(construct_gcap_general(s));
    }
    failures += !r.passed;
    out << json{{"spec", spec}, {"passed", r.passed}}.dump() << '\n';
  }
  out << cfg.count - failures << "/" << cfg.count << " passed\n";
  return failures ? kExitFail : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golay complementary array pairs, sets and mates from generalized Boolean functions"};
  app.require_subcommand(1);
  CommandConfig cfg;
  cfg.oversampling = default_oversampling();
  const auto formats = CLI::IsMember({"csv", "json"});

  auto* gen = app.add_subcommand("gen", "construct arrays from a JSON spec");
  gen->add_option("kind", cfg.kind, "construction kind")
      ->required()
      ->check(CLI::IsMember({"gcap-basic", "gcap-general", "mate", "gcas", "gdj", "gcs1d", "function"}));
  gen->add_option("spec", cfg.spec_path, "spec JSON file")->required()->check(CLI::ExistingFile);
  gen->add_option("-o,--out", cfg.out, "output directory (created if missing)");
  gen->add_option("-f,--format", cfg.format, "array file format")->check(formats);
  gen->add_flag("--cite", cfg.cite, "print the construction's provenance label");

  auto* verify = app.add_subcommand("verify", "check complementarity exactly; JSON result on stdout");
  verify->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"gcap", "gcas", "mate", "gcs"}));
  verify->add_option("arrays", cfg.inputs, "array files (.csv needs --q)")->required()->check(CLI::ExistingFile);
  verify->add_option("--q", cfg.q, "alphabet size for CSV inputs")->check(CLI::Range(2, 1 << 20));

  auto* corr = app.add_subcommand("corr", "aperiodic auto- or cross-correlation table");
  corr->add_option("arrays", cfg.inputs)->required()->expected(1, 2)->check(CLI::ExistingFile);
  corr->add_flag("--cross", cfg.cross, "cross-correlation rho(first, second)");
  corr->add_option("--q", cfg.q)->check(CLI::Range(2, 1 << 20));
  corr->add_option("-o,--out", cfg.out, "output file (stdout if omitted)");
  corr->add_option("-f,--format", cfg.format)->check(formats);

  auto* papr = app.add_subcommand("papr", "row and column PAPR with construction bounds");
  papr->add_option("array", cfg.inputs)->required()->expected(1)->check(CLI::ExistingFile);
  papr->add_option("--q", cfg.q)->check(CLI::Range(2, 1 << 20));
  papr->add_option("--spec", cfg.spec_path, "construction spec (basic or general path)")->check(CLI::ExistingFile);
  papr->add_option("-R,--oversample", cfg.oversampling, "samples per subcarrier (default from GOLAY2D_OVERSAMPLE or 256)")
      ->check(CLI::Range(4, 1 << 16));
  papr->add_flag("--json", cfg.as_json);

  auto* enumerate = app.add_subcommand("enumerate", "count distinct single-path arrays against the formula");
  enumerate->add_option("--q", cfg.q)->required()->check(CLI::Range(2, 1 << 20));
  enumerate->add_option("--n", cfg.n)->required()->check(CLI::Range(0, 30));
  enumerate->add_option("--m", cfg.m)->required()->check(CLI::Range(0, 30));
  enumerate->add_option("--budget", cfg.budget);
  enumerate->add_option("--dump", cfg.dump, "write every spec and first array as JSON lines");

  auto* search = app.add_subcommand("search", "exhaustive search for complementary pairs");
  search->add_option("--q", cfg.q)->required()->check(CLI::Range(2, 64));
  search->add_option("--rows", cfg.rows)->required()->check(CLI::Range(1, 16));
  search->add_option("--cols", cfg.cols)->required()->check(CLI::Range(1, 16));
  search->add_option("--budget", cfg.budget);

  auto* sample = app.add_subcommand("sample", "verify randomly drawn specs of one kind");
  sample->add_option("kind", cfg.kind)->required()->check(CLI::IsMember({"gcap-basic", "gcap-general", "mate", "gcas"}));
  sample->add_option("--count", cfg.count)->check(CLI::Range(1, 1000000));
  sample->add_option("--seed", cfg.seed);
  sample->add_option("--max-vars", cfg.max_vars);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (corr->parsed()) return cmd_corr(cfg, out);
    if (papr->parsed()) return cmd_papr(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (search->parsed()) return cmd_search(cfg, out);
    if (sample->parsed()) return cmd_sample(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"golay2d"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace golay2d::cli
