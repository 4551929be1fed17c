#include "golay2d/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace golay2d::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int required_int(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key).get<int>();
}

int optional_int(const json& j, const char* key, int fallback) {
  return j.contains(key) ? j.at(key).get<int>() : fallback;
}

std::vector<int> optional_ints(const json& j, const char* key) {
  return j.contains(key) ? j.at(key).get<std::vector<int>>() : std::vector<int>{};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::vector<std::string>> read_grid(const std::string& text) {
  std::vector<std::vector<std::string>> grid;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line, ',');
    for (auto& c : cells) c = trim(c);
    grid.push_back(std::move(cells));
  }
  if (grid.empty()) throw ParseError("empty CSV input");
  for (const auto& row : grid)
    if (row.size() != grid.front().size()) throw ParseError("ragged CSV: rows have different lengths");
  return grid;
}

long long parse_integer(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: \"" + s + "\"");
  }
  if (used != s.size()) throw ParseError("not an integer: \"" + s + "\"");
  return v;
}

// "a", "a+bi" or "a-bi" with integer parts.
std::pair<long long, long long> parse_gaussian(const std::string& s) {
  if (s.empty()) throw ParseError("empty table cell");
  if (s.back() != 'i') return {parse_integer(s), 0};
  const auto split_at = s.find_last_of("+-", s.size() - 2);
  if (split_at == std::string::npos || split_at == 0) throw ParseError("malformed complex cell \"" + s + "\"");
  const long long a = parse_integer(s.substr(0, split_at));
  const long long b = parse_integer(s.substr(split_at, s.size() - 1 - split_at));
  return {a, b};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

json to_json(const GeneralizedBooleanFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back({{"coeff", t.coeff}, {"vars", t.vars}});
  return {{"q", f.q()}, {"n", f.n()}, {"m", f.m()}, {"terms", terms}, {"constant", f.constant()}};
}

GeneralizedBooleanFunction function_from_json(const json& j) {
  return guarded("function spec", [&] {
    GeneralizedBooleanFunction f(required_int(j, "q"), optional_int(j, "n", 0), required_int(j, "m"));
    if (j.contains("terms"))
      for (const auto& t : j.at("terms")) f.add_term(t.at("coeff").get<int>(), t.at("vars").get<std::vector<int>>());
    f.add_constant(optional_int(j, "constant", 0));
    return f;
  });
}

json to_json(const GcapBasicSpec& s) {
  return {{"q", s.q}, {"n", s.n}, {"m", s.m}, {"pi1", s.pi1}, {"pi2", s.pi2},
          {"p", s.p}, {"lambda", s.lambda}, {"p0", s.p0}};
}

json to_json(const GcapGeneralSpec& s) {
  return {{"q", s.q}, {"n", s.n}, {"m", s.m}, {"pi", s.pi}, {"p", s.p}, {"p0", s.p0}};
}

json to_json(const GcasSpec& s) {
  return {{"q", s.q}, {"n", s.n}, {"m", s.m}, {"blocks", s.blocks}, {"p", s.p}, {"p0", s.p0}};
}

GcapBasicSpec basic_spec_from_json(const json& j) {
  return guarded("basic spec", [&] {
    GcapBasicSpec s;
    s.q = required_int(j, "q");
    s.n = required_int(j, "n");
    s.m = required_int(j, "m");
    s.pi1 = j.at("pi1").get<Permutation>();
    s.pi2 = j.at("pi2").get<Permutation>();
    s.p = optional_ints(j, "p");
    s.lambda = optional_ints(j, "lambda");
    s.p0 = optional_int(j, "p0", 0);
    return s;
  });
}

GcapGeneralSpec general_spec_from_json(const json& j) {
  return guarded("general spec", [&] {
    GcapGeneralSpec s;
    s.q = required_int(j, "q");
    s.n = optional_int(j, "n", 0);
    s.m = required_int(j, "m");
    s.pi = j.at("pi").get<Permutation>();
    s.p = optional_ints(j, "p");
    s.p0 = optional_int(j, "p0", 0);
    return s;
  });
}

GcasSpec gcas_spec_from_json(const json& j) {
  return guarded("set spec", [&] {
    GcasSpec s;
    s.q = required_int(j, "q");
    s.n = optional_int(j, "n", 0);
    s.m = required_int(j, "m");
    s.blocks = j.at("blocks").get<Blocks>();
    s.p = optional_ints(j, "p");
    s.p0 = optional_int(j, "p0", 0);
    return s;
  });
}

ConstructionSpec construction_spec_from_json(const json& j) {
  if (j.contains("pi1")) return basic_spec_from_json(j);
  if (j.contains("pi")) return general_spec_from_json(j);
  throw ParseError("spec has neither \"pi1\" (basic) nor \"pi\" (general path)");
}

json to_json(const QaryArray& a) { return {{"q", a.q()}, {"entries", a.to_rows()}}; }

QaryArray array_from_json(const json& j, std::optional<int> q) {
  return guarded("array", [&] {
    if (j.is_object()) {
      const int qq = required_int(j, "q");
      if (q && *q != qq) throw ParseError("array q=" + std::to_string(qq) + " conflicts with requested q=" + std::to_string(*q));
      return QaryArray::from_rows(qq, j.at("entries").get<std::vector<std::vector<int>>>());
    }
    if (!q) throw ParseError("bare nested-list array needs an explicit q");
    return QaryArray::from_rows(*q, j.get<std::vector<std::vector<int>>>());
  });
}

std::string to_csv(const QaryArray& a) {
  std::ostringstream os;
  for (Eigen::Index g = 0; g < a.rows(); ++g) {
    for (Eigen::Index i = 0; i < a.cols(); ++i) os << (i ? "," : "") << a(g, i);
    os << '\n';
  }
  return os.str();
}

QaryArray array_from_csv(const std::string& text, int q) {
  const auto grid = read_grid(text);
  std::vector<std::vector<int>> rows;
  for (const auto& line : grid) {
    auto& row = rows.emplace_back();
    for (const auto& cell : line) {
      const long long v = parse_integer(cell);
      if (v < 0 || v >= q) throw ParseError("entry " + cell + " outside Z_" + std::to_string(q));
      row.push_back(static_cast<int>(v));
    }
  }
  return QaryArray::from_rows(q, rows);
}

std::string format_cell(const CorrelationValue& v) {
  if (auto g = v.as_gaussian_integer()) {
    const auto [a, b] = *g;
    if (b == 0) return std::to_string(a);
    return std::to_string(a) + (b < 0 ? "-" : "+") + std::to_string(b < 0 ? -b : b) + "i";
  }
  const auto z = v.to_complex();
  if ((v - v.conj()).is_zero()) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

std::string to_csv(const CorrelationTable& t) {
  std::ostringstream os;
  for (Eigen::Index u1 = 1 - t.l1(); u1 < t.l1(); ++u1) {
    for (Eigen::Index u2 = 1 - t.l2(); u2 < t.l2(); ++u2) os << (u2 > 1 - t.l2() ? "," : "") << format_cell(t.at(u1, u2));
    os << '\n';
  }
  return os.str();
}

CorrelationTable table_from_csv(const std::string& text, int q) {
  const auto grid = read_grid(text);
  const auto rows = static_cast<Eigen::Index>(grid.size());
  const auto cols = static_cast<Eigen::Index>(grid.front().size());
  if (rows % 2 == 0 || cols % 2 == 0) throw ParseError("correlation table dimensions must be odd");
  CorrelationTable t(q, (rows + 1) / 2, (cols + 1) / 2);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto [a, b] = parse_gaussian(grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      auto v = CorrelationValue::integer(q, a);
      if (b != 0) {
        if (q % 4 != 0) throw ParseError("imaginary cell in a table over q=" + std::to_string(q));
        v.add_root(q / 4, b);
      }
      t.at(r - (t.l1() - 1), c - (t.l2() - 1)) = std::move(v);
    }
  return t;
}

json to_json(const CorrelationTable& t) {
  json cells = json::array();
  json display = json::array();
  for (Eigen::Index u1 = 1 - t.l1(); u1 < t.l1(); ++u1) {
    json row = json::array();
    for (Eigen::Index u2 = 1 - t.l2(); u2 < t.l2(); ++u2) {
      cells.push_back(t.at(u1, u2).counts());
      row.push_back(format_cell(t.at(u1, u2)));
    }
    display.push_back(std::move(row));
  }
  return {{"q", t.q()}, {"l1", t.l1()}, {"l2", t.l2()}, {"cells", cells}, {"display", display}};
}

CorrelationTable table_from_json(const json& j) {
  return guarded("correlation table", [&] {
    const int q = required_int(j, "q");
    const auto l1 = j.at("l1").get<Eigen::Index>();
    const auto l2 = j.at("l2").get<Eigen::Index>();
    CorrelationTable t(q, l1, l2);
    const auto& cells = j.at("cells");
    if (cells.size() != static_cast<std::size_t>(t.grid_rows() * t.grid_cols()))
      throw ParseError("table has " + std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(t.grid_rows() * t.grid_cols()));
    std::size_t k = 0;
    for (Eigen::Index u1 = 1 - l1; u1 < l1; ++u1)
      for (Eigen::Index u2 = 1 - l2; u2 < l2; ++u2)
        t.at(u1, u2) = CorrelationValue(q, cells[k++].get<std::vector<std::int64_t>>());
    return t;
  });
}

json to_json(const VerificationResult& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"u1", v.u1}, {"u2", v.u2}, {"value", format_cell(v.value)}, {"counts", v.value.counts()}});
  return {{"passed", r.passed},
          {"status", to_string(r.status)},
          {"center_value", format_cell(r.center_value)},
          {"expected_center", format_cell(r.expected_center)},
          {"violation_count", r.violation_count},
          {"violations", violations}};
}

json to_json(const RunPartition& r) { return {{"set", r.source}, {"runs", r.runs}, {"v", r.v()}}; }

json to_json(const PaprReport& r) {
  json j = {{"oversampling", r.oversampling},
            {"per_row", r.per_row},
            {"per_col", r.per_col},
            {"max_row", r.max_row()},
            {"max_col", r.max_col()},
            {"row_bound", r.row_bound ? json(*r.row_bound) : json(nullptr)},
            {"col_bound", r.col_bound ? json(*r.col_bound) : json(nullptr)}};
  if (r.row_runs) j["row_runs"] = to_json(*r.row_runs);
  if (r.col_runs) j["col_runs"] = to_json(*r.col_runs);
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

json read_json(const std::filesystem::path& path) {
  const auto text = read_file(path);
  return guarded(path.string().c_str(), [&] { return json::parse(text); });
}

QaryArray read_array(const std::filesystem::path& path, std::optional<int> q) {
  if (path.extension() == ".json") return array_from_json(read_json(path), q);
  if (!q) throw ParseError("reading CSV array " + path.string() + " needs q");
  return array_from_csv(read_file(path), *q);
}

}  // namespace golay2d::io
