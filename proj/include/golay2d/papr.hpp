#pragma once

// Peak-to-average power ratio of row and column sequences under the multicarrier
// model S(t) = sum_k xi^(s_k) exp(2 pi sqrt(-1) k t), t in [0, 1].

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "golay2d/constructions.hpp"
#include "golay2d/qary_array.hpp"

namespace golay2d {

inline constexpr int kDefaultOversampling = 256;

// Maximal runs of consecutive integers in an index set.
struct RunPartition {
  std::vector<int> source;             // sorted, deduplicated
  std::vector<std::vector<int>> runs;  // ascending
  int v() const { return static_cast<int>(runs.size()); }
};

RunPartition run_partition(std::span<const int> indices);

// max_t |S(t)|^2 / L. Samples R * L uniform points in [0, 1) and refines each
// sampled local maximum by ternary search to 1e-10 in t. Throws std::invalid_argument for an empty
// sequence or R < 4.
double papr_sequence(std::span<const int> s, int q, int oversampling = kDefaultOversampling);

using ConstructionSpec = std::variant<std::monostate, GcapBasicSpec, GcapGeneralSpec>;

struct PaprReport {
  std::vector<double> per_row;
  std::vector<double> per_col;
  std::optional<double> row_bound;
  std::optional<double> col_bound;
  std::optional<RunPartition> row_runs;  // from W  = {l : pi(l) > n}
  std::optional<RunPartition> col_runs;  // from W' = {l : pi(l) <= n}
  int oversampling = kDefaultOversampling;

  double max_row() const;
  double max_col() const;
};

// Upper bounds 2^v for row and column sequences of a general-path array.
std::pair<RunPartition, RunPartition> papr_run_partitions(const GcapGeneralSpec& spec);

// Per-row and per-column PAPR with construction bounds when a spec is given:
// 2 and 2 for a basic spec, 2^v and 2^v' for a general-path spec. Throws
// std::invalid_argument when the spec does not match the array's size or q.
PaprReport papr_report(const QaryArray& c, const ConstructionSpec& spec = {},
                       int oversampling = kDefaultOversampling);

}  // namespace golay2d
