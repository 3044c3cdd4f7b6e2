#pragma once

// JSON-configured experiments and their tabular output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "szego/domains.hpp"

namespace szego {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Raised for configs that fail validation; `field` names the offending key.
class config_error : public std::runtime_error {
 public:
  config_error(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Output cannot be written.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { reproduce, project_compare, egg_norms, egg_stabilize, rigidity_scan, oracle_suite };

std::string to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::reproduce;
  // domain parameters
  std::string domain = "disk";
  int p = 1;
  int m = 1;
  int n = 1;
  int k = 0;
  std::vector<int> k_vector;
  double tau = 0.0;
  std::string measure = "omega_p";
  std::string weight = "one";
  std::vector<cd> q_values;
  std::vector<cd> punctures;
  double map_eps = 0.0;
  // grids
  int N = 64;
  int M = 64;
  // experiment-specific
  int bandwidth = 16;
  int points = 10;
  int j_max = 6;
  int l_max = 6;
  int k_max = 5;
  int m_max = 6;
  int n_max = 6;
  int samples = 100;
  std::string mode = "membership";
  std::string preset = "stabilization-h";
  int extra_pole = 0;
  std::vector<int> truncations;
  double tolerance = 1e-10;
  std::optional<std::string> output_path;
  std::uint64_t seed = 0;

  /// Parses and validates; throws config_error naming the offending field.
  static ExperimentConfig from_json(const nlohmann::json& j);
  /// The fully resolved config, defaults included.
  nlohmann::json to_json() const;
};

using Cell = std::variant<std::int64_t, double, std::string>;

/// Non-finite values become labeled string cells ("inf", "-inf", "nan").
Cell number(double x);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json metadata = nlohmann::json::object();

  void add_row(std::vector<Cell> row);
  bool operator==(const ResultTable& other) const { return columns == other.columns && rows == other.rows; }
};

/// Dispatches to the owning module. Deterministic given (config, seed).
ResultTable run(const ExperimentConfig& config);

enum class OutputFormat { csv, json, gnuplot };

OutputFormat parse_format(const std::string& name);

/// Header row plus one line per row, RFC 4180 quoting.
void write_csv(const ResultTable& table, std::ostream& out);
/// {"metadata": ..., "columns": [...], "rows": [[...], ...]}
void write_json(const ResultTable& table, std::ostream& out);
/// "# col1 col2 ..." then whitespace-separated columns.
void write_gnuplot(const ResultTable& table, std::ostream& out);

/// Writes the table to `path`; for csv and gnuplot, metadata goes to a
/// sidecar `<path>.meta.json`. Throws io_error.
void emit(const ResultTable& table, OutputFormat format, const std::string& path);

ResultTable read_json_table(std::istream& in);

/// The first `count` exponents (a, b) of z1^a z2^b admissible for the
/// Hartogs-type space with parameters (m, n, k): a >= 0 and na + mb + mk >= 0,
/// enumerated along diagonals above the lowest admissible b.
std::vector<std::pair<int, int>> admissible_hartogs_monomials(int m, int n, int k, int count);

/// Deterministic interior points of the (m, n) Hartogs triangle with
/// |z1|^m / |z2|^n <= 0.3^m and |z2| <= 0.7.
std::vector<Point> hartogs_interior_points(int m, int n, int count);

}  // namespace szego
