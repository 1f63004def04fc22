#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qdo::cli {

using Cell = std::variant<double, bool, std::string>;

/// Result table: column names plus rows of cells.  Serialized to CSV with a
/// schema comment line and 12-significant-digit scientific floats, or to
/// JSON lines (one object per row).  +infinity serializes as "inf" in both
/// formats; NaN anywhere is a hard error.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Time samples: start, start+step, ... up to end inclusive.
struct TimeSpec {
  double start = 0.0;
  double end = 0.0;
  double step = 0.0;  // 0 means a single sample at start

  std::vector<double> times() const;
};

/// Parses "t0" or "t0:t1:dt".  Throws ConfigError on malformed input or a
/// non-monotone range.
TimeSpec parse_time_spec(const std::string& text);

struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

/// Parses "name=a:b:count" (count-point inclusive linspace) or
/// "name=v1,v2,...".  Dashes in the name normalize to underscores.
SweepAxis parse_sweep(const std::string& text);

struct RunConfig {
  std::string scenario;  // ck | bft | amplified | coupled
  std::map<std::string, double> params;
  TimeSpec time;
  std::vector<SweepAxis> sweep;
  double hbar = 1.0;
};

/// Runs one scenario over its time samples and the Cartesian product of any
/// sweep axes (sweep values override the base parameters; rows ordered with
/// the last axis varying fastest).  Deterministic: identical configs yield
/// identical tables.  Sweeps above 1e6 rows are rejected.
Table run(const RunConfig& config);

std::string to_csv(const Table& table);
std::string to_json_lines(const Table& table);

/// Fixed 12-significant-digit scientific formatting used by the CSV writer.
std::string format_double(double v);

}  // namespace qdo::cli
