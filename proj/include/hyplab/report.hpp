#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyplab/arith.hpp"

namespace hyplab {

// One artifact value. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, u64, double, bool, std::string>;

// Floating-point fields are printed with 12 significant digits everywhere,
// which is what makes artifacts byte-stable across runs and worker counts.
std::string format_g12(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void row(std::initializer_list<Cell> cells);  // size must match columns
};

// params echo the run's semantic inputs (never workers, output path, or
// format, which must not influence artifact bytes).
struct Report {
  std::vector<std::pair<std::string, Cell>> params;
  Table table;
  // When true and the table has exactly one column, JSON results render as a
  // plain value array instead of one-key row objects; member listings are
  // arrays of numbers that way. CSV output is unaffected.
  bool json_scalar_rows = false;
};

// Header row plus data rows, comma-separated, LF endings, UTF-8 passthrough.
std::string to_csv(const Report& r);

// {"params": {...}, "results": [row objects...], "timing_ms": null}.
// timing_ms stays null in the artifact (timing goes to stderr) so that
// repeated runs stay byte-identical.
std::string to_json(const Report& r);

}  // namespace hyplab
