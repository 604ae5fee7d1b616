#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "growth/series.hpp"

namespace growth::data {

// Input column names, remappable from the command line. labor_share is
// picked up when the header contains it.
struct ColumnMapping {
  std::string year = "year";
  std::string output = "output";
  std::string capital = "capital";
  std::string labor_force = "labor_force";
  std::string employment = "employment";
  std::string labor_share = "labor_share";
};

enum class GrowthConvention {
  log_difference,  // log v(t+1) - log v(t)
  arithmetic,      // v(t+1)/v(t) - 1
};

// Comma-delimited UTF-8 with a header row, decimal point, no quoting.
// Rows are sorted by year before validation.
MacroSeries load_csv(const std::filesystem::path& path,
                     const ColumnMapping& mapping = {});

// Forward differences stamped at the earlier year; output is one
// shorter than the input.
std::vector<double> growth_rate(
    const std::vector<double>& levels,
    GrowthConvention convention = GrowthConvention::log_difference);

// Backward differences stamped at the later index; output drops the
// first element.
std::vector<double> first_difference(const std::vector<double>& rates);

struct DeriveOptions {
  GrowthConvention convention = GrowthConvention::log_difference;
  std::optional<int> t_origin;  // default: the first usable year
};

// Assembles the regression table. Usable rows run from the third data
// year (growth rates consume one year, their differences a second)
// through the next-to-last (the forward difference consumes the last),
// so n input rows yield n - 3 derived rows.
DerivedSeries build_derived(const MacroSeries& ms,
                            const DeriveOptions& options = {});

// Reads a table previously written by the derived-series CSV writer.
DerivedSeries load_derived_csv(const std::filesystem::path& path);

}  // namespace growth::data
