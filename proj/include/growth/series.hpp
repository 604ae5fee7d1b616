#pragma once

#include <cstddef>
#include <vector>

namespace growth::data {

// Annual level observations. labor_share is optional and stays empty
// unless the source file provides it.
struct MacroSeries {
  std::vector<int> year;
  std::vector<double> output;       // real output, constant-currency units
  std::vector<double> capital;      // real capital stock, same units
  std::vector<double> labor_force;  // persons
  std::vector<double> employment;   // persons
  std::vector<double> labor_share;  // share of output paid to labor

  std::size_t rows() const { return year.size(); }
  bool has_labor_share() const { return !labor_share.empty(); }

  // Years strictly increasing without gaps, all levels positive,
  // employment never above the labor force. Throws ValidationError
  // naming the offending year and column.
  void validate() const;
};

// Per-year growth-rate transforms and the regression variables built
// from them. One row per usable year; dep_var = dU_over_U - n_t + b.
struct DerivedSeries {
  std::vector<int> year;
  std::vector<double> U;           // labor_force / employment
  std::vector<double> dU_over_U;
  std::vector<double> b;           // capital growth rate
  std::vector<double> b_prime;     // change in b
  std::vector<double> n_t;         // labor-force growth rate
  std::vector<double> dep_var;
  std::vector<double> time_index;  // years since t_origin
  std::vector<double> labor_share;
  std::vector<double> y_over_k;    // output / capital
  int t_origin = 0;                // calendar year where time_index = 0

  std::size_t rows() const { return year.size(); }
  bool has_labor_share() const { return !labor_share.empty(); }
};

}  // namespace growth::data
