#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "growth/params.hpp"
#include "growth/tech_path.hpp"

namespace growth::solow {

// Trajectory of the full-employment model: the capital ratio kd
// integrated on a uniform grid, with output, rental rate, and wage
// evaluated at every node.
struct SolowPath {
  std::vector<double> times;
  std::vector<double> kd;
  std::vector<double> y;
  std::vector<double> r;
  std::vector<double> w;

  std::size_t size() const { return times.size(); }
};

// kd' = sigma * f(kd) - (a + n + delta) * kd
double rhs(double kd, const ModelParams& params, double tech_growth);

// Balanced-path capital ratio, (sigma / (a + n + delta))^(1/(1-alpha)).
double steady_state(const ModelParams& params, double tech_growth);

// Classical fixed-step 4th-order integration over [0, horizon]; the
// horizon is rounded to a whole number of steps. tech_growth may be a
// constant, a TechPath, or any callable of time.
SolowPath simulate(double kd0, const ModelParams& params,
                   const std::function<double(double)>& tech_growth,
                   double horizon, double step = 0.01);
SolowPath simulate(double kd0, const ModelParams& params, double tech_growth,
                   double horizon, double step = 0.01);
SolowPath simulate(double kd0, const ModelParams& params,
                   const TechPath& tech_growth, double horizon,
                   double step = 0.01);

}  // namespace growth::solow
