#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "growth/params.hpp"
#include "growth/production.hpp"
#include "growth/solow.hpp"
#include "growth/tech_path.hpp"

namespace growth::keynes {

// Exogenous driver of the demand-side model: the capital growth rate
// b = K'/K and its per-year change b'.
struct CapitalGrowthPath {
  std::vector<double> times;
  std::vector<double> b;
  std::vector<double> b_prime;

  // Derives b' as backward differences of b scaled by the grid step.
  // The first entry carries no change information and is set to zero.
  static CapitalGrowthPath from_b(std::vector<double> times,
                                  std::vector<double> b);

  std::size_t size() const { return times.size(); }
};

// Unemployment path implied by an exogenous capital growth path.
struct KeynesPath {
  std::vector<double> times;
  std::vector<double> kd;
  std::vector<double> U;          // labor supply / labor demand
  std::vector<double> dU_over_U;  // growth rate of U, per year
  std::vector<double> y;
  std::vector<double> r;
  std::vector<double> w;

  std::size_t size() const { return times.size(); }
  IntensiveState state_at(std::size_t i) const;
};

// Unique positive root of (b + delta) * kd = sigma * f(kd); closed form
// under Cobb-Douglas.
double solve_kd(double b, const ModelParams& params);

// Same root by bisection on (b + delta)*k - sigma*f(k) over
// [1e-8, 1e8]; the route kept for technologies without a closed-form
// inverse.
double solve_kd_bisect(const ProductionFunction& f, double sigma, double b,
                       double depreciation);

// kd'/kd = b' / (sigma * f'(kd) - (b + delta)). The denominator equals
// -sigma * w/kd < 0 at the consistent kd, so a rising b always lowers
// the capital ratio.
double kd_growth(double b, double b_prime, const ModelParams& params);

// U'/U = a + n - b + kd'/kd.
double unemployment_growth(double b, double b_prime, double tech_growth,
                           const ModelParams& params);

// U'/U restated with observables:
// a + n - b - b' / (sigma * labor_share * y_over_k).
double unemployment_growth_share_form(double b, double b_prime,
                                      double tech_growth,
                                      double laborforce_growth, double sigma,
                                      double labor_share, double y_over_k);

// Solves kd per step, evaluates U'/U, and cumulates U log-linearly from
// u0. When n_series is non-empty it supplies the per-step labor-force
// growth rate, otherwise params.laborforce_growth is used throughout.
// The technology growth rate is tech.rate() evaluated at each entry of
// path.times.
KeynesPath reconstruct_unemployment(const CapitalGrowthPath& path, double u0,
                                    const TechPath& tech,
                                    std::span<const double> n_series,
                                    const ModelParams& params);

// The capital growth path a full-employment trajectory implies:
// b = sigma * f(kd)/kd - delta with the exact chain-rule b'. Feeding it
// back into reconstruct_unemployment holds U constant.
CapitalGrowthPath implied_capital_growth(const solow::SolowPath& path,
                                         const ModelParams& params,
                                         double tech_growth);

// Display conversion from the ratio U to the conventional rate.
inline double unemployment_rate(double U) { return 1.0 - 1.0 / U; }

}  // namespace growth::keynes
