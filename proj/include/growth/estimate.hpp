#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "growth/series.hpp"
#include "growth/tech_path.hpp"

namespace growth::estimate {

struct RegressionResult {
  std::vector<std::string> columns;  // regressor names, intercept first
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  double r_squared = 0.0;
  double sigma2 = 0.0;  // residual variance, SSR / (n - p)
  bool degenerate_response = false;  // zero-variance response; R^2 forced to 0
  int n_obs = 0;
};

// Least squares through a column-pivoted Householder factorization (no
// normal equations). X must carry its intercept column explicitly.
// Throws NumericError naming the dependent column on rank deficiency.
RegressionResult ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                         std::vector<std::string> columns = {});

struct TechFit {
  RegressionResult regression;
  TechPath tech;
};

// dep_var on (1, t, b'); the time terms read off as the technology
// growth line. The time regressor is centered internally and the
// coefficients mapped back to the raw-t parameterization.
TechFit fit_linear(const data::DerivedSeries& ds);

// dep_var on (1, t, t^2, b').
TechFit fit_quadratic(const data::DerivedSeries& ds);

// Predicted U'/U per row: the fitted dep_var evaluated on ds, plus
// n_t - b. Re-evaluates the linear model from ds, so counterfactual
// inputs (e.g. a perturbed b') predict accordingly.
std::vector<double> predict_unemployment_growth(const RegressionResult& fit,
                                                const data::DerivedSeries& ds);

struct StructuralProduct {
  double value = 0.0;           // sigma * labor_share * (Y/K) = -1 / slope
  bool sign_violation = false;  // the b' slope came out positive
};

// Backs the structural product out of the b' slope. Throws NumericError
// on a zero slope; a positive slope is flagged, not fatal.
StructuralProduct structural_product(const RegressionResult& fit);

// Human-readable report and machine-readable key/value rendering.
std::string render_report(const TechFit& fit, const data::DerivedSeries& ds,
                          const std::string& label);
std::string render_report_kv(const TechFit& fit, const data::DerivedSeries& ds,
                             const std::string& label);

}  // namespace growth::estimate
