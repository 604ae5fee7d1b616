#pragma once

namespace growth {

// Structural rates of the model economy. All entries are pure per-year
// rates or fractions; `curvature` is the capital exponent of the
// Cobb-Douglas technology.
//
// The symbol `t` is used in the source literature both for the tax rate
// and for calendar time; here the rate is always `tax_rate` and time is
// always `time` or `t` in a path context.
struct ModelParams {
  double saving_rate = 0.20;        // s
  double tax_rate = 0.25;           // tax revenue as a share of output
  double gov_rate = 0.22;           // g, government purchases share
  double netexport_rate = 0.01;     // x, net exports share
  double depreciation = 0.06;       // delta, per year
  double laborforce_growth = 0.01;  // n, per year
  double curvature = 0.30;          // alpha, in (0, 1)

  // s + tax - g - x: the share of output that accumulates as capital.
  double sigma() const {
    return saving_rate + tax_rate - gov_rate - netexport_rate;
  }

  // Throws ValidationError naming the first violated constraint.
  void validate() const;
};

}  // namespace growth
