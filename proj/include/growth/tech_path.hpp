#pragma once

namespace growth {

// Technology level A = exp(a0 + a1*t + a2*t^2 + a3*t^3). Only the
// growth rate a(t) = a1 + 2*a2*t + 3*a3*t^2 enters the model, so a0 is
// not stored. A fitted rate line c0 + c1*t is stored as a2 = c1/2
// (exact in binary), a3 = 0, so rate() reproduces the line exactly.
struct TechPath {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  static TechPath constant(double a) { return {a, 0.0, 0.0}; }
  static TechPath linear_rate(double c0, double c1) {
    return {c0, c1 / 2.0, 0.0};
  }
  static TechPath quadratic_rate(double c0, double c1, double c2) {
    return {c0, c1 / 2.0, c2 / 3.0};
  }

  double rate(double t) const { return a1 + 2.0 * a2 * t + 3.0 * a3 * t * t; }
};

}  // namespace growth
