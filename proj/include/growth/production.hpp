#pragma once

namespace growth {

// Cobb-Douglas technology in intensive (per effective worker) form,
// f(k) = k^alpha. Constant returns make the factor-payment split exact:
// output(k) = wage(k) + rental(k) * k.
class ProductionFunction {
 public:
  explicit ProductionFunction(double curvature);

  double curvature() const { return alpha_; }

  double output(double kd) const;  // y = f(kd)
  double rental(double kd) const;  // r = f'(kd)
  double wage(double kd) const;    // w = f(kd) - f'(kd) * kd

 private:
  double alpha_;
};

// Capital per effective worker on the demand side (kd) and supply side
// (ks), with the implied unemployment ratio U = labor supply / labor
// demand = kd / ks. U > 1 signals a labor surplus; the conventional
// unemployment rate is 1 - 1/U.
struct IntensiveState {
  double kd = 0.0;
  double ks = 0.0;
  double U = 0.0;

  static IntensiveState from_ratios(double kd, double ks);
  static IntensiveState from_unemployment(double kd, double U);
};

}  // namespace growth
