#include "growth/params.hpp"

#include <cmath>
#include <string>

#include "growth/errors.hpp"

namespace growth {

namespace {

void require_fraction(double value, const char* name) {
  if (!(value > -1.0 && value < 1.0)) {
    throw ValidationError(std::string(name) + " must lie in (-1, 1), got " +
                          std::to_string(value));
  }
}

}  // namespace

void ModelParams::validate() const {
  if (!(curvature > 0.0 && curvature < 1.0)) {
    throw ValidationError("curvature (alpha) must lie in (0, 1), got " +
                          std::to_string(curvature));
  }
  if (!(depreciation >= 0.0)) {
    throw ValidationError("depreciation must be non-negative, got " +
                          std::to_string(depreciation));
  }
  require_fraction(saving_rate, "saving_rate");
  require_fraction(tax_rate, "tax_rate");
  require_fraction(gov_rate, "gov_rate");
  require_fraction(netexport_rate, "netexport_rate");
  if (!std::isfinite(laborforce_growth)) {
    throw ValidationError("laborforce_growth must be finite");
  }
  if (!(sigma() > 0.0)) {
    throw ValidationError(
        "sigma = s + tax - g - x must be positive, got " +
        std::to_string(sigma()));
  }
}

}  // namespace growth
