#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel/returnmap.hpp"
#include "abel/system.hpp"

namespace abel {

struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double blowup_bound = 1e6;
  long max_steps = 2000000;
};

struct IntegrationResult {
  double x_end = 0;
  long steps = 0;
};

/// Integrates x' = f(t) x^3 + g(t) x^2 from x(a) = rho to t = b (polynomial
/// kind on [a,b], trigonometric on [0, 2*pi]) with an adaptive embedded
/// Runge-Kutta 5(4) pair. Throws BlowUpError when |x| exceeds the bound and
/// StepFailureError when the step size underflows or the budget runs out.
IntegrationResult integrate_abel_result(const AbelSystem& sys, double rho,
                                        const IntegratorOptions& opts = {});
double integrate_abel(const AbelSystem& sys, double rho, const IntegratorOptions& opts = {});

/// {+-0.001, +-0.002, +-0.005, +-0.01, +-0.02, +-0.05}, magnitudes ascending.
std::vector<double> default_rho_grid();

struct ScanPoint {
  double rho = 0;
  double displacement = 0;  // NaN when the integration failed
  long steps = 0;
  std::string status;  // "ok", "blowup", "step-failure"
};

struct DisplacementScan {
  std::vector<ScanPoint> points;
  std::optional<int> estimated_order;  // absent when d is numerically zero
  double fit_quality = 0;              // |fitted slope - estimated_order|
  IntegratorOptions options;
};

/// d(rho) = x(b) - rho over the grid; fits log|d| against log|rho| on the
/// three smallest |rho| whose displacement clears the integration noise
/// floor (100 * (abs_tol + rel_tol*|rho|)) to estimate the leading order.
DisplacementScan displacement_scan(const AbelSystem& sys, const std::vector<double>& rho_values,
                                   const IntegratorOptions& opts = {});

struct CrossValidationReport {
  std::optional<int> symbolic_order;
  std::optional<int> numeric_order;
  double ratio_mean = 0;  // mean of d(rho)/rho^k (focus case only)
  double expected = 0;    // r_k(b) as a double (focus case only)
  std::string summary;
};

/// Ties the exact series to the numeric scan: a symbolic first obstruction
/// r_k(b) = v must show up as d(rho)/rho^k -> v within 5% on the smallest
/// usable grid points; a symbolic center up to order N must leave every
/// displacement at the noise floor. Disagreement throws MismatchError.
CrossValidationReport cross_validate(const AbelSystem& sys, const ReturnMapSeries& series,
                                     const DisplacementScan& scan);

}  // namespace abel
