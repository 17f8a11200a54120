#include "abel/odeverify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace abel {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
constexpr double kB4[7] = {5179.0 / 57600,    0,           7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

struct Rhs {
  std::function<double(double)> f, g;
  double operator()(double t, double x) const {
    double x2 = x * x;
    return f(t) * x2 * x + g(t) * x2;
  }
};

Rhs make_rhs(const AbelSystem& sys) {
  if (sys.is_poly()) {
    const auto& s = sys.poly();
    return {[fp = s.f](double t) { return fp.eval_double(t); },
            [gp = s.g](double t) { return gp.eval_double(t); }};
  }
  const auto& s = sys.trig();
  return {[fp = s.f](double t) { return fp.eval(t); },
          [gp = s.g](double t) { return gp.eval(t); }};
}

std::pair<double, double> time_span(const AbelSystem& sys) {
  if (sys.is_poly()) return {sys.poly().a.to_double(), sys.poly().b.to_double()};
  return {0.0, 2 * std::numbers::pi};
}

}  // namespace

IntegrationResult integrate_abel_result(const AbelSystem& sys, double rho,
                                        const IntegratorOptions& opts) {
  if (!std::isfinite(rho)) throw std::invalid_argument("integrate_abel: rho must be finite");
  if (opts.rel_tol <= 0 || opts.abs_tol <= 0)
    throw std::invalid_argument("integrate_abel: tolerances must be positive");

  Rhs rhs = make_rhs(sys);
  auto [t0, t1] = time_span(sys);
  double span = t1 - t0;

  double t = t0, x = rho;
  double h = span / 100;
  long steps = 0;
  while (t < t1) {
    if (steps >= opts.max_steps)
      throw StepFailureError("integrate_abel: step budget exhausted");
    if (h < span * 1e-15) throw StepFailureError("integrate_abel: step size underflow");
    h = std::min(h, t1 - t);

    double k[7];
    for (int i = 0; i < 7; ++i) {
      double xi = x;
      for (int j = 0; j < i; ++j) xi += h * kA[i][j] * k[j];
      k[i] = rhs(t + kC[i] * h, xi);
    }
    double x5 = x, err = 0;
    for (int i = 0; i < 7; ++i) {
      x5 += h * kB5[i] * k[i];
      err += h * (kB5[i] - kB4[i]) * k[i];
    }
    double scale = opts.abs_tol + opts.rel_tol * std::max(std::abs(x), std::abs(x5));
    double err_norm = std::abs(err) / scale;

    ++steps;
    if (err_norm <= 1.0) {
      t += h;
      x = x5;
      if (!std::isfinite(x) || std::abs(x) > opts.blowup_bound) {
        std::ostringstream os;
        os << "integrate_abel: |x| exceeded " << opts.blowup_bound << " at t = " << t;
        throw BlowUpError(os.str());
      }
    }
    double factor = err_norm > 0 ? 0.9 * std::pow(err_norm, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
  return {x, steps};
}

double integrate_abel(const AbelSystem& sys, double rho, const IntegratorOptions& opts) {
  return integrate_abel_result(sys, rho, opts).x_end;
}

std::vector<double> default_rho_grid() {
  std::vector<double> grid;
  for (double m : {0.001, 0.002, 0.005, 0.01, 0.02, 0.05}) {
    grid.push_back(m);
    grid.push_back(-m);
  }
  return grid;
}

namespace {

double noise_floor(double rho, const IntegratorOptions& opts) {
  return 100 * (opts.abs_tol + opts.rel_tol * std::abs(rho));
}

}  // namespace

DisplacementScan displacement_scan(const AbelSystem& sys, const std::vector<double>& rho_values,
                                   const IntegratorOptions& opts) {
  DisplacementScan scan;
  scan.options = opts;
  for (double rho : rho_values) {
    ScanPoint pt;
    pt.rho = rho;
    try {
      auto res = integrate_abel_result(sys, rho, opts);
      pt.displacement = res.x_end - rho;
      pt.steps = res.steps;
      pt.status = "ok";
    } catch (const BlowUpError&) {
      pt.displacement = std::numeric_limits<double>::quiet_NaN();
      pt.status = "blowup";
    } catch (const StepFailureError&) {
      pt.displacement = std::numeric_limits<double>::quiet_NaN();
      pt.status = "step-failure";
    }
    scan.points.push_back(std::move(pt));
  }

  // Group usable points by |rho| (averaging log|d| over +-rho) and fit the
  // three smallest magnitudes.
  struct Group {
    double log_rho;
    double log_d_sum = 0;
    int count = 0;
  };
  std::vector<std::pair<double, Group>> groups;  // keyed by |rho|
  for (const auto& pt : scan.points) {
    if (pt.status != "ok") continue;
    if (std::abs(pt.displacement) <= noise_floor(pt.rho, opts)) continue;
    double mag = std::abs(pt.rho);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == mag; });
    if (it == groups.end()) {
      groups.push_back({mag, {std::log(mag), 0, 0}});
      it = groups.end() - 1;
    }
    it->second.log_d_sum += std::log(std::abs(pt.displacement));
    it->second.count += 1;
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (groups.size() > 3) groups.resize(3);

  if (groups.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [mag, g] : groups) {
      double x = g.log_rho, y = g.log_d_sum / g.count;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double n = static_cast<double>(groups.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    scan.estimated_order = static_cast<int>(std::lround(slope));
    scan.fit_quality = std::abs(slope - std::lround(slope));
  }
  return scan;
}

CrossValidationReport cross_validate(const AbelSystem& sys, const ReturnMapSeries& series,
                                     const DisplacementScan& scan) {
  if (!sys.is_poly())
    throw InvalidKindError("cross_validate: polynomial systems only");

  CrossValidationReport rep;
  rep.symbolic_order = center_order(series);
  rep.numeric_order = scan.estimated_order;

  if (rep.symbolic_order) {
    int k = *rep.symbolic_order;
    double v = series.endpoint(k).to_double();
    rep.expected = v;

    std::vector<std::pair<double, double>> usable;  // (|rho|, d/rho^k)
    for (const auto& pt : scan.points) {
      if (pt.status != "ok") continue;
      if (std::abs(pt.displacement) <= noise_floor(pt.rho, scan.options)) continue;
      usable.emplace_back(std::abs(pt.rho), pt.displacement / std::pow(pt.rho, k));
    }
    if (usable.empty()) {
      std::ostringstream os;
      os << "symbolic first obstruction at order " << k
         << " but every numeric displacement sits at the noise floor";
      throw MismatchError(os.str());
    }
    std::sort(usable.begin(), usable.end());
    size_t take = std::min<size_t>(3, usable.size());
    double sum = 0;
    for (size_t i = 0; i < take; ++i) sum += usable[i].second;
    rep.ratio_mean = sum / static_cast<double>(take);
    if (std::abs(rep.ratio_mean - v) > 0.05 * std::abs(v)) {
      std::ostringstream os;
      os << "d(rho)/rho^" << k << " = " << rep.ratio_mean << " but the series predicts " << v;
      throw MismatchError(os.str());
    }
    std::ostringstream os;
    os << "numeric ratio " << rep.ratio_mean << " matches r_" << k << "(b) = " << v
       << " within 5%";
    rep.summary = os.str();
    return rep;
  }

  for (const auto& pt : scan.points) {
    if (pt.status != "ok") {
      std::ostringstream os;
      os << "series shows no obstruction up to order " << series.order
         << " but integration failed at rho = " << pt.rho << " (" << pt.status << ")";
      throw MismatchError(os.str());
    }
    if (std::abs(pt.displacement) > noise_floor(pt.rho, scan.options)) {
      std::ostringstream os;
      os << "series shows no obstruction up to order " << series.order << " but |d(" << pt.rho
         << ")| = " << std::abs(pt.displacement) << " exceeds the noise floor";
      throw MismatchError(os.str());
    }
  }
  std::ostringstream os;
  os << "all displacements at the noise floor, consistent with r_k(b) = 0 up to order "
     << series.order;
  rep.summary = os.str();
  return rep;
}

}  // namespace abel
