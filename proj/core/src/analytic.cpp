#include "crgp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace crgp::analytic {
namespace {

constexpr double kEdge = 1e-15;

void validate(const SolverConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw DomainError("solver tolerance must be positive");
  if (cfg.max_iterations < 1) throw DomainError("solver max_iterations must be >= 1");
}

void require_density(double c) {
  if (!(c >= kMinDensity) || !std::isfinite(c)) {
    std::ostringstream os;
    os << "query density c must exceed 1 (got " << c << ")";
    throw DomainError(os.str());
  }
}

// 1 - x - exp(-c x), written with expm1 so that it keeps its relative
// precision for small x (c close to 1).
double survival_residual(double c, double x) { return -x - std::expm1(-c * x); }

}  // namespace

double beta(double c, const SolverConfig& cfg) {
  validate(cfg);
  require_density(c);
  double lo = kEdge;
  double hi = 1.0 - kEdge;
  // residual > 0 on (0, beta), < 0 on (beta, 1). Bisect down to adjacent
  // doubles; the tolerance is what the result must satisfy, not a stop rule.
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (survival_residual(c, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  if (hi - lo <= cfg.tolerance && std::abs(survival_residual(c, x)) <= cfg.tolerance) return x;
  throw ConvergenceError("beta: bisection did not reach tolerance within max_iterations");
}

double f_of(double c, const SolverConfig& cfg) {
  const double b = beta(c, cfg);
  const double q = 1.0 - b;
  return 2.0 * b + c * q * q;
}

double f_prime(double c, const SolverConfig& cfg) {
  const double b = beta(c, cfg);
  return 1.0 - b * b;
}

double f_inverse(double y, const SolverConfig& cfg) {
  validate(cfg);
  if (!(y > 1.0 && y < 2.0)) {
    std::ostringstream os;
    os << "f_inverse: argument must lie in (1,2) (got " << y << ")";
    throw DomainError(os.str());
  }
  double lo = kMinDensity;
  if (f_of(lo, cfg) >= y) return lo;
  double hi = 2.0;
  while (f_of(hi, cfg) < y) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi) || hi > 1e6) {
      throw ConvergenceError("f_inverse: y is too close to 2 to bracket in double precision");
    }
  }
  for (int it = 0; it < cfg.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f_of(mid, cfg) < y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= cfg.tolerance * std::max(1.0, hi)) return 0.5 * (lo + hi);
  throw ConvergenceError("f_inverse: bisection did not reach tolerance within max_iterations");
}

CurvePoint predictions(double c, const SolverConfig& cfg) {
  CurvePoint p;
  p.c = c;
  p.beta = beta(c, cfg);
  const double q = 1.0 - p.beta;
  p.f = 2.0 * p.beta + c * q * q;
  p.f_prime = 1.0 - p.beta * p.beta;
  p.rejected_per_vertex = (c - p.f) / 2.0;
  p.rejected_fraction = 1.0 - p.f / c;
  p.forbidden_density = p.beta * p.beta;
  p.giant_fraction_process = p.beta;
  p.uniform_giant_fraction = std::clamp(c - 1.0, 0.0, 1.0);
  return p;
}

AcceptedPoint predictions_by_accepted(double c, const SolverConfig& cfg) {
  if (!(c > 1.0 && c < 2.0)) {
    std::ostringstream os;
    os << "accepted-edge density must lie in (1,2) (got " << c << ")";
    throw DomainError(os.str());
  }
  AcceptedPoint p;
  p.c = c;
  p.query_density = f_inverse(c, cfg);
  p.giant_fraction = beta(p.query_density, cfg);
  p.uniform_giant_fraction = c - 1.0;
  return p;
}

}  // namespace crgp::analytic
