#pragma once

#include <stdexcept>
#include <string>

namespace crgp::analytic {

struct SolverConfig {
  double tolerance = 1e-12;  // absolute, on the root
  int max_iterations = 200;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest query density accepted by the solvers. Below it beta(c) is
/// numerically indistinguishable from zero.
inline constexpr double kMinDensity = 1.0 + 1e-9;

/// Survival probability of a Poisson(c) Galton-Watson tree: the unique root
/// in (0,1) of 1 - x = exp(-c x). Bisection on (1e-15, 1 - 1e-15).
double beta(double c, const SolverConfig& cfg = {});

/// Asymptotic accepted-edge density: 2 beta(c) + c (1 - beta(c))^2.
double f_of(double c, const SolverConfig& cfg = {});

/// Closed-form derivative of f_of: 1 - beta(c)^2.
double f_prime(double c, const SolverConfig& cfg = {});

/// Inverse of f_of on (1,2). Bracketed bisection, doubling the upper end of
/// the bracket until it encloses y.
double f_inverse(double y, const SolverConfig& cfg = {});

/// Predictions at query step t = c n / 2.
struct CurvePoint {
  double c = 0;
  double beta = 0;
  double f = 0;
  double f_prime = 0;
  double rejected_per_vertex = 0;     // (c - f) / 2, i.e. r(t) / n
  double rejected_fraction = 0;       // 1 - f / c, i.e. r(t) / t
  double forbidden_density = 0;       // beta^2, forbidden / (n^2 / 2)
  double giant_fraction_process = 0;  // beta, |L(P(n,t))| / n
  double uniform_giant_fraction = 0;  // c - 1 clamped to [0,1]
};

CurvePoint predictions(double c, const SolverConfig& cfg = {});

/// Predictions once m0 = c n / 2 edges have been accepted, for 1 < c < 2.
struct AcceptedPoint {
  double c = 0;
  double query_density = 0;           // f^-1(c): S(m0) / (n / 2)
  double giant_fraction = 0;          // beta(f^-1(c))
  double uniform_giant_fraction = 0;  // c - 1, giant of the uniform class graph
};

AcceptedPoint predictions_by_accepted(double c, const SolverConfig& cfg = {});

}  // namespace crgp::analytic
