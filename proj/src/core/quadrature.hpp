#pragma once

#include <complex>
#include <functional>
#include <vector>

// Globally adaptive Gauss-Kronrod 15(7) quadrature for complex-valued
// integrands of a real parameter.  Worst-interval refinement with an
// evaluation budget; callers can seed breakpoints at known features.

namespace stepswitch::quad {

using complexd = std::complex<double>;

struct QuadResult {
  complexd value{0.0, 0.0};
  double error = 0.0;       // achieved absolute error estimate
  bool converged = false;
  std::size_t evals = 0;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_evals = 4'000'000;
};

QuadResult integrate(const std::function<complexd(double)>& f, double a, double b,
                     const QuadOptions& opt = {},
                     const std::vector<double>& breakpoints = {});

}  // namespace stepswitch::quad
