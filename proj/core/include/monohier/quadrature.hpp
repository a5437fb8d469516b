#ifndef MONOHIER_QUADRATURE_HPP
#define MONOHIER_QUADRATURE_HPP

#include <functional>

namespace monohier {

/// Adaptive Gauss-Kronrod (7,15) integration: panels are bisected until the
/// embedded error estimate drops below the tolerances.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-11);

} // namespace monohier

#endif
