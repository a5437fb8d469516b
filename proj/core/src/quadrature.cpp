#include "monohier/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace monohier {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae)
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double lo = f(center - half * kXgk[i]);
        double hi = f(center + half * kXgk[i]);
        kronrod += kWgk[i] * (lo + hi);
        if (i % 2 == 1) gauss += kWg[i / 2] * (lo + hi);
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double refine(const std::function<double(double)>& f, double a, double b,
              const PanelResult& whole, double abs_tol, double rel_tol, int depth) {
    if (whole.error <= abs_tol || whole.error <= rel_tol * std::abs(whole.kronrod))
        return whole.kronrod;
    if (depth > 40) throw std::runtime_error("adaptive quadrature failed to converge");
    const double mid = 0.5 * (a + b);
    auto left = panel(f, a, mid);
    auto right = panel(f, mid, b);
    return refine(f, a, mid, left, abs_tol / 2, rel_tol, depth + 1) +
           refine(f, mid, b, right, abs_tol / 2, rel_tol, depth + 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol) {
    if (a == b) return 0.0;
    return refine(f, a, b, panel(f, a, b), abs_tol, rel_tol, 0);
}

} // namespace monohier
